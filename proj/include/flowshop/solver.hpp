#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "flowshop/instance.hpp"
#include "flowshop/objectives.hpp"

namespace flowshop {

enum class Method { BruteForce, MultisetBruteForce, BranchAndBound };

const char* to_string(Method m);
// brute | multiset | bnb
std::optional<Method> method_from_string(std::string_view s);

struct SolveOptions {
    Method method = Method::BranchAndBound;
    Objective objective = Objective::Cmax;
    int threads = 1;
    bool tight_bounds = false;
    // Disable to audit pruning soundness: the result value must not improve.
    bool use_bound = true;
    int brute_force_cap = 9;
    bool record_incumbents = false;
};

struct SolveResult {
    std::optional<Permutation> best_order;       // empty iff nothing feasible
    std::optional<std::int64_t> best_value;      // signed: max lateness may be < 0
    std::int64_t nodes_expanded = 0;
    std::int64_t nodes_pruned_bound = 0;
    std::int64_t nodes_pruned_infeasible = 0;
    std::chrono::duration<double> elapsed{};
    // Accepted incumbent values in order, when record_incumbents is set.
    std::vector<std::int64_t> incumbent_history;
};

// Among equal-value optima every method reports the lexicographically
// smallest permutation, so outputs are deterministic, including across
// thread counts.
//
//   BruteForce          all n! orders (guarded by brute_force_cap)
//   MultisetBruteForce  one order per arrangement of interchangeable jobs
//   BranchAndBound      DFS over prefixes; children sorted by ascending bound;
//                       prunes on infeasible rows and, for the makespan
//                       objective, on bound > incumbent. Other objectives
//                       keep the DFS but never prune by bound, since the
//                       bound speaks about completion times only.
SolveResult solve(const Instance& inst, const SolveOptions& opts);

// Jobs are interchangeable when every per-job datum matches: processing row,
// release time, deadline, due date, weight, setup row and tool label. Used
// for multiset enumeration and for symmetry pruning in the search.
std::vector<int> job_class_ids(const Instance& inst);

}  // namespace flowshop
