#pragma once

#include <cstdint>

#include "flowshop/engine.hpp"
#include "flowshop/instance.hpp"

namespace flowshop {

// rho[j][k] is a guaranteed minimum growth of the completion value that job j
// contributes on machine k, over every permutation and position:
//
//     cell(a,k) - cell(a,k-1) >= rho[pi(a)][k]
//     cell(a,k) - cell(a-1,k) >= rho[pi(a)][k]
//
// For plain, release-bound, adjustment and initial-setup machines this is the
// bare processing time: position-dependent bonuses (the adjustment at q-th
// positions, the first-position setup) are dropped because a job's final
// position is unknown while bounding. On setup-matrix machines the minimum
// incoming setup of the job's tool is added; the job's own completion always
// contains some setup into its tool, so the column minimum (including the
// diagonal, reachable at position 1) is safe.
Matrix rho_table(const Instance& inst);

// Admissible makespan bound over all completions of the evaluated prefix:
// the maximum of a machine-tail bound for the last scheduled job and a
// remaining-work bound on the last machine. Every prefix cell must be finite.
// With `tight`, adjustment time for the floor((n-len)/q) forced adjustments
// still ahead on the last machine is added when that machine carries them.
std::int64_t lower_bound(const Instance& inst, const Matrix& rho,
                         const PrefixEvaluator& eval, bool tight = false);

}  // namespace flowshop
