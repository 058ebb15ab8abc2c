#include "flowshop/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <limits>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

#include "flowshop/bounds.hpp"
#include "flowshop/engine.hpp"

namespace flowshop {

const char* to_string(Method m) {
    switch (m) {
        case Method::BruteForce: return "brute";
        case Method::MultisetBruteForce: return "multiset";
        case Method::BranchAndBound: return "bnb";
    }
    return "?";
}

std::optional<Method> method_from_string(std::string_view s) {
    if (s == "brute") return Method::BruteForce;
    if (s == "multiset") return Method::MultisetBruteForce;
    if (s == "bnb") return Method::BranchAndBound;
    return std::nullopt;
}

std::vector<int> job_class_ids(const Instance& inst) {
    const ExtensionParams& ext = inst.ext;
    auto same = [&](int a, int b) {
        const auto au = static_cast<std::size_t>(a);
        const auto bu = static_cast<std::size_t>(b);
        if (inst.p[au] != inst.p[bu]) return false;
        if (ext.release_times && (*ext.release_times)[au] != (*ext.release_times)[bu])
            return false;
        if (ext.deadlines && (*ext.deadlines)[au] != (*ext.deadlines)[bu]) return false;
        if (ext.due_dates && (*ext.due_dates)[au] != (*ext.due_dates)[bu]) return false;
        if (ext.weights && (*ext.weights)[au] != (*ext.weights)[bu]) return false;
        if (ext.initial_setup && (*ext.initial_setup)[au] != (*ext.initial_setup)[bu])
            return false;
        if (ext.sdst && ext.sdst->tool_of_job[au] != ext.sdst->tool_of_job[bu]) return false;
        return true;
    };
    std::vector<int> ids(static_cast<std::size_t>(inst.n), -1);
    std::vector<int> reps;
    for (int j = 0; j < inst.n; ++j) {
        for (std::size_t c = 0; c < reps.size(); ++c) {
            if (same(j, reps[c])) {
                ids[static_cast<std::size_t>(j)] = static_cast<int>(c);
                break;
            }
        }
        if (ids[static_cast<std::size_t>(j)] < 0) {
            ids[static_cast<std::size_t>(j)] = static_cast<int>(reps.size());
            reps.push_back(j);
        }
    }
    return ids;
}

namespace {

// Shared best-so-far. Accepts strictly better values, or the same value with
// a lexicographically smaller order, so the final content does not depend on
// visit timing.
struct Incumbent {
    std::mutex mu;
    std::atomic<std::int64_t> snapshot{std::numeric_limits<std::int64_t>::max()};
    bool has = false;
    std::int64_t best = 0;
    std::vector<int> order;
    bool record = false;
    std::vector<std::int64_t> history;

    void offer(std::int64_t v, const std::vector<int>& candidate) {
        std::scoped_lock lk(mu);
        if (has && (v > best || (v == best && !(candidate < order)))) return;
        has = true;
        best = v;
        order = candidate;
        snapshot.store(v, std::memory_order_relaxed);
        if (record) history.push_back(v);
    }
};

void finish(SolveResult& res, Incumbent& inc,
            std::chrono::steady_clock::time_point t0) {
    if (inc.has) {
        res.best_value = inc.best;
        res.best_order = Permutation(inc.order);
    }
    res.incumbent_history = std::move(inc.history);
    res.elapsed = std::chrono::steady_clock::now() - t0;
}

SolveResult run_brute(const Instance& inst, const SolveOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    if (inst.n > opts.brute_force_cap) {
        std::ostringstream os;
        os << "brute force enumeration is capped at " << opts.brute_force_cap
           << " jobs, instance has " << inst.n;
        throw std::invalid_argument(os.str());
    }
    SolveResult res;
    Incumbent inc;
    inc.record = opts.record_incumbents;
    std::vector<int> order(static_cast<std::size_t>(inst.n));
    std::iota(order.begin(), order.end(), 0);
    do {
        ++res.nodes_expanded;
        const Permutation pi(order);
        const ScheduleGrid grid = eval_grid(inst, pi);
        if (const auto v = objective_value(opts.objective, grid, inst, pi))
            inc.offer(*v, order);
        else
            ++res.nodes_pruned_infeasible;
    } while (std::next_permutation(order.begin(), order.end()));
    finish(res, inc, t0);
    return res;
}

SolveResult run_multiset(const Instance& inst, const SolveOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    SolveResult res;
    Incumbent inc;
    inc.record = opts.record_incumbents;

    const std::vector<int> cls = job_class_ids(inst);
    const int num_classes = *std::max_element(cls.begin(), cls.end()) + 1;
    std::vector<std::vector<int>> members(static_cast<std::size_t>(num_classes));
    for (int j = 0; j < inst.n; ++j)
        members[static_cast<std::size_t>(cls[static_cast<std::size_t>(j)])].push_back(j);

    std::vector<int> seq = cls;
    std::sort(seq.begin(), seq.end());
    std::vector<std::size_t> cursor(static_cast<std::size_t>(num_classes));
    std::vector<int> order(static_cast<std::size_t>(inst.n));
    do {
        ++res.nodes_expanded;
        std::fill(cursor.begin(), cursor.end(), 0);
        // Jobs of a class are dealt ascending, which makes this order the
        // lexicographically smallest one realizing the class sequence.
        for (std::size_t a = 0; a < seq.size(); ++a) {
            const auto c = static_cast<std::size_t>(seq[a]);
            order[a] = members[c][cursor[c]++];
        }
        const Permutation pi(order);
        const ScheduleGrid grid = eval_grid(inst, pi);
        if (const auto v = objective_value(opts.objective, grid, inst, pi))
            inc.offer(*v, order);
        else
            ++res.nodes_pruned_infeasible;
    } while (std::next_permutation(seq.begin(), seq.end()));
    finish(res, inc, t0);
    return res;
}

struct Searcher {
    const Instance& inst;
    const SolveOptions& opts;
    const Matrix* rho;
    const std::vector<int>& cls;
    int num_classes;
    bool bounding;
    Incumbent& inc;

    std::int64_t expanded = 0;
    std::int64_t pruned_bound = 0;
    std::int64_t pruned_infeasible = 0;

    PrefixEvaluator eval;
    std::vector<char> used;
    // Per-depth scratch, so the recursion allocates nothing.
    std::vector<std::vector<char>> seen_class;
    std::vector<std::vector<std::pair<std::int64_t, int>>> kids;

    Searcher(const Instance& inst_, const SolveOptions& opts_, const Matrix* rho_,
             const std::vector<int>& cls_, int num_classes_, bool bounding_,
             Incumbent& inc_)
        : inst(inst_),
          opts(opts_),
          rho(rho_),
          cls(cls_),
          num_classes(num_classes_),
          bounding(bounding_),
          inc(inc_),
          eval(inst_),
          used(static_cast<std::size_t>(inst_.n), 0),
          seen_class(static_cast<std::size_t>(inst_.n) + 1,
                     std::vector<char>(static_cast<std::size_t>(num_classes_), 0)),
          kids(static_cast<std::size_t>(inst_.n) + 1) {
        for (auto& k : kids) k.reserve(static_cast<std::size_t>(inst_.n));
    }

    std::optional<std::int64_t> leaf_value() {
        if (opts.objective == Objective::Cmax)
            return eval.cell(inst.n - 1, inst.m - 1).value();
        const ScheduleGrid grid = eval.to_grid();
        const Permutation pi(eval.prefix());
        return objective_value(opts.objective, grid, inst, pi);
    }

    void dfs() {
        ++expanded;
        const int len = eval.length();
        if (len == inst.n) {
            if (const auto v = leaf_value()) inc.offer(*v, eval.prefix());
            return;
        }
        auto& seen = seen_class[static_cast<std::size_t>(len)];
        std::fill(seen.begin(), seen.end(), 0);
        auto& children = kids[static_cast<std::size_t>(len)];
        children.clear();
        for (int j = 0; j < inst.n; ++j) {
            const auto ju = static_cast<std::size_t>(j);
            if (used[ju]) continue;
            // Interchangeable jobs: only the smallest-numbered of a class may
            // come next, which is exactly what the lexicographically smallest
            // optimum does.
            const auto cu = static_cast<std::size_t>(cls[ju]);
            if (seen[cu]) continue;
            seen[cu] = 1;
            if (!eval.push(j)) {
                ++pruned_infeasible;
                eval.pop();
                continue;
            }
            const std::int64_t lb = bounding ? lower_bound(inst, *rho, eval, opts.tight_bounds) : 0;
            eval.pop();
            children.emplace_back(lb, j);
        }
        std::sort(children.begin(), children.end());
        for (const auto& [lb, j] : children) {
            // Strictly-greater pruning: every node that could still reach an
            // equal-value optimum stays open, so the lexicographic tie-break
            // sees all of them regardless of visit order or thread count.
            if (bounding && lb > inc.snapshot.load(std::memory_order_relaxed)) {
                ++pruned_bound;
                continue;
            }
            used[static_cast<std::size_t>(j)] = 1;
            eval.push(j);
            dfs();
            eval.pop();
            used[static_cast<std::size_t>(j)] = 0;
        }
    }
};

SolveResult run_bnb(const Instance& inst, const SolveOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    SolveResult res;
    Incumbent inc;
    inc.record = opts.record_incumbents;

    // The identity order seeds the incumbent when it is feasible; this also
    // surfaces missing objective data before the search starts.
    const Permutation ident = Permutation::identity(inst.n);
    const ScheduleGrid g0 = eval_grid(inst, ident);
    if (const auto v0 = objective_value(opts.objective, g0, inst, ident))
        inc.offer(*v0, ident.jobs());

    const bool bounding = opts.use_bound && opts.objective == Objective::Cmax;
    Matrix rho;
    if (bounding) rho = rho_table(inst);
    const std::vector<int> cls = job_class_ids(inst);
    const int num_classes = *std::max_element(cls.begin(), cls.end()) + 1;

    if (opts.threads <= 1) {
        Searcher s(inst, opts, &rho, cls, num_classes, bounding, inc);
        s.dfs();
        res.nodes_expanded = s.expanded;
        res.nodes_pruned_bound = s.pruned_bound;
        res.nodes_pruned_infeasible = s.pruned_infeasible;
        finish(res, inc, t0);
        return res;
    }

    // Parallel mode hands the root's subtrees to a worker pool. The shared
    // incumbent only tightens, and the tie-break rules make the final answer
    // independent of interleaving.
    res.nodes_expanded = 1;  // the root
    std::vector<std::pair<std::int64_t, int>> roots;
    std::vector<char> seen(static_cast<std::size_t>(num_classes), 0);
    PrefixEvaluator probe(inst);
    for (int j = 0; j < inst.n; ++j) {
        const auto cu = static_cast<std::size_t>(cls[static_cast<std::size_t>(j)]);
        if (seen[cu]) continue;
        seen[cu] = 1;
        if (!probe.push(j)) {
            ++res.nodes_pruned_infeasible;
            probe.pop();
            continue;
        }
        const std::int64_t lb = bounding ? lower_bound(inst, rho, probe, opts.tight_bounds) : 0;
        probe.pop();
        roots.emplace_back(lb, j);
    }
    std::sort(roots.begin(), roots.end());

    std::atomic<std::size_t> next{0};
    std::atomic<std::int64_t> pruned_roots{0};
    const int workers = std::min<int>(opts.threads, static_cast<int>(roots.size()) + 1);
    std::vector<Searcher> searchers;
    searchers.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t)
        searchers.emplace_back(inst, opts, &rho, cls, num_classes, bounding, inc);
    {
        std::vector<std::jthread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int t = 0; t < workers; ++t) {
            pool.emplace_back([&, t] {
                Searcher& s = searchers[static_cast<std::size_t>(t)];
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= roots.size()) break;
                    const auto [lb, j] = roots[i];
                    if (bounding && lb > inc.snapshot.load(std::memory_order_relaxed)) {
                        pruned_roots.fetch_add(1, std::memory_order_relaxed);
                        continue;
                    }
                    s.used[static_cast<std::size_t>(j)] = 1;
                    s.eval.push(j);
                    s.dfs();
                    s.eval.pop();
                    s.used[static_cast<std::size_t>(j)] = 0;
                }
            });
        }
    }
    res.nodes_pruned_bound += pruned_roots.load();
    for (const Searcher& s : searchers) {
        res.nodes_expanded += s.expanded;
        res.nodes_pruned_bound += s.pruned_bound;
        res.nodes_pruned_infeasible += s.pruned_infeasible;
    }
    finish(res, inc, t0);
    return res;
}

}  // namespace

SolveResult solve(const Instance& inst, const SolveOptions& opts) {
    if (opts.threads < 1) throw std::invalid_argument("threads must be at least 1");
    switch (opts.method) {
        case Method::BruteForce: return run_brute(inst, opts);
        case Method::MultisetBruteForce: return run_multiset(inst, opts);
        case Method::BranchAndBound: return run_bnb(inst, opts);
    }
    throw std::invalid_argument("unknown method");
}

}  // namespace flowshop
