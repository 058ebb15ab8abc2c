#pragma once

#include <vector>

#include "flowshop/grid.hpp"
#include "flowshop/instance.hpp"

namespace flowshop {

// Evaluates the full n x m completion grid for the given order. Each cell is
// finalized exactly once, after its north (previous position, same machine)
// and west (same position, previous machine) neighbours; neighbours are read
// at their fully adjusted top-level values. Infeasibility (a missed deadline)
// is expressed as infeasible cells, never as an error.
ScheduleGrid eval_grid(const Instance& inst, const Permutation& pi,
                       BranchStats* stats = nullptr);

// Row-incremental evaluation over a growing prefix of a permutation. Because
// every cell depends only on its north and west neighbours, extending the
// prefix by one job evaluates exactly one new row and leaves earlier rows
// untouched, which is what makes depth-first search over prefixes cheap.
class PrefixEvaluator {
public:
    explicit PrefixEvaluator(const Instance& inst);

    int length() const { return static_cast<int>(order_.size()); }
    const std::vector<int>& prefix() const { return order_; }

    // Appends one job and evaluates its row; returns true iff the whole new
    // row is finite. The job stays pushed either way.
    bool push(int job);
    void pop();

    TimeValue cell(int a, int k) const { return cells_[idx(a, k)]; }
    TimeValue start(int a, int k) const { return starts_[idx(a, k)]; }

    // Requires length() == n.
    ScheduleGrid to_grid() const;

private:
    std::size_t idx(int a, int k) const {
        return static_cast<std::size_t>(a) * inst_->m + k;
    }

    const Instance* inst_;
    std::vector<int> order_;
    std::vector<TimeValue> cells_;
    std::vector<TimeValue> starts_;
};

}  // namespace flowshop
