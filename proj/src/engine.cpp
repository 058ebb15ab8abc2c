#include "flowshop/engine.hpp"

#include <cassert>

namespace flowshop {

namespace {

struct CellOut {
    TimeValue value;
    TimeValue start;
    BaseCase base = BaseCase::Sharp;
    PauseCase pause = PauseCase::Inactive;
    DeadlineCase deadline = DeadlineCase::Inactive;
};

// Evaluates one cell from its finalized neighbours. `north` is the previous
// position on the same machine, `west` the same position on the previous
// machine; at the very first cell the predecessor value is zero.
CellOut eval_cell(const Instance& inst, const std::vector<int>& order, int a, int k,
                  TimeValue north, TimeValue west) {
    CellOut out;
    TimeValue prev;
    if (a == 0 && k == 0)
        prev = TimeValue::finite(0);
    else if (a == 0)
        prev = west;
    else if (k == 0)
        prev = north;
    else
        prev = tv_max(north, west);

    const bool has_pause = inst.ext.pause.has_value();
    const bool has_deadlines = inst.ext.deadlines.has_value();

    if (!prev.is_finite()) {
        out.value = TimeValue::infeasible();
        out.start = TimeValue::infeasible();
        out.base = BaseCase::Sharp;
        out.pause = has_pause ? PauseCase::Sharp : PauseCase::Inactive;
        out.deadline = has_deadlines ? DeadlineCase::Sharp : DeadlineCase::Inactive;
        return out;
    }

    const int job = order[static_cast<std::size_t>(a)];
    const std::int64_t p = inst.p[static_cast<std::size_t>(job)][static_cast<std::size_t>(k)];
    const std::int64_t prev_v = prev.value();
    std::int64_t start = prev_v;
    std::int64_t raw = 0;

    switch (inst.types[static_cast<std::size_t>(k)]) {
        case MachineType::C:
            raw = prev_v + p;
            out.base = BaseCase::C;
            break;
        case MachineType::Cr: {
            // The release time binds at every position, not just the first.
            const std::int64_t r = (*inst.ext.release_times)[static_cast<std::size_t>(job)];
            start = std::max(prev_v, r);
            raw = start + p;
            out.base = BaseCase::Cr;
            break;
        }
        case MachineType::Crep: {
            const PeriodicParams& per = *inst.ext.periodic;
            if ((a + 1) % per.q == 0) {
                raw = prev_v + p + per.delta[static_cast<std::size_t>(k)];
                out.base = BaseCase::CrepAdjust;
            } else {
                raw = prev_v + p;
                out.base = BaseCase::CrepPlain;
            }
            break;
        }
        case MachineType::Cin:
            if (a == 0) {
                raw = (*inst.ext.initial_setup)[static_cast<std::size_t>(job)]
                                               [static_cast<std::size_t>(k)] +
                      prev_v + p;
                out.base = BaseCase::CinFirst;
            } else {
                raw = prev_v + p;
                out.base = BaseCase::CinRest;
            }
            break;
        case MachineType::CSDST: {
            const SdstParams& sdst = *inst.ext.sdst;
            const Matrix& tau = sdst.tau.at(k + 1);
            const int cur = sdst.tool_of_job[static_cast<std::size_t>(job)];
            if (a == 0) {
                raw = prev_v + p + tau[static_cast<std::size_t>(cur) - 1]
                                      [static_cast<std::size_t>(cur) - 1];
                out.base = BaseCase::SdstFirst;
            } else {
                const int from =
                    sdst.tool_of_job[static_cast<std::size_t>(order[static_cast<std::size_t>(a) - 1])];
                raw = prev_v + p + tau[static_cast<std::size_t>(from) - 1]
                                      [static_cast<std::size_t>(cur) - 1];
                out.base = BaseCase::SdstRest;
            }
            break;
        }
    }

    // Pause layer. The comparison uses the predecessor value, not the work's
    // own start: the whole increment past the predecessor moves behind the
    // pause when it straddles the pause start.
    std::int64_t val = raw;
    if (has_pause) {
        const std::int64_t t_end = inst.ext.pause->t_end;
        const std::int64_t delta = inst.ext.pause->delta;
        if (raw <= t_end) {
            out.pause = PauseCase::Before;
        } else if (prev_v > t_end) {
            out.pause = PauseCase::After;
        } else {
            val = t_end + delta + (raw - prev_v);
            start = t_end + delta;
            out.pause = PauseCase::Shifted;
        }
    }

    out.start = TimeValue::finite(start);
    if (has_deadlines) {
        if (val <= (*inst.ext.deadlines)[static_cast<std::size_t>(job)]) {
            out.deadline = DeadlineCase::Pass;
            out.value = TimeValue::finite(val);
        } else {
            out.deadline = DeadlineCase::Violate;
            out.value = TimeValue::infeasible();
        }
    } else {
        out.value = TimeValue::finite(val);
    }
    return out;
}

void record(BranchStats* stats, const CellOut& out, std::size_t cell_index) {
    if (!stats) return;
    ++stats->finalized;
    ++stats->base[static_cast<std::size_t>(out.base)];
    ++stats->pause[static_cast<std::size_t>(out.pause)];
    ++stats->deadline[static_cast<std::size_t>(out.deadline)];
    if (cell_index < stats->base_grid.size()) {
        stats->base_grid[cell_index] = out.base;
        stats->pause_grid[cell_index] = out.pause;
        stats->deadline_grid[cell_index] = out.deadline;
    }
}

}  // namespace

ScheduleGrid eval_grid(const Instance& inst, const Permutation& pi, BranchStats* stats) {
    assert(pi.size() == inst.n);
    ScheduleGrid grid(inst.n, inst.m);
    if (stats) {
        const std::size_t cells = static_cast<std::size_t>(inst.n) * inst.m;
        stats->base_grid.assign(cells, BaseCase::Count);
        stats->pause_grid.assign(cells, PauseCase::Count);
        stats->deadline_grid.assign(cells, DeadlineCase::Count);
    }
    for (int a = 0; a < inst.n; ++a) {
        for (int k = 0; k < inst.m; ++k) {
            const TimeValue north = a > 0 ? grid.cell(a - 1, k) : TimeValue::infeasible();
            const TimeValue west = k > 0 ? grid.cell(a, k - 1) : TimeValue::infeasible();
            const CellOut out = eval_cell(inst, pi.jobs(), a, k, north, west);
            grid.cells[grid.idx(a, k)] = out.value;
            grid.starts[grid.idx(a, k)] = out.start;
            record(stats, out, grid.idx(a, k));
        }
    }
    return grid;
}

PrefixEvaluator::PrefixEvaluator(const Instance& inst) : inst_(&inst) {
    const std::size_t cap = static_cast<std::size_t>(inst.n) * inst.m;
    order_.reserve(static_cast<std::size_t>(inst.n));
    cells_.reserve(cap);
    starts_.reserve(cap);
}

bool PrefixEvaluator::push(int job) {
    order_.push_back(job);
    const int a = length() - 1;
    bool finite = true;
    for (int k = 0; k < inst_->m; ++k) {
        const TimeValue north = a > 0 ? cells_[idx(a - 1, k)] : TimeValue::infeasible();
        const TimeValue west = k > 0 ? cells_[idx(a, k - 1)] : TimeValue::infeasible();
        const CellOut out = eval_cell(*inst_, order_, a, k, north, west);
        cells_.push_back(out.value);
        starts_.push_back(out.start);
        finite = finite && out.value.is_finite();
    }
    return finite;
}

void PrefixEvaluator::pop() {
    assert(!order_.empty());
    order_.pop_back();
    cells_.resize(cells_.size() - static_cast<std::size_t>(inst_->m));
    starts_.resize(starts_.size() - static_cast<std::size_t>(inst_->m));
}

ScheduleGrid PrefixEvaluator::to_grid() const {
    assert(length() == inst_->n);
    ScheduleGrid grid(inst_->n, inst_->m);
    grid.cells = cells_;
    grid.starts = starts_;
    return grid;
}

}  // namespace flowshop
