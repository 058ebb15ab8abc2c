#include "flowshop/objectives.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <stdexcept>

namespace flowshop {

const char* to_string(Objective o) {
    switch (o) {
        case Objective::Cmax: return "cmax";
        case Objective::Lmax: return "lmax";
        case Objective::TotalTardiness: return "ttotal";
        case Objective::MaxTardiness: return "tmax";
        case Objective::NumTardy: return "ntardy";
        case Objective::WeightedTotalTardiness: return "wtardy";
    }
    return "?";
}

std::optional<Objective> objective_from_string(std::string_view s) {
    if (s == "cmax") return Objective::Cmax;
    if (s == "lmax") return Objective::Lmax;
    if (s == "ttotal") return Objective::TotalTardiness;
    if (s == "tmax") return Objective::MaxTardiness;
    if (s == "ntardy") return Objective::NumTardy;
    if (s == "wtardy") return Objective::WeightedTotalTardiness;
    return std::nullopt;
}

TimeValue makespan(const ScheduleGrid& grid) {
    if (grid.n == 0 || grid.m == 0) return TimeValue::infeasible();
    // Absorption pushes any infeasibility into the bottom-right cell, and for
    // finite grids monotonicity makes that cell the maximum.
    const TimeValue last = grid.cell(grid.n - 1, grid.m - 1);
    assert(last.is_finite() == grid.all_finite());
    return last;
}

namespace {

const std::vector<std::int64_t>& require(const std::optional<std::vector<std::int64_t>>& v,
                                         const char* what) {
    if (!v) throw std::invalid_argument(std::string("objective requires ") + what);
    return *v;
}

template <typename Fold>
std::optional<std::int64_t> fold_completions(const ScheduleGrid& grid, const Permutation& pi,
                                             std::int64_t init, Fold fold) {
    if (!grid.all_finite()) return std::nullopt;
    std::int64_t acc = init;
    for (int a = 0; a < grid.n; ++a)
        acc = fold(acc, pi.job_at(a), grid.cell(a, grid.m - 1).value());
    return acc;
}

}  // namespace

std::optional<std::int64_t> lateness_max(const ScheduleGrid& grid, const Instance& inst,
                                         const Permutation& pi) {
    const auto& d = require(inst.ext.due_dates, "due_dates");
    return fold_completions(grid, pi, std::numeric_limits<std::int64_t>::min(),
                            [&](std::int64_t acc, int job, std::int64_t c) {
                                return std::max(acc, c - d[static_cast<std::size_t>(job)]);
                            });
}

std::optional<std::int64_t> tardiness_total(const ScheduleGrid& grid, const Instance& inst,
                                            const Permutation& pi) {
    const auto& d = require(inst.ext.due_dates, "due_dates");
    return fold_completions(grid, pi, 0, [&](std::int64_t acc, int job, std::int64_t c) {
        return acc + std::max<std::int64_t>(0, c - d[static_cast<std::size_t>(job)]);
    });
}

std::optional<std::int64_t> tardiness_max(const ScheduleGrid& grid, const Instance& inst,
                                          const Permutation& pi) {
    const auto& d = require(inst.ext.due_dates, "due_dates");
    return fold_completions(grid, pi, 0, [&](std::int64_t acc, int job, std::int64_t c) {
        return std::max(acc, std::max<std::int64_t>(0, c - d[static_cast<std::size_t>(job)]));
    });
}

std::optional<std::int64_t> num_tardy(const ScheduleGrid& grid, const Instance& inst,
                                      const Permutation& pi) {
    const auto& d = require(inst.ext.due_dates, "due_dates");
    return fold_completions(grid, pi, 0, [&](std::int64_t acc, int job, std::int64_t c) {
        return acc + (c > d[static_cast<std::size_t>(job)] ? 1 : 0);
    });
}

std::optional<std::int64_t> weighted_tardiness(const ScheduleGrid& grid, const Instance& inst,
                                               const Permutation& pi) {
    const auto& d = require(inst.ext.due_dates, "due_dates");
    const auto& w = require(inst.ext.weights, "weights");
    return fold_completions(grid, pi, 0, [&](std::int64_t acc, int job, std::int64_t c) {
        const auto ju = static_cast<std::size_t>(job);
        return acc + w[ju] * std::max<std::int64_t>(0, c - d[ju]);
    });
}

std::optional<std::int64_t> objective_value(Objective o, const ScheduleGrid& grid,
                                            const Instance& inst, const Permutation& pi) {
    switch (o) {
        case Objective::Cmax: {
            const TimeValue v = makespan(grid);
            if (!v.is_finite()) return std::nullopt;
            return v.value();
        }
        case Objective::Lmax: return lateness_max(grid, inst, pi);
        case Objective::TotalTardiness: return tardiness_total(grid, inst, pi);
        case Objective::MaxTardiness: return tardiness_max(grid, inst, pi);
        case Objective::NumTardy: return num_tardy(grid, inst, pi);
        case Objective::WeightedTotalTardiness: return weighted_tardiness(grid, inst, pi);
    }
    return std::nullopt;
}

}  // namespace flowshop
