#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "flowshop/grid.hpp"
#include "flowshop/instance.hpp"

namespace flowshop {

enum class Objective {
    Cmax,
    Lmax,
    TotalTardiness,
    MaxTardiness,
    NumTardy,
    WeightedTotalTardiness
};

const char* to_string(Objective o);
// cmax | lmax | ttotal | tmax | ntardy | wtardy
std::optional<Objective> objective_from_string(std::string_view s);

TimeValue makespan(const ScheduleGrid& grid);

// All of the following evaluate on final-machine completions and return
// nullopt when the grid contains an infeasible cell. Maximum lateness is
// signed: every job finishing early yields a negative value.
std::optional<std::int64_t> lateness_max(const ScheduleGrid& grid,
                                         const Instance& inst,
                                         const Permutation& pi);
std::optional<std::int64_t> tardiness_total(const ScheduleGrid& grid,
                                            const Instance& inst,
                                            const Permutation& pi);
std::optional<std::int64_t> tardiness_max(const ScheduleGrid& grid,
                                          const Instance& inst,
                                          const Permutation& pi);
std::optional<std::int64_t> num_tardy(const ScheduleGrid& grid,
                                      const Instance& inst,
                                      const Permutation& pi);
std::optional<std::int64_t> weighted_tardiness(const ScheduleGrid& grid,
                                               const Instance& inst,
                                               const Permutation& pi);

// Dispatch by objective. Throws std::invalid_argument when the instance lacks
// a vector the objective needs (due dates, weights).
std::optional<std::int64_t> objective_value(Objective o, const ScheduleGrid& grid,
                                            const Instance& inst,
                                            const Permutation& pi);

}  // namespace flowshop
