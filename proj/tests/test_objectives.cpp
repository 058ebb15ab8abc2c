#include <doctest.h>

#include <stdexcept>

#include "flowshop/engine.hpp"
#include "flowshop/io.hpp"
#include "flowshop/objectives.hpp"
#include "test_util.hpp"

using namespace flowshop;

TEST_CASE("objective names round trip") {
    for (Objective o : {Objective::Cmax, Objective::Lmax, Objective::TotalTardiness,
                        Objective::MaxTardiness, Objective::NumTardy,
                        Objective::WeightedTotalTardiness}) {
        const auto back = objective_from_string(to_string(o));
        REQUIRE(back.has_value());
        CHECK(*back == o);
    }
    CHECK_FALSE(objective_from_string("makespan").has_value());
}

TEST_CASE("makespan reads the bottom right cell") {
    const Instance inst = load_instance(data_path("example1.json"));
    const ScheduleGrid grid = eval_grid(inst, Permutation::identity(4));
    CHECK(makespan(grid) == TimeValue::finite(16));

    const Instance bad = load_instance(data_path("example5b.json"));
    CHECK_FALSE(makespan(eval_grid(bad, Permutation::identity(4))).is_finite());
}

TEST_CASE("due-date objectives on the release-bound shop") {
    Instance inst = load_instance(data_path("example1.json"));
    const Permutation pi = Permutation::identity(4);
    // Final completions for the identity order: 7, 10, 14, 16.

    SUBCASE("all jobs on time") {
        inst.ext.due_dates = std::vector<std::int64_t>{8, 13, 15, 16};
        const ScheduleGrid grid = eval_grid(inst, pi);
        CHECK(lateness_max(grid, inst, pi) == 0);  // job 4 is exactly on time
        CHECK(tardiness_total(grid, inst, pi) == 0);
        CHECK(tardiness_max(grid, inst, pi) == 0);
        CHECK(num_tardy(grid, inst, pi) == 0);
    }
    SUBCASE("every job one unit late") {
        inst.ext.due_dates = std::vector<std::int64_t>{6, 9, 13, 15};
        const ScheduleGrid grid = eval_grid(inst, pi);
        CHECK(lateness_max(grid, inst, pi) == 1);
        CHECK(tardiness_total(grid, inst, pi) == 4);
        CHECK(tardiness_max(grid, inst, pi) == 1);
        CHECK(num_tardy(grid, inst, pi) == 4);
        inst.ext.weights = std::vector<std::int64_t>{2, 1, 1, 1};
        CHECK(weighted_tardiness(grid, inst, pi) == 5);
    }
    SUBCASE("maximum lateness of an early schedule is negative") {
        inst.ext.due_dates = std::vector<std::int64_t>{20, 20, 20, 20};
        const ScheduleGrid grid = eval_grid(inst, pi);
        CHECK(lateness_max(grid, inst, pi) == -4);  // 16 - 20
        CHECK(tardiness_max(grid, inst, pi) == 0);
    }
}

TEST_CASE("tardiness of a single late job") {
    Instance inst = plain_instance({{5}});
    inst.ext.due_dates = std::vector<std::int64_t>{3};
    const Permutation pi = Permutation::identity(1);
    const ScheduleGrid grid = eval_grid(inst, pi);
    CHECK(tardiness_total(grid, inst, pi) == 2);
    CHECK(lateness_max(grid, inst, pi) == 2);
    CHECK(num_tardy(grid, inst, pi) == 1);
}

TEST_CASE("due dates attach to jobs, not positions") {
    Instance inst = plain_instance({{1}, {10}});
    inst.ext.due_dates = std::vector<std::int64_t>{2, 10};
    const Permutation pi({1, 0});  // job 2 first
    const ScheduleGrid grid = eval_grid(inst, pi);
    // Job 2 completes at 10 (on time), job 1 at 11 (nine units late).
    CHECK(tardiness_total(grid, inst, pi) == 9);
    CHECK(num_tardy(grid, inst, pi) == 1);
    CHECK(lateness_max(grid, inst, pi) == 9);
}

TEST_CASE("unit weights make the weighted sum collapse to the plain sum") {
    Instance inst = load_instance(data_path("example1.json"));
    inst.ext.due_dates = std::vector<std::int64_t>{5, 5, 5, 5};
    inst.ext.weights = std::vector<std::int64_t>{1, 1, 1, 1};
    const Permutation pi = Permutation::identity(4);
    const ScheduleGrid grid = eval_grid(inst, pi);
    CHECK(weighted_tardiness(grid, inst, pi) == tardiness_total(grid, inst, pi));
}

TEST_CASE("objective_value dispatches to the matching function") {
    Instance inst = load_instance(data_path("example1.json"));
    inst.ext.due_dates = std::vector<std::int64_t>{6, 9, 13, 15};
    inst.ext.weights = std::vector<std::int64_t>{3, 1, 4, 1};
    const Permutation pi = Permutation::identity(4);
    const ScheduleGrid grid = eval_grid(inst, pi);

    CHECK(objective_value(Objective::Cmax, grid, inst, pi) == 16);
    CHECK(objective_value(Objective::Lmax, grid, inst, pi) ==
          lateness_max(grid, inst, pi));
    CHECK(objective_value(Objective::TotalTardiness, grid, inst, pi) ==
          tardiness_total(grid, inst, pi));
    CHECK(objective_value(Objective::MaxTardiness, grid, inst, pi) ==
          tardiness_max(grid, inst, pi));
    CHECK(objective_value(Objective::NumTardy, grid, inst, pi) ==
          num_tardy(grid, inst, pi));
    CHECK(objective_value(Objective::WeightedTotalTardiness, grid, inst, pi) ==
          weighted_tardiness(grid, inst, pi));
}

TEST_CASE("missing instance data raises instead of guessing") {
    const Instance inst = load_instance(data_path("example1.json"));
    const Permutation pi = Permutation::identity(4);
    const ScheduleGrid grid = eval_grid(inst, pi);
    CHECK_THROWS_AS((void)lateness_max(grid, inst, pi), std::invalid_argument);
    CHECK_THROWS_AS((void)objective_value(Objective::NumTardy, grid, inst, pi),
                    std::invalid_argument);

    Instance with_due = inst;
    with_due.ext.due_dates = std::vector<std::int64_t>{1, 1, 1, 1};
    CHECK_THROWS_AS((void)weighted_tardiness(grid, with_due, pi),
                    std::invalid_argument);
}

TEST_CASE("an infeasible schedule has no objective value") {
    Instance inst = load_instance(data_path("example5b.json"));
    inst.ext.due_dates = std::vector<std::int64_t>{1, 1, 1, 1};
    inst.ext.weights = std::vector<std::int64_t>{1, 1, 1, 1};
    const Permutation pi = Permutation::identity(4);
    const ScheduleGrid grid = eval_grid(inst, pi);
    REQUIRE_FALSE(grid.all_finite());
    for (Objective o : {Objective::Cmax, Objective::Lmax, Objective::TotalTardiness,
                        Objective::MaxTardiness, Objective::NumTardy,
                        Objective::WeightedTotalTardiness})
        CHECK_FALSE(objective_value(o, grid, inst, pi).has_value());
}
