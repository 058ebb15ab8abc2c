#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "flowshop/time_value.hpp"

namespace flowshop {

// Evaluated completion values for one (instance, permutation) pair.
// cells[a][k] is the adjusted completion of the job at position a on machine
// k; starts[a][k] is the earliest start the evaluation actually used (the
// predecessor bound, lifted by the release time on Cr machines and shifted
// past the pause when the shift rule fired). A cell with an infeasible value
// keeps a finite start when the work itself was placed and only the deadline
// check failed.
struct ScheduleGrid {
    int n = 0;
    int m = 0;
    std::vector<TimeValue> cells;
    std::vector<TimeValue> starts;

    ScheduleGrid() = default;
    ScheduleGrid(int n_, int m_)
        : n(n_),
          m(m_),
          cells(static_cast<std::size_t>(n_) * m_),
          starts(static_cast<std::size_t>(n_) * m_) {}

    std::size_t idx(int a, int k) const {
        return static_cast<std::size_t>(a) * m + k;
    }
    TimeValue cell(int a, int k) const { return cells[idx(a, k)]; }
    TimeValue start(int a, int k) const { return starts[idx(a, k)]; }
    bool all_finite() const;
};

// One enumerator per definitional case of each evaluation layer. Exactly one
// case fires per cell per layer; the counters below let tests assert that.
enum class BaseCase : std::uint8_t {
    Sharp,       // predecessor already infeasible, dispatch skipped
    C,
    Cr,
    CrepPlain,
    CrepAdjust,  // position is a multiple of q
    CinFirst,
    CinRest,
    SdstFirst,   // position 1: self-transition setup
    SdstRest,
    Count
};

enum class PauseCase : std::uint8_t {
    Inactive,  // no pause configured
    Sharp,
    Before,    // completes no later than the pause start
    After,     // starts strictly after the pause start
    Shifted,   // straddles the pause start and is pushed past the pause
    Count
};

enum class DeadlineCase : std::uint8_t {
    Inactive,  // no deadlines configured
    Sharp,
    Pass,
    Violate,
    Count
};

struct BranchStats {
    std::int64_t finalized = 0;
    std::array<std::int64_t, static_cast<std::size_t>(BaseCase::Count)> base{};
    std::array<std::int64_t, static_cast<std::size_t>(PauseCase::Count)> pause{};
    std::array<std::int64_t, static_cast<std::size_t>(DeadlineCase::Count)> deadline{};
    // Per-cell case ids of the most recently evaluated grid, row-major.
    std::vector<BaseCase> base_grid;
    std::vector<PauseCase> pause_grid;
    std::vector<DeadlineCase> deadline_grid;

    std::int64_t base_total() const;
    std::int64_t pause_total() const;
    std::int64_t deadline_total() const;
};

}  // namespace flowshop
