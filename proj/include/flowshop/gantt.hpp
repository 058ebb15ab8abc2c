#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flowshop/grid.hpp"
#include "flowshop/instance.hpp"

namespace flowshop {

// One rectangle in a machine lane. Setup (initial or sequence-dependent,
// drawn before the main block) and adjustment (drawn after it) carry the job
// number with an `a` suffix; the main block carries the bare number.
struct GanttSegment {
    enum class Kind { Setup, Main, Adjust };
    int machine = 0;   // 0-based
    int position = 0;  // 0-based
    int job = 0;       // 0-based
    Kind kind = Kind::Main;
    std::int64_t start = 0;
    std::int64_t end = 0;
    std::string label;  // "7" or "7a"
};

struct GanttChart {
    std::vector<GanttSegment> segments;  // ordered by machine, then start
    std::optional<PauseParams> pause;
    // Row-major first infeasible cell (position, machine), when any.
    std::optional<std::pair<int, int>> first_infeasible;
    int machines = 0;
    std::int64_t horizon = 0;
};

// Decomposes every finite cell into its sub-segments. An infeasible grid
// yields the evaluated prefix plus the first infeasible cell's location.
GanttChart build_gantt(const Instance& inst, const ScheduleGrid& grid,
                       const Permutation& pi);

// One line per machine lane; segments as "[start..end label]" tokens, the
// pause as a leading "pause <start> <end>" line, infeasibility as a trailing
// marker line.
std::string render_gantt_text(const GanttChart& chart, const Instance& inst);

// Standalone SVG document, one lane per machine, shaded setup/adjustment
// blocks, the pause as a vertical band.
std::string render_gantt_svg(const GanttChart& chart, const Instance& inst);

}  // namespace flowshop
