#include "flowshop/gantt.hpp"

#include <algorithm>
#include <sstream>

namespace flowshop {

namespace {

// Setup time in front of the main block of cell (a, k), if any.
std::int64_t setup_length(const Instance& inst, const Permutation& pi, int a, int k) {
    const int j = pi.job_at(a);
    if (inst.types[static_cast<std::size_t>(k)] == MachineType::Cin && a == 0)
        return (*inst.ext.initial_setup)[static_cast<std::size_t>(j)]
                                        [static_cast<std::size_t>(k)];
    if (inst.types[static_cast<std::size_t>(k)] == MachineType::CSDST) {
        const SdstParams& sdst = *inst.ext.sdst;
        const Matrix& tau = sdst.tau.at(k + 1);
        const int cur = sdst.tool_of_job[static_cast<std::size_t>(j)];
        const int from = a == 0 ? cur : sdst.tool_of_job[static_cast<std::size_t>(pi.job_at(a - 1))];
        return tau[static_cast<std::size_t>(from - 1)][static_cast<std::size_t>(cur - 1)];
    }
    return 0;
}

std::int64_t adjust_length(const Instance& inst, int a, int k) {
    if (inst.types[static_cast<std::size_t>(k)] != MachineType::Crep) return 0;
    const PeriodicParams& per = *inst.ext.periodic;
    if ((a + 1) % per.q != 0) return 0;
    return per.delta[static_cast<std::size_t>(k)];
}

}  // namespace

GanttChart build_gantt(const Instance& inst, const ScheduleGrid& grid,
                       const Permutation& pi) {
    GanttChart chart;
    chart.machines = inst.m;
    chart.pause = inst.ext.pause;

    for (int a = 0; a < grid.n && !chart.first_infeasible; ++a)
        for (int k = 0; k < grid.m; ++k)
            if (!grid.cell(a, k).is_finite()) {
                chart.first_infeasible = {a, k};
                break;
            }

    for (int k = 0; k < grid.m; ++k) {
        for (int a = 0; a < grid.n; ++a) {
            const TimeValue v = grid.cell(a, k);
            if (!v.is_finite()) continue;
            const int j = pi.job_at(a);
            const std::string num = std::to_string(j + 1);
            const std::int64_t end = v.value();
            const std::int64_t adjust = adjust_length(inst, a, k);
            const std::int64_t p =
                inst.p[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
            const std::int64_t main_end = end - adjust;
            const std::int64_t main_start = main_end - p;
            const std::int64_t setup = setup_length(inst, pi, a, k);
            if (setup > 0)
                chart.segments.push_back({k, a, j, GanttSegment::Kind::Setup,
                                          main_start - setup, main_start, num + "a"});
            if (p > 0)
                chart.segments.push_back(
                    {k, a, j, GanttSegment::Kind::Main, main_start, main_end, num});
            if (adjust > 0)
                chart.segments.push_back({k, a, j, GanttSegment::Kind::Adjust,
                                          main_end, end, num + "a"});
            chart.horizon = std::max(chart.horizon, end);
        }
    }
    if (chart.pause)
        chart.horizon = std::max(chart.horizon, chart.pause->t_end + chart.pause->delta);
    return chart;
}

std::string render_gantt_text(const GanttChart& chart, const Instance& inst) {
    std::ostringstream os;
    if (chart.pause)
        os << "pause " << chart.pause->t_end << ' '
           << chart.pause->t_end + chart.pause->delta << '\n';
    for (int k = 0; k < chart.machines; ++k) {
        os << "machine " << k + 1 << " ("
           << to_string(inst.types[static_cast<std::size_t>(k)]) << "):";
        for (const GanttSegment& seg : chart.segments) {
            if (seg.machine != k) continue;
            os << " [" << seg.start << ".." << seg.end << ' ' << seg.label << ']';
        }
        os << '\n';
    }
    if (chart.first_infeasible)
        os << "infeasible at position " << chart.first_infeasible->first + 1
           << " machine " << chart.first_infeasible->second + 1 << '\n';
    return os.str();
}

std::string render_gantt_svg(const GanttChart& chart, const Instance& inst) {
    constexpr std::int64_t px = 12;        // horizontal pixels per time unit
    constexpr std::int64_t lane_h = 32;
    constexpr std::int64_t left = 90;
    constexpr std::int64_t top = 8;
    const std::int64_t width = left + chart.horizon * px + 48;
    const std::int64_t height = top + chart.machines * lane_h + 8;

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
       << "\" height=\"" << height << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
    os << "<style>\n"
          ".main{fill:#7fb3d5;stroke:#333}\n"
          ".extra{fill:#f5b041;stroke:#333}\n"
          ".band{fill:#d5d8dc}\n"
          ".mark{fill:#c0392b;font-weight:bold}\n"
          "</style>\n";
    if (chart.pause) {
        const std::int64_t x = left + chart.pause->t_end * px;
        os << "<rect class=\"band\" x=\"" << x << "\" y=\"" << top << "\" width=\""
           << chart.pause->delta * px << "\" height=\"" << chart.machines * lane_h
           << "\"/>\n";
    }
    for (int k = 0; k < chart.machines; ++k) {
        const std::int64_t y = top + k * lane_h;
        os << "<text x=\"4\" y=\"" << y + lane_h / 2 + 4 << "\">machine " << k + 1
           << " (" << to_string(inst.types[static_cast<std::size_t>(k)]) << ")</text>\n";
        for (const GanttSegment& seg : chart.segments) {
            if (seg.machine != k) continue;
            const bool extra = seg.kind != GanttSegment::Kind::Main;
            const std::int64_t x = left + seg.start * px;
            const std::int64_t w = (seg.end - seg.start) * px;
            os << "<rect class=\"" << (extra ? "extra" : "main") << "\" x=\"" << x
               << "\" y=\"" << y + 4 << "\" width=\"" << w << "\" height=\""
               << lane_h - 8 << "\"/>\n";
            os << "<text x=\"" << x + w / 2 << "\" y=\"" << y + lane_h / 2 + 4
               << "\" text-anchor=\"middle\">" << seg.label << "</text>\n";
        }
        if (chart.first_infeasible && chart.first_infeasible->second == k)
            os << "<text class=\"mark\" x=\"" << left + chart.horizon * px + 12
               << "\" y=\"" << y + lane_h / 2 + 4 << "\">#</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace flowshop
