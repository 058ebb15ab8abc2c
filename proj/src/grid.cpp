#include "flowshop/grid.hpp"

#include <numeric>

namespace flowshop {

bool ScheduleGrid::all_finite() const {
    for (const TimeValue& v : cells)
        if (!v.is_finite()) return false;
    return true;
}

std::int64_t BranchStats::base_total() const {
    return std::accumulate(base.begin(), base.end(), std::int64_t{0});
}

std::int64_t BranchStats::pause_total() const {
    return std::accumulate(pause.begin(), pause.end(), std::int64_t{0});
}

std::int64_t BranchStats::deadline_total() const {
    return std::accumulate(deadline.begin(), deadline.end(), std::int64_t{0});
}

}  // namespace flowshop
