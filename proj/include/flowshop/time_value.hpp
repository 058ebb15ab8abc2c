#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <optional>

namespace flowshop {

// A completion-time value: either a nonnegative instant in integer time
// units, or the absorbing infeasibility marker (rendered "#" in text output).
// The marker is a distinct state, never a sentinel integer, so absorption
// cannot be bypassed by arithmetic.
class TimeValue {
public:
    // Default-constructed values are infeasible; use finite() for instants.
    constexpr TimeValue() = default;

    static constexpr TimeValue finite(std::int64_t t) {
        assert(t >= 0);
        TimeValue v;
        v.t_ = t;
        return v;
    }
    static constexpr TimeValue infeasible() { return TimeValue{}; }

    constexpr bool is_finite() const { return t_.has_value(); }
    constexpr std::int64_t value() const {
        assert(t_.has_value());
        return *t_;
    }

    constexpr bool operator==(const TimeValue&) const = default;

    friend constexpr TimeValue tv_add(TimeValue a, TimeValue b) {
        if (!a.t_ || !b.t_) return infeasible();
        return finite(*a.t_ + *b.t_);
    }
    friend constexpr TimeValue tv_max(TimeValue a, TimeValue b) {
        if (!a.t_ || !b.t_) return infeasible();
        return finite(std::max(*a.t_, *b.t_));
    }

private:
    std::optional<std::int64_t> t_;
};

}  // namespace flowshop
