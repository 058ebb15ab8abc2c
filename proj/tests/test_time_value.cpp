#include <doctest.h>

#include "flowshop/time_value.hpp"

// tv_add / tv_max are hidden friends, found through their TimeValue arguments.
using flowshop::TimeValue;

TEST_CASE("default constructed value is infeasible") {
    TimeValue v;
    CHECK_FALSE(v.is_finite());
    CHECK(v == TimeValue::infeasible());
}

TEST_CASE("finite values carry their time") {
    const TimeValue v = TimeValue::finite(42);
    CHECK(v.is_finite());
    CHECK(v.value() == 42);
    CHECK(v == TimeValue::finite(42));
    CHECK(v != TimeValue::finite(41));
    CHECK(v != TimeValue::infeasible());
}

TEST_CASE("addition adds finite values") {
    CHECK(tv_add(TimeValue::finite(3), TimeValue::finite(4)) == TimeValue::finite(7));
    CHECK(tv_add(TimeValue::finite(0), TimeValue::finite(0)) == TimeValue::finite(0));
}

TEST_CASE("max picks the later finite value") {
    CHECK(tv_max(TimeValue::finite(3), TimeValue::finite(4)) == TimeValue::finite(4));
    CHECK(tv_max(TimeValue::finite(9), TimeValue::finite(2)) == TimeValue::finite(9));
    CHECK(tv_max(TimeValue::finite(5), TimeValue::finite(5)) == TimeValue::finite(5));
}

TEST_CASE("infeasible absorbs through both operations") {
    const TimeValue sharp = TimeValue::infeasible();
    const TimeValue fin = TimeValue::finite(10);
    CHECK_FALSE(tv_add(sharp, fin).is_finite());
    CHECK_FALSE(tv_add(fin, sharp).is_finite());
    CHECK_FALSE(tv_add(sharp, sharp).is_finite());
    CHECK_FALSE(tv_max(sharp, fin).is_finite());
    CHECK_FALSE(tv_max(fin, sharp).is_finite());
    CHECK_FALSE(tv_max(sharp, sharp).is_finite());
}

TEST_CASE("operations are usable in constant expressions") {
    constexpr TimeValue a = TimeValue::finite(2);
    constexpr TimeValue b = TimeValue::finite(5);
    static_assert(tv_add(a, b).value() == 7);
    static_assert(tv_max(a, b).value() == 5);
    static_assert(!tv_max(a, TimeValue::infeasible()).is_finite());
}
