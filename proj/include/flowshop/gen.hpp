#pragma once

#include <cstdint>
#include <vector>

#include "flowshop/instance.hpp"

namespace flowshop {

// Counter-based splittable generator (splitmix64). Deliberately simple:
// byte-identical output across platforms matters more here than statistical
// quality.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    std::uint64_t below(std::uint64_t bound);                  // [0, bound)
    std::int64_t between(std::int64_t lo, std::int64_t hi);    // [lo, hi]
    double unit();                                             // [0, 1)
    SplitMix64 split(std::uint64_t stream) const;

private:
    std::uint64_t state_;
};

struct GenSpec {
    std::uint64_t seed = 1;
    int n = 5;
    int m = 3;
    std::vector<MachineType> allowed_types = {MachineType::C};
    std::int64_t p_min = 1;
    std::int64_t p_max = 9;
    double pause_prob = 0.0;
    double deadline_prob = 0.0;
    double due_date_prob = 0.0;  // due dates come with weights
    // Deadlines are identity-order completions scaled by this factor, so any
    // value >= 1 keeps the identity order feasible by construction.
    double deadline_slack = 1.2;
};

// Produces an instance that passes validation. Throws std::invalid_argument
// on impossible specs. The same spec always yields the same instance.
Instance generate(const GenSpec& spec);

}  // namespace flowshop
