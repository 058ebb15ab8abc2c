#include "flowshop/gen.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

#include "flowshop/engine.hpp"

namespace flowshop {

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9E3779B97f4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    return next() % bound;
}

std::int64_t SplitMix64::between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

double SplitMix64::unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

SplitMix64 SplitMix64::split(std::uint64_t stream) const {
    SplitMix64 child(state_ ^ (stream * 0x9E3779B97f4A7C15ULL + 0x94D049BB133111EBULL));
    child.next();
    return child;
}

Instance generate(const GenSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("gen: n must be at least 1");
    if (spec.m < 1) throw std::invalid_argument("gen: m must be at least 1");
    if (spec.p_min < 0 || spec.p_min > spec.p_max)
        throw std::invalid_argument("gen: need 0 <= p_min <= p_max");
    if (spec.allowed_types.empty())
        throw std::invalid_argument("gen: allowed_types must not be empty");
    for (double prob : {spec.pause_prob, spec.deadline_prob, spec.due_date_prob})
        if (prob < 0.0 || prob > 1.0)
            throw std::invalid_argument("gen: probabilities must lie in [0, 1]");
    if (spec.deadline_slack <= 0.0)
        throw std::invalid_argument("gen: deadline_slack must be positive");

    const auto n = static_cast<std::size_t>(spec.n);
    const auto m = static_cast<std::size_t>(spec.m);
    const SplitMix64 root(spec.seed);

    Instance inst;
    inst.n = spec.n;
    inst.m = spec.m;

    SplitMix64 rng = root.split(1);
    for (std::size_t k = 0; k < m; ++k)
        inst.types.push_back(spec.allowed_types[rng.below(spec.allowed_types.size())]);

    rng = root.split(2);
    inst.p.assign(n, std::vector<std::int64_t>(m, 0));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < m; ++k)
            inst.p[j][k] = rng.between(spec.p_min, spec.p_max);

    if (inst.has_type(MachineType::Cr)) {
        rng = root.split(3);
        std::vector<std::int64_t> r(n, 0);
        for (std::size_t j = 0; j < n; ++j) r[j] = rng.between(0, 3 * spec.m);
        inst.ext.release_times = std::move(r);
    }

    if (inst.has_type(MachineType::Crep)) {
        rng = root.split(4);
        PeriodicParams per;
        per.q = static_cast<int>(rng.between(2, std::max(2, spec.n - 1)));
        per.delta.assign(m, 0);
        for (std::size_t k = 0; k < m; ++k)
            if (inst.types[k] == MachineType::Crep) per.delta[k] = rng.between(1, 5);
        inst.ext.periodic = std::move(per);
    }

    if (inst.has_type(MachineType::Cin)) {
        rng = root.split(5);
        Matrix din(n, std::vector<std::int64_t>(m, 0));
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < m; ++k)
                if (inst.types[k] == MachineType::Cin) din[j][k] = rng.between(0, 4);
        inst.ext.initial_setup = std::move(din);
    }

    if (inst.has_type(MachineType::CSDST)) {
        rng = root.split(6);
        SdstParams sdst;
        sdst.z = static_cast<int>(rng.between(1, 3));
        const auto z = static_cast<std::size_t>(sdst.z);
        for (std::size_t j = 0; j < n; ++j)
            sdst.tool_of_job.push_back(static_cast<int>(rng.between(1, sdst.z)));
        for (std::size_t k = 0; k < m; ++k) {
            if (inst.types[k] != MachineType::CSDST) continue;
            Matrix tau(z, std::vector<std::int64_t>(z, 0));
            for (std::size_t a = 0; a < z; ++a)
                for (std::size_t b = 0; b < z; ++b) tau[a][b] = rng.between(0, 4);
            sdst.tau[static_cast<int>(k) + 1] = std::move(tau);
        }
        inst.ext.sdst = std::move(sdst);
    }

    rng = root.split(7);
    if (rng.unit() < spec.pause_prob) {
        PauseParams pause;
        pause.t_end = rng.between(
            1, static_cast<std::int64_t>(spec.n + spec.m) * (spec.p_max + 1) / 2);
        pause.delta = rng.between(1, 4);
        inst.ext.pause = pause;
    }

    rng = root.split(8);
    if (rng.unit() < spec.deadline_prob) {
        // Deadlines come from the completions of the identity order, so the
        // instance is feasible by construction whenever the slack is >= 1.
        const ScheduleGrid grid = eval_grid(inst, Permutation::identity(spec.n));
        std::vector<std::int64_t> deadlines(n, 0);
        for (std::size_t j = 0; j < n; ++j) {
            const std::int64_t c = grid.cell(static_cast<int>(j), spec.m - 1).value();
            deadlines[j] = static_cast<std::int64_t>(
                std::floor(static_cast<double>(c) * spec.deadline_slack));
        }
        inst.ext.deadlines = std::move(deadlines);
    }

    rng = root.split(9);
    if (rng.unit() < spec.due_date_prob) {
        const ScheduleGrid grid = eval_grid(inst, Permutation::identity(spec.n));
        std::vector<std::int64_t> due(n, 0);
        std::vector<std::int64_t> weights(n, 0);
        for (std::size_t j = 0; j < n; ++j) {
            const TimeValue c = grid.cell(static_cast<int>(j), spec.m - 1);
            const std::int64_t base = c.is_finite() ? c.value() : 1;
            const double factor = 0.7 + 0.6 * rng.unit();
            due[j] = static_cast<std::int64_t>(
                std::floor(static_cast<double>(base) * factor));
            weights[j] = rng.between(1, 5);
        }
        inst.ext.due_dates = std::move(due);
        inst.ext.weights = std::move(weights);
    }

    assert(!has_errors(validate_instance(inst)));
    return inst;
}

}  // namespace flowshop
