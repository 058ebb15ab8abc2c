#include <doctest.h>

#include <stdexcept>

#include "flowshop/instance.hpp"
#include "test_util.hpp"

using namespace flowshop;

namespace {

bool mentions(const std::vector<Diagnostic>& diags, const char* needle) {
    for (const Diagnostic& d : diags)
        if (d.message.find(needle) != std::string::npos) return true;
    return false;
}

}  // namespace

TEST_CASE("machine type names round trip") {
    for (MachineType t : all_machine_types()) {
        const auto back = machine_type_from_string(to_string(t));
        REQUIRE(back.has_value());
        CHECK(*back == t);
    }
    CHECK_FALSE(machine_type_from_string("Cx").has_value());
    CHECK_FALSE(machine_type_from_string("").has_value());
    CHECK_FALSE(machine_type_from_string("c").has_value());
}

TEST_CASE("permutation constructor accepts bijections only") {
    CHECK(Permutation({2, 0, 1}).job_at(0) == 2);
    CHECK(Permutation::identity(3).jobs() == std::vector<int>{0, 1, 2});
    CHECK(Permutation::from_one_based({3, 1, 2}).jobs() == std::vector<int>{2, 0, 1});
    CHECK(Permutation::from_one_based({3, 1, 2}).to_one_based() ==
          std::vector<int>{3, 1, 2});

    CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);  // duplicate
    CHECK_THROWS_AS(Permutation({0, 3}), std::invalid_argument);     // out of range
    CHECK_THROWS_AS(Permutation({-1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_one_based({0, 1}), std::invalid_argument);
}

TEST_CASE("plain instance validates cleanly") {
    const Instance inst = plain_instance({{1, 2}, {3, 4}});
    CHECK(validate_instance(inst).empty());
}

TEST_CASE("each machine type demands its data block") {
    Instance inst = plain_instance({{1, 2}, {3, 4}});

    SUBCASE("release times") {
        inst.types[0] = MachineType::Cr;
        auto diags = validate_instance(inst);
        CHECK(has_errors(diags));
        CHECK(mentions(diags, "missing release_times"));
        inst.ext.release_times = std::vector<std::int64_t>{0, 5};
        CHECK(validate_instance(inst).empty());
    }
    SUBCASE("periodic block") {
        inst.types[1] = MachineType::Crep;
        auto diags = validate_instance(inst);
        CHECK(mentions(diags, "missing periodic block"));
        inst.ext.periodic = PeriodicParams{1, {0, 2}};
        diags = validate_instance(inst);
        CHECK(mentions(diags, "periodic.q must be greater than 1, got 1"));
        inst.ext.periodic->q = 2;
        CHECK(validate_instance(inst).empty());
    }
    SUBCASE("initial setup") {
        inst.types[0] = MachineType::Cin;
        auto diags = validate_instance(inst);
        CHECK(mentions(diags, "missing initial_setup"));
        inst.ext.initial_setup = Matrix{{1, 0}, {2, 0}};
        CHECK(validate_instance(inst).empty());
    }
    SUBCASE("setup matrices") {
        inst.types[1] = MachineType::CSDST;
        auto diags = validate_instance(inst);
        CHECK(mentions(diags, "missing sdst block"));
        SdstParams sdst;
        sdst.z = 2;
        sdst.tool_of_job = {1, 2};
        inst.ext.sdst = sdst;
        diags = validate_instance(inst);
        CHECK(mentions(diags, "sdst.tau: missing matrix for CSDST machine 2"));
        inst.ext.sdst->tau[2] = {{0, 1}, {1, 0}};
        CHECK(validate_instance(inst).empty());
    }
}

TEST_CASE("shape and sign errors name the offending entry") {
    Instance inst = plain_instance({{1, 2}, {3, 4}});

    SUBCASE("short vector") {
        inst.types[0] = MachineType::Cr;
        inst.ext.release_times = std::vector<std::int64_t>{0};
        CHECK(mentions(validate_instance(inst), "release_times: expected 2 entries, got 1"));
    }
    SUBCASE("negative entry") {
        inst.types[0] = MachineType::Cr;
        inst.ext.release_times = std::vector<std::int64_t>{0, -3};
        CHECK(mentions(validate_instance(inst), "release_times[2]: negative value -3"));
    }
    SUBCASE("ragged matrix") {
        inst.p = {{1, 2}, {3}};
        CHECK(mentions(validate_instance(inst), "processing_times[2]: expected 2 entries, got 1"));
    }
    SUBCASE("tool label out of range") {
        inst.types[0] = MachineType::CSDST;
        SdstParams sdst;
        sdst.z = 2;
        sdst.tool_of_job = {1, 3};
        sdst.tau[1] = {{0, 0}, {0, 0}};
        inst.ext.sdst = std::move(sdst);
        CHECK(mentions(validate_instance(inst), "sdst.tool_of_job[2]: tool 3 outside 1..2"));
    }
}

TEST_CASE("suspicious but legal data only warns") {
    Instance inst = plain_instance({{1, 2}, {3, 4}});

    SUBCASE("unused block") {
        inst.ext.release_times = std::vector<std::int64_t>{0, 0};
        auto diags = validate_instance(inst);
        CHECK_FALSE(has_errors(diags));
        CHECK(mentions(diags, "release_times present but no machine has type Cr"));
    }
    SUBCASE("adjustment time on a plain machine") {
        inst.types[0] = MachineType::Crep;
        inst.ext.periodic = PeriodicParams{2, {1, 7}};
        auto diags = validate_instance(inst);
        CHECK_FALSE(has_errors(diags));
        CHECK(mentions(diags, "periodic.delta[2] is nonzero on a machine of type C"));
    }
    SUBCASE("setup matrix for a plain machine") {
        inst.types[0] = MachineType::CSDST;
        SdstParams sdst;
        sdst.z = 1;
        sdst.tool_of_job = {1, 1};
        sdst.tau[1] = {{0}};
        sdst.tau[2] = {{0}};
        inst.ext.sdst = std::move(sdst);
        auto diags = validate_instance(inst);
        CHECK_FALSE(has_errors(diags));
        CHECK(mentions(diags, "sdst.tau has a matrix for machine 2"));
    }
}

TEST_CASE("diagnostics format with severity prefixes") {
    const std::vector<Diagnostic> diags = {
        {Diagnostic::Severity::Error, "broken"},
        {Diagnostic::Severity::Warning, "odd"},
    };
    CHECK(format_diagnostics(diags) == "error: broken\nwarning: odd\n");
    CHECK(has_errors(diags));
    CHECK_FALSE(has_errors({diags[1]}));
}
