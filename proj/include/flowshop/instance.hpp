#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace flowshop {

// Machine behaviours:
//   C      plain processing
//   Cr     jobs may not start before their release time
//   Crep   periodic equipment adjustment after every q-th position
//   Cin    initial setup before the first job
//   CSDST  sequence-dependent setup between consecutive tools
enum class MachineType { C, Cr, Crep, Cin, CSDST };

const char* to_string(MachineType t);
std::optional<MachineType> machine_type_from_string(std::string_view s);

using Matrix = std::vector<std::vector<std::int64_t>>;

struct PeriodicParams {
    int q = 0;                         // adjustment after every q-th position, q > 1
    std::vector<std::int64_t> delta;   // per-machine adjustment duration
    bool operator==(const PeriodicParams&) const = default;
};

struct SdstParams {
    int z = 0;                    // number of tools
    std::vector<int> tool_of_job; // 1-based tool label per job
    // z x z setup matrix per machine, keyed by 1-based machine index;
    // tau[v][w] is the setup when tool w follows tool v (both 1-based).
    std::map<int, Matrix> tau;
    bool operator==(const SdstParams&) const = default;
};

struct PauseParams {
    std::int64_t t_end = 0;  // latest instant work may still complete
    std::int64_t delta = 0;  // pause duration
    bool operator==(const PauseParams&) const = default;
};

struct ExtensionParams {
    std::optional<std::vector<std::int64_t>> release_times;
    std::optional<PeriodicParams> periodic;
    std::optional<Matrix> initial_setup;   // n x m, consumed at position 1
    std::optional<SdstParams> sdst;
    std::optional<PauseParams> pause;
    std::optional<std::vector<std::int64_t>> deadlines;  // hard, checked per machine
    std::optional<std::vector<std::int64_t>> due_dates;  // soft, objectives only
    std::optional<std::vector<std::int64_t>> weights;
    bool operator==(const ExtensionParams&) const = default;
};

struct Instance {
    int n = 0;
    int m = 0;
    Matrix p;                        // n x m processing times
    std::vector<MachineType> types;  // per machine
    ExtensionParams ext;

    bool has_type(MachineType t) const;
    bool operator==(const Instance&) const = default;
};

struct Diagnostic {
    enum class Severity { Error, Warning };
    Severity severity = Severity::Error;
    std::string message;
};

// Structural validation: dimensions, required extension blocks per machine
// type, label ranges. Warnings flag legal-but-suspicious data such as
// adjustment durations on machines that never use them.
std::vector<Diagnostic> validate_instance(const Instance& inst);
bool has_errors(const std::vector<Diagnostic>& diags);
std::string format_diagnostics(const std::vector<Diagnostic>& diags);

// Position -> job map over 0-based job ids. The constructor rejects anything
// that is not a bijection on {0..n-1}.
class Permutation {
public:
    explicit Permutation(std::vector<int> pos_to_job);
    static Permutation identity(int n);
    static Permutation from_one_based(const std::vector<int>& order);

    int size() const { return static_cast<int>(pi_.size()); }
    int job_at(int pos) const { return pi_[static_cast<std::size_t>(pos)]; }
    const std::vector<int>& jobs() const { return pi_; }
    std::vector<int> to_one_based() const;

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> pi_;
};

}  // namespace flowshop
