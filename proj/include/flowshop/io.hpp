#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "flowshop/grid.hpp"
#include "flowshop/instance.hpp"

namespace flowshop {

// Raised on malformed documents; the message names the offending key path,
// e.g. "processing_times[2]: expected 3 entries".
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Schema-checked parse: strict key set (unknown keys are rejected), integral
// entries, required shapes. Does not run semantic validation.
Instance parse_instance_document(const std::string& text);

// parse_instance_document plus validate_instance; throws ParseError listing
// the validation errors.
Instance parse_instance(const std::string& text);

Instance load_instance(const std::filesystem::path& path);
std::string serialize_instance(const Instance& inst);
void save_instance(const Instance& inst, const std::filesystem::path& path);

// Tab-separated listing, one row per (position, machine) in row-major order:
//
//   position\tjob\tmachine\tstart\tend
//   ...
//   makespan <value|#>
//
// Infeasible values render as "#". Job and machine numbers are 1-based. The
// format is byte-stable for golden-file comparison.
std::string export_schedule(const ScheduleGrid& grid, const Permutation& pi);

}  // namespace flowshop
