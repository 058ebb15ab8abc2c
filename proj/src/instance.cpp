#include "flowshop/instance.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace flowshop {

const char* to_string(MachineType t) {
    switch (t) {
        case MachineType::C: return "C";
        case MachineType::Cr: return "Cr";
        case MachineType::Crep: return "Crep";
        case MachineType::Cin: return "Cin";
        case MachineType::CSDST: return "CSDST";
    }
    return "?";
}

std::optional<MachineType> machine_type_from_string(std::string_view s) {
    if (s == "C") return MachineType::C;
    if (s == "Cr") return MachineType::Cr;
    if (s == "Crep") return MachineType::Crep;
    if (s == "Cin") return MachineType::Cin;
    if (s == "CSDST") return MachineType::CSDST;
    return std::nullopt;
}

bool Instance::has_type(MachineType t) const {
    return std::find(types.begin(), types.end(), t) != types.end();
}

namespace {

void error(std::vector<Diagnostic>& out, std::string msg) {
    out.push_back({Diagnostic::Severity::Error, std::move(msg)});
}

void warning(std::vector<Diagnostic>& out, std::string msg) {
    out.push_back({Diagnostic::Severity::Warning, std::move(msg)});
}

bool check_vector(std::vector<Diagnostic>& out, const std::vector<std::int64_t>& v,
                  std::size_t len, const char* name) {
    if (v.size() != len) {
        std::ostringstream os;
        os << name << ": expected " << len << " entries, got " << v.size();
        error(out, os.str());
        return false;
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0) {
            std::ostringstream os;
            os << name << "[" << i + 1 << "]: negative value " << v[i];
            error(out, os.str());
            return false;
        }
    }
    return true;
}

bool check_matrix(std::vector<Diagnostic>& out, const Matrix& mat, std::size_t rows,
                  std::size_t cols, const char* name) {
    if (mat.size() != rows) {
        std::ostringstream os;
        os << name << ": expected " << rows << " rows, got " << mat.size();
        error(out, os.str());
        return false;
    }
    for (std::size_t j = 0; j < rows; ++j) {
        if (mat[j].size() != cols) {
            std::ostringstream os;
            os << name << "[" << j + 1 << "]: expected " << cols << " entries, got "
               << mat[j].size();
            error(out, os.str());
            return false;
        }
        for (std::size_t k = 0; k < cols; ++k) {
            if (mat[j][k] < 0) {
                std::ostringstream os;
                os << name << "[" << j + 1 << "][" << k + 1 << "]: negative value "
                   << mat[j][k];
                error(out, os.str());
                return false;
            }
        }
    }
    return true;
}

}  // namespace

std::vector<Diagnostic> validate_instance(const Instance& inst) {
    std::vector<Diagnostic> out;
    if (inst.n < 1) error(out, "n must be at least 1");
    if (inst.m < 1) error(out, "m must be at least 1");
    if (!out.empty()) return out;

    const auto n = static_cast<std::size_t>(inst.n);
    const auto m = static_cast<std::size_t>(inst.m);
    check_matrix(out, inst.p, n, m, "processing_times");
    if (inst.types.size() != m) {
        std::ostringstream os;
        os << "machine_types: expected " << m << " entries, got " << inst.types.size();
        error(out, os.str());
    }
    if (!out.empty()) return out;

    const ExtensionParams& ext = inst.ext;

    if (inst.has_type(MachineType::Cr)) {
        if (!ext.release_times)
            error(out, "missing release_times for Cr machine");
        else
            check_vector(out, *ext.release_times, n, "release_times");
    } else if (ext.release_times) {
        warning(out, "release_times present but no machine has type Cr");
    }

    if (inst.has_type(MachineType::Crep)) {
        if (!ext.periodic) {
            error(out, "missing periodic block for Crep machine");
        } else {
            if (ext.periodic->q <= 1) {
                std::ostringstream os;
                os << "periodic.q must be greater than 1, got " << ext.periodic->q;
                error(out, os.str());
            }
            if (check_vector(out, ext.periodic->delta, m, "periodic.delta")) {
                for (std::size_t k = 0; k < m; ++k) {
                    if (ext.periodic->delta[k] != 0 && inst.types[k] != MachineType::Crep) {
                        std::ostringstream os;
                        os << "periodic.delta[" << k + 1
                           << "] is nonzero on a machine of type "
                           << to_string(inst.types[k]);
                        warning(out, os.str());
                    }
                }
            }
        }
    } else if (ext.periodic) {
        warning(out, "periodic block present but no machine has type Crep");
    }

    if (inst.has_type(MachineType::Cin)) {
        if (!ext.initial_setup) {
            error(out, "missing initial_setup for Cin machine");
        } else if (check_matrix(out, *ext.initial_setup, n, m, "initial_setup")) {
            for (std::size_t k = 0; k < m; ++k) {
                if (inst.types[k] == MachineType::Cin) continue;
                for (std::size_t j = 0; j < n; ++j) {
                    if ((*ext.initial_setup)[j][k] != 0) {
                        std::ostringstream os;
                        os << "initial_setup[" << j + 1 << "][" << k + 1
                           << "] is nonzero on a machine of type "
                           << to_string(inst.types[k]);
                        warning(out, os.str());
                        break;
                    }
                }
            }
        }
    } else if (ext.initial_setup) {
        warning(out, "initial_setup present but no machine has type Cin");
    }

    if (inst.has_type(MachineType::CSDST)) {
        if (!ext.sdst) {
            error(out, "missing sdst block for CSDST machine");
        } else {
            const SdstParams& sdst = *ext.sdst;
            if (sdst.z < 1) error(out, "sdst.z must be at least 1");
            if (sdst.tool_of_job.size() != n) {
                std::ostringstream os;
                os << "sdst.tool_of_job: expected " << n << " entries, got "
                   << sdst.tool_of_job.size();
                error(out, os.str());
            } else {
                for (std::size_t j = 0; j < n; ++j) {
                    if (sdst.tool_of_job[j] < 1 || sdst.tool_of_job[j] > sdst.z) {
                        std::ostringstream os;
                        os << "sdst.tool_of_job[" << j + 1 << "]: tool "
                           << sdst.tool_of_job[j] << " outside 1.." << sdst.z;
                        error(out, os.str());
                    }
                }
            }
            for (std::size_t k = 0; k < m; ++k) {
                if (inst.types[k] != MachineType::CSDST) continue;
                auto it = sdst.tau.find(static_cast<int>(k) + 1);
                if (it == sdst.tau.end()) {
                    std::ostringstream os;
                    os << "sdst.tau: missing matrix for CSDST machine " << k + 1;
                    error(out, os.str());
                    continue;
                }
                std::ostringstream name;
                name << "sdst.tau[" << k + 1 << "]";
                const auto z = static_cast<std::size_t>(std::max(sdst.z, 0));
                check_matrix(out, it->second, z, z, name.str().c_str());
            }
            for (const auto& [machine, mat] : sdst.tau) {
                (void)mat;
                if (machine < 1 || machine > inst.m ||
                    inst.types[static_cast<std::size_t>(machine) - 1] != MachineType::CSDST) {
                    std::ostringstream os;
                    os << "sdst.tau has a matrix for machine " << machine
                       << " which is not a CSDST machine";
                    warning(out, os.str());
                }
            }
        }
    } else if (ext.sdst) {
        warning(out, "sdst block present but no machine has type CSDST");
    }

    if (ext.pause) {
        if (ext.pause->t_end < 0) error(out, "pause.t_end must be nonnegative");
        if (ext.pause->delta < 0) error(out, "pause.delta must be nonnegative");
    }
    if (ext.deadlines) check_vector(out, *ext.deadlines, n, "deadlines");
    if (ext.due_dates) check_vector(out, *ext.due_dates, n, "due_dates");
    if (ext.weights) check_vector(out, *ext.weights, n, "weights");

    return out;
}

bool has_errors(const std::vector<Diagnostic>& diags) {
    return std::any_of(diags.begin(), diags.end(), [](const Diagnostic& d) {
        return d.severity == Diagnostic::Severity::Error;
    });
}

std::string format_diagnostics(const std::vector<Diagnostic>& diags) {
    std::ostringstream os;
    for (const Diagnostic& d : diags) {
        os << (d.severity == Diagnostic::Severity::Error ? "error: " : "warning: ")
           << d.message << "\n";
    }
    return os.str();
}

Permutation::Permutation(std::vector<int> pos_to_job) : pi_(std::move(pos_to_job)) {
    std::vector<char> seen(pi_.size(), 0);
    for (int job : pi_) {
        if (job < 0 || job >= static_cast<int>(pi_.size()) || seen[job])
            throw std::invalid_argument("permutation is not a bijection on job numbers");
        seen[job] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return Permutation(std::move(v));
}

Permutation Permutation::from_one_based(const std::vector<int>& order) {
    std::vector<int> v;
    v.reserve(order.size());
    for (int job : order) v.push_back(job - 1);
    return Permutation(std::move(v));
}

std::vector<int> Permutation::to_one_based() const {
    std::vector<int> v;
    v.reserve(pi_.size());
    for (int job : pi_) v.push_back(job + 1);
    return v;
}

}  // namespace flowshop
