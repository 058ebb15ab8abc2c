#include "flowshop/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "flowshop/objectives.hpp"

namespace flowshop {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ParseError(path.empty() ? what : path + ": " + what);
}

std::string join(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
}

void check_keys(const json& obj, std::initializer_list<const char*> allowed,
                const std::string& path) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* k : allowed)
            if (it.key() == k) {
                known = true;
                break;
            }
        if (!known) fail(join(path, it.key()), "unknown key");
    }
}

const json& get(const json& obj, const char* key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(join(path, key), "missing required key");
    return *it;
}

std::int64_t get_int(const json& v, const std::string& path) {
    if (!v.is_number_integer()) fail(path, "expected an integer");
    return v.get<std::int64_t>();
}

std::vector<std::int64_t> get_int_vector(const json& v, std::size_t len,
                                         const std::string& path) {
    if (!v.is_array()) fail(path, "expected an array");
    if (v.size() != len) {
        std::ostringstream os;
        os << "expected " << len << " entries, got " << v.size();
        fail(path, os.str());
    }
    std::vector<std::int64_t> out;
    out.reserve(len);
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::ostringstream os;
        os << path << "[" << i + 1 << "]";
        out.push_back(get_int(v[i], os.str()));
    }
    return out;
}

Matrix get_matrix(const json& v, std::size_t rows, std::size_t cols,
                  const std::string& path) {
    if (!v.is_array()) fail(path, "expected an array");
    if (v.size() != rows) {
        std::ostringstream os;
        os << "expected " << rows << " rows, got " << v.size();
        fail(path, os.str());
    }
    Matrix out;
    out.reserve(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        std::ostringstream os;
        os << path << "[" << i + 1 << "]";
        out.push_back(get_int_vector(v[i], cols, os.str()));
    }
    return out;
}

}  // namespace

Instance parse_instance_document(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("top level: expected an object");
    check_keys(doc,
               {"n", "m", "processing_times", "machine_types", "release_times",
                "periodic", "initial_setup", "sdst", "pause", "deadlines",
                "due_dates", "weights"},
               "");

    Instance inst;
    inst.n = static_cast<int>(get_int(get(doc, "n", ""), "n"));
    inst.m = static_cast<int>(get_int(get(doc, "m", ""), "m"));
    if (inst.n < 1) fail("n", "must be at least 1");
    if (inst.m < 1) fail("m", "must be at least 1");
    const auto n = static_cast<std::size_t>(inst.n);
    const auto m = static_cast<std::size_t>(inst.m);

    inst.p = get_matrix(get(doc, "processing_times", ""), n, m, "processing_times");

    const json& types = get(doc, "machine_types", "");
    if (!types.is_array() || types.size() != m) {
        std::ostringstream os;
        os << "expected " << m << " entries";
        fail("machine_types", os.str());
    }
    for (std::size_t k = 0; k < m; ++k) {
        std::ostringstream os;
        os << "machine_types[" << k + 1 << "]";
        if (!types[k].is_string()) fail(os.str(), "expected a string");
        const auto t = machine_type_from_string(types[k].get<std::string>());
        if (!t) fail(os.str(), "unknown machine type \"" + types[k].get<std::string>() + "\"");
        inst.types.push_back(*t);
    }

    if (auto it = doc.find("release_times"); it != doc.end())
        inst.ext.release_times = get_int_vector(*it, n, "release_times");

    if (auto it = doc.find("periodic"); it != doc.end()) {
        if (!it->is_object()) fail("periodic", "expected an object");
        check_keys(*it, {"q", "delta"}, "periodic");
        PeriodicParams per;
        per.q = static_cast<int>(get_int(get(*it, "q", "periodic"), "periodic.q"));
        per.delta = get_int_vector(get(*it, "delta", "periodic"), m, "periodic.delta");
        inst.ext.periodic = std::move(per);
    }

    if (auto it = doc.find("initial_setup"); it != doc.end())
        inst.ext.initial_setup = get_matrix(*it, n, m, "initial_setup");

    if (auto it = doc.find("sdst"); it != doc.end()) {
        if (!it->is_object()) fail("sdst", "expected an object");
        check_keys(*it, {"z", "tool_of_job", "tau"}, "sdst");
        SdstParams sdst;
        sdst.z = static_cast<int>(get_int(get(*it, "z", "sdst"), "sdst.z"));
        if (sdst.z < 1) fail("sdst.z", "must be at least 1");
        const auto tools = get_int_vector(get(*it, "tool_of_job", "sdst"), n, "sdst.tool_of_job");
        for (std::int64_t t : tools) sdst.tool_of_job.push_back(static_cast<int>(t));
        const json& tau = get(*it, "tau", "sdst");
        if (!tau.is_object()) fail("sdst.tau", "expected an object keyed by machine number");
        const auto z = static_cast<std::size_t>(sdst.z);
        for (auto jt = tau.begin(); jt != tau.end(); ++jt) {
            int machine = 0;
            try {
                std::size_t pos = 0;
                machine = std::stoi(jt.key(), &pos);
                if (pos != jt.key().size()) throw std::invalid_argument(jt.key());
            } catch (const std::exception&) {
                fail("sdst.tau", "key \"" + jt.key() + "\" is not a machine number");
            }
            std::ostringstream os;
            os << "sdst.tau[" << machine << "]";
            sdst.tau[machine] = get_matrix(*jt, z, z, os.str());
        }
        inst.ext.sdst = std::move(sdst);
    }

    if (auto it = doc.find("pause"); it != doc.end()) {
        if (!it->is_object()) fail("pause", "expected an object");
        check_keys(*it, {"t_end", "delta"}, "pause");
        PauseParams pause;
        pause.t_end = get_int(get(*it, "t_end", "pause"), "pause.t_end");
        pause.delta = get_int(get(*it, "delta", "pause"), "pause.delta");
        inst.ext.pause = pause;
    }

    if (auto it = doc.find("deadlines"); it != doc.end())
        inst.ext.deadlines = get_int_vector(*it, n, "deadlines");
    if (auto it = doc.find("due_dates"); it != doc.end())
        inst.ext.due_dates = get_int_vector(*it, n, "due_dates");
    if (auto it = doc.find("weights"); it != doc.end())
        inst.ext.weights = get_int_vector(*it, n, "weights");

    return inst;
}

Instance parse_instance(const std::string& text) {
    Instance inst = parse_instance_document(text);
    const auto diags = validate_instance(inst);
    if (has_errors(diags)) {
        std::string msg = "invalid instance:\n" + format_diagnostics(diags);
        if (!msg.empty() && msg.back() == '\n') msg.pop_back();
        throw ParseError(msg);
    }
    return inst;
}

Instance load_instance(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

std::string serialize_instance(const Instance& inst) {
    json doc;
    doc["n"] = inst.n;
    doc["m"] = inst.m;
    doc["processing_times"] = inst.p;
    json types = json::array();
    for (MachineType t : inst.types) types.push_back(to_string(t));
    doc["machine_types"] = std::move(types);
    const ExtensionParams& ext = inst.ext;
    if (ext.release_times) doc["release_times"] = *ext.release_times;
    if (ext.periodic) {
        doc["periodic"] = {{"q", ext.periodic->q}, {"delta", ext.periodic->delta}};
    }
    if (ext.initial_setup) doc["initial_setup"] = *ext.initial_setup;
    if (ext.sdst) {
        json tau = json::object();
        for (const auto& [machine, mat] : ext.sdst->tau)
            tau[std::to_string(machine)] = mat;
        doc["sdst"] = {{"z", ext.sdst->z},
                       {"tool_of_job", ext.sdst->tool_of_job},
                       {"tau", std::move(tau)}};
    }
    if (ext.pause) {
        doc["pause"] = {{"t_end", ext.pause->t_end}, {"delta", ext.pause->delta}};
    }
    if (ext.deadlines) doc["deadlines"] = *ext.deadlines;
    if (ext.due_dates) doc["due_dates"] = *ext.due_dates;
    if (ext.weights) doc["weights"] = *ext.weights;
    return doc.dump(2) + "\n";
}

void save_instance(const Instance& inst, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open file for writing: " + path.string());
    out << serialize_instance(inst);
}

std::string export_schedule(const ScheduleGrid& grid, const Permutation& pi) {
    std::ostringstream os;
    auto put = [&](TimeValue v) {
        if (v.is_finite())
            os << v.value();
        else
            os << '#';
    };
    os << "position\tjob\tmachine\tstart\tend\n";
    for (int a = 0; a < grid.n; ++a) {
        for (int k = 0; k < grid.m; ++k) {
            os << a + 1 << '\t' << pi.job_at(a) + 1 << '\t' << k + 1 << '\t';
            put(grid.start(a, k));
            os << '\t';
            put(grid.cell(a, k));
            os << '\n';
        }
    }
    os << "makespan ";
    put(makespan(grid));
    os << '\n';
    return os.str();
}

}  // namespace flowshop
