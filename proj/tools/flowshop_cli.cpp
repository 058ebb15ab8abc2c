// Command line front end: validate, evaluate, solve, gantt, gen.
//
// Exit codes: 0 success, 1 infeasible result, 2 usage or validation error.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "flowshop/engine.hpp"
#include "flowshop/gantt.hpp"
#include "flowshop/gen.hpp"
#include "flowshop/io.hpp"
#include "flowshop/objectives.hpp"
#include "flowshop/solver.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw flowshop::ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

flowshop::Permutation parse_order(const std::string& text, int n) {
    std::vector<int> order;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        std::size_t pos = 0;
        const int job = std::stoi(token, &pos);
        while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos])))
            ++pos;
        if (pos != token.size())
            throw std::invalid_argument("bad entry in --order: \"" + token + "\"");
        order.push_back(job);
    }
    if (static_cast<int>(order.size()) != n) {
        std::ostringstream os;
        os << "--order must list all " << n << " jobs, got " << order.size();
        throw std::invalid_argument(os.str());
    }
    return flowshop::Permutation::from_one_based(order);
}

std::vector<flowshop::MachineType> parse_types(const std::string& text) {
    std::vector<flowshop::MachineType> types;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        const auto t = flowshop::machine_type_from_string(token);
        if (!t) throw std::invalid_argument("unknown machine type \"" + token + "\"");
        types.push_back(*t);
    }
    if (types.empty()) throw std::invalid_argument("--types must not be empty");
    return types;
}

int run_validate(const std::string& path) {
    const flowshop::Instance inst =
        flowshop::parse_instance_document(read_file(path));
    const auto diags = flowshop::validate_instance(inst);
    std::cout << flowshop::format_diagnostics(diags);
    if (flowshop::has_errors(diags)) return 2;
    std::cout << "no errors\n";
    return 0;
}

int run_evaluate(const std::string& path, const std::string& order_text) {
    const flowshop::Instance inst = flowshop::load_instance(path);
    const flowshop::Permutation pi = parse_order(order_text, inst.n);
    const flowshop::ScheduleGrid grid = flowshop::eval_grid(inst, pi);
    std::cout << flowshop::export_schedule(grid, pi);
    return grid.all_finite() ? 0 : 1;
}

int run_solve(const std::string& path, const std::string& method,
              const std::string& objective, int threads, bool tight) {
    const flowshop::Instance inst = flowshop::load_instance(path);
    flowshop::SolveOptions opts;
    opts.method = *flowshop::method_from_string(method);
    opts.objective = *flowshop::objective_from_string(objective);
    opts.threads = threads;
    opts.tight_bounds = tight;
    const flowshop::SolveResult res = flowshop::solve(inst, opts);

    if (res.best_order) {
        std::cout << "order ";
        const auto order = res.best_order->to_one_based();
        for (std::size_t i = 0; i < order.size(); ++i)
            std::cout << (i ? "," : "") << order[i];
        std::cout << '\n';
    } else {
        std::cout << "order none\n";
    }
    if (res.best_value)
        std::cout << "value " << *res.best_value << '\n';
    else
        std::cout << "value #\n";
    std::cout << "nodes expanded " << res.nodes_expanded << '\n';
    std::cout << "nodes pruned bound " << res.nodes_pruned_bound << '\n';
    std::cout << "nodes pruned infeasible " << res.nodes_pruned_infeasible << '\n';
    std::cout << "elapsed_ms " << std::fixed << std::setprecision(3)
              << res.elapsed.count() * 1000.0 << '\n';
    return res.best_order ? 0 : 1;
}

int run_gantt(const std::string& path, const std::string& order_text,
              const std::string& format, const std::string& out) {
    const flowshop::Instance inst = flowshop::load_instance(path);
    const flowshop::Permutation pi = parse_order(order_text, inst.n);
    const flowshop::ScheduleGrid grid = flowshop::eval_grid(inst, pi);
    const flowshop::GanttChart chart = flowshop::build_gantt(inst, grid, pi);
    const std::string rendered = format == "svg"
                                     ? flowshop::render_gantt_svg(chart, inst)
                                     : flowshop::render_gantt_text(chart, inst);
    if (out.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream os(out);
        if (!os) throw flowshop::ParseError("cannot open file for writing: " + out);
        os << rendered;
        std::cout << "wrote " << out << '\n';
    }
    return grid.all_finite() ? 0 : 1;
}

int run_gen(std::uint64_t seed, int n, int m, const std::string& types,
            std::string out) {
    flowshop::GenSpec spec;
    spec.seed = seed;
    spec.n = n;
    spec.m = m;
    spec.allowed_types = parse_types(types);
    spec.pause_prob = 0.3;
    spec.deadline_prob = 0.3;
    spec.due_date_prob = 0.3;
    const flowshop::Instance inst = flowshop::generate(spec);
    if (out.empty()) out = "instance_s" + std::to_string(seed) + ".json";
    flowshop::save_instance(inst, out);
    std::cout << "wrote " << out << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact evaluation and optimization for permutation flow shops "
                 "with release times, periodic adjustment, setups, a processing "
                 "pause and deadlines."};
    app.require_subcommand(1);

    std::string instance_path;
    std::string order_text;
    std::string method;
    std::string objective = "cmax";
    std::string format = "text";
    std::string out_path;
    std::string types = "C";
    int threads = 1;
    bool tight = false;
    std::uint64_t seed = 1;
    int gen_n = 5;
    int gen_m = 3;

    CLI::App* validate = app.add_subcommand("validate", "Check an instance file");
    validate->add_option("--instance", instance_path, "instance JSON file")->required();

    CLI::App* evaluate =
        app.add_subcommand("evaluate", "Evaluate a fixed order and print the schedule");
    evaluate->add_option("--instance", instance_path, "instance JSON file")->required();
    evaluate->add_option("--order", order_text, "1-based job order, e.g. 2,1,3")
        ->required();

    CLI::App* solve = app.add_subcommand("solve", "Find an optimal order");
    solve->add_option("--instance", instance_path, "instance JSON file")->required();
    solve->add_option("--method", method, "search method")
        ->required()
        ->check(CLI::IsMember({"bnb", "brute", "multiset"}));
    solve->add_option("--objective", objective, "objective function")
        ->check(CLI::IsMember({"cmax", "lmax", "ttotal", "tmax", "ntardy", "wtardy"}));
    solve->add_option("--threads", threads, "worker threads")
        ->check(CLI::PositiveNumber);
    solve->add_flag("--tight-bounds", tight, "sharpen the bound with adjustment counts");

    CLI::App* gantt = app.add_subcommand("gantt", "Render a schedule chart");
    gantt->add_option("--instance", instance_path, "instance JSON file")->required();
    gantt->add_option("--order", order_text, "1-based job order")->required();
    gantt->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "svg"}));
    gantt->add_option("--out", out_path, "output file (stdout when omitted)");

    CLI::App* gen = app.add_subcommand("gen", "Generate a random instance");
    gen->add_option("--seed", seed, "generator seed");
    gen->add_option("--n", gen_n, "number of jobs")->check(CLI::PositiveNumber);
    gen->add_option("--m", gen_m, "number of machines")->check(CLI::PositiveNumber);
    gen->add_option("--types", types, "allowed machine types, e.g. C,Crep,CSDST");
    gen->add_option("--out", out_path, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(validate)) return run_validate(instance_path);
        if (app.got_subcommand(evaluate)) return run_evaluate(instance_path, order_text);
        if (app.got_subcommand(solve))
            return run_solve(instance_path, method, objective, threads, tight);
        if (app.got_subcommand(gantt))
            return run_gantt(instance_path, order_text, format, out_path);
        if (app.got_subcommand(gen))
            return run_gen(seed, gen_n, gen_m, types, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
