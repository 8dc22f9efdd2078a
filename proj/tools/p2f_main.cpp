// p2f: pseudo 2-factor toolkit command-line interface.
//
// Exit codes: 0 success, 1 failed verification, 2 input error,
// 3 budget error, 4 internal invariant failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "p2f/deficiency.hpp"
#include "p2f/driver.hpp"
#include "p2f/errors.hpp"
#include "p2f/generators.hpp"
#include "p2f/graph.hpp"
#include "p2f/json_io.hpp"
#include "p2f/oracles.hpp"

namespace {

struct CommonOpts {
    std::string input_path;
    std::string gen_spec;
    std::string out_path;
    int budget_n = 0;  // 0 = defaults
    bool trace = false;
};

void add_graph_source(CLI::App* cmd, CommonOpts& opts) {
    auto* input = cmd->add_option("--input", opts.input_path, "edge-list file ('-' for stdin)");
    auto* gen = cmd->add_option("--gen", opts.gen_spec, "inline generator spec, e.g. g2:k=2,l=4");
    input->excludes(gen);
    gen->excludes(input);
}

void add_output(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--out", opts.out_path, "write output to a file instead of stdout");
}

p2f::Graph load_graph(const CommonOpts& opts) {
    if (!opts.gen_spec.empty()) return p2f::gen_from_spec(opts.gen_spec);
    if (opts.input_path.empty()) throw p2f::InputError("no input: pass --input or --gen");
    if (opts.input_path == "-") return p2f::read_edge_list(std::cin);
    return p2f::read_edge_list_file(opts.input_path);
}

void write_output(const CommonOpts& opts, const std::string& text) {
    if (opts.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opts.out_path);
    if (!out) throw p2f::InputError("cannot open output file: " + opts.out_path);
    out << text;
}

p2f::SearchBudget search_budget(const CommonOpts& opts) {
    p2f::SearchBudget budget;
    if (opts.budget_n > 0) budget.exact_max_n = opts.budget_n;
    return budget;
}

p2f::TraceSink stderr_sink = [](const std::string& line) { std::cerr << line << '\n'; };

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pseudo 2-factor toolkit: solve, verify, bound, and compare against exact oracles"};
    app.require_subcommand(1);

    CommonOpts solve_opts;
    std::string solve_mode = "exact-f";
    bool allow_fallback = false;
    auto* solve_cmd = app.add_subcommand("solve", "compute a pseudo 2-factor with a bounded non-cycle count");
    add_graph_source(solve_cmd, solve_opts);
    add_output(solve_cmd, solve_opts);
    solve_cmd->add_option("--mode", solve_mode, "exact-f | certificate")
        ->check(CLI::IsMember({"exact-f", "certificate"}));
    solve_cmd->add_flag("--allow-fallback", allow_fallback,
                        "fall back to certificate mode when the exact budget is exceeded");
    solve_cmd->add_option("--budget-n", solve_opts.budget_n, "override exact-search vertex budget");
    solve_cmd->add_flag("--trace", solve_opts.trace, "emit packer events as JSON lines on stderr");

    CommonOpts verify_opts;
    std::string factor_path;
    auto* verify_cmd = app.add_subcommand("verify", "validate a factor report against a graph");
    add_graph_source(verify_cmd, verify_opts);
    add_output(verify_cmd, verify_opts);
    verify_cmd->add_option("--factor", factor_path, "solve-report JSON file")->required();

    CommonOpts f_opts;
    auto* f_cmd = app.add_subcommand("f", "exact deficiency report");
    add_graph_source(f_cmd, f_opts);
    add_output(f_cmd, f_opts);
    f_cmd->add_option("--budget-n", f_opts.budget_n, "override exact-search vertex budget");

    CommonOpts oracle_opts;
    auto* oracle_cmd = app.add_subcommand("oracle", "solver vs exact-oracle comparison row");
    add_graph_source(oracle_cmd, oracle_opts);
    add_output(oracle_cmd, oracle_opts);
    oracle_cmd->add_option("--budget-n", oracle_opts.budget_n, "override oracle vertex budgets");

    CommonOpts gen_opts;
    auto* gen_cmd = app.add_subcommand("gen", "emit a generated graph as an edge list");
    gen_cmd->add_option("--gen", gen_opts.gen_spec, "inline generator spec")->required();
    add_output(gen_cmd, gen_opts);

    CommonOpts sweep_opts;
    std::string sweep_family = "g2";
    std::string sweep_h = "k1";
    int sweep_from = 1, sweep_to = 5, sweep_n = 10, sweep_count = 10;
    uint64_t sweep_seed = 1;
    auto* sweep_cmd = app.add_subcommand("sweep", "CSV over a parameter range of one family");
    sweep_cmd->add_option("--family", sweep_family, "g1 | g2 | forest")
        ->check(CLI::IsMember({"g1", "g2", "forest"}));
    sweep_cmd->add_option("--base", sweep_h, "base graph for g1, e.g. k1, p3");
    sweep_cmd->add_option("--from", sweep_from, "range start (k for g2, p for g1)");
    sweep_cmd->add_option("--to", sweep_to, "range end, inclusive");
    sweep_cmd->add_option("--n", sweep_n, "forest size");
    sweep_cmd->add_option("--count", sweep_count, "number of forest instances");
    sweep_cmd->add_option("--seed", sweep_seed, "base seed for forests");
    sweep_cmd->add_option("--budget-n", sweep_opts.budget_n, "override oracle vertex budgets");
    add_output(sweep_cmd, sweep_opts);

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve_cmd->parsed()) {
            p2f::Graph g = load_graph(solve_opts);
            p2f::SolveConfig config;
            config.mode = solve_mode == "exact-f" ? p2f::BoundMode::ExactF : p2f::BoundMode::CertificateOnly;
            config.budget = search_budget(solve_opts);
            config.allow_fallback = allow_fallback;
            if (solve_opts.trace) config.trace = &stderr_sink;
            p2f::SolveReport report = p2f::solve(g, config);
            write_output(solve_opts, p2f::to_json(report).dump(2) + "\n");
            return report.satisfied ? 0 : 1;
        }

        if (verify_cmd->parsed()) {
            p2f::Graph g = load_graph(verify_opts);
            std::ifstream in(factor_path);
            if (!in) throw p2f::InputError("cannot open factor file: " + factor_path);
            nlohmann::json j;
            try {
                in >> j;
            } catch (const nlohmann::json::exception& e) {
                throw p2f::InputError(std::string("factor json: ") + e.what());
            }
            p2f::PseudoTwoFactor factor = p2f::factor_from_json(j);
            p2f::ValidationResult result = p2f::validate(g, factor);
            nlohmann::json out = {{"valid", result.ok}, {"violations", result.violations}};
            write_output(verify_opts, out.dump(2) + "\n");
            return result.ok ? 0 : 1;
        }

        if (f_cmd->parsed()) {
            p2f::Graph g = load_graph(f_opts);
            p2f::DeficiencyReport report = p2f::compute_deficiency(g, search_budget(f_opts));
            write_output(f_opts, p2f::to_json(report).dump(2) + "\n");
            return 0;
        }

        if (oracle_cmd->parsed()) {
            p2f::Graph g = load_graph(oracle_opts);
            int min_budget = oracle_opts.budget_n > 0 ? oracle_opts.budget_n : 16;
            int max2_budget = oracle_opts.budget_n > 0 ? oracle_opts.budget_n : 24;
            p2f::SolveConfig config;
            config.mode = p2f::BoundMode::CertificateOnly;
            p2f::SolveReport solved = p2f::solve(g, config);
            p2f::DeficiencyReport bound = p2f::compute_deficiency(g, search_budget(oracle_opts));
            auto [min_count, min_factor] = p2f::oracle_min_non_cycle(g, min_budget);
            auto [max_two_regular, packing] = p2f::oracle_max_two_regular(g, max2_budget);
            nlohmann::json row = {
                {"solver", solved.factor.non_cycle_count},
                {"oracle_min", min_count},
                {"f", bound.deficiency},
                {"classical_bound", bound.classical_bound},
                {"max_two_regular", max_two_regular},
            };
            write_output(oracle_opts, row.dump(2) + "\n");
            return 0;
        }

        if (gen_cmd->parsed()) {
            p2f::Graph g = p2f::gen_from_spec(gen_opts.gen_spec);
            write_output(gen_opts, p2f::to_edge_list(g));
            return 0;
        }

        if (sweep_cmd->parsed()) {
            std::ostringstream csv;
            csv << "family,params,f,classical_bound,solver_count,oracle_count\n";
            int min_budget = sweep_opts.budget_n > 0 ? sweep_opts.budget_n : 16;
            auto row = [&](const std::string& family, const std::string& params, const p2f::Graph& g) {
                p2f::DeficiencyReport bound = p2f::compute_deficiency(g, search_budget(sweep_opts));
                p2f::SolveConfig config;
                config.mode = p2f::BoundMode::CertificateOnly;
                p2f::SolveReport solved = p2f::solve(g, config);
                csv << family << ',' << params << ',' << bound.deficiency << ',' << bound.classical_bound << ','
                    << solved.factor.non_cycle_count << ',';
                if (g.vertex_count() <= min_budget) csv << p2f::oracle_min_non_cycle(g, min_budget).first;
                csv << '\n';
            };
            if (sweep_family == "g2") {
                for (int k = sweep_from; k <= sweep_to; ++k)
                    row("g2", "k=" + std::to_string(k) + ";l=" + std::to_string(2 * k), p2f::gen_g2(k, 2 * k));
            } else if (sweep_family == "g1") {
                for (int p = sweep_from; p <= sweep_to; ++p)
                    row("g1", "h=" + sweep_h + ";p=" + std::to_string(p),
                        p2f::gen_from_spec("g1:h=" + sweep_h + ",p=" + std::to_string(p)));
            } else {
                for (int i = 0; i < sweep_count; ++i) {
                    uint64_t seed = sweep_seed + uint64_t(i);
                    row("forest", "n=" + std::to_string(sweep_n) + ";seed=" + std::to_string(seed),
                        p2f::gen_random_forest(sweep_n, seed));
                }
            }
            write_output(sweep_opts, csv.str());
            return 0;
        }
    } catch (const p2f::InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const p2f::BudgetError& e) {
        std::cerr << "budget error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 4;
    }
    return 0;
}
