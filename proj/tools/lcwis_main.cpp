#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
    using namespace cwis::cli;

    CLI::App app{"Longest common weakly increasing subsequence solvers and the MAX-CNF-SAT reduction chain"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::size_t trials = 0;
    std::string first_path;
    std::string second_path;
    bool oracle = false;
    std::vector<std::string> suites;
    std::vector<std::size_t> sizes = {4096, 8192, 16384};
    std::size_t repeats = 3;
    long long decode_value = 0;

    auto add_budget = [&](CLI::App* cmd) {
        cmd->add_option("--unsafe-budget", cfg.budget_n, "Largest variable count accepted (default 12)")
            ->check(CLI::PositiveNumber);
    };
    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("--output", cfg.output_path, "Prefix for written files (default: stdout)");
    };

    auto* solve = app.add_subcommand("solve", "Solve LCWIS or weighted LCWIS");
    solve->require_subcommand(1);
    auto* solve_lcwis = solve->add_subcommand("lcwis", "LCWIS of the two sequences in FILE");
    solve_lcwis->add_option("file", first_path, "Two-line sequence file")->required();
    solve_lcwis->add_flag("--witness", cfg.witness, "Also print an optimal subsequence");
    auto* solve_wlcwis = solve->add_subcommand("wlcwis", "Weighted LCWIS");
    solve_wlcwis->add_option("file", first_path, "Two-line sequence file")->required();
    solve_wlcwis->add_option("weights", second_path, "symbol:weight file")->required();
    solve_wlcwis->add_flag("--witness", cfg.witness, "Also print an optimal subsequence");

    auto* reduce = app.add_subcommand("reduce", "Build reduced instances");
    reduce->require_subcommand(1);
    auto* cnf_to_ovp = reduce->add_subcommand("cnf-to-ovp", "DIMACS CNF to two vector sets");
    cnf_to_ovp->add_option("cnf", first_path)->required();
    add_output(cnf_to_ovp);
    add_budget(cnf_to_ovp);
    auto* ovp_to_lcwis = reduce->add_subcommand("ovp-to-lcwis", "Two vector sets to an LCWIS instance");
    ovp_to_lcwis->add_option("u", first_path)->required();
    ovp_to_lcwis->add_option("v", second_path)->required();
    add_output(ovp_to_lcwis);
    auto* cnf_to_lcwis = reduce->add_subcommand("cnf-to-lcwis", "DIMACS CNF to an LCWIS instance");
    cnf_to_lcwis->add_option("cnf", first_path)->required();
    add_output(cnf_to_lcwis);
    add_budget(cnf_to_lcwis);

    auto* decode = app.add_subcommand("decode", "Turn a solved LCWIS value back into the reduced answer");
    decode->add_option("certificate", first_path)->required();
    decode->add_option("value", decode_value)->required();

    auto* maxsat = app.add_subcommand("maxsat", "MAX-CNF-SAT through one LCWIS solve");
    maxsat->add_option("cnf", first_path)->required();
    maxsat->add_flag("--oracle", oracle, "Cross-check with exhaustive enumeration");
    add_budget(maxsat);

    auto* verify = app.add_subcommand("verify", "Run the property suites");
    verify->add_option("--seed", cfg.seed, "Random seed (default 0)");
    verify->add_option("--trials", trials, "Random trials per suite")->check(CLI::PositiveNumber);
    verify->add_option("--suite", suites,
                       "coordinate, vector, main-lemma, expansion, oracle, and-or, ovp, pipeline, size");

    auto* bench = app.add_subcommand("bench", "Time lcwis on random sequences");
    bench->add_option("--sizes", sizes, "Ascending sequence lengths")->delimiter(',');
    bench->add_option("--repeats", repeats, "Runs per size")->check(CLI::PositiveNumber);
    bench->add_option("--seed", cfg.seed, "Random seed (default 0)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }
    if (trials > 0) cfg.trials = trials;

    auto& out = std::cout;
    auto& err = std::cerr;
    if (*solve_lcwis) return cmd_solve_lcwis(first_path, cfg, out, err);
    if (*solve_wlcwis) return cmd_solve_wlcwis(first_path, second_path, cfg, out, err);
    if (*cnf_to_ovp) return cmd_reduce_cnf_to_ovp(first_path, cfg, out, err);
    if (*ovp_to_lcwis) return cmd_reduce_ovp_to_lcwis(first_path, second_path, cfg, out, err);
    if (*cnf_to_lcwis) return cmd_reduce_cnf_to_lcwis(first_path, cfg, out, err);
    if (*decode) return cmd_decode(first_path, decode_value, out, err);
    if (*maxsat) return cmd_maxsat(first_path, oracle, cfg, out, err);
    if (*verify) return cmd_verify(suites, cfg, out, err);
    if (*bench) return cmd_bench(sizes, repeats, cfg, out, err);
    return kExitInput;
}
