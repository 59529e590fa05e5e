// Batch front-end for the 1-D measure toolkit: runs scenario files and
// seeded random sweeps, emitting deterministic JSON reports.

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "lebesgue/scenario.hpp"

int main(int argc, char** argv) {
    CLI::App app{"1-D Lebesgue measure toolkit"};
    app.require_subcommand(1);

    std::string scenario_path;
    CLI::App* run = app.add_subcommand("run", "execute a scenario file");
    run->add_option("scenario", scenario_path, "path to a JSON scenario file")->required();

    std::string sweep_command;
    long count = 100;
    std::uint64_t seed = 0;
    std::string out_path;
    CLI::App* sweep = app.add_subcommand("sweep", "run a seeded random sweep of a named check");
    sweep->add_option("command", sweep_command, "check to sweep")->required();
    sweep->add_option("--count", count, "number of random instances");
    sweep->add_option("--seed", seed, "RNG seed");
    sweep->add_option("--out", out_path, "report output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : lebesgue::cli::kExitParseError;
    }

    lebesgue::cli::Outcome outcome;
    if (*run)
        outcome = lebesgue::cli::run_scenario_file(scenario_path);
    else
        outcome = lebesgue::cli::run_sweep(sweep_command, count, seed, out_path);

    if (!outcome.error.empty()) std::cerr << "error: " << outcome.error << "\n";
    if (outcome.written_path.empty())
        std::cout << outcome.report_text;
    else
        std::cout << outcome.written_path << "\n";
    return outcome.exit_code;
}
