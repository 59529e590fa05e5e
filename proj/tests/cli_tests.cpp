#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "lebesgue/scenario.hpp"

using namespace lebesgue::cli;

namespace {

const std::string kTmp = "cli_test_artifacts";

void make_tmp_dir() {
    int rc = std::system(("mkdir -p " + kTmp).c_str());
    REQUIRE(rc == 0);
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    REQUIRE(f.good());
    f << text;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    REQUIRE(f.good());
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

int run_tool(const std::string& args) {
    std::string cmd = std::string(LEBTOOL_PATH) + " " + args + " > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

}  // namespace

TEST_CASE("measure scenario end to end") {
    make_tmp_dir();
    std::string scenario = kTmp + "/measure.json";
    write_file(scenario, R"({
      "command": "measure",
      "seed": 1,
      "output_path": ")" + kTmp + R"(/measure_report.json",
      "inputs": {"set": [[0, 1], [2, 3.5]]}
    })");
    CHECK(run_tool("run " + scenario) == kExitOk);
    std::string report = read_file(kTmp + "/measure_report.json");
    CHECK(report.find("\"measure\": 2.5") != std::string::npos);
}

TEST_CASE("vitali scenario reproduces the three-ball example") {
    Outcome out = run_scenario_text(R"({
      "command": "vitali",
      "inputs": {"balls": [
        {"center": 0, "radius": 1},
        {"center": 1, "radius": 1},
        {"center": 2, "radius": 1}]}
    })");
    CHECK(out.exit_code == kExitOk);
    nlohmann::json report = nlohmann::json::parse(out.report_text);
    CHECK(report["results"]["selected"] == nlohmann::json::array({0, 2}));
    CHECK(report["results"]["verified"] == true);
    CHECK(report["pass"] == true);
}

TEST_CASE("exit code contract") {
    // parse error
    Outcome bad_json = run_scenario_text("{not json");
    CHECK(bad_json.exit_code == kExitParseError);

    // validation: malformed interval (hi < lo)
    Outcome bad_interval = run_scenario_text(
        R"({"command": "measure", "inputs": {"set": [[2, 1]]}})");
    CHECK(bad_interval.exit_code == kExitValidationError);

    // validation: unknown command
    Outcome unknown = run_scenario_text(R"({"command": "frobnicate", "inputs": {}})");
    CHECK(unknown.exit_code == kExitValidationError);

    // validation: missing field
    Outcome missing = run_scenario_text(R"({"command": "markov", "inputs": {}})");
    CHECK(missing.exit_code == kExitValidationError);

    // check failure: egorov budget unattainable within j_max
    Outcome fail = run_scenario_text(R"({
      "command": "egorov",
      "inputs": {
        "family": {"kind": "step_list", "A": [[0, 1]], "limit": {"breakpoints": [], "values": []},
                   "sequence": [{"breakpoints": [0, 1], "values": [5]}], "tail_monotone": false},
        "eps": 0.25, "j_max": 1}
    })");
    CHECK(fail.exit_code == kExitCheckFailed);

    // missing scenario file is a parse error
    CHECK(run_tool("run does_not_exist.json") == kExitParseError);
}

TEST_CASE("reports are byte-identical across reruns") {
    std::string scenario = R"({
      "command": "ldt",
      "seed": 42,
      "inputs": {"f": {"breakpoints": [0, 1], "values": [1]},
                 "k": 0, "a": 0.1, "n_approx": 8, "grid_step": 0.03125}
    })";
    Outcome first = run_scenario_text(scenario);
    Outcome second = run_scenario_text(scenario);
    CHECK(first.exit_code == kExitOk);
    CHECK(first.report_text == second.report_text);

    Outcome sweep1 = run_sweep("markov", 25, 7, "");
    Outcome sweep2 = run_sweep("markov", 25, 7, "");
    CHECK(sweep1.exit_code == kExitOk);
    CHECK(sweep1.report_text == sweep2.report_text);
}

TEST_CASE("sweeps hold for the theorem-backed checks") {
    CHECK(run_sweep("markov", 50, 11, "").exit_code == kExitOk);
    CHECK(run_sweep("vitali", 25, 11, "").exit_code == kExitOk);
    CHECK(run_sweep("maximal", 25, 11, "").exit_code == kExitOk);
    CHECK(run_sweep("measure", 50, 11, "").exit_code == kExitOk);
    CHECK(run_sweep("regularity", 50, 11, "").exit_code == kExitOk);
    CHECK(run_sweep("unknown-cmd", 5, 11, "").exit_code == kExitValidationError);
    CHECK(run_sweep("markov", 0, 11, "").exit_code == kExitValidationError);
}

TEST_CASE("sweep via the binary writes the aggregate report") {
    make_tmp_dir();
    std::string out = kTmp + "/sweep_markov.json";
    CHECK(run_tool("sweep markov --count 20 --seed 3 --out " + out) == kExitOk);
    std::string report = read_file(out);
    CHECK(report.find("\"passed\": 20") != std::string::npos);
    CHECK(report.find("\"failed\": 0") != std::string::npos);
}

TEST_CASE("ldt full scan writes the per-k summary table") {
    make_tmp_dir();
    std::string summary = kTmp + "/ldt_summary.csv";
    Outcome out = run_scenario_text(R"({
      "command": "ldt",
      "inputs": {"f": {"breakpoints": [0, 1], "values": [1]},
                 "k_max": 1, "a": 0.125, "n_approx": 4, "grid_step": 0.0625,
                 "summary_path": ")" + summary + R"("}
    })");
    CHECK(out.exit_code == kExitOk);
    std::string csv = read_file(summary);
    CHECK(csv.rfind("k,min_combined_bound,flagged_measure,grid_slack,consistent\n", 0) == 0);
    CHECK(csv.find("\n0,") != std::string::npos);
    CHECK(csv.find("\n1,") != std::string::npos);
}

TEST_CASE("trace CSV emission") {
    make_tmp_dir();
    std::string trace = kTmp + "/davg_trace.csv";
    Outcome out = run_scenario_text(R"({
      "command": "lebesgue-scan",
      "inputs": {"f": {"breakpoints": [0, 1], "values": [1]},
                 "grid_step": 0.25, "trace_x": 0.5, "trace_path": ")" + trace + R"("}
    })");
    CHECK(out.exit_code == kExitOk);
    std::string csv = read_file(trace);
    CHECK(csv.rfind("radius,davg\n", 0) == 0);
    CHECK(csv.find("\n1,") != std::string::npos);
}
