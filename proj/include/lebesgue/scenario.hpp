#pragma once

#include <cstdint>
#include <string>

namespace lebesgue::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitParseError = 2;
inline constexpr int kExitValidationError = 3;

inline constexpr const char* kToolName = "lebtool";
inline constexpr const char* kToolVersion = "0.1.0";

/// Environment variable naming the default output directory for relative
/// report and trace paths.
inline constexpr const char* kOutDirEnv = "LEBTOOL_OUT_DIR";

struct Outcome {
    int exit_code = kExitOk;
    std::string report_text;   // serialized report (also written to the
                               // resolved output path when one was given)
    std::string error;         // parse/validation diagnostics
    std::string written_path;  // resolved path, empty if stdout-only
};

/// Executes a scenario given as JSON text: validates the command-specific
/// schema, dispatches, writes the report (and optional CSV traces) and
/// returns the exit code per the documented contract.
Outcome run_scenario_text(const std::string& json_text);
Outcome run_scenario_file(const std::string& path);

/// Seeded random sweep of a named check; the aggregate report counts holds.
Outcome run_sweep(const std::string& command, long count, std::uint64_t seed,
                  const std::string& out_path);

}  // namespace lebesgue::cli
