#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "nilmod/report.hpp"

namespace nilmod::cli {

/// Exit codes of the command-line tool.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInvalid = 2;

/// Runs one command line (without the program name). Human-readable output
/// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// JSON document for a report; timings only when `with_timings` is set, so
/// that repeated runs produce identical bytes by default.
nlohmann::json report_to_json(const VerificationReport& report, bool with_timings);

nlohmann::json betti_to_json(const BettiTable& table);

/// One polynomial per line; blank lines and lines starting with '#' skipped.
std::vector<std::string> read_generator_file(const std::string& path);

/// Identifiers in order of first appearance.
std::vector<std::string> infer_variables(const std::vector<std::string>& generators);

}  // namespace nilmod::cli
