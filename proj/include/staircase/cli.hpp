#pragma once

#include <chrono>
#include <optional>
#include <span>
#include <string>

#include <nlohmann/json.hpp>

namespace staircase::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

struct RunReport {
  std::string command;
  nlohmann::json payload;
  /// Set only by verification commands (posetx, example35).
  std::optional<bool> passed;
  std::chrono::duration<double> duration{};
  int exit_code = kExitOk;
  /// Human-readable summary or error message, meant for stderr.
  std::string summary;
  /// Help text when --help was requested; nothing else is set then.
  std::string help;
};

/// Runs one subcommand. `args` excludes the program name. Never throws for
/// bad input; errors come back as exit code 2 with the message in `summary`.
RunReport run(std::span<const std::string> args);

/// The document printed on stdout: {"command", "payload"[, "status"]}.
/// Wall-clock time is left out so repeated runs are byte-identical.
nlohmann::json report_json(const RunReport& report);

}  // namespace staircase::cli
