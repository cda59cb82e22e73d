#include <iostream>
#include <string>
#include <vector>

#include "staircase/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto report = staircase::cli::run(args);
  if (!report.help.empty()) {
    std::cout << report.help;
    return report.exit_code;
  }
  if (report.exit_code != staircase::cli::kExitUsage) {
    std::cout << staircase::cli::report_json(report).dump() << "\n";
  }
  if (!report.summary.empty()) std::cerr << report.summary;
  if (!report.summary.empty() && report.summary.back() != '\n') std::cerr << "\n";
  if (!report.command.empty()) {
    std::cerr << report.command << " finished in " << report.duration.count() << " s\n";
  }
  return report.exit_code;
}
