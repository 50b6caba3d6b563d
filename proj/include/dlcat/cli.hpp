#pragma once

// Entry point of the dctool command line, callable from tests.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "dlcat/lawsuite.hpp"

namespace dlc::cli {

enum ExitCode : int { ok = 0, law_failure = 1, usage = 2 };

struct SuiteRun {
  laws::ModelBinding binding;
  std::size_t cases = 0;
  std::uint64_t seed = 0;
  std::vector<LawReport> reports;
  double total_ms = 0.0;
};

nlohmann::ordered_json to_json(const SuiteRun& run);
std::string to_text(const SuiteRun& run, bool color);

/// args excludes the program name. `color` enables ANSI status colors in
/// text reports written to `out`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color = false);

}  // namespace dlc::cli
