#pragma once

#include "algint/json_io.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace algint::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kNoMeasure = 2,
  kGaugeInfeasible = 3,
  kNotAMorphism = 4,  // NotAnAutomorphism, NotInvertible, NotADerivation
  kInternal = 5,
};

inline constexpr int kReportSchema = 1;

struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;  // path, sha256 of the bytes
  io::Json findings = io::Json::object();
  int exitCode = kOk;
  std::string error;

  io::Json toJson() const;
  /// "key: value" lines with nested object keys joined by '.'.
  std::string toTable(bool color) const;
};

/// Runs one command line (without the program name). Writes the report to
/// `out` and diagnostics to `err`; returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace algint::cli
