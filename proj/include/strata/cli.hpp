#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace strata::cli {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kToleranceEnv = "STRATA_LAB_TOL";

enum ExitCode : int { kOk = 0, kInternal = 1, kInputError = 2 };

// Parses argv (without the program name), runs one command and writes a
// single JSON document to `out`. Help text goes to `out` as plain text.
int run(const std::vector<std::string>& args, std::ostream& out);

struct Report {
  std::string command;
  std::vector<std::string> args;
  double geom_tolerance = 0.0;
  double torus_tolerance = 0.0;
  nlohmann::ordered_json output;
};

// Reproducibility record: inputs, tolerances, version and outputs. The
// serialization has no timestamps and is byte-stable for identical inputs.
nlohmann::ordered_json report_json(const Report& r);
// Throws kIo when the file cannot be written.
void emit_report(const Report& r, const std::string& path);

}  // namespace strata::cli
