// Command-line front end. `run_cli` is separate from main so tests can drive it.
#pragma once

#include "tracemin/matcore.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace tracemin::cli {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode {
  kOk = 0,
  kInternal = 1,
  kInvalidInput = 2,
  kNotHermitian = 3,
  kNegInfinite = 4,
  kEmptyFeasible = 5,
  kNotAttainable = 6,
  kNoWitness = 7,
  kCertificationFailed = 8,
};

using Json = nlohmann::ordered_json;

// Serializes with 17 significant digits; non-finite numbers become null.
std::string dump_json(const Json& j, int indent = 2);

// Matrix object {"n": n, "entries": [[re, im], ...]} (plain numbers accepted).
Mat parse_matrix(const Json& j);
Json matrix_to_json(const Mat& m);

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tracemin::cli
