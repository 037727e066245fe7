#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fanpoly/intlinalg.hpp"

namespace fanpoly::cli {

using json = nlohmann::json;

enum ExitCode : int { Ok = 0, CheckFailed = 1, Usage = 2, InputError = 3 };

struct RunReport {
  std::string verb;
  json inputs = json::object();
  json results = json::object();
  int exit_code = Ok;

  json to_json() const;
};

/// args excludes the program name. Output (text tables, or one JSON document
/// with --json) goes to out; diagnostics to err.
RunReport run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// FANPOLY_MAX_DEGREE if set and valid, else 4.
unsigned default_max_degree();

/// "1,0;0,1;1,1" -> {(1,0), (0,1), (1,1)}. Throws std::invalid_argument.
std::vector<IntVector> parse_vector_list(const std::string& text);

}  // namespace fanpoly::cli
