#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quasimap/intersection.hpp"

namespace quasimap {

enum class Status { ok, verification_failed, usage_error };

std::string status_name(Status s);
Status parse_status(std::string_view name);
/// 0 ok, 1 verification_failed, 2 usage_error.
int exit_code(Status s);

/// Outcome of one CLI command. `values` carry exact rationals ("p/q" or
/// "p"); `details` carry everything else (rays, polynomials, check lines).
struct CommandResult {
  std::string command;
  std::map<std::string, std::string> parameters;
  std::vector<std::pair<std::string, std::string>> values;
  std::vector<std::pair<std::string, std::string>> details;
  Status status = Status::ok;

  friend bool operator==(const CommandResult&, const CommandResult&) = default;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// JSON document with fields command, parameters, values, details, status.
std::string emit_json(const CommandResult& r);
/// Inverse of emit_json; throws std::invalid_argument on malformed input.
CommandResult parse_json(std::string_view text);
/// Aligned plain-text tables.
std::string emit_text(const CommandResult& r);

CommandResult cmd_fan(int d);
CommandResult cmd_chow(int d);
CommandResult cmd_intersect(int d, int a, int b, const EngineOptions& options = {},
                            E6Variant variant = E6Variant::corrected);
CommandResult cmd_mirror(int order);
CommandResult cmd_jinv(int order);
CommandResult cmd_verify(int degree_max, const EngineOptions& options = {},
                         E6Variant variant = E6Variant::corrected);

}  // namespace quasimap
