#pragma once

// Command-line front end. `run` is the whole program minus process
// plumbing so it can be driven in-process by tests.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "frullani/verification.hpp"

namespace frullani::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailures = 1;
inline constexpr int kExitUsage = 2;

struct GridOverride {
  std::string entry_id;
  Params params;
};

/// Grid file grammar, one binding set per line:
///   entry=<ID> <key>=<value> ...
/// Blank lines and text after '#' are ignored. Throws std::invalid_argument
/// with the line number on malformed input.
std::vector<GridOverride> parse_grid(std::istream& in);

/// "a=1,b=2" (';' also accepted as separator).
Params parse_params(std::string_view text);

/// Strict decimal parse of the whole string.
std::optional<double> parse_number(std::string_view text);

/// argv excludes the program name. FRULLANI_TOL is read from the environment
/// unless `env_tol` is supplied.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::optional<std::string> env_tol = std::nullopt);

}  // namespace frullani::cli
