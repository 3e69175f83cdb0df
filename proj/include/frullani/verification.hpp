#pragma once

#include <limits>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace frullani {

using Params = std::map<std::string, double, std::less<>>;

enum class Status { Pass, Fail, NotApplicable, OracleFailed, ConstraintViolation };

std::string_view to_string(Status s);

struct VerificationRecord {
  std::string entry_id;
  Params params;
  double expected = std::numeric_limits<double>::quiet_NaN();
  double numeric = std::numeric_limits<double>::quiet_NaN();
  double abs_error = std::numeric_limits<double>::quiet_NaN();
  double oracle_error = std::numeric_limits<double>::quiet_NaN();
  Status status = Status::NotApplicable;
  double wall_seconds = 0.0;
  /// Where f(0) and f(inf) came from ("probe" or "analytic"), when relevant.
  std::string limit_source;
  std::string detail;
};

struct Summary {
  std::size_t total = 0, pass = 0, fail = 0, skipped = 0;
};

Summary summarize(const std::vector<VerificationRecord>& records);

/// Zero FAIL and zero ORACLE_FAILED records.
bool all_clear(const std::vector<VerificationRecord>& records);

}  // namespace frullani
