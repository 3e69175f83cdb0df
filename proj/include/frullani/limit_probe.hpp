#pragma once

// Numerical estimation of f(0+) and f(+inf).
//
// The probe samples f along a geometric sequence of abscissas, accelerates
// the samples with Aitken's delta-squared process and classifies the outcome.
// It is a heuristic: slowly decaying oscillations can be misread, which is why
// every verdict carries its evidence trail.

#include <functional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace frullani {

using RealFunction = std::function<double(double)>;

struct ProbeConfig {
  double x0 = 1.0;
  double zero_ratio = 0.5;       // r in (0,1), zero-side abscissas x0 * r^k
  double infinity_ratio = 2.0;   // R > 1, infinity-side abscissas x0 * R^k
  int max_samples = 60;
  double tolerance = 1e-9;
  double overflow_guard = 1e12;
  int window = 8;

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

namespace verdict {
struct Finite {
  double value;
  double uncertainty;
};
struct Diverges {
  int direction;  // +1 or -1
};
struct NoLimit {
  double amplitude;
};
}  // namespace verdict

using LimitVerdict = std::variant<verdict::Finite, verdict::Diverges, verdict::NoLimit>;

inline bool is_finite(const LimitVerdict& v) { return std::holds_alternative<verdict::Finite>(v); }
std::string describe(const LimitVerdict& v);
std::string_view tag(const LimitVerdict& v);

struct ProbeSample {
  double x;
  double fx;
  double extrapolated;
};

struct ProbeOutcome {
  LimitVerdict verdict;
  std::vector<ProbeSample> trail;
  /// Set when the probe ran out of samples before the extrapolants settled.
  bool borderline = false;
};

/// f threw while being sampled; carries the abscissa.
class ProbeError : public std::runtime_error {
public:
  ProbeError(double x, const std::string& what);
  double abscissa() const noexcept { return x_; }

private:
  double x_;
};

ProbeOutcome probe_zero_plus(const RealFunction& f, const ProbeConfig& cfg = {});
ProbeOutcome probe_infinity(const RealFunction& f, const ProbeConfig& cfg = {});

inline LimitVerdict limit_at_zero_plus(const RealFunction& f, const ProbeConfig& cfg = {}) {
  return probe_zero_plus(f, cfg).verdict;
}
inline LimitVerdict limit_at_infinity(const RealFunction& f, const ProbeConfig& cfg = {}) {
  return probe_infinity(f, cfg).verdict;
}

}  // namespace frullani
