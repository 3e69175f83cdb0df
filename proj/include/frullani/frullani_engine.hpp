#pragma once

// Closed-form evaluation of Frullani integrals
//
//     int_0^inf (f(a x^p) - f(b x^p)) / x dx = (1/p) [f(0) - f(inf)] ln(b/a)
//
// together with a numeric applicability check and an end-to-end pipeline
// that compares the closed form against the quadrature oracle.

#include <optional>
#include <string>

#include "frullani/expr.hpp"
#include "frullani/limit_probe.hpp"
#include "frullani/verification.hpp"

namespace frullani {

class FrullaniProblem {
public:
  /// `f` must have {x} as its only free variable.
  FrullaniProblem(const Expression& f, double a, double b, double power = 1.0);
  FrullaniProblem(RealFunction f, double a, double b, double power = 1.0, std::string label = "f");

  double a() const { return a_; }
  double b() const { return b_; }
  double power() const { return power_; }
  const RealFunction& generator() const { return f_; }
  const std::string& label() const { return label_; }

private:
  RealFunction f_;
  double a_, b_, power_;
  std::string label_;
};

struct ApplicabilityReport {
  LimitVerdict at_zero;
  LimitVerdict at_infinity;
  bool applicable;
  std::string reason;
};

struct AnalyticLimits {
  double at_zero;
  double at_infinity;
};

ApplicabilityReport diagnose(const FrullaniProblem& prob, const ProbeConfig& cfg = {});

/// (1/p) (f0 - finf) ln(b/a).
double closed_form(const FrullaniProblem& prob, double f0, double finf);
double closed_form(double a, double b, double power, double f0, double finf);

/// Diagnose, then compare the closed form with the oracle value of
/// int_0^inf (f(a x^p) - f(b x^p)) / x dx. Limits come from the probe unless
/// `analytic` is given; the record notes which.
VerificationRecord evaluate_pipeline(const FrullaniProblem& prob, double tol,
                                     const std::optional<AnalyticLimits>& analytic = std::nullopt,
                                     const ProbeConfig& cfg = {});

}  // namespace frullani
