#include "frullani/frullani_engine.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "frullani/quadrature.hpp"

namespace frullani {

namespace {

void check_scales(double a, double b, double p) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b))
    throw std::invalid_argument("Frullani scales a and b must be positive and finite");
  if (!(p > 0.0) || !std::isfinite(p)) throw std::invalid_argument("Frullani power must be positive");
}

// ln(b/a) evaluated so that swapping a and b flips the sign bit and nothing else.
double log_ratio(double b, double a) {
  if (a == b) return 0.0;
  return b > a ? std::log(b / a) : -std::log(a / b);
}

}  // namespace

FrullaniProblem::FrullaniProblem(const Expression& f, double a, double b, double power)
    : a_(a), b_(b), power_(power), label_(f.unparse()) {
  check_scales(a, b, power);
  auto vars = f.free_variables();
  vars.erase("x");
  if (!vars.empty())
    throw std::invalid_argument("Frullani generator may depend on x only; unbound: " + *vars.begin());
  f_ = [f](double x) { return f.evaluate_at("x", x); };
}

FrullaniProblem::FrullaniProblem(RealFunction f, double a, double b, double power, std::string label)
    : f_(std::move(f)), a_(a), b_(b), power_(power), label_(std::move(label)) {
  check_scales(a, b, power);
  if (!f_) throw std::invalid_argument("Frullani generator must be callable");
}

ApplicabilityReport diagnose(const FrullaniProblem& prob, const ProbeConfig& cfg) {
  const auto& f = prob.generator();
  ApplicabilityReport report{probe_zero_plus(f, cfg).verdict, probe_infinity(f, cfg).verdict, false, {}};
  report.applicable = is_finite(report.at_zero) && is_finite(report.at_infinity);
  if (report.applicable)
    report.reason = "finite limits at 0+ and +inf";
  else if (!is_finite(report.at_infinity))
    report.reason = "f has no finite limit at infinity: " + describe(report.at_infinity);
  else
    report.reason = "f has no finite limit at 0+: " + describe(report.at_zero);
  return report;
}

double closed_form(double a, double b, double power, double f0, double finf) {
  check_scales(a, b, power);
  return (1.0 / power) * ((f0 - finf) * log_ratio(b, a));
}

double closed_form(const FrullaniProblem& prob, double f0, double finf) {
  return closed_form(prob.a(), prob.b(), prob.power(), f0, finf);
}

VerificationRecord evaluate_pipeline(const FrullaniProblem& prob, double tol,
                                     const std::optional<AnalyticLimits>& analytic,
                                     const ProbeConfig& cfg) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const auto started = std::chrono::steady_clock::now();
  VerificationRecord rec;
  rec.entry_id = "eval";
  rec.params = {{"a", prob.a()}, {"b", prob.b()}, {"power", prob.power()}};
  auto finish = [&]() -> VerificationRecord {
    rec.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return rec;
  };

  double f0, finf;
  if (analytic) {
    f0 = analytic->at_zero;
    finf = analytic->at_infinity;
    rec.limit_source = "analytic";
  } else {
    ApplicabilityReport report;
    try {
      report = diagnose(prob, cfg);
    } catch (const ProbeError& e) {
      rec.status = Status::NotApplicable;
      rec.detail = e.what();
      return finish();
    }
    if (!report.applicable) {
      rec.status = Status::NotApplicable;
      rec.detail = report.reason;
      return finish();
    }
    f0 = std::get<verdict::Finite>(report.at_zero).value;
    finf = std::get<verdict::Finite>(report.at_infinity).value;
    rec.limit_source = "probe";
  }
  rec.expected = closed_form(prob, f0, finf);

  const auto& f = prob.generator();
  const double a = prob.a(), b = prob.b(), p = prob.power();
  auto integrand = [&](double x) {
    const double s = p == 1.0 ? x : std::pow(x, p);
    return (f(a * s) - f(b * s)) / x;
  };
  try {
    auto q = integrate_decaying(integrand, std::max(1e-2 * tol, 1e-13));
    rec.numeric = q.value;
    rec.oracle_error = q.error_estimate;
    rec.abs_error = std::fabs(rec.numeric - rec.expected);
    if (!q.converged) {
      rec.status = Status::OracleFailed;
      rec.detail = q.diagnostic;
    } else {
      rec.status = rec.abs_error <= tol ? Status::Pass : Status::Fail;
    }
  } catch (const std::exception& e) {
    rec.status = Status::OracleFailed;
    rec.detail = e.what();
  }
  return finish();
}

}  // namespace frullani
