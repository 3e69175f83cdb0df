#include "frullani/series.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "frullani/quadrature.hpp"

namespace frullani::series {

namespace {

// Minimal double-double arithmetic (error-free transformations via fma).
struct DoubleDouble {
  double hi, lo;
};

DoubleDouble fast_two_sum(double a, double b) {
  double s = a + b;
  return {s, b - (s - a)};
}

DoubleDouble two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

DoubleDouble two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}

DoubleDouble operator+(DoubleDouble x, DoubleDouble y) {
  DoubleDouble s = two_sum(x.hi, y.hi);
  return fast_two_sum(s.hi, s.lo + x.lo + y.lo);
}

DoubleDouble operator-(DoubleDouble x) { return {-x.hi, -x.lo}; }
DoubleDouble operator-(DoubleDouble x, DoubleDouble y) { return x + (-y); }

DoubleDouble operator*(DoubleDouble x, DoubleDouble y) {
  DoubleDouble p = two_prod(x.hi, y.hi);
  return fast_two_sum(p.hi, p.lo + (x.hi * y.lo + x.lo * y.hi));
}

DoubleDouble operator/(DoubleDouble x, DoubleDouble y) {
  double q1 = x.hi / y.hi;
  DoubleDouble r = x - y * DoubleDouble{q1, 0.0};
  double q2 = r.hi / y.hi;
  r = r - y * DoubleDouble{q2, 0.0};
  double q3 = r.hi / y.hi;
  return fast_two_sum(q1, q2) + DoubleDouble{q3, 0.0};
}

double round_dd(DoubleDouble x) { return x.hi + x.lo; }

void check_amplitude(double a) {
  if (!std::isfinite(a)) throw std::domain_error("amplitude a must be finite");
  if (a == -1.0) throw std::domain_error("a = -1 makes ln(1 + 2a cos + a^2) singular");
}

void check_frequencies(double p, double q) {
  if (!(p > 0.0) || !(q > 0.0) || !std::isfinite(p) || !std::isfinite(q))
    throw std::domain_error("frequencies p and q must be positive");
}

void check_q(double Q) {
  if (!(Q >= 0.0 && Q <= 0.25)) throw std::domain_error("Q must lie in [0, 1/4]");
}

}  // namespace

SeriesParams::SeriesParams(double a) : a_(a) { check_amplitude(a); }

double SeriesParams::A() const {
  // written in terms of min(|a|, 1/|a|) so that a and 1/a share one evaluation
  const double b = std::fabs(a_) <= 1.0 ? a_ : 1.0 / a_;
  return std::clamp(2.0 * b / (1.0 + b * b), -1.0, 1.0);
}

double SeriesParams::Q() const {
  const double A = this->A();
  return std::min(0.25, 0.25 * A * A);
}

double log_series_partial(double z, int terms) {
  if (!(z > -1.0 && z <= 1.0)) throw std::domain_error("log series needs -1 < z <= 1");
  if (terms < 0) throw std::invalid_argument("number of terms must be non-negative");
  double sum = 0.0;
  double power = 1.0;
  for (int k = 1; k <= terms; ++k) {
    power *= z;
    const double term = power / k;
    sum += (k % 2 == 1) ? term : -term;
    if (power == 0.0) break;
  }
  return sum;
}

std::int64_t parity_weight(int k) {
  if (k < 1) throw std::invalid_argument("parity weight is defined for k >= 1");
  if (k > 62) throw std::overflow_error("parity weight for k=" + std::to_string(k) + " exceeds 63 bits");
  const std::int64_t full = std::int64_t{1} << k;
  if (k % 2 == 1) return full;
  // C(k, k/2) by C(n, i+1) = C(n, i) (n-i) / (i+1), cancelling the gcd first
  // so no intermediate exceeds the final width.
  std::uint64_t c = 1;
  const int half = k / 2;
  for (int i = 0; i < half; ++i) {
    const std::uint64_t den = static_cast<std::uint64_t>(i + 1);
    const std::uint64_t g = std::gcd(c, den);
    c = (c / g) * (static_cast<std::uint64_t>(k - i) / (den / g));
  }
  return full - static_cast<std::int64_t>(c);
}

double central_binomial_closed(double Q) {
  check_q(Q);
  const double root = std::sqrt(1.0 - 4.0 * Q);
  // (1 + root)/2 = 1 - 2Q/(1 + root)
  return -2.0 * std::log1p(-2.0 * Q / (1.0 + root));
}

double central_binomial_partial(double Q, int terms) {
  check_q(Q);
  if (terms < 0) throw std::invalid_argument("number of terms must be non-negative");
  double sum = 0.0;
  double term = 2.0 * Q;  // C(2,1) Q
  for (int k = 1; k <= terms; ++k) {
    sum += term / k;
    const double kk = k;
    term *= Q * (2.0 * kk + 1.0) * (2.0 * kk + 2.0) / ((kk + 1.0) * (kk + 1.0));
    if (term == 0.0) break;
  }
  return sum;
}

std::pair<double, double> discriminant_identity(double a) {
  const DoubleDouble one{1.0, 0.0};
  const DoubleDouble a2 = two_prod(a, a);
  const DoubleDouble s = one + a2;
  const DoubleDouble four_a2{4.0 * a2.hi, 4.0 * a2.lo};
  const DoubleDouble lhs = one - four_a2 / (s * s);
  const DoubleDouble t = (a2 - one) / s;
  const DoubleDouble rhs = t * t;
  return {round_dd(lhs), round_dd(rhs)};
}

double gr_4_324_2_closed(double a, double p, double q) {
  check_amplitude(a);
  check_frequencies(p, q);
  const double log_qp = std::log(q / p);
  if (std::fabs(a) <= 1.0) return 2.0 * log_qp * std::log1p(a);
  return 2.0 * log_qp * std::log1p(1.0 / a);
}

double gr_4_324_2_closed_via_discriminant(double a, double p, double q) {
  check_frequencies(p, q);
  const SeriesParams sp(a);
  const double log_qp = std::log(q / p);
  // -ln((1 + sqrt(1-4Q))/2) = central_binomial_closed(Q) / 2
  return log_qp * (std::log1p(sp.A()) + 0.5 * central_binomial_closed(sp.Q()));
}

double gr_4_324_2_series(double a, double p, double q, int terms) {
  check_frequencies(p, q);
  const SeriesParams sp(a);
  const double log_qp = std::log(q / p);
  return log_qp * log_series_partial(sp.A(), terms) +
         0.5 * log_qp * central_binomial_partial(sp.Q(), terms / 2);
}

ImaginaryCheck imaginary_exponential_check(double p, double q, double tol) {
  check_frequencies(p, q);
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (p == q) return {0.0, 0.0, 0.0, 0.0, true};

  const std::array<double, 2> freqs{p, q};
  const OscillatorySpec spec = oscillatory_spec_for(freqs);
  auto re = integrate_frullani_oscillatory(
      [p, q](double x) { return (std::cos(p * x) - std::cos(q * x)) / x; }, spec, tol);
  auto im = integrate_frullani_oscillatory(
      [p, q](double x) { return (std::sin(p * x) - std::sin(q * x)) / x; }, spec, tol);
  return {re.value, im.value, re.error_estimate, im.error_estimate, re.converged && im.converged};
}

}  // namespace frullani::series
