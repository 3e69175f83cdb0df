#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>

#include "frullani/catalog.hpp"
#include "frullani/quadrature.hpp"

using namespace frullani;
using std::numbers::pi;

namespace {

// Reference Ci and Si from their power series, summed in long double. Good
// to ~1e-15 for |x| <= 8, which covers every argument used below.
long double ci_series(long double x) {
  const long double euler_gamma = 0.57721566490153286060651209008240243L;
  long double sum = 0.0L, term = 1.0L;
  for (int k = 1; k < 200; ++k) {
    term *= -x * x / ((2.0L * k - 1.0L) * (2.0L * k));
    const long double add = term / (2.0L * k);
    sum += add;
    if (std::fabs(add) < 1e-30L) break;
  }
  return euler_gamma + std::log(x) + sum;
}

long double si_series(long double x) {
  long double sum = x, term = x;
  for (int k = 1; k < 200; ++k) {
    term *= -x * x / ((2.0L * k) * (2.0L * k + 1.0L));
    const long double add = term / (2.0L * k + 1.0L);
    sum += add;
    if (std::fabs(add) < 1e-30L) break;
  }
  return sum;
}

}  // namespace

TEST_CASE("reference special functions") {
  CHECK(static_cast<double>(ci_series(pi)) == doctest::Approx(0.07366791204642548).epsilon(1e-14));
  CHECK(static_cast<double>(si_series(1.0L)) == doctest::Approx(0.9460830703671830).epsilon(1e-14));
}

TEST_CASE("polynomials are integrated exactly") {
  auto r = integrate_adaptive([](double x) { return x; }, 0.0, 1.0, 1e-10);
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(r.function_evaluations > 0);
  for (int deg = 0; deg <= 20; ++deg) {
    auto p = integrate_adaptive([deg](double x) { return std::pow(x, deg); }, 0.0, 1.0, 1e-13);
    CAPTURE(deg);
    CHECK(std::fabs(p.value - 1.0 / (deg + 1)) < 1e-15);
  }
}

TEST_CASE("removable singularity at both ends") {
  auto r = integrate_adaptive([](double x) { return (x - 1) / std::log(x); }, 0.0, 1.0, 1e-9);
  CHECK(r.converged);
  CHECK(std::fabs(r.value - std::numbers::ln2) <= 1e-9);

  auto s = integrate_adaptive([](double t) { return (t - std::sqrt(t)) / std::log(t); }, 0.0, 1.0, 1e-9);
  CHECK(s.converged);
  CHECK(std::fabs(s.value - std::log(2.0 / 1.5)) <= 1e-9);
}

TEST_CASE("linearity and additivity") {
  auto f = [](double x) { return std::exp(-x) * std::sin(3 * x); };
  auto g = [](double x) { return 1.0 / (1.0 + x * x); };
  const double alpha = 2.5, beta = -0.75;
  auto rf = integrate_adaptive(f, 0.0, 2.0, 1e-12);
  auto rg = integrate_adaptive(g, 0.0, 2.0, 1e-12);
  auto rc = integrate_adaptive([&](double x) { return alpha * f(x) + beta * g(x); }, 0.0, 2.0, 1e-12);
  CHECK(std::fabs(rc.value - (alpha * rf.value + beta * rg.value)) <=
        rc.error_estimate + std::fabs(alpha) * rf.error_estimate + std::fabs(beta) * rg.error_estimate + 1e-15);

  auto left = integrate_adaptive(g, 0.0, 0.7, 1e-12);
  auto right = integrate_adaptive(g, 0.7, 2.0, 1e-12);
  CHECK(std::fabs(rg.value - left.value - right.value) <=
        rg.error_estimate + left.error_estimate + right.error_estimate + 1e-15);
  CHECK(rg.value == doctest::Approx(std::atan(2.0)).epsilon(1e-13));
}

TEST_CASE("converged results respect the tolerance") {
  for (double tol : {1e-4, 1e-8, 1e-12}) {
    auto r = integrate_adaptive([](double x) { return std::sqrt(x); }, 0.0, 1.0, tol);
    CHECK(r.converged);
    CHECK(r.error_estimate <= tol);
    CHECK(std::fabs(r.value - 2.0 / 3.0) <= tol);
  }
}

TEST_CASE("subdivision limit reports non-convergence") {
  AdaptiveOptions opts;
  opts.max_intervals = 3;
  auto r = integrate_adaptive([](double x) { return std::sin(200 * x); }, 0.0, 10.0, 1e-12, opts);
  CHECK_FALSE(r.converged);
  CHECK_FALSE(r.diagnostic.empty());
}

TEST_CASE("non-finite integrand aborts with the abscissa") {
  try {
    integrate_adaptive([](double x) { return x > 0.5 ? std::nan("") : 1.0; }, 0.0, 1.0, 1e-8);
    FAIL("expected IntegrandError");
  } catch (const IntegrandError& e) {
    CHECK(e.abscissa() > 0.5);
  }
  CHECK_THROWS_AS(integrate_adaptive([](double x) { return x; }, 1.0, 0.0, 1e-8), std::invalid_argument);
  CHECK_THROWS_AS(integrate_adaptive([](double x) { return x; }, 0.0, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("semi-infinite decaying integrands") {
  auto r = integrate_decaying([](double x) { return std::exp(-x); }, 1e-10);
  CHECK(r.converged);
  CHECK(std::fabs(r.value - 1.0) <= 1e-10);

  auto fr = integrate_decaying([](double x) { return (std::exp(-x) - std::exp(-2 * x)) / x; }, 1e-10);
  CHECK(std::fabs(fr.value - std::numbers::ln2) <= 1e-10);

  auto pw = integrate_decaying(
      [](double x) { return (std::pow(x + 1, -2.0) - std::pow(2 * x + 1, -2.0)) / x; }, 1e-10);
  CHECK(std::fabs(pw.value - std::numbers::ln2) <= 1e-9);
}

TEST_CASE("oscillatory tails against Ci and Si") {
  auto cos_tail = integrate_oscillatory_tail([](double x) { return std::cos(x) / x; }, {pi, pi, 64}, 1e-9);
  CHECK(cos_tail.converged);
  CHECK(std::fabs(cos_tail.value - static_cast<double>(-ci_series(pi))) <= 1e-8);

  auto sin_tail = integrate_oscillatory_tail([](double x) { return std::sin(x) / x; }, {1.0, pi, 64}, 1e-9);
  CHECK(sin_tail.converged);
  CHECK(std::fabs(sin_tail.value - static_cast<double>(pi / 2 - si_series(1.0L))) <= 1e-8);

  auto zero = integrate_oscillatory_tail([](double) { return 0.0; }, {1.0, pi, 64}, 1e-9);
  CHECK(zero.converged);
  CHECK(zero.value == 0.0);
}

TEST_CASE("non-decaying oscillation is not reported as converged") {
  // starts off the zeros of sin so every segment carries weight
  auto r = integrate_oscillatory_tail([](double x) { return std::cos(x); }, {1.0, pi, 64}, 1e-6);
  CHECK_FALSE(r.converged);
  CHECK_FALSE(r.diagnostic.empty());
  auto g = integrate_oscillatory_tail([](double x) { return x * std::sin(x); }, {1.0, pi, 64}, 1e-6);
  CHECK_FALSE(g.converged);
}

TEST_CASE("oscillatory spec validation") {
  CHECK_THROWS_AS(OscillatorySpec({1.0, pi, 4}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(OscillatorySpec({1.0, 0.0, 64}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(OscillatorySpec({0.0, pi, 64}).validate(), std::invalid_argument);
}

TEST_CASE("frequency metadata") {
  const std::array<double, 2> ab{1.0, 2.0};
  CHECK(fundamental_frequency(ab) == doctest::Approx(1.0));
  const std::array<double, 2> pq{2.0, 4.0};
  CHECK(fundamental_frequency(pq) == doctest::Approx(2.0));
  const std::array<double, 2> odd{3.0, 4.5};
  CHECK(fundamental_frequency(odd) == doctest::Approx(1.5));
  auto spec = oscillatory_spec_for(ab);
  CHECK(spec.tail_start == doctest::Approx(pi));
  CHECK(spec.half_period == doctest::Approx(pi));
  const std::array<double, 1> fast{10.0};
  CHECK(oscillatory_spec_for(fast).tail_start == 1.0);
}

TEST_CASE("full oscillatory Frullani pipeline") {
  const std::array<double, 2> ab{1.0, 2.0};
  auto r = integrate_frullani_oscillatory([](double x) { return (std::cos(x) - std::cos(2 * x)) / x; },
                                          oscillatory_spec_for(ab), 1e-8);
  CHECK(r.converged);
  CHECK(std::fabs(r.value - std::numbers::ln2) <= 1e-7);

  const std::array<double, 2> sum_diff{2.0, 4.0};
  auto s = integrate_frullani_oscillatory([](double x) { return std::sin(3 * x) * std::sin(x) / x; },
                                          oscillatory_spec_for(sum_diff), 1e-8);
  CHECK(s.converged);
  CHECK(std::fabs(s.value - 0.5 * std::log(2.0)) <= 1e-7);

  auto z = integrate_frullani_oscillatory(
      [](double x) { return (std::exp(-x) * std::sin(x) - std::exp(-2 * x) * std::sin(2 * x)) / x; },
      oscillatory_spec_for(ab), 1e-8);
  CHECK(z.converged);
  CHECK(std::fabs(z.value) <= 1e-8);
}

TEST_CASE("smooth catalog entries agree with their closed forms") {
  const auto& cat = Catalog::instance();
  for (const auto& entry : cat.entries()) {
    if (entry.eval_class != EvalClass::SmoothDecay) continue;
    for (const auto& params : entry.default_grid) {
      auto inst = cat.instantiate(entry.id, params);
      auto r = integrate_decaying(inst.integrand, 1e-8);
      CAPTURE(entry.id);
      CAPTURE(format_params(params));
      CHECK(r.converged);
      CHECK(std::fabs(r.value - inst.expected) <= 1e-6);
    }
  }
}
