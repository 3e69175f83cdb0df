#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "frullani/catalog.hpp"
#include "frullani/frullani_engine.hpp"

using namespace frullani;

TEST_CASE("diagnosis of standard generators") {
  auto rep = diagnose(FrullaniProblem(parse("exp(-x)"), 1, 2));
  CHECK(rep.applicable);
  CHECK(std::get<verdict::Finite>(rep.at_zero).value == doctest::Approx(1.0));
  CHECK(std::fabs(std::get<verdict::Finite>(rep.at_infinity).value) < 1e-9);

  auto at = diagnose(FrullaniProblem(parse("atan(x)"), 1, 2));
  CHECK(at.applicable);
  CHECK(std::get<verdict::Finite>(at.at_infinity).value == doctest::Approx(std::numbers::pi / 2).epsilon(1e-9));

  auto osc = diagnose(FrullaniProblem(parse("ln(1 + 2*0.5*cos(x) + 0.25)"), 1, 2));
  CHECK_FALSE(osc.applicable);
  CHECK(std::holds_alternative<verdict::NoLimit>(osc.at_infinity));
  CHECK(osc.reason.find("infinity") != std::string::npos);
}

TEST_CASE("problem validation") {
  CHECK_THROWS_AS(FrullaniProblem(parse("exp(-x)"), 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(FrullaniProblem(parse("exp(-x)"), 1, -2), std::invalid_argument);
  CHECK_THROWS_AS(FrullaniProblem(parse("exp(-x)"), 1, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(FrullaniProblem(parse("exp(-a*x)"), 1, 2), std::invalid_argument);
  CHECK_NOTHROW(FrullaniProblem(parse("3"), 1, 2));
}

TEST_CASE("closed form values") {
  FrullaniProblem p(parse("exp(-x)"), 1, 2);
  CHECK(closed_form(p, 1.0, 0.0) == doctest::Approx(std::numbers::ln2).epsilon(1e-15));
  CHECK(closed_form(2.0, 2.0, 1.0, 1.0, 0.0) == 0.0);
  // (1 + 1/x)^x with the scales of the tabulated orientation: a=2, b=1
  CHECK(closed_form(2.0, 1.0, 1.0, 1.0, std::numbers::e) ==
        doctest::Approx((std::numbers::e - 1) * std::numbers::ln2).epsilon(1e-15));
}

TEST_CASE("closed form laws hold bitwise") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> scale(0.01, 100.0), limit(-5.0, 5.0), power(0.1, 4.0);
  std::uniform_int_distribution<int> exponent(-20, 20);
  for (int i = 0; i < 1000; ++i) {
    const double a = scale(rng), b = scale(rng), p = power(rng), f0 = limit(rng), fi = limit(rng);
    const double lambda = std::ldexp(1.0, exponent(rng));
    CHECK(closed_form(a, b, 1.0, f0, fi) == -closed_form(b, a, 1.0, f0, fi));
    CHECK(closed_form(lambda * a, lambda * b, p, f0, fi) == closed_form(a, b, p, f0, fi));
    CHECK(closed_form(a, b, p, f0, fi) == (1.0 / p) * closed_form(a, b, 1.0, f0, fi));
  }
}

TEST_CASE("scale invariance for general factors is within rounding of the ratio") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> scale(0.01, 100.0);
  for (int i = 0; i < 200; ++i) {
    const double a = scale(rng), b = scale(rng), lambda = scale(rng);
    const double base = closed_form(a, b, 1.0, 1.0, 0.0);
    CHECK(std::fabs(closed_form(lambda * a, lambda * b, 1.0, 1.0, 0.0) - base) <= 4e-16 + 1e-15 * std::fabs(base));
  }
}

TEST_CASE("pipeline records") {
  auto pass = evaluate_pipeline(FrullaniProblem(parse("exp(-x)"), 1, 2), 1e-8);
  CHECK(pass.status == Status::Pass);
  CHECK(pass.abs_error <= 1e-8);
  CHECK(pass.limit_source == "probe");
  CHECK(pass.expected == doctest::Approx(std::numbers::ln2));

  auto same = evaluate_pipeline(FrullaniProblem(parse("exp(-x)"), 2, 2), 1e-8);
  CHECK(same.status == Status::Pass);
  CHECK(same.expected == 0.0);

  auto na = evaluate_pipeline(FrullaniProblem(parse("ln(1 + 2*0.5*cos(x) + 0.25)"), 1, 2), 1e-6);
  CHECK(na.status == Status::NotApplicable);
  CHECK_FALSE(na.detail.empty());

  auto scaled = evaluate_pipeline(FrullaniProblem(parse("exp(-x)"), 1, 10, 2), 1e-8);
  CHECK(scaled.status == Status::Pass);
  CHECK(scaled.expected == doctest::Approx(0.5 * std::log(10.0)));

  auto analytic = evaluate_pipeline(FrullaniProblem(parse("atan(x)"), 1, 2), 1e-8,
                                    AnalyticLimits{0.0, std::numbers::pi / 2});
  CHECK(analytic.limit_source == "analytic");
  CHECK(analytic.status == Status::Pass);
}

TEST_CASE("probe errors make the problem not applicable") {
  auto rec = evaluate_pipeline(FrullaniProblem(parse("ln(x - 1)"), 1, 2), 1e-6);
  CHECK(rec.status == Status::NotApplicable);
}

TEST_CASE("probed closed forms agree with the catalog") {
  for (const auto& entry : Catalog::instance().entries()) {
    for (const auto& params : entry.default_grid) {
      auto form = entry.frullani_form(params);
      if (!form) continue;
      CAPTURE(entry.id);
      CAPTURE(format_params(params));
      FrullaniProblem prob(form->generator, form->a, form->b, form->power, entry.id);
      auto rep = diagnose(prob);
      REQUIRE(rep.applicable);
      const double probed = closed_form(prob, std::get<verdict::Finite>(rep.at_zero).value,
                                        std::get<verdict::Finite>(rep.at_infinity).value);
      CHECK(std::fabs(probed - entry.closed_form(params)) <= 1e-6);
    }
  }
}
