#include <doctest.h>

#include <cmath>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include "frullani/catalog.hpp"

using namespace frullani;

TEST_CASE("list has the twenty entries in order") {
  const std::vector<std::string> expected{
      "GR-3.434.2", "GR-4.267.8", "GR-3.476.1", "GR-3.436", "GR-3.329", "GR-3.232", "GR-4.536.2",
      "GR-4.319.3", "GR-4.297.7", "GR-3.484",   "GR-3.412.1", "GR-4.324.2", "R-3.1",   "R-3.2",
      "R-3.3",      "R-3.4",      "R-3.5",      "R-3.6",    "R-3.8",    "R-3.9"};
  const auto list = Catalog::instance().list_entries();
  REQUIRE(list.size() == expected.size());
  for (std::size_t i = 0; i < list.size(); ++i) CHECK(list[i].id == expected[i]);

  auto cls = [&](const std::string& id) {
    for (const auto& e : list)
      if (e.id == id) return e.eval_class;
    FAIL("missing " << id);
    return EvalClass::SmoothDecay;
  };
  CHECK(cls("GR-4.267.8") == EvalClass::FiniteInterval);
  for (const char* id : {"GR-4.324.2", "R-3.4", "R-3.5", "R-3.6", "R-3.8"}) CHECK(cls(id) == EvalClass::Oscillatory);
  CHECK(cls("R-3.9") == EvalClass::SmoothDecay);

  for (const auto& e : list)
    if (e.id == "R-3.3") CHECK(e.constraints == "a,b,p,q all positive");
}

TEST_CASE("instantiate gives tabulated closed forms") {
  const auto& cat = Catalog::instance();
  CHECK(cat.instantiate("GR-3.434.2", {{"a", 1}, {"b", 2}}).expected == doctest::Approx(0.6931472).epsilon(1e-7));
  CHECK(cat.instantiate("GR-3.412.1", {{"a", 1}, {"b", 1}, {"c", 1}, {"g", 1}, {"h", 1}, {"p", 1}, {"q", 2}})
            .expected == doctest::Approx(2.0 / 3.0 * std::numbers::ln2).epsilon(1e-15));
  CHECK(cat.instantiate("GR-3.484", {{"a", 1}, {"p", 1}, {"q", 2}}).expected ==
        doctest::Approx(1.1910222048).epsilon(1e-10));
  CHECK(cat.instantiate("GR-4.324.2", {{"a", 0.5}, {"p", 1}, {"q", 2}}).expected ==
        doctest::Approx(0.5620939930).epsilon(1e-10));
}

TEST_CASE("integrands are the tabulated ones") {
  const auto& cat = Catalog::instance();
  auto f = cat.instantiate("GR-3.436", {{"a", 1}, {"b", 2}, {"p", 3}, {"q", 1}}).integrand;
  for (double x : {0.3, 1.0, 4.0}) {
    const double direct = ((std::exp(-x) - std::exp(-3 * x)) / 1 - (std::exp(-2 * x) - std::exp(-6 * x)) / 2) / (x * x);
    CHECK(f(x) == doctest::Approx(direct).epsilon(1e-12));
  }
  auto g = cat.instantiate("GR-4.267.8", {{"a", 1.5}, {"b", 2}}).integrand;
  for (double t : {0.1, 0.5, 0.9}) CHECK(g(t) == doctest::Approx((t - std::sqrt(t)) / std::log(t)).epsilon(1e-12));
  auto h = cat.instantiate("R-3.6", {{"p", 3}, {"q", 1}}).integrand;
  CHECK(h(0.7) == doctest::Approx(std::sin(2.1) * std::sin(0.7) / 0.7).epsilon(1e-14));
  auto s = cat.instantiate("GR-3.329", {{"a", 1}, {"b", 2}, {"c", 1}}).integrand;
  CHECK(std::isfinite(s(1e-12)));
  CHECK(s(1e-9) == doctest::Approx(s(1e-7)).epsilon(1e-5));
}

TEST_CASE("constraint violations") {
  const auto& cat = Catalog::instance();
  CHECK_THROWS_AS(cat.instantiate("R-3.6", {{"p", 1}, {"q", 1}}), ConstraintViolation);
  try {
    cat.instantiate("R-3.6", {{"p", 1}, {"q", 2}});
  } catch (const ConstraintViolation& e) {
    CHECK(std::string(e.what()).find("p > q") != std::string::npos);
  }
  CHECK_THROWS_AS(cat.instantiate("GR-3.329", {{"a", 1}, {"b", 2}, {"c", 0}}), ConstraintViolation);
  CHECK_THROWS_AS(cat.instantiate("GR-3.434.2", {{"a", 1}}), ConstraintViolation);
  CHECK_THROWS_AS(cat.instantiate("GR-3.434.2", {{"a", 1}, {"b", 2}, {"z", 3}}), ConstraintViolation);
  CHECK_THROWS_AS(cat.instantiate("GR-4.324.2", {{"a", -1}, {"p", 1}, {"q", 2}}), ConstraintViolation);
  CHECK_THROWS_AS(cat.instantiate("NO-SUCH", {}), UnknownEntry);

  auto rec = cat.verify_entry("R-3.6", {{"p", 1}, {"q", 1}});
  CHECK(rec.status == Status::ConstraintViolation);
  CHECK(std::isnan(rec.numeric));
}

TEST_CASE("default grids respect constraints and include the zero case") {
  const auto& cat = Catalog::instance();
  for (const auto& e : cat.entries()) {
    CAPTURE(e.id);
    CHECK(e.default_grid.size() >= 3);
    bool has_zero = false;
    for (const auto& p : e.default_grid) {
      CHECK_NOTHROW(cat.instantiate(e.id, p));
      if (e.scale_pair && p.at(e.scale_pair->first) == p.at(e.scale_pair->second)) has_zero = true;
    }
    if (e.scale_pair) CHECK(has_zero);
  }
  for (const auto& p : cat.default_grid("R-3.6")) CHECK(p.at("p") > p.at("q"));
  for (const auto& p : cat.default_grid("GR-3.329")) CHECK(p.at("c") > 0);
  CHECK(cat.default_grid("GR-3.434.2") == std::vector<Params>{{{"a", 1}, {"b", 2}}, {{"a", 1}, {"b", 10}}, {{"a", 3}, {"b", 3}}});
}

TEST_CASE("every default grid verifies at the class tolerance") {
  const auto& cat = Catalog::instance();
  for (const auto& e : cat.entries())
    for (const auto& p : e.default_grid) {
      auto rec = cat.verify_entry(e.id, p);
      CAPTURE(e.id);
      CAPTURE(format_params(p));
      CAPTURE(rec.detail);
      CHECK(rec.status == Status::Pass);
      CHECK(rec.abs_error <= class_tolerance(e.eval_class));
    }
}

TEST_CASE("worked verification examples") {
  const auto& cat = Catalog::instance();
  auto r1 = cat.verify_entry("GR-3.484", {{"a", 1}, {"p", 1}, {"q", 2}}, 1e-6);
  CHECK(r1.status == Status::Pass);
  auto r2 = cat.verify_entry("GR-4.324.2", {{"a", 0.5}, {"p", 1}, {"q", 2}}, 1e-4);
  CHECK(r2.status == Status::Pass);
  auto r3 = cat.verify_entry("R-3.8", {{"a", 1}, {"b", 2}}, 1e-5);
  CHECK(r3.status == Status::Pass);
  CHECK(r3.expected == 0.0);
  auto alias = cat.verify_entry("R-3.7", {{"n", 0.5}, {"a", 1}, {"b", 2}});
  CHECK(alias.status == Status::Pass);
  CHECK(alias.entry_id == "R-3.7");
}

TEST_CASE("the zero law") {
  const auto& cat = Catalog::instance();
  for (const auto& e : cat.entries()) {
    if (!e.scale_pair) continue;
    for (const auto& p : e.default_grid) {
      if (p.at(e.scale_pair->first) != p.at(e.scale_pair->second)) continue;
      CAPTURE(e.id);
      auto rec = cat.verify_entry(e.id, p);
      CHECK(rec.expected == 0.0);
      CHECK(std::fabs(rec.numeric) <= class_tolerance(e.eval_class));
    }
  }
}

TEST_CASE("duplicate and derived entries agree") {
  const auto& cat = Catalog::instance();
  for (auto [x, y] : {std::pair{1.0, 2.0}, {1.0, 10.0}, {0.3, 7.0}}) {
    const double r31 = cat.instantiate("R-3.1", {{"a", x}, {"b", y}}).expected;
    const double gr = cat.instantiate("GR-4.536.2", {{"p", x}, {"q", y}}).expected;
    CHECK(r31 == gr);
    auto r34 = cat.verify_entry("R-3.4", {{"a", x}, {"b", y}});
    auto r35 = cat.verify_entry("R-3.5", {{"a", x}, {"b", y}});
    CHECK(std::fabs(r35.numeric - 0.5 * r34.numeric) <= 1e-4);
  }
}

TEST_CASE("verification is safe to run concurrently") {
  const auto& cat = Catalog::instance();
  std::vector<VerificationRecord> serial, parallel(4);
  const std::vector<std::pair<std::string, Params>> jobs{{"R-3.4", {{"a", 1}, {"b", 2}}},
                                                         {"GR-3.232", {{"a", 1}, {"b", 2}, {"c", 1}, {"mu", 1}}},
                                                         {"GR-4.324.2", {{"a", 2}, {"p", 1}, {"q", 10}}},
                                                         {"R-3.9", {{"a", 1}, {"b", 10}}}};
  for (const auto& [id, p] : jobs) serial.push_back(cat.verify_entry(id, p));
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < jobs.size(); ++i)
    threads.emplace_back([&, i] { parallel[i] = cat.verify_entry(jobs[i].first, jobs[i].second); });
  for (auto& t : threads) t.join();
  for (std::size_t i = 0; i < jobs.size(); ++i) CHECK(parallel[i].numeric == serial[i].numeric);
}

TEST_CASE("parameter formatting") {
  CHECK(format_params({{"b", 2}, {"a", 1}}) == "a=1;b=2");
  CHECK(format_params({{"mu", 0.1}, {"c", -2.5e-7}}) == "c=-2.5e-07;mu=0.1");
  CHECK(format_params({}).empty());
}
