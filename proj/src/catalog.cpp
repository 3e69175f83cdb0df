#include "frullani/catalog.hpp"

#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <numbers>

#include "frullani/quadrature.hpp"
#include "frullani/series.hpp"

namespace frullani {

namespace {

using std::numbers::pi;

double get(const Params& p, const char* name) { return p.find(name)->second; }

Constraint positive(const char* name) {
  return {std::string(name) + " > 0", [name](const Params& p) { return get(p, name) > 0.0; }};
}

Constraint non_negative(const char* name) {
  return {std::string(name) + " >= 0", [name](const Params& p) { return get(p, name) >= 0.0; }};
}

// expm1(-s*x) is used wherever e^{-s x} enters a difference that cancels at
// small x; log1p likewise for ln(1 + small).
double em1(double v) { return std::expm1(v); }

std::optional<FrullaniForm> no_form(const Params&) { return std::nullopt; }

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> out;

  auto exp_generator = [](double x) { return std::exp(-x); };

  // 3.434.2: int (e^{-ax} - e^{-bx}) / x dx = ln(b/a)
  out.push_back({
      "GR-3.434.2", "Gradshteyn-Ryzhik 3.434.2", {"a", "b"}, {positive("a"), positive("b")},
      EvalClass::SmoothDecay,
      [](const Params& p) -> RealFunction {
        double a = get(p, "a"), b = get(p, "b");
        return [a, b](double x) { return (em1(-a * x) - em1(-b * x)) / x; };
      },
      [](const Params& p) { return std::log(get(p, "b") / get(p, "a")); },
      nullptr,
      [=](const Params& p) -> std::optional<FrullaniForm> {
        return FrullaniForm{exp_generator, get(p, "a"), get(p, "b"), 1.0, 1.0, 0.0};
      },
      std::pair<std::string, std::string>{"a", "b"},
      {{{"a", 1}, {"b", 2}}, {{"a", 1}, {"b", 10}}, {{"a", 3}, {"b", 3}}},
  });

  // 4.267.8: int_0^1 (t^{b-1} - t^{a-1}) / ln t dt. The table prints ln(a/b);
  // the integrand evaluates to ln(b/a) (a=1, b=2 gives int (t-1)/ln t = ln 2).
  out.push_back({
      "GR-4.267.8", "Gradshteyn-Ryzhik 4.267.8", {"a", "b"}, {positive("a"), positive("b")},
      EvalClass::FiniteInterval,
      [](const Params& p) -> RealFunction {
        double a = get(p, "a"), b = get(p, "b");
        return [a, b](double t) {
          const double u = std::log(t);
          return (em1((b - 1.0) * u) - em1((a - 1.0) * u)) / u;
        };
      },
      [](const Params& p) { return std::log(get(p, "b") / get(p, "a")); },
      nullptr,
      [=](const Params& p) -> std::optional<FrullaniForm> {
        return FrullaniForm{exp_generator, get(p, "a"), get(p, "b"), 1.0, 1.0, 0.0};
      },
      std::pair<std::string, std::string>{"a", "b"},
      {{{"a", 1}, {"b", 2}}, {{"a", 1}, {"b", 10}}, {{"a", 1.5}, {"b", 2}}, {{"a", 3}, {"b", 3}}},
  });

  // 3.476.1: int (e^{-v x^p} - e^{-u x^p}) dx/x = (1/p) ln(u/v)
  out.push_back({
      "GR-3.476.1", "Gradshteyn-Ryzhik 3.476.1", {"u", "v", "p"},
      {positive("u"), positive("v"), positive("p")}, EvalClass::SmoothDecay,
      [](const Params& prm) -> RealFunction {
        double u = get(prm, "u"), v = get(prm, "v"), p = get(prm, "p");
        return [u, v, p](double x) {
          const double s = std::pow(x, p);
          return (em1(-v * s) - em1(-u * s)) / x;
        };
      },
      [](const Params& p) { return std::log(get(p, "u") / get(p, "v")) / get(p, "p"); },
      nullptr,
      [=](const Params& p) -> std::optional<FrullaniForm> {
        return FrullaniForm{exp_generator, get(p, "v"), get(p, "u"), get(p, "p"), 1.0, 0.0};
      },
      std::pair<std::string, std::string>{"u", "v"},
      {{{"u", 2}, {"v", 1}, {"p", 1}},
       {{"u", 10}, {"v", 1}, {"p", 2}},
       {{"u", 2}, {"v", 1}, {"p", 0.5}},
       {{"u", 3}, {"v", 3}, {"p", 0.5}}},
  });

  // 3.436: int [(e^{-aqx} - e^{-apx})/a - (e^{-bqx} - e^{-bpx})/b] dx/x^2 = (p-q) ln(b/a)
  out.push_back({
      "GR-3.436", "Gradshteyn-Ryzhik 3.436", {"a", "b", "p", "q"},
      {positive("a"), positive("b"), positive("p"), positive("q")}, EvalClass::SmoothDecay,
      [](const Params& prm) -> RealFunction {
        double a = get(prm, "a"), b = get(prm, "b"), p = get(prm, "p"), q = get(prm, "q");
        return [=](double x) {
          const double ta = (em1(-a * q * x) - em1(-a * p * x)) / a;
          const double tb = (em1(-b * q * x) - em1(-b * p * x)) / b;
          return (ta - tb) / (x * x);
        };
      },
      [](const Params& p) { return (get(p, "p") - get(p, "q")) * std::log(get(p, "b") / get(p, "a")); },
      nullptr,
      [](const Params& prm) -> std::optional<FrullaniForm> {
        double p = get(prm, "p"), q = get(prm, "q");
        return FrullaniForm{[p, q](double x) { return (em1(-q * x) - em1(-p * x)) / x; },
                            get(prm, "a"), get(prm, "b"), 1.0, p - q, 0.0};
      },
      std::pair<std::string, std::string>{"a", "b"},
      {{{"a", 1}, {"b", 2}, {"p", 3}, {"q", 1}},
       {{"a", 1}, {"b", 10}, {"p", 2}, {"q", 1}},
       {{"a", 1}, {"b", 2}, {"p", 1}, {"q", 2}},
       {{"a", 2}, {"b", 2}, {"p", 3}, {"q", 1}}},
  });

  // 3.329: int [a exp(-c e^{ax})/(1 - e^{-ax}) - b exp(-c e^{bx})/(1 - e^{-bx})] dx = e^{-c} ln(b/a)
  // c > 0 is required for convergence at infinity; the table does not state it.
  out.push_back({
      "GR-3.329", "Gradshteyn-Ryzhik 3.329", {"a", "b", "c"},
      {positive("a"), positive("b"), positive("c")}, EvalClass::SmoothDecay,
      [](const Params& prm) -> RealFunction {
        double a = get(prm, "a"), b = get(prm, "b"), c = get(prm, "c");
        return [=](double x) {
          const double ta = a * std::exp(-c * std::exp(a * x)) / -em1(-a * x);
          const double tb = b * std::exp(-c * std::exp(b * x)) / -em1(-b * x);
          return ta - tb;
        };
      },
      [](const Params& p) { return std::exp(-get(p, "c")) * std::log(get(p, "b") / get(p, "a")); },
      nullptr,
      [](const Params& prm) -> std::optional<FrullaniForm> {
        double c = get(prm, "c");
        return FrullaniForm{[c](double x) { return x / -em1(-x) * std::exp(-c * std::exp(x)); },
                            get(prm, "a"), get(prm, "b"), 1.0, std::exp(-c), 0.0};
      },
      std::pair<std::string, std::string>{"a", "b"},
      {{{"a", 1}, {"b", 2}, {"c", 1}},
       {{"a", 1}, {"b", 10}, {"c", 0.5}},
       {{"a", 2}, {"b", 2}, {"c", 1}}},
  });

  // 3.232: int ((ax+c)^{-mu} - (bx+c)^{-mu}) / x dx = c^{-mu} ln(b/a)
  out.push_back({
      "GR-3.232", "Gradshteyn-Ryzhik 3.232", {"a", "b", "c", "mu"},
      {positive("a"), positive("b"), positive("c"), positive("mu")}, EvalClass::SmoothDecay,
      [](const Params& prm) -> RealFunction {
        double a = get(prm, "a"), b = get(prm, "b"), c = get(prm, "c"), mu = get(prm, "mu");
        return [=](double x) {
          // (sx + c)^{-mu} = c^{-mu} exp(-mu ln(1 + sx/c))
          const double la = std::log1p(a * x / c), lb = std::log1p(b * x / c);
          return std::pow(c, -mu) * (em1(-mu * la) - em1(-mu * lb)) / x;
        };
      },
      [](const Params& p) {
        return std::pow(get(p, "c"), -get(p, "mu")) * std::log(get(p, "b") / get(p, "a"));
      },
      nullptr,
      [](const Params& prm) -> std::optional<FrullaniForm> {
        double c = get(prm, "c"), mu = get(prm, "mu");
        return FrullaniForm{[c, mu](double x) { return std::pow(x + c, -mu); }, get(prm, "a"),
                            get(prm, "b"), 1.0, std::pow(c, -mu), 0.0};
      },
      std::pair<std::string, std::string>{"a", "b"},
      {{{"a", 1}, {"b", 2}, {"c", 1}, {"mu", 1}},
       {{"a", 1}, {"b", 10}, {"c", 2}, {"mu", 1.5}},
       {{"a", 3}, {"b", 3}, {"c", 1}, {"mu", 2}}},
  });

  auto atan_form = [](double a, double b) {
    return FrullaniForm{[](double x) { return std::atan(x); }, a, b, 1.0, 0.0, pi / 2};
  };

  // 4.536.2: int (atan px - atan qx) / x dx = pi/2 ln(p/q)
  out.push_back({
      "GR-4.536.2", "Gradshteyn-Ryzhik 4.536.2", {"p", "q"}, {positive("p"), positive("q")},
      EvalClass::SmoothDecay,
      [](const Params& prm) -> RealFunction {
        double p = get(prm, "p"), q = get(prm, "q");
        return [p, q](double x) { return (std::atan(p * x) - std::atan(q * x)) / x; };
      },
      [](const Params& p) { return pi / 2 * std::log(get(p, "p") / get(p, "q")); },
      nullptr,
      [=](const Params& p) -> std::optional<FrullaniForm> { return atan_form(get(p, "p"), get(p, "q")); },
      std::pair<std::string, std::string>{"p", "q"},
      {{{"p", 1}, {"q", 2}}, {{"p", 1}, {"q", 10}}, {{"p", 2}, {"q", 2}}},
  });

  // 4.319.3: int [ln(a + b e^{-px}) - ln(a + b e^{-qx})] / x dx = ln(a/(a+b)) ln(p/q)
  out.push_back({
      "GR-4.319.3", "Gradshteyn-Ryzhik 4.319.3", {"a", "b", "p", "q"},
      {positive("a"), {"a + b > 0", [](const Params& p) { return get(p, "a") + get(p, "b") > 0.0; }},
       positive("p"), positive("q")},
      EvalClass::SmoothDecay,
      [](const Params& prm) -> RealFunction {
        double a = get(prm, "a"), b = get(prm, "b"), p = get(prm, "p"), q = get(prm, "q");
        return [=](double x) {
          // ln(a + b e^{-px}) - ln(a + b e^{-qx}) = ln(1 + b (e^{-px} - e^{-qx}) / (a + b e^{-qx}))
          const double num = b * (em1(-p * x) - em1(-q * x));
          return std::log1p(num / (a + b * std::exp(-q * x))) / x;
        };
      },
      [](const Params& prm) {
        double a = get(prm, "a"), b = get(prm, "b");
        return std::log(a / (a + b)) * std::log(get(prm, "p") / get(prm, "q"));
      },
      nullptr,
      [](const Params& prm) -> std::optional<FrullaniForm> {
        double a = get(prm, "a"), b = get(prm, "b");
        return FrullaniForm{[a, b](double x) { return std::log(a + b * std::exp(-x)); }, get(prm, "p"),
                            get(prm, "q"), 1.0, std::log(a + b), std::log(a)};
      },
      std::pair<std::string, std::string>{"p", "q"},
      {{{"a", 1}, {"b", 1}, {"p", 1}, {"q", 2}},
       {{"a", 2}, {"b", 3}, {"p", 1}, {"q", 10}},
       {{"a", 2}, {"b", -1}, {"p", 2}, {"q", 1}},
       {{"a", 1}, {"b", 2}, {"p", 3}, {"q", 3}}},
  });

  // 4.297.7: int [b ln(1 + ax) - a ln(1 + bx)] / x^2 dx = ab ln(b/a)
  out.push_back({
      "GR-4.297.7", "Gradshteyn-Ryzhik 4.297.7", {"a", "b"}, {positive("a"), positive("b")},
      EvalClass::SmoothDecay,
      [](const Params& prm) -> RealFunction {
        double a = get(prm, "a"), b = get(prm, "b");
        return [a, b](double x) { return (b * std::log1p(a * x) - a * std::log1p(b * x)) / (x * x); };
      },
      [](const Params& p) { return get(p, "a") * get(p, "b") * std::log(get(p, "b") / get(p, "a")); },
      nullptr,
      [](const Params& prm) -> std::optional<FrullaniForm> {
        double a = get(prm, "a"), b = get(prm, "b");
        return FrullaniForm{[a, b](double x) { return a * b * std::log1p(x) / x; }, a, b, 1.0, a * b, 0.0};
      },
      std::pair<std::string, std::string>{"a", "b"},
      {{{"a", 1}, {"b", 2}}, {{"a", 1}, {"b", 10}}, {{"a", 2}, {"b", 2}}},
  });

  // 3.484: int [(1 + a/(qx))^{qx} - (1 + a/(px))^{px}] dx/x = (e^a - 1) ln(q/p)
  out.push_back({
      "GR-3.484", "Gradshteyn-Ryzhik 3.484", {"a", "p", "q"},
      {positive("a"), positive("p"), positive("q")}, EvalClass::SmoothDecay,
      [](const Params& prm) -> RealFunction {
        double a = get(prm, "a"), p = get(prm, "p"), q = get(prm, "q");
        return [=](double x) {
          const double lq = q * x * std::log1p(a / (q * x));
          const double lp = p * x * std::log1p(a / (p * x));
          // e^{lq} - e^{lp} = e^{lp} (e^{lq - lp} - 1)
          return std::exp(lp) * em1(lq - lp) / x;
        };
      },
      [](const Params& p) { return em1(get(p, "a")) * std::log(get(p, "q") / get(p, "p")); },
      nullptr,
      [](const Params& prm) -> std::optional<FrullaniForm> {
        double a = get(prm, "a");
        return FrullaniForm{[a](double x) { return std::exp(x * std::log1p(a / x)); }, get(prm, "q"),
                            get(prm, "p"), 1.0, 1.0, std::exp(a)};
      },
      std::pair<std::string, std::string>{"p", "q"},
      {{{"a", 1}, {"p", 1}, {"q", 2}}, {{"a", 0.5}, {"p", 1}, {"q", 10}}, {{"a", 2}, {"p", 3}, {"q", 3}}},
  });

  // 3.412.1: int [(a + b e^{-px})/(c e^{px} + g + h e^{-px}) - (same at q)] dx/x
  //          = (a + b)/(c + g + h) ln(q/p)
  out.push_back({
      "GR-3.412.1", "Gradshteyn-Ryzhik 3.412.1", {"a", "b", "c", "g", "h", "p", "q"},
      {positive("c"), non_negative("g"), non_negative("h"), positive("p"), positive("q")},
      EvalClass::SmoothDecay,
      [](const Params& prm) -> RealFunction {
        double a = get(prm, "a"), b = get(prm, "b"), c = get(prm, "c"), g = get(prm, "g"),
               h = get(prm, "h"), p = get(prm, "p"), q = get(prm, "q");
        auto f = [=](double y) { return (a + b * std::exp(-y)) / (c * std::exp(y) + g + h * std::exp(-y)); };
        return [=](double x) { return (f(p * x) - f(q * x)) / x; };
      },
      [](const Params& prm) {
        return (get(prm, "a") + get(prm, "b")) / (get(prm, "c") + get(prm, "g") + get(prm, "h")) *
               std::log(get(prm, "q") / get(prm, "p"));
      },
      nullptr,
      [](const Params& prm) -> std::optional<FrullaniForm> {
        double a = get(prm, "a"), b = get(prm, "b"), c = get(prm, "c"), g = get(prm, "g"), h = get(prm, "h");
        return FrullaniForm{
            [=](double y) { return (a + b * std::exp(-y)) / (c * std::exp(y) + g + h * std::exp(-y)); },
            get(prm, "p"), get(prm, "q"), 1.0, (a + b) / (c + g + h), 0.0};
      },
      std::pair<std::string, std::string>{"p", "q"},
      {{{"a", 1}, {"b", 1}, {"c", 1}, {"g", 1}, {"h", 1}, {"p", 1}, {"q", 2}},
       {{"a", 2}, {"b", -1}, {"c", 0.5}, {"g", 1}, {"h", 2}, {"p", 1}, {"q", 10}},
       {{"a", 1}, {"b", 3}, {"c", 2}, {"g", 0}, {"h", 1}, {"p", 2}, {"q", 2}}},
  });

  // 4.324.2: int [ln(1 + 2a cos px + a^2) - ln(1 + 2a cos qx + a^2)] dx/x
  out.push_back({
      "GR-4.324.2", "Gradshteyn-Ryzhik 4.324.2", {"a", "p", "q"},
      {{"a != -1", [](const Params& p) { return get(p, "a") != -1.0 && std::isfinite(get(p, "a")); }},
       positive("p"), positive("q")},
      EvalClass::Oscillatory,
      [](const Params& prm) -> RealFunction {
        double a = get(prm, "a"), p = get(prm, "p"), q = get(prm, "q");
        return [=](double x) {
          return (std::log(1.0 + 2.0 * a * std::cos(p * x) + a * a) -
                  std::log(1.0 + 2.0 * a * std::cos(q * x) + a * a)) / x;
        };
      },
      [](const Params& p) { return series::gr_4_324_2_closed(get(p, "a"), get(p, "p"), get(p, "q")); },
      [](const Params& p) { return std::vector<double>{get(p, "p"), get(p, "q")}; },
      no_form,
      std::pair<std::string, std::string>{"p", "q"},
      {{{"a", 0.5}, {"p", 1}, {"q", 2}},
       {{"a", 2}, {"p", 1}, {"q", 10}},
       {{"a", -0.5}, {"p", 1}, {"q", 2}},
       {{"a", 0.5}, {"p", 3}, {"q", 3}}},
  });

  // Ramanujan notebook list.

  out.push_back({
      "R-3.1", "Ramanujan 3.1 (same integral as GR-4.536.2)", {"a", "b"}, {positive("a"), positive("b")},
      EvalClass::SmoothDecay,
      [](const Params& prm) -> RealFunction {
        double a = get(prm, "a"), b = get(prm, "b");
        return [a, b](double x) { return (std::atan(a * x) - std::atan(b * x)) / x; };
      },
      [](const Params& p) { return pi / 2 * std::log(get(p, "a") / get(p, "b")); },
      nullptr,
      [=](const Params& p) -> std::optional<FrullaniForm> { return atan_form(get(p, "a"), get(p, "b")); },
      std::pair<std::string, std::string>{"a", "b"},
      {{{"a", 1}, {"b", 2}}, {{"a", 1}, {"b", 10}}, {{"a", 2}, {"b", 2}}},
  });

  // int ln[(p + q e^{-ax})/(p + q e^{-bx})] dx/x = ln(1 + q/p) ln(b/a)
  out.push_back({
      "R-3.2", "Ramanujan 3.2", {"a", "b", "p", "q"},
      {positive("a"), positive("b"), positive("p"),
       {"p + q > 0", [](const Params& p) { return get(p, "p") + get(p, "q") > 0.0; }}},
      EvalClass::SmoothDecay,
      [](const Params& prm) -> RealFunction {
        double a = get(prm, "a"), b = get(prm, "b"), p = get(prm, "p"), q = get(prm, "q");
        return [=](double x) {
          const double num = q * (em1(-a * x) - em1(-b * x));
          return std::log1p(num / (p + q * std::exp(-b * x))) / x;
        };
      },
      [](const Params& prm) {
        return std::log1p(get(prm, "q") / get(prm, "p")) * std::log(get(prm, "b") / get(prm, "a"));
      },
      nullptr,
      [](const Params& prm) -> std::optional<FrullaniForm> {
        double p = get(prm, "p"), q = get(prm, "q");
        return FrullaniForm{[p, q](double x) { return std::log(p + q * std::exp(-x)); }, get(prm, "a"),
                            get(prm, "b"), 1.0, std::log(p + q), std::log(p)};
      },
      std::pair<std::string, std::string>{"a", "b"},
      {{{"a", 1}, {"b", 2}, {"p", 1}, {"q", 1}},
       {{"a", 1}, {"b", 10}, {"p", 2}, {"q", 3}},
       {{"a", 2}, {"b", 2}, {"p", 1}, {"q", 1}}},
  });

  // int [((ax+p)/(ax+q))^n - ((bx+p)/(bx+q))^n] dx/x = (1 - p^n/q^n) ln(a/b)
  out.push_back({
      "R-3.3", "Ramanujan 3.3", {"a", "b", "n", "p", "q"},
      {{"a,b,p,q all positive",
        [](const Params& p) {
          return get(p, "a") > 0.0 && get(p, "b") > 0.0 && get(p, "p") > 0.0 && get(p, "q") > 0.0;
        }}},
      EvalClass::SmoothDecay,
      [](const Params& prm) -> RealFunction {
        double a = get(prm, "a"), b = get(prm, "b"), n = get(prm, "n"), p = get(prm, "p"), q = get(prm, "q");
        return [=](double x) {
          // ((sx+p)/(sx+q))^n = exp(n ln(1 + (p-q)/(sx+q)))
          const double la = n * std::log1p((p - q) / (a * x + q));
          const double lb = n * std::log1p((p - q) / (b * x + q));
          return std::exp(lb) * em1(la - lb) / x;
        };
      },
      [](const Params& prm) {
        return (1.0 - std::pow(get(prm, "p") / get(prm, "q"), get(prm, "n"))) *
               std::log(get(prm, "a") / get(prm, "b"));
      },
      nullptr,
      [](const Params& prm) -> std::optional<FrullaniForm> {
        double n = get(prm, "n"), p = get(prm, "p"), q = get(prm, "q");
        return FrullaniForm{[=](double x) { return std::pow((x + p) / (x + q), n); }, get(prm, "a"),
                            get(prm, "b"), 1.0, std::pow(p / q, n), 1.0};
      },
      std::pair<std::string, std::string>{"a", "b"},
      {{{"a", 1}, {"b", 2}, {"n", 2}, {"p", 1}, {"q", 2}},
       {{"a", 1}, {"b", 10}, {"n", 1}, {"p", 3}, {"q", 1}},
       {{"a", 1}, {"b", 2}, {"n", 0.5}, {"p", 2}, {"q", 5}},
       {{"a", 2}, {"b", 2}, {"n", 3}, {"p", 1}, {"q", 3}}},
  });

  auto ab_frequencies = [](const Params& p) { return std::vector<double>{get(p, "a"), get(p, "b")}; };

  // int (cos ax - cos bx) / x dx = ln(b/a)
  out.push_back({
      "R-3.4", "Ramanujan 3.4", {"a", "b"}, {positive("a"), positive("b")}, EvalClass::Oscillatory,
      [](const Params& prm) -> RealFunction {
        double a = get(prm, "a"), b = get(prm, "b");
        return [a, b](double x) { return (std::cos(a * x) - std::cos(b * x)) / x; };
      },
      [](const Params& p) { return std::log(get(p, "b") / get(p, "a")); },
      ab_frequencies, no_form,
      std::pair<std::string, std::string>{"a", "b"},
      {{{"a", 1}, {"b", 2}}, {{"a", 1}, {"b", 10}}, {{"a", 3}, {"b", 3}}},
  });

  // int sin((b-a)x/2) sin((b+a)x/2) dx/x = 1/2 ln(b/a)
  out.push_back({
      "R-3.5", "Ramanujan 3.5", {"a", "b"}, {positive("a"), positive("b")}, EvalClass::Oscillatory,
      [](const Params& prm) -> RealFunction {
        double a = get(prm, "a"), b = get(prm, "b");
        return [a, b](double x) { return std::sin((b - a) * x / 2) * std::sin((b + a) * x / 2) / x; };
      },
      [](const Params& p) { return 0.5 * std::log(get(p, "b") / get(p, "a")); },
      ab_frequencies, no_form,
      std::pair<std::string, std::string>{"a", "b"},
      {{{"a", 1}, {"b", 2}}, {{"a", 1}, {"b", 10}}, {{"a", 3}, {"b", 3}}},
  });

  // int sin px sin qx dx/x = 1/2 ln((p+q)/(p-q)); p > q > 0 is needed for the logarithm.
  out.push_back({
      "R-3.6", "Ramanujan 3.6", {"p", "q"},
      {positive("q"), {"p > q", [](const Params& p) { return get(p, "p") > get(p, "q"); }}},
      EvalClass::Oscillatory,
      [](const Params& prm) -> RealFunction {
        double p = get(prm, "p"), q = get(prm, "q");
        return [p, q](double x) { return std::sin(p * x) * std::sin(q * x) / x; };
      },
      [](const Params& prm) {
        double p = get(prm, "p"), q = get(prm, "q");
        return 0.5 * std::log((p + q) / (p - q));
      },
      [](const Params& prm) {
        double p = get(prm, "p"), q = get(prm, "q");
        return std::vector<double>{p - q, p + q};
      },
      no_form, std::nullopt,
      {{{"p", 3}, {"q", 1}}, {{"p", 2}, {"q", 1}}, {{"p", 11}, {"q", 9}}},
  });

  // int (e^{-ax} sin ax - e^{-bx} sin bx) / x dx = 0
  out.push_back({
      "R-3.8", "Ramanujan 3.8", {"a", "b"}, {positive("a"), positive("b")}, EvalClass::Oscillatory,
      [](const Params& prm) -> RealFunction {
        double a = get(prm, "a"), b = get(prm, "b");
        return [a, b](double x) {
          return (std::exp(-a * x) * std::sin(a * x) - std::exp(-b * x) * std::sin(b * x)) / x;
        };
      },
      [](const Params&) { return 0.0; },
      ab_frequencies,
      [](const Params& prm) -> std::optional<FrullaniForm> {
        return FrullaniForm{[](double x) { return std::exp(-x) * std::sin(x); }, get(prm, "a"), get(prm, "b"),
                            1.0, 0.0, 0.0};
      },
      std::pair<std::string, std::string>{"a", "b"},
      {{{"a", 1}, {"b", 2}}, {{"a", 1}, {"b", 10}}, {{"a", 3}, {"b", 3}}},
  });

  // int (e^{-ax} cos ax - e^{-bx} cos bx) / x dx = ln(b/a)
  out.push_back({
      "R-3.9", "Ramanujan 3.9", {"a", "b"}, {positive("a"), positive("b")}, EvalClass::SmoothDecay,
      [](const Params& prm) -> RealFunction {
        double a = get(prm, "a"), b = get(prm, "b");
        return [a, b](double x) {
          return (std::exp(-a * x) * std::cos(a * x) - std::exp(-b * x) * std::cos(b * x)) / x;
        };
      },
      [](const Params& p) { return std::log(get(p, "b") / get(p, "a")); },
      nullptr,
      [](const Params& prm) -> std::optional<FrullaniForm> {
        return FrullaniForm{[](double x) { return std::exp(-x) * std::cos(x); }, get(prm, "a"), get(prm, "b"),
                            1.0, 1.0, 0.0};
      },
      std::pair<std::string, std::string>{"a", "b"},
      {{{"a", 1}, {"b", 2}}, {{"a", 1}, {"b", 10}}, {{"a", 3}, {"b", 3}}},
  });

  return out;
}

std::string format_number(double v) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  (void)ec;
  return std::string(buf.data(), end);
}

}  // namespace

std::string_view to_string(EvalClass c) {
  switch (c) {
    case EvalClass::SmoothDecay: return "smooth-decay";
    case EvalClass::FiniteInterval: return "finite-interval";
    case EvalClass::Oscillatory: return "oscillatory";
  }
  return "?";
}

double class_tolerance(EvalClass c) { return c == EvalClass::Oscillatory ? 1e-4 : 1e-6; }

std::string CatalogEntry::constraint_prose() const {
  std::string s;
  for (const auto& c : constraints) {
    if (!s.empty()) s += ", ";
    s += c.prose;
  }
  return s;
}

const Catalog& Catalog::instance() {
  static const Catalog catalog;
  return catalog;
}

Catalog::Catalog() : entries_(build()) {}

std::vector<EntrySummary> Catalog::list_entries() const {
  std::vector<EntrySummary> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back({e.id, e.source, e.constraint_prose(), e.eval_class});
  return out;
}

bool Catalog::contains(std::string_view id) const {
  if (id == "R-3.7") return true;
  for (const auto& e : entries_)
    if (e.id == id) return true;
  return false;
}

const CatalogEntry& Catalog::find(std::string_view id) const {
  if (id == "R-3.7") id = "GR-4.324.2";
  for (const auto& e : entries_)
    if (e.id == id) return e;
  throw UnknownEntry(std::string(id));
}

std::pair<const CatalogEntry*, Params> Catalog::resolve(std::string_view id, const Params& params) const {
  if (id != "R-3.7") return {&find(id), params};
  // ln[(1 + 2n cos ax + n^2)/(1 + 2n cos bx + n^2)]: n, a, b play the roles of a, p, q
  static const std::array<std::pair<const char*, const char*>, 3> rename{
      {{"n", "a"}, {"a", "p"}, {"b", "q"}}};
  Params mapped;
  for (const auto& [key, value] : params) {
    std::string target = key;
    for (auto [from, to] : rename)
      if (key == from) target = to;
    mapped[target] = value;
  }
  return {&find("GR-4.324.2"), mapped};
}

Instance Catalog::instantiate(std::string_view id, const Params& params) const {
  auto [entry, p] = resolve(id, params);
  for (const auto& name : entry->parameters)
    if (!p.contains(name)) throw ConstraintViolation("missing parameter '" + name + "'");
  for (const auto& [name, value] : p) {
    if (std::find(entry->parameters.begin(), entry->parameters.end(), name) == entry->parameters.end())
      throw ConstraintViolation("unknown parameter '" + name + "' for " + entry->id);
    if (!std::isfinite(value)) throw ConstraintViolation("parameter '" + name + "' is not finite");
  }
  for (const auto& c : entry->constraints)
    if (!c.holds(p)) throw ConstraintViolation("constraint violated: " + c.prose);
  return {entry->integrand(p), entry->closed_form(p)};
}

VerificationRecord Catalog::verify_entry(std::string_view id, const Params& params,
                                         std::optional<double> tol) const {
  const auto started = std::chrono::steady_clock::now();
  auto [entry, p] = resolve(id, params);
  VerificationRecord rec;
  rec.entry_id = std::string(id);
  rec.params = params;
  const double tolerance = tol.value_or(class_tolerance(entry->eval_class));
  auto finish = [&]() -> VerificationRecord {
    rec.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return rec;
  };

  Instance inst;
  try {
    inst = instantiate(id, params);
  } catch (const ConstraintViolation& e) {
    rec.status = Status::ConstraintViolation;
    rec.detail = e.what();
    return finish();
  }
  rec.expected = inst.expected;

  const double oracle_tol = std::max(1e-2 * tolerance, 1e-13);
  try {
    QuadratureResult q;
    switch (entry->eval_class) {
      case EvalClass::SmoothDecay:
        q = integrate_decaying(inst.integrand, oracle_tol);
        break;
      case EvalClass::FiniteInterval:
        q = integrate_adaptive(inst.integrand, 0.0, 1.0, oracle_tol);
        break;
      case EvalClass::Oscillatory: {
        const auto freqs = entry->frequencies(p);
        q = integrate_frullani_oscillatory(inst.integrand, oscillatory_spec_for(freqs), oracle_tol);
        break;
      }
    }
    rec.numeric = q.value;
    rec.oracle_error = q.error_estimate;
    rec.abs_error = std::fabs(rec.numeric - rec.expected);
    if (!q.converged) {
      rec.status = Status::OracleFailed;
      rec.detail = q.diagnostic;
    } else {
      rec.status = rec.abs_error <= tolerance ? Status::Pass : Status::Fail;
    }
  } catch (const std::exception& e) {
    rec.status = Status::OracleFailed;
    rec.detail = e.what();
  }
  return finish();
}

std::vector<Params> Catalog::default_grid(std::string_view id) const {
  if (id != "R-3.7") return find(id).default_grid;
  // the alias reuses the grid under its own letters
  std::vector<Params> out;
  for (const auto& g : find("GR-4.324.2").default_grid)
    out.push_back({{"n", g.at("a")}, {"a", g.at("p")}, {"b", g.at("q")}});
  return out;
}

std::string format_params(const Params& params) {
  std::string s;
  for (const auto& [k, v] : params) {
    if (!s.empty()) s += ';';
    s += k + "=" + format_number(v);
  }
  return s;
}

}  // namespace frullani
