#include "frullani/limit_probe.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace frullani {

namespace {

double aitken(double y0, double y1, double y2) {
  double d0 = y1 - y0;
  double d1 = y2 - y1;
  // only a contracting sequence has a limit to extrapolate to; an expanding
  // one would be sent to its antilimit
  if (!(std::fabs(d1) < std::fabs(d0))) return y2;
  double den = d1 - d0;
  if (den == 0.0) return y2;
  double correction = d1 * d1 / den;
  // ratio close to 1 or noise-dominated differences: keep the raw sample
  if (!std::isfinite(correction) || std::fabs(correction) > 1e3 * std::fabs(d1)) return y2;
  return y2 - correction;
}

double spread(const std::vector<ProbeSample>& t, std::size_t begin, std::size_t end) {
  auto [lo, hi] = std::minmax_element(t.begin() + begin, t.begin() + end,
                                      [](const auto& a, const auto& b) { return a.fx < b.fx; });
  return hi->fx - lo->fx;
}

ProbeOutcome run_probe(const RealFunction& f, const ProbeConfig& cfg, double ratio) {
  cfg.validate();
  ProbeOutcome out{verdict::NoLimit{0.0}, {}, false};
  auto& t = out.trail;
  t.reserve(static_cast<std::size_t>(cfg.max_samples));

  for (int k = 0; k < cfg.max_samples; ++k) {
    double x = cfg.x0 * std::pow(ratio, k);
    double y;
    try {
      y = f(x);
    } catch (const std::exception& e) {
      throw ProbeError(x, e.what());
    }
    if (!std::isfinite(y)) throw ProbeError(x, "non-finite function value");

    double ext = k >= 2 ? aitken(t[k - 2].fx, t[k - 1].fx, y) : y;
    t.push_back({x, y, ext});

    if (k >= 2 && std::fabs(y) > cfg.overflow_guard) {
      double a0 = std::fabs(t[k - 2].fx), a1 = std::fabs(t[k - 1].fx), a2 = std::fabs(y);
      bool same_sign = std::signbit(t[k - 2].fx) == std::signbit(y) &&
                       std::signbit(t[k - 1].fx) == std::signbit(y);
      if (a0 < a1 && a1 < a2 && same_sign) {
        out.verdict = verdict::Diverges{y > 0 ? 1 : -1};
        return out;
      }
    }

    if (k >= 2) {
      double scale = std::max(1.0, std::fabs(ext));
      double d1 = std::fabs(ext - t[k - 1].extrapolated);
      double d2 = std::fabs(t[k - 1].extrapolated - t[k - 2].extrapolated);
      if (d1 <= cfg.tolerance * scale && d2 <= cfg.tolerance * scale) {
        out.verdict = verdict::Finite{ext, std::max(d1, d2)};
        return out;
      }
    }
  }

  const std::size_t n = t.size();
  const std::size_t w = static_cast<std::size_t>(cfg.window);

  // steady monotone drift with non-shrinking steps
  bool monotone = true;
  int dir = 0;
  for (std::size_t i = n - 2 * w + 1; i < n; ++i) {
    double d = t[i].fx - t[i - 1].fx;
    int s = d > 0 ? 1 : (d < 0 ? -1 : 0);
    if (s == 0 || (dir != 0 && s != dir)) {
      monotone = false;
      break;
    }
    dir = s;
  }
  if (monotone) {
    double first = std::fabs(t[n - 2 * w + 1].fx - t[n - 2 * w].fx);
    double last = std::fabs(t[n - 1].fx - t[n - 2].fx);
    if (last >= 0.5 * first) {
      out.verdict = verdict::Diverges{dir};
      return out;
    }
  }

  double amp_last = spread(t, n - w, n);
  double amp_prev = spread(t, n - 2 * w, n - w);
  double magnitude = 0.0;
  for (std::size_t i = n - w; i < n; ++i) magnitude = std::max(magnitude, std::fabs(t[i].fx));
  if (amp_last > cfg.tolerance * std::max(1.0, magnitude) && amp_last >= 0.5 * amp_prev) {
    out.verdict = verdict::NoLimit{amp_last};
    return out;
  }

  double last_ext = t[n - 1].extrapolated;
  double drift = std::fabs(last_ext - t[n - 2].extrapolated);
  out.verdict = verdict::Finite{last_ext, std::max(amp_last, drift)};
  out.borderline = true;
  return out;
}

}  // namespace

void ProbeConfig::validate() const {
  if (!(x0 > 0.0) || !std::isfinite(x0)) throw std::invalid_argument("probe x0 must be positive");
  if (!(zero_ratio > 0.0 && zero_ratio < 1.0))
    throw std::invalid_argument("zero-side ratio must lie in (0,1)");
  if (!(infinity_ratio > 1.0) || !std::isfinite(infinity_ratio))
    throw std::invalid_argument("infinity-side ratio must exceed 1");
  if (window < 2) throw std::invalid_argument("probe window must be at least 2");
  if (max_samples < 2 * window + 1)
    throw std::invalid_argument("probe needs at least 2*window+1 samples");
  if (!(tolerance > 0.0)) throw std::invalid_argument("probe tolerance must be positive");
  if (!(overflow_guard > 0.0)) throw std::invalid_argument("overflow guard must be positive");
}

ProbeError::ProbeError(double x, const std::string& what)
    : std::runtime_error("evaluation failed at x=" + std::to_string(x) + ": " + what), x_(x) {}

ProbeOutcome probe_zero_plus(const RealFunction& f, const ProbeConfig& cfg) {
  return run_probe(f, cfg, cfg.zero_ratio);
}

ProbeOutcome probe_infinity(const RealFunction& f, const ProbeConfig& cfg) {
  return run_probe(f, cfg, cfg.infinity_ratio);
}

std::string_view tag(const LimitVerdict& v) {
  switch (v.index()) {
    case 0: return "Finite";
    case 1: return "Diverges";
    default: return "NoLimit";
  }
}

std::string describe(const LimitVerdict& v) {
  char buf[96];
  if (auto* f = std::get_if<verdict::Finite>(&v))
    std::snprintf(buf, sizeof buf, "Finite(%.17g, +/-%.3e)", f->value, f->uncertainty);
  else if (auto* d = std::get_if<verdict::Diverges>(&v))
    std::snprintf(buf, sizeof buf, "Diverges(%s)", d->direction > 0 ? "+inf" : "-inf");
  else
    std::snprintf(buf, sizeof buf, "NoLimit(amplitude %.3e)", std::get<verdict::NoLimit>(v).amplitude);
  return buf;
}

}  // namespace frullani
