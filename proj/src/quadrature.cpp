#include "frullani/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <vector>

namespace frullani {

namespace {

// Kronrod 15-point abscissas; odd indices are the 7-point Gauss nodes, the
// last entry is the centre.
constexpr std::array<double, 8> kXgk{
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk{
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg{
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Panel {
  double lo, hi, value, error;
  bool splittable;
  bool operator<(const Panel& o) const { return error < o.error; }
};

double eval_checked(const RealFunction& f, double x) {
  double y = f(x);
  if (!std::isfinite(y)) throw IntegrandError(x, y);
  return y;
}

Panel gauss_kronrod(const RealFunction& f, double lo, double hi) {
  const double centre = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);

  std::array<double, 7> f1{}, f2{};
  const double fc = eval_checked(f, centre);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  double abs_sum = std::fabs(kronrod);
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    f1[j] = eval_checked(f, centre - dx);
    f2[j] = eval_checked(f, centre + dx);
    const double pair = f1[j] + f2[j];
    kronrod += kWgk[j] * pair;
    abs_sum += kWgk[j] * (std::fabs(f1[j]) + std::fabs(f2[j]));
    if (j % 2 == 1) gauss += kWg[j / 2] * pair;
  }
  const double mean = 0.5 * kronrod;
  double asc = kWgk[7] * std::fabs(fc - mean);
  for (int j = 0; j < 7; ++j) asc += kWgk[j] * (std::fabs(f1[j] - mean) + std::fabs(f2[j] - mean));

  const double value = kronrod * half;
  const double resabs = abs_sum * std::fabs(half);
  const double resasc = asc * std::fabs(half);
  double err = std::fabs((kronrod - gauss) * half);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps))
    err = std::max(50.0 * kEps * resabs, err);

  // Bisection stops being meaningful once the midpoint is not representable
  // strictly inside the panel.
  const double mid = centre;
  const bool splittable = mid > lo && mid < hi && (hi - lo) > 64.0 * kEps * std::max(std::fabs(lo), std::fabs(hi));
  return {lo, hi, value, err, splittable};
}

double real_gcd(double a, double b) {
  if (a < b) std::swap(a, b);
  const double tol = 1e-9 * a;
  for (int i = 0; i < 128 && b > tol; ++i) {
    double r = std::fmod(a, b);
    if (r < tol || b - r < tol) return b;
    a = b;
    b = r;
  }
  return b > tol ? b : a;
}

// Polynomial extrapolation to t = 0 through (t[i], y[i]) by Neville's scheme.
double extrapolate_to_zero(std::vector<double> t, std::vector<double> y) {
  const std::size_t n = t.size();
  for (std::size_t m = 1; m < n; ++m)
    for (std::size_t i = 0; i + m < n; ++i)
      y[i] = (t[i + m] * y[i] - t[i] * y[i + 1]) / (t[i + m] - t[i]);
  return y[0];
}

}  // namespace

IntegrandError::IntegrandError(double abscissa, double value)
    : std::runtime_error("integrand is not finite (" + std::to_string(value) + ") at x=" +
                         std::to_string(abscissa)),
      abscissa_(abscissa) {}

void OscillatorySpec::validate() const {
  if (!(tail_start > 0.0) || !std::isfinite(tail_start))
    throw std::invalid_argument("oscillatory tail start must be positive");
  if (!(half_period > 0.0) || !std::isfinite(half_period))
    throw std::invalid_argument("oscillatory half-period must be positive");
  if (max_segments < 8) throw std::invalid_argument("oscillatory tail needs at least 8 segments");
}

QuadratureResult integrate_adaptive(const RealFunction& f, double lo, double hi, double tol,
                                    const AdaptiveOptions& opts) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
    throw std::invalid_argument("integrate_adaptive requires finite lo < hi");
  if (!(tol > 0.0)) throw std::invalid_argument("quadrature tolerance must be positive");

  QuadratureResult out;
  std::priority_queue<Panel> active;
  std::vector<Panel> retired;

  double total = 0.0, total_err = 0.0;
  auto push = [&](const Panel& p) {
    out.function_evaluations += 15;
    total += p.value;
    total_err += p.error;
    if (p.splittable)
      active.push(p);
    else
      retired.push_back(p);
  };
  push(gauss_kronrod(f, lo, hi));

  std::size_t intervals = 1;
  while (total_err > tol && !active.empty() && intervals < opts.max_intervals) {
    Panel worst = active.top();
    active.pop();
    total -= worst.value;
    total_err -= worst.error;
    const double mid = 0.5 * (worst.lo + worst.hi);
    push(gauss_kronrod(f, worst.lo, mid));
    push(gauss_kronrod(f, mid, worst.hi));
    ++intervals;
  }

  // Re-sum to shed the drift from incremental updates.
  total = 0.0;
  total_err = 0.0;
  for (const auto& p : retired) total += p.value, total_err += p.error;
  while (!active.empty()) {
    total += active.top().value;
    total_err += active.top().error;
    active.pop();
  }
  out.value = total;
  out.error_estimate = total_err;
  out.converged = total_err <= tol;
  if (!out.converged)
    out.diagnostic = intervals >= opts.max_intervals ? "subdivision limit reached"
                                                     : "roundoff limits further bisection";
  return out;
}

QuadratureResult integrate_decaying(const RealFunction& f, double tol, const AdaptiveOptions& opts) {
  auto mapped = [&f](double t) {
    const double s = 1.0 - t;
    if (s <= 0.0) return 0.0;
    const double x = t / s;
    const double y = f(x);
    if (!std::isfinite(y)) throw IntegrandError(x, y);
    return y / (s * s);
  };
  return integrate_adaptive(mapped, 0.0, 1.0, tol, opts);
}

QuadratureResult integrate_oscillatory_tail(const RealFunction& f, const OscillatorySpec& spec,
                                            double tol) {
  spec.validate();
  if (!(tol > 0.0)) throw std::invalid_argument("quadrature tolerance must be positive");

  const int max_segments = spec.max_segments;
  const double c = spec.tail_start;
  const double h = spec.half_period;
  const double segment_tol = tol / (4.0 * max_segments);

  QuadratureResult out;
  std::vector<double> segments;
  std::vector<double> partial{0.0};
  double segment_error = 0.0;

  auto extend_to = [&](int n) {
    while (static_cast<int>(segments.size()) < n) {
      const double j = static_cast<double>(segments.size());
      auto r = integrate_adaptive(f, c + j * h, c + (j + 1.0) * h, segment_tol);
      out.function_evaluations += r.function_evaluations;
      segment_error += r.error_estimate;
      segments.push_back(r.value);
      partial.push_back(partial.back() + r.value);
    }
  };

  // At whole periods of the fundamental every harmonic sits at the same
  // phase, so the missing tail is a smooth series in 1/X. Extrapolate the
  // partial sums at six period boundaries spread over the upper half.
  auto accelerate = [&](int n) {
    const int periods = n / 2;
    const int stride = std::max(1, periods / 12);
    std::vector<double> t, y;
    for (int k = 0; k < 6 && periods - k * stride >= 1; ++k) {
      const int m = 2 * (periods - k * stride);
      t.push_back(1.0 / (c + m * h));
      y.push_back(partial[m]);
    }
    return extrapolate_to_zero(std::move(t), std::move(y));
  };

  const int first = std::min(16, max_segments);
  extend_to(first);
  double previous = accelerate(first);
  double diff = std::numeric_limits<double>::infinity();
  int n = first;
  while (n < max_segments) {
    n = std::min(n + 8, max_segments);
    extend_to(n);
    const double current = accelerate(n);
    diff = std::fabs(current - previous);
    previous = current;
    if (diff + segment_error <= tol) break;
  }

  out.value = previous;
  out.error_estimate = diff + segment_error;

  const int quarter = std::max(1, n / 4);
  double head_max = 0.0, tail_max = 0.0;
  for (int j = 0; j < quarter; ++j) head_max = std::max(head_max, std::fabs(segments[j]));
  for (int j = n - quarter; j < n; ++j) tail_max = std::max(tail_max, std::fabs(segments[j]));
  const bool decays = tail_max <= 0.75 * head_max || tail_max <= segment_tol;

  out.converged = decays && out.error_estimate <= tol;
  if (!decays)
    out.diagnostic = "segment integrals do not decay; integral is not convergent in the improper sense";
  else if (!out.converged)
    out.diagnostic = "accelerated tail did not settle within " + std::to_string(max_segments) + " segments";
  return out;
}

QuadratureResult integrate_frullani_oscillatory(const RealFunction& g, const OscillatorySpec& spec,
                                                double tol) {
  spec.validate();
  auto head = integrate_adaptive(g, 0.0, spec.tail_start, 0.5 * tol);
  auto tail = integrate_oscillatory_tail(g, spec, 0.5 * tol);
  QuadratureResult out;
  out.value = head.value + tail.value;
  out.error_estimate = head.error_estimate + tail.error_estimate;
  out.function_evaluations = head.function_evaluations + tail.function_evaluations;
  out.converged = head.converged && tail.converged;
  if (!head.converged) out.diagnostic = "head: " + head.diagnostic;
  if (!tail.converged) out.diagnostic += (out.diagnostic.empty() ? "tail: " : "; tail: ") + tail.diagnostic;
  return out;
}

double fundamental_frequency(std::span<const double> frequencies) {
  double g = 0.0, lowest = std::numeric_limits<double>::infinity(), highest = 0.0;
  for (double w : frequencies) {
    if (!(w > 0.0) || !std::isfinite(w)) continue;
    lowest = std::min(lowest, w);
    highest = std::max(highest, w);
    g = g == 0.0 ? w : real_gcd(g, w);
  }
  if (g == 0.0) throw std::invalid_argument("at least one positive frequency is required");
  if (g < highest / 1000.0) return lowest;
  return g;
}

OscillatorySpec oscillatory_spec_for(std::span<const double> frequencies, int max_segments) {
  const double fundamental = fundamental_frequency(frequencies);
  double lowest = std::numeric_limits<double>::infinity();
  for (double w : frequencies)
    if (w > 0.0) lowest = std::min(lowest, w);
  return {std::max(std::numbers::pi / lowest, 1.0), std::numbers::pi / fundamental, max_segments};
}

}  // namespace frullani
