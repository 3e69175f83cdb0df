#pragma once

// Adaptive quadrature used as the independent oracle for every closed form.
//
//  - integrate_adaptive: globally adaptive Gauss-Kronrod 7/15 on a finite
//    interval. The rule is open, so endpoints are never evaluated and
//    removable singularities at either end are harmless.
//  - integrate_decaying: (0, inf) via x = t / (1 - t).
//  - integrate_oscillatory_tail: [c, inf) for conditionally convergent
//    integrands, by half-period segments plus sequence acceleration.
//  - integrate_frullani_oscillatory: (0, c] head plus oscillatory tail.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>

#include "frullani/limit_probe.hpp"

namespace frullani {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t function_evaluations = 0;
  bool converged = false;
  std::string diagnostic;
};

struct AdaptiveOptions {
  std::size_t max_intervals = 4000;
};

struct OscillatorySpec {
  double tail_start;    // c > 0
  double half_period;   // h > 0
  int max_segments = 64;

  void validate() const;
};

/// The integrand returned a non-finite value at `abscissa`.
class IntegrandError : public std::runtime_error {
public:
  IntegrandError(double abscissa, double value);
  double abscissa() const noexcept { return abscissa_; }

private:
  double abscissa_;
};

QuadratureResult integrate_adaptive(const RealFunction& f, double lo, double hi, double tol,
                                    const AdaptiveOptions& opts = {});

QuadratureResult integrate_decaying(const RealFunction& f, double tol,
                                    const AdaptiveOptions& opts = {});

QuadratureResult integrate_oscillatory_tail(const RealFunction& f, const OscillatorySpec& spec,
                                            double tol);

QuadratureResult integrate_frullani_oscillatory(const RealFunction& g, const OscillatorySpec& spec,
                                                double tol);

/// Largest w such that every positive frequency is an integer multiple of w
/// (to 1e-9 relative). Falls back to the smallest frequency when the set is
/// not commensurate within a ratio of 1000.
double fundamental_frequency(std::span<const double> frequencies);

/// Tail start max(pi / min frequency, 1); half-period pi / fundamental, so
/// every listed frequency completes a whole number of half-cycles per segment.
OscillatorySpec oscillatory_spec_for(std::span<const double> frequencies, int max_segments = 64);

}  // namespace frullani
