#pragma once

// Series machinery behind
//
//   int_0^inf [ln(1 + 2a cos px + a^2) - ln(1 + 2a cos qx + a^2)] dx/x
//       = 2 ln(q/p) ln(1+a)     for -1 < a <= 1
//       = 2 ln(q/p) ln(1+1/a)   for a < -1 or a >= 1
//
// obtained by expanding both logarithms in powers of A = 2a/(1+a^2),
// splitting the binomial expansion of cos^k by the parity of k and summing
// the central binomial series  sum C(2k,k) Q^k / k = -2 ln((1 + sqrt(1-4Q))/2).

#include <cstdint>
#include <utility>

namespace frullani::series {

/// Amplitude a together with the derived A = 2a/(1+a^2) and Q = A^2/4.
class SeriesParams {
public:
  explicit SeriesParams(double a);

  double a() const { return a_; }
  double A() const;
  double Q() const;

private:
  double a_;
};

/// sum_{k=1..K} (-1)^{k-1} z^k / k, for -1 < z <= 1.
double log_series_partial(double z, int terms);

/// 2^k for odd k, 2^k - C(k, k/2) for even k. Throws std::overflow_error
/// when the result does not fit in 63 bits.
std::int64_t parity_weight(int k);

/// -2 ln((1 + sqrt(1 - 4Q)) / 2), 0 <= Q <= 1/4.
double central_binomial_closed(double Q);

/// sum_{k=1..K} C(2k,k) Q^k / k with the term ratio Q (2k+1)(2k+2) / (k+1)^2.
double central_binomial_partial(double Q, int terms);

/// (1 - 4 a^2/(1+a^2)^2, ((a^2-1)/(a^2+1))^2), each evaluated in
/// double-double arithmetic and rounded once.
std::pair<double, double> discriminant_identity(double a);

/// Branch form: ln(1+a) when |a| <= 1, ln(1+1/a) otherwise. a = -1 throws.
double gr_4_324_2_closed(double a, double p, double q);

/// ln(q/p) [ln(1+A) - ln((1 + sqrt(1-4Q))/2)]; must agree with the branch form.
double gr_4_324_2_closed_via_discriminant(double a, double p, double q);

/// ln(q/p) * log_series_partial(A, K) + 1/2 ln(q/p) * central_binomial_partial(Q, K/2).
double gr_4_324_2_series(double a, double p, double q, int terms);

struct ImaginaryCheck {
  double real_part;
  double imag_part;
  double real_error;
  double imag_error;
  bool converged;
};

/// Oscillatory quadrature of int (cos px - cos qx)/x and int (sin px - sin qx)/x;
/// the first tends to ln(q/p), the second to 0.
ImaginaryCheck imaginary_exponential_check(double p, double q, double tol);

}  // namespace frullani::series
