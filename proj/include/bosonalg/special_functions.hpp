#pragma once

#include <cmath>
#include <complex>
#include <string>

#include "bosonalg/error.hpp"

namespace bosonalg::jc {

using complex = std::complex<double>;

inline constexpr double kBesselArgumentLimit = 700.0;

/// Modified Bessel function I0 by its power series sum (z/2)^{2k} / (k!)^2.
inline complex bessel_i0(complex z) {
  if (!(std::abs(z) < kBesselArgumentLimit)) {
    throw guard_error("overflow-guard", "|z| = " + std::to_string(std::abs(z)) + " must be < 700");
  }
  const complex quarter_sq = z * z / 4.0;
  complex term = 1.0;
  complex sum = 1.0;
  for (int k = 1; k < 100000; ++k) {
    term *= quarter_sq / (static_cast<double>(k) * static_cast<double>(k));
    sum += term;
    if (term == 0.0 || std::abs(term) < 1e-17 * std::abs(sum)) return sum;
  }
  throw guard_error("non-convergent", "I0 series did not converge");
}

struct SeriesResult {
  double value = 0.0;
  /// Number of summed terms (n = 0 .. terms-1).
  int terms = 0;
  /// Majorant of the neglected tail.
  double tail_bound = 0.0;
};

/// Partial sum of sum_n |zeta|^{2n} / (n!)^mu * cos(2 lam n^tau t), stopped
/// once the geometric majorant of the remaining terms (cosine bounded by 1)
/// falls below `tol`.
inline SeriesResult series_S(double tau, double mu, complex zeta, double lam, double t, double tol) {
  detail::require(mu >= 1.0, "non-convergent", "mu must be >= 1 (got " + std::to_string(mu) + ")");
  detail::require(tol > 0.0, "invalid-tolerance", "tol must be > 0");
  const double x = std::norm(zeta);
  if (!(x < kBesselArgumentLimit)) {
    throw guard_error("overflow-guard", "|zeta|^2 = " + std::to_string(x) + " too large");
  }
  SeriesResult out;
  double weight = 1.0;
  for (int n = 0; n < 100000; ++n) {
    const double phase = 2.0 * lam * std::pow(static_cast<double>(n), tau) * t;
    out.value += weight * std::cos(phase);
    out.terms = n + 1;
    const double next = weight * x / std::pow(n + 1.0, mu);
    // Term ratios x / (k+1)^mu decrease in k, so the tail after `next` is a
    // geometric series with ratio at most x / (n+2)^mu.
    const double ratio = x / std::pow(n + 2.0, mu);
    if (ratio < 1.0) {
      const double tail = next / (1.0 - ratio);
      if (tail < tol) {
        out.tail_bound = tail;
        return out;
      }
    }
    weight = next;
  }
  throw guard_error("non-convergent", "series did not reach tolerance");
}

}  // namespace bosonalg::jc
