#pragma once

// Truncated Glauber (h(1)) and Barut-Girardello (su(1,1), kappa = 1/2)
// coherent states.

#include <cmath>
#include <string>

#include "bosonalg/fock.hpp"
#include "bosonalg/special_functions.hpp"

namespace bosonalg::jc {

inline constexpr double kMaxTailMass = 1e-10;

namespace internal {

inline void check_tail_precondition(double mean_scale, std::size_t cutoff) {
  detail::require(3.0 * mean_scale < static_cast<double>(cutoff), "tail-guard",
                  "need 3|z|^2 < cutoff (|z|^2 = " + std::to_string(mean_scale) +
                      ", cutoff = " + std::to_string(cutoff) + ")");
}

inline void check_tail_mass(double tail) {
  if (tail >= kMaxTailMass) {
    throw guard_error("tail-mass", "truncated probability " + std::to_string(tail) +
                                       " exceeds 1e-10; cutoff too small");
  }
}

}  // namespace internal

/// e^{-|alpha|^2/2} alpha^n / sqrt(n!), truncated and renormalized.
inline fock::FockState glauber_state(complex alpha, std::size_t cutoff) {
  internal::check_tail_precondition(std::norm(alpha), cutoff);
  const auto n = static_cast<Eigen::Index>(cutoff);
  Vector amps(n);
  complex c = std::exp(-std::norm(alpha) / 2.0);
  for (Eigen::Index k = 0; k < n; ++k) {
    amps(k) = c;
    c *= alpha / std::sqrt(static_cast<double>(k + 1));
  }
  // Weights beyond the cutoff decrease monotonically once k > |alpha|^2.
  double tail = 0.0;
  for (Eigen::Index k = n; k < n + 100000; ++k) {
    const double w = std::norm(c);
    tail += w;
    if (w < 1e-30 * std::max(tail, 1e-300) || w == 0.0) break;
    c *= alpha / std::sqrt(static_cast<double>(k + 1));
  }
  internal::check_tail_mass(tail);
  return fock::FockState::normalized(std::move(amps));
}

/// I0(2|eta|)^{-1/2} eta^n / n!, truncated and renormalized.
inline fock::FockState barut_girardello_state(complex eta, std::size_t cutoff) {
  internal::check_tail_precondition(std::norm(eta), cutoff);
  const auto n = static_cast<Eigen::Index>(cutoff);
  const double norm_sq = bessel_i0(2.0 * std::abs(eta)).real();
  Vector amps(n);
  complex c = 1.0 / std::sqrt(norm_sq);
  for (Eigen::Index k = 0; k < n; ++k) {
    amps(k) = c;
    c *= eta / static_cast<double>(k + 1);
  }
  double tail = 0.0;
  for (Eigen::Index k = n; k < n + 100000; ++k) {
    const double w = std::norm(c);
    tail += w;
    if (w < 1e-30 * std::max(tail, 1e-300) || w == 0.0) break;
    c *= eta / static_cast<double>(k + 1);
  }
  internal::check_tail_mass(tail);
  return fock::FockState::normalized(std::move(amps));
}

}  // namespace bosonalg::jc
