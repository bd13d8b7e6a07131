#pragma once

// Harmonic-oscillator constructions inside su(1,1): the quadratic Schwinger
// realization from (q, p), observables linear in K+-, the inverse
// Holstein-Primakoff ladder, and the generalized bracket [q, p] = i K3.

#include <cmath>
#include <string>

#include "bosonalg/fock.hpp"

namespace bosonalg::oscillator {

using fock::SU11Generators;
using fock::TruncatedOperator;

/// q = (a^\dagger + a)/sqrt2, p = i(a^\dagger - a)/sqrt2.
struct OscillatorPair {
  TruncatedOperator q;
  TruncatedOperator p;

  std::size_t cutoff() const noexcept { return q.cutoff(); }
};

inline OscillatorPair pair_from_lowering(const TruncatedOperator& a) {
  const TruncatedOperator a_dag = a.adjoint();
  return {(a_dag + a) / std::sqrt(2.0), (a_dag - a) * (I / std::sqrt(2.0))};
}

inline OscillatorPair make_oscillator_pair(std::size_t cutoff) {
  return pair_from_lowering(fock::make_ladder(cutoff).a);
}

struct SchwingerGenerators {
  TruncatedOperator k1;
  TruncatedOperator k2;
  TruncatedOperator k3;
  TruncatedOperator k_plus;
  TruncatedOperator k_minus;
};

/// K1 = (p^2 - q^2)/4, K2 = (qp + pq)/4, K3 = (p^2 + q^2)/4, K+- = K1 +- i K2.
inline SchwingerGenerators schwinger_generators(std::size_t cutoff) {
  detail::require(cutoff >= 6, "invalid-cutoff",
                  "Schwinger generators need cutoff >= 6 (got " + std::to_string(cutoff) + ")");
  const OscillatorPair x = make_oscillator_pair(cutoff);
  const TruncatedOperator qq = x.q * x.q;
  const TruncatedOperator pp = x.p * x.p;
  TruncatedOperator k1 = (pp - qq) / 4.0;
  TruncatedOperator k2 = (x.q * x.p + x.p * x.q) / 4.0;
  TruncatedOperator k3 = (pp + qq) / 4.0;
  TruncatedOperator k_plus = k1 + I * k2;
  TruncatedOperator k_minus = k1 - I * k2;
  return {std::move(k1), std::move(k2), std::move(k3), std::move(k_plus), std::move(k_minus)};
}

enum class ObservableSource { linear_in_k, inverse_hp };

struct SU11Observables {
  TruncatedOperator Q;
  TruncatedOperator P;
  TruncatedOperator H;
  ObservableSource source;
  double kappa;
};

/// Q = (K+ + K-)/sqrt2, P = i(K+ - K-)/sqrt2, H = K3.
inline SU11Observables su11_observables_linear(const SU11Generators& g) {
  return {(g.k_plus + g.k_minus) / std::sqrt(2.0), (g.k_plus - g.k_minus) * (I / std::sqrt(2.0)),
          g.k_three, ObservableSource::linear_in_k, g.kappa.value()};
}

struct InverseHP {
  TruncatedOperator a;
  OscillatorPair pair;
  /// (P^2 + Q^2)/2
  TruncatedOperator H;
  double kappa;

  SU11Observables observables() const {
    return {pair.q, pair.p, H, ObservableSource::inverse_hp, kappa};
  }
};

/// Interior margin used when asserting H = K3 - kappa + 1/2.
inline constexpr std::size_t kInverseHpMargin = 4;

/// a = (K3 + kappa)^{-1/2} K-. The inverse square root is taken entrywise on
/// the diagonal. Throws guard_error if H = K3 - kappa + 1/2 fails on the
/// interior.
inline InverseHP inverse_hp_ladder(const SU11Generators& g) {
  const double kappa = g.kappa.value();
  const Matrix& k3 = g.k_three.matrix();
  Vector inv_root(k3.rows());
  for (Eigen::Index k = 0; k < k3.rows(); ++k) inv_root(k) = 1.0 / std::sqrt(k3(k, k).real() + kappa);
  TruncatedOperator a = TruncatedOperator::diagonal(inv_root) * g.k_minus;
  OscillatorPair pair = pair_from_lowering(a);
  TruncatedOperator h = (pair.p * pair.p + pair.q * pair.q) / 2.0;

  const auto shifted =
      g.k_three - (kappa - 0.5) * TruncatedOperator::identity(g.cutoff());
  const double defect = fock::interior_max_abs(h - shifted, kInverseHpMargin);
  if (defect > tolerance::derived) {
    throw guard_error("inverse-hp-energy", "H - (K3 - kappa + 1/2) = " + std::to_string(defect));
  }
  return {std::move(a), std::move(pair), std::move(h), kappa};
}

/// Interior max-abs of [q, p] - i(H/omega + (kappa - 1/2)) with
/// q = (K+ + K-)/2, p = i(K+ - K-)/2, H = omega (K3 - kappa + 1/2).
inline double generalized_bracket_check(const SU11Generators& g, double omega,
                                        std::size_t margin = 2) {
  detail::require(omega > 0.0, "invalid-frequency", "omega must be > 0");
  const double kappa = g.kappa.value();
  const auto id = TruncatedOperator::identity(g.cutoff());
  const TruncatedOperator q = (g.k_plus + g.k_minus) / 2.0;
  const TruncatedOperator p = (g.k_plus - g.k_minus) * (I / 2.0);
  const TruncatedOperator h = omega * (g.k_three - (kappa - 0.5) * id);
  const TruncatedOperator target = I * (h / omega + (kappa - 0.5) * id);
  return fock::interior_max_abs(fock::commutator(q, p) - target, margin);
}

}  // namespace bosonalg::oscillator
