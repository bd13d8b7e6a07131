#pragma once

// Lorentz-covariance checks: the 2x2 boost matrix and its origin in the
// fundamental su(1,1) representation, adjoint action of the HP boost on su(1,1)
// and on the Weyl-Heisenberg span, the boosted wave vector, and the so(1,2)
// Poisson brackets of polarization coordinates.

#include <unsupported/Eigen/MatrixFunctions>

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "bosonalg/fock.hpp"

namespace bosonalg::lorentz {

using Matrix2 = Eigen::Matrix2cd;
using Vec3 = Eigen::Vector3d;

struct BoostMatrix {
  double gamma;
  Matrix2 entries;
};

/// [[gamma, i s], [-i s, gamma]] with s = sqrt(gamma^2 - 1).
inline BoostMatrix boost_matrix(double gamma) {
  detail::require(gamma >= 1.0, "invalid-gamma", "gamma must be >= 1 (got " + std::to_string(gamma) + ")");
  const double s = std::sqrt(gamma * gamma - 1.0);
  Matrix2 m;
  m << gamma, I * s, -I * s, gamma;
  return {gamma, m};
}

/// Non-unitary 2x2 realization with k+ = [[0,1],[0,0]], k- = [[0,0],[-1,0]],
/// k3 = diag(1/2, -1/2). Then k1 = (k+ + k-)/2 = (i/2) sigma_y and
/// exp(i theta k1) is the boost matrix at gamma = cosh(theta/2).
struct Su11Fundamental {
  Matrix2 k1;
  Matrix2 k2;
  Matrix2 k3;

  Matrix2 k_plus() const { return k1 + I * k2; }
  Matrix2 k_minus() const { return k1 - I * k2; }
};

inline Su11Fundamental su11_fundamental() {
  Su11Fundamental f;
  f.k1 << 0.0, 0.5, -0.5, 0.0;
  f.k2 << 0.0, -0.5 * I, -0.5 * I, 0.0;
  f.k3 << 0.5, 0.0, 0.0, -0.5;
  return f;
}

/// exp(i theta (k+ + k-)/2) by a general matrix exponential.
inline Matrix2 exp_boost(double theta) {
  const Su11Fundamental f = su11_fundamental();
  const Matrix2 generator = (I * theta / 2.0) * (f.k_plus() + f.k_minus());
  return generator.exp();
}

enum class ProbeAlgebra { su11, weyl };

inline std::string to_string(ProbeAlgebra a) { return a == ProbeAlgebra::su11 ? "su11" : "weyl"; }

/// U = exp(i theta K1), K1 = (K+ + K-)/2, in the HP representation.
inline fock::TruncatedOperator boost_unitary(const fock::SU11Generators& g, double theta) {
  return fock::evolve_unitary(g.k_one(), -theta);
}

inline fock::TruncatedOperator conjugate(const fock::TruncatedOperator& u, const fock::TruncatedOperator& x) {
  return u * x * u.adjoint();
}

/// Span the conjugated probe is tested against.
inline std::vector<fock::TruncatedOperator> algebra_basis(ProbeAlgebra algebra,
                                                          const fock::SU11Generators& g) {
  const std::size_t n = g.cutoff();
  if (algebra == ProbeAlgebra::su11) {
    return {g.k_plus, g.k_minus, g.k_three, fock::TruncatedOperator::identity(n)};
  }
  const fock::Ladder l = fock::make_ladder(n);
  return {fock::TruncatedOperator::identity(n), l.a, l.a_dag, l.number};
}

/// Default probe: K3 for su(1,1), n for the Weyl-Heisenberg span.
inline fock::TruncatedOperator default_probe(ProbeAlgebra algebra, const fock::SU11Generators& g) {
  if (algebra == ProbeAlgebra::su11) return g.k_three;
  return fock::make_ladder(g.cutoff()).number;
}

inline constexpr std::size_t kMinSymmetryCutoff = 40;
inline constexpr std::size_t kMinSymmetryMargin = 10;

/// Relative distance of U g U^\dagger from the algebra's span on the interior
/// block. U is the HP boost at (kappa, cutoff).
inline double internal_symmetry_residual(double theta, ProbeAlgebra algebra, double kappa,
                                         std::size_t cutoff, std::size_t margin,
                                         const std::optional<fock::TruncatedOperator>& probe = std::nullopt) {
  detail::require(cutoff >= kMinSymmetryCutoff, "invalid-cutoff",
                  "internal-symmetry test needs cutoff >= 40 (got " + std::to_string(cutoff) + ")");
  detail::require(margin >= kMinSymmetryMargin, "invalid-margin",
                  "internal-symmetry test needs margin >= 10 (got " + std::to_string(margin) + ")");
  detail::require(margin < cutoff, "invalid-margin", "margin must be < cutoff");
  const fock::SU11Generators g = fock::make_su11_hp(kappa, cutoff);
  const fock::TruncatedOperator u = boost_unitary(g, theta);
  const fock::TruncatedOperator x = probe ? *probe : default_probe(algebra, g);
  return fock::span_residual(conjugate(u, x), algebra_basis(algebra, g), margin);
}

struct WaveVector {
  Vec3 k;
  Vec3 v;
  double c = 1.0;
};

/// k' = k + ((gamma^2 - 1)/gamma) w_k [1 + sqrt((gamma-1)/(gamma+1)) cos(k.v)] v / v^2
/// with w_k = c|k| and gamma = (1 - v^2/c^2)^{-1/2}. The cosine argument is
/// taken literally as k.v.
inline Vec3 boosted_wavevector(const WaveVector& w) {
  detail::require(w.c > 0.0, "invalid-speed", "c must be > 0");
  const double v2 = w.v.squaredNorm();
  detail::require(v2 < w.c * w.c, "superluminal", "|v| must be < c");
  if (v2 == 0.0) return w.k;
  const double gamma = 1.0 / std::sqrt(1.0 - v2 / (w.c * w.c));
  const double omega = w.c * w.k.norm();
  const double bracket = 1.0 + std::sqrt((gamma - 1.0) / (gamma + 1.0)) * std::cos(w.k.dot(w.v));
  return w.k + ((gamma * gamma - 1.0) / gamma) * omega * bracket * w.v / v2;
}

/// |{Rx,Ry} - Rz|, |{Rz,Rx} + Ry|, |{Rz,Ry} - Rx| with Rx = r cos(phi),
/// Ry = r sin(phi), Rz = r and {f,g} = f_r g_phi - f_phi g_r, derivatives by
/// central differences of step h.
inline std::array<double, 3> polarization_pb_residuals(double r, double phi, double h) {
  detail::require(r > 0.0, "invalid-radius", "r must be > 0");
  detail::require(h > 0.0, "invalid-step", "h must be > 0");
  using Fn = double (*)(double, double);
  const Fn rx = [](double rr, double pp) { return rr * std::cos(pp); };
  const Fn ry = [](double rr, double pp) { return rr * std::sin(pp); };
  const Fn rz = [](double rr, double) { return rr; };
  const auto d_r = [&](Fn f) { return (f(r + h, phi) - f(r - h, phi)) / (2.0 * h); };
  const auto d_phi = [&](Fn f) { return (f(r, phi + h) - f(r, phi - h)) / (2.0 * h); };
  const auto bracket = [&](Fn f, Fn g) { return d_r(f) * d_phi(g) - d_phi(f) * d_r(g); };
  return {std::abs(bracket(rx, ry) - rz(r, phi)), std::abs(bracket(rz, rx) + ry(r, phi)),
          std::abs(bracket(rz, ry) - rx(r, phi))};
}

/// Same residuals with analytic partial derivatives.
inline std::array<double, 3> polarization_pb_residuals_exact(double r, double phi) {
  detail::require(r > 0.0, "invalid-radius", "r must be > 0");
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  // (f_r, f_phi) for Rx, Ry, Rz
  const double rx_r = c, rx_p = -r * s;
  const double ry_r = s, ry_p = r * c;
  const double rz_r = 1.0, rz_p = 0.0;
  const double xy = rx_r * ry_p - rx_p * ry_r;
  const double zx = rz_r * rx_p - rz_p * rx_r;
  const double zy = rz_r * ry_p - rz_p * ry_r;
  return {std::abs(xy - r), std::abs(zx + r * s), std::abs(zy - r * c)};
}

}  // namespace bosonalg::lorentz
