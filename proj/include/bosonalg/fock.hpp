#pragma once

// Dense operator algebra on a Fock space truncated at occupation N-1.
//
// Truncation corrupts the highest occupation rows and columns of every
// product, so identities are checked on the interior block obtained by
// dropping `margin` trailing rows and columns.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "bosonalg/error.hpp"

namespace bosonalg {

using complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr complex I{0.0, 1.0};

/// Tolerance hierarchy shared by the test and verify suites.
namespace tolerance {
inline constexpr double constructor = 1e-12;
inline constexpr double derived = 1e-10;
inline constexpr double evolved = 1e-8;
}  // namespace tolerance

namespace fock {

/// Square complex matrix over the basis |0>..|N-1>. Composite spaces (tensor
/// products, atom x field) use the same type with `cutoff()` equal to the
/// total basis size.
class TruncatedOperator {
 public:
  explicit TruncatedOperator(Matrix entries) : entries_(std::move(entries)) {
    detail::require(entries_.rows() == entries_.cols(), "invalid-cutoff",
                    "operator matrix must be square");
    detail::require(entries_.rows() >= 2, "invalid-cutoff",
                    "cutoff must be >= 2 (got " + std::to_string(entries_.rows()) + ")");
  }

  static TruncatedOperator identity(std::size_t cutoff) {
    return TruncatedOperator(Matrix::Identity(to_index(cutoff), to_index(cutoff)));
  }
  static TruncatedOperator zero(std::size_t cutoff) {
    return TruncatedOperator(Matrix::Zero(to_index(cutoff), to_index(cutoff)));
  }
  static TruncatedOperator diagonal(const Vector& diag) {
    return TruncatedOperator(Matrix(diag.asDiagonal()));
  }

  std::size_t cutoff() const noexcept { return static_cast<std::size_t>(entries_.rows()); }
  const Matrix& matrix() const noexcept { return entries_; }
  complex operator()(Eigen::Index row, Eigen::Index col) const { return entries_(row, col); }

  TruncatedOperator adjoint() const { return TruncatedOperator(entries_.adjoint()); }

  bool is_hermitian(double tol) const {
    return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() <= tol;
  }

  TruncatedOperator& operator+=(const TruncatedOperator& rhs) {
    check_same_cutoff(rhs);
    entries_ += rhs.entries_;
    return *this;
  }
  TruncatedOperator& operator-=(const TruncatedOperator& rhs) {
    check_same_cutoff(rhs);
    entries_ -= rhs.entries_;
    return *this;
  }
  TruncatedOperator& operator*=(complex s) {
    entries_ *= s;
    return *this;
  }

  friend TruncatedOperator operator+(TruncatedOperator lhs, const TruncatedOperator& rhs) {
    return lhs += rhs;
  }
  friend TruncatedOperator operator-(TruncatedOperator lhs, const TruncatedOperator& rhs) {
    return lhs -= rhs;
  }
  friend TruncatedOperator operator-(TruncatedOperator op) { return op *= -1.0; }
  friend TruncatedOperator operator*(const TruncatedOperator& lhs, const TruncatedOperator& rhs) {
    lhs.check_same_cutoff(rhs);
    return TruncatedOperator(lhs.entries_ * rhs.entries_);
  }
  friend TruncatedOperator operator*(complex s, TruncatedOperator op) { return op *= s; }
  friend TruncatedOperator operator*(TruncatedOperator op, complex s) { return op *= s; }
  friend TruncatedOperator operator*(double s, TruncatedOperator op) { return op *= s; }
  friend TruncatedOperator operator/(TruncatedOperator op, double s) { return op *= 1.0 / s; }

  void check_same_cutoff(const TruncatedOperator& other) const {
    if (cutoff() != other.cutoff()) {
      throw precondition_error("cutoff-mismatch", "operands have cutoffs " +
                                                      std::to_string(cutoff()) + " and " +
                                                      std::to_string(other.cutoff()));
    }
  }

 private:
  static Eigen::Index to_index(std::size_t n) {
    detail::require(n >= 2, "invalid-cutoff", "cutoff must be >= 2 (got " + std::to_string(n) + ")");
    return static_cast<Eigen::Index>(n);
  }

  Matrix entries_;
};

/// Amplitude vector over a truncated basis. Only the `normalized` and `basis`
/// constructors guarantee unit norm.
class FockState {
 public:
  explicit FockState(Vector amplitudes) : amplitudes_(std::move(amplitudes)) {
    detail::require(amplitudes_.size() >= 1, "invalid-cutoff", "state must be non-empty");
  }

  static FockState normalized(Vector amplitudes) {
    const double norm = amplitudes.norm();
    if (!(norm > 0.0)) throw guard_error("zero-norm", "cannot normalize the zero vector");
    return FockState(amplitudes / norm);
  }
  static FockState basis(std::size_t n, std::size_t cutoff) {
    detail::require(n < cutoff, "invalid-cutoff",
                    "occupation " + std::to_string(n) + " outside cutoff " + std::to_string(cutoff));
    Vector v = Vector::Zero(static_cast<Eigen::Index>(cutoff));
    v(static_cast<Eigen::Index>(n)) = 1.0;
    return FockState(std::move(v));
  }

  std::size_t cutoff() const noexcept { return static_cast<std::size_t>(amplitudes_.size()); }
  const Vector& amplitudes() const noexcept { return amplitudes_; }
  complex operator[](Eigen::Index n) const { return amplitudes_(n); }
  double norm() const { return amplitudes_.norm(); }

 private:
  Vector amplitudes_;
};

struct Ladder {
  TruncatedOperator a;
  TruncatedOperator a_dag;
  TruncatedOperator number;
};

/// a|n> = sqrt(n)|n-1>, a_dag = a^\dagger. `number` is the exact diagonal
/// 0..N-1, equal to a_dag a up to rounding of sqrt(n)^2.
inline Ladder make_ladder(std::size_t cutoff) {
  detail::require(cutoff >= 2, "invalid-cutoff",
                  "cutoff must be >= 2 (got " + std::to_string(cutoff) + ")");
  const auto n = static_cast<Eigen::Index>(cutoff);
  Matrix a = Matrix::Zero(n, n);
  for (Eigen::Index k = 1; k < n; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
  TruncatedOperator lower(std::move(a));
  TruncatedOperator raise = lower.adjoint();
  Vector occupation(n);
  for (Eigen::Index k = 0; k < n; ++k) occupation(k) = static_cast<double>(k);
  TruncatedOperator number = TruncatedOperator::diagonal(occupation);
  return {std::move(lower), std::move(raise), std::move(number)};
}

/// Bargmann index of a positive discrete-series representation: 1/4 or a
/// positive half-integer.
class BargmannIndex {
 public:
  explicit BargmannIndex(double kappa) : value_(kappa) {
    const double twice = 2.0 * kappa;
    const bool half_integer = twice >= 1.0 - 1e-12 && std::abs(twice - std::round(twice)) < 1e-12;
    const bool anomalous = std::abs(kappa - 0.25) < 1e-12;
    if (!(half_integer || anomalous)) {
      throw precondition_error("invalid-representation",
                               "kappa must be 1/4 or a positive half-integer (got " +
                                   std::to_string(kappa) + ")");
    }
    value_ = anomalous ? 0.25 : std::round(twice) / 2.0;
  }

  double value() const noexcept { return value_; }
  double casimir() const noexcept { return value_ * (value_ - 1.0); }

 private:
  double value_;
};

struct SU11Generators {
  BargmannIndex kappa;
  TruncatedOperator k_plus;
  TruncatedOperator k_minus;
  TruncatedOperator k_three;

  std::size_t cutoff() const noexcept { return k_three.cutoff(); }
  /// (K+ + K-)/2
  TruncatedOperator k_one() const { return (k_plus + k_minus) / 2.0; }
  /// (K+ - K-)/(2i)
  TruncatedOperator k_two() const { return (k_plus - k_minus) * complex(0.0, -0.5); }
};

/// Holstein-Primakoff realization: K3 = n + kappa, K- = sqrt(n + 2 kappa) a,
/// K+ = K-^\dagger.
inline SU11Generators make_su11_hp(BargmannIndex kappa, std::size_t cutoff) {
  const Ladder ladder = make_ladder(cutoff);
  const auto n = static_cast<Eigen::Index>(cutoff);
  Vector shifted(n);
  Vector root(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    shifted(k) = static_cast<double>(k) + kappa.value();
    root(k) = std::sqrt(static_cast<double>(k) + 2.0 * kappa.value());
  }
  TruncatedOperator k_minus = TruncatedOperator::diagonal(root) * ladder.a;
  TruncatedOperator k_plus = k_minus.adjoint();
  return {kappa, std::move(k_plus), std::move(k_minus), TruncatedOperator::diagonal(shifted)};
}

inline SU11Generators make_su11_hp(double kappa, std::size_t cutoff) {
  return make_su11_hp(BargmannIndex(kappa), cutoff);
}

inline TruncatedOperator commutator(const TruncatedOperator& a, const TruncatedOperator& b) {
  return a * b - b * a;
}

/// K3^2 - (K+K- + K-K+)/2
inline TruncatedOperator casimir(const SU11Generators& g) {
  return g.k_three * g.k_three - (g.k_plus * g.k_minus + g.k_minus * g.k_plus) / 2.0;
}

/// Leading (N - margin) x (N - margin) block.
inline Matrix interior(const Matrix& m, std::size_t margin) {
  const auto n = static_cast<std::size_t>(m.rows());
  detail::require(margin < n, "invalid-margin",
                  "margin " + std::to_string(margin) + " must be < cutoff " + std::to_string(n));
  const auto keep = static_cast<Eigen::Index>(n - margin);
  return m.topLeftCorner(keep, keep);
}

inline Matrix interior(const TruncatedOperator& op, std::size_t margin) {
  return interior(op.matrix(), margin);
}

inline double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

inline double interior_max_abs(const TruncatedOperator& op, std::size_t margin) {
  return max_abs(interior(op, margin));
}

/// exp(-iHt) through the eigendecomposition of the Hermitian matrix H.
inline TruncatedOperator evolve_unitary(const TruncatedOperator& hamiltonian, double t) {
  const Matrix& h = hamiltonian.matrix();
  const double defect = max_abs(h - h.adjoint());
  if (defect > 1e-10) {
    throw precondition_error("hermiticity",
                             "generator deviates from Hermitian by " + std::to_string(defect));
  }
  const Matrix symmetric = (h + h.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(symmetric);
  const Eigen::VectorXd& energies = solver.eigenvalues();
  Vector phases(energies.size());
  for (Eigen::Index k = 0; k < energies.size(); ++k) phases(k) = std::exp(-I * energies(k) * t);
  const Matrix& v = solver.eigenvectors();
  return TruncatedOperator(v * phases.asDiagonal() * v.adjoint());
}

/// Relative Frobenius distance of X from the complex span of `basis`, all
/// restricted to the interior block. Zero for X = 0.
inline double span_residual(const TruncatedOperator& x, const std::vector<TruncatedOperator>& basis,
                            std::size_t margin) {
  detail::require(!basis.empty(), "empty-basis", "span basis must be non-empty");
  for (const auto& b : basis) x.check_same_cutoff(b);
  const Matrix target = interior(x, margin);
  const Eigen::Index dim = target.size();
  const double target_norm = target.norm();
  if (target_norm == 0.0) return 0.0;

  Matrix design(dim, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const Matrix block = interior(basis[j], margin);
    design.col(static_cast<Eigen::Index>(j)) = block.reshaped();
  }
  const Vector rhs = target.reshaped();
  const Vector coeffs = design.completeOrthogonalDecomposition().solve(rhs);
  return (rhs - design * coeffs).norm() / target_norm;
}

/// Kronecker product with row-major index fusion (i, j) -> i * dim(B) + j.
inline Matrix tensor_product(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline TruncatedOperator tensor_product(const TruncatedOperator& a, const TruncatedOperator& b) {
  return TruncatedOperator(tensor_product(a.matrix(), b.matrix()));
}

inline FockState apply(const TruncatedOperator& op, const FockState& state) {
  detail::require(op.cutoff() == state.cutoff(), "cutoff-mismatch",
                  "operator cutoff " + std::to_string(op.cutoff()) + " vs state cutoff " +
                      std::to_string(state.cutoff()));
  return FockState(op.matrix() * state.amplitudes());
}

/// <psi|op|psi>
inline complex expectation(const FockState& state, const TruncatedOperator& op) {
  detail::require(op.cutoff() == state.cutoff(), "cutoff-mismatch",
                  "operator cutoff " + std::to_string(op.cutoff()) + " vs state cutoff " +
                      std::to_string(state.cutoff()));
  return state.amplitudes().dot(op.matrix() * state.amplitudes());
}

}  // namespace fock
}  // namespace bosonalg
