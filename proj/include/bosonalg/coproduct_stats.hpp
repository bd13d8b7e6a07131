#pragma once

// Occupation statistics of n particles over m modes generated by the m-fold
// coproduct of a single-mode creator, for the Weyl algebra (a^\dagger) and the
// fundamental su(1,1) representation (K+ at kappa = 1/2).

#include <cmath>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "bosonalg/fock.hpp"

namespace bosonalg::stats {

enum class Algebra { weyl, su11_fundamental };

inline std::string to_string(Algebra algebra) {
  return algebra == Algebra::weyl ? "weyl" : "su11";
}

/// Ordered occupations (k_1, ..., k_m).
struct Composition {
  std::vector<unsigned> parts;

  unsigned total() const { return std::accumulate(parts.begin(), parts.end(), 0u); }
  std::size_t modes() const { return parts.size(); }

  auto operator<=>(const Composition&) const = default;
};

/// All compositions of n into m non-negative parts, lexicographically
/// decreasing.
inline std::vector<Composition> compositions(unsigned n, unsigned m) {
  bosonalg::detail::require(m >= 1, "invalid-modes", "mode count m must be >= 1");
  std::vector<Composition> out;
  std::vector<unsigned> parts(m, 0);
  // Fill slot `j` with every value from `left` down to 0; the last slot takes
  // whatever remains.
  std::function<void(unsigned, unsigned)> fill = [&](unsigned j, unsigned left) {
    if (j + 1 == m) {
      parts[j] = left;
      out.push_back({parts});
      return;
    }
    for (unsigned k = left + 1; k-- > 0;) {
      parts[j] = k;
      fill(j + 1, left - k);
    }
  };
  fill(0, n);
  return out;
}

inline double binomial(unsigned n, unsigned k) {
  if (k > n) return 0.0;
  return std::round(std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)));
}

struct OccupationDistribution {
  unsigned n = 0;
  unsigned m = 1;
  Algebra algebra = Algebra::weyl;
  /// Iterates in lexicographically decreasing order of the composition.
  std::map<Composition, double, std::greater<>> probs;

  double at(const std::vector<unsigned>& parts) const { return probs.at(Composition{parts}); }
  double total() const {
    double s = 0.0;
    for (const auto& [k, p] : probs) s += p;
    return s;
  }
};

namespace internal {

// n! / prod k_j!, exact integer arithmetic up to n = 20.
inline double multinomial_coefficient(const Composition& c) {
  const unsigned n = c.total();
  if (n <= 20) {
    unsigned __int128 value = 1;
    unsigned placed = 0;
    for (unsigned k : c.parts) {
      // Multiply by C(placed + k, k), exactly, one factor at a time.
      for (unsigned i = 1; i <= k; ++i) value = value * (placed + i) / i;
      placed += k;
    }
    return static_cast<double>(value);
  }
  double log_value = std::lgamma(n + 1.0);
  for (unsigned k : c.parts) log_value -= std::lgamma(k + 1.0);
  return std::exp(log_value);
}

}  // namespace internal

/// Multinomial law with equal cell probabilities 1/m.
inline OccupationDistribution dist_weyl(unsigned n, unsigned m) {
  OccupationDistribution d{n, m, Algebra::weyl, {}};
  for (auto& c : compositions(n, m)) {
    double p;
    if (n <= 20) {
      p = internal::multinomial_coefficient(c) * std::pow(static_cast<double>(m), -static_cast<double>(n));
    } else {
      double log_p = std::lgamma(n + 1.0) - n * std::log(static_cast<double>(m));
      for (unsigned k : c.parts) log_p -= std::lgamma(k + 1.0);
      p = std::exp(log_p);
    }
    d.probs.emplace(std::move(c), p);
  }
  return d;
}

/// Uniform law (m-1)! prod_{j<m} (n+j)^{-1} = 1 / C(n+m-1, m-1).
inline OccupationDistribution dist_su11(unsigned n, unsigned m) {
  OccupationDistribution d{n, m, Algebra::su11_fundamental, {}};
  double p = 1.0;
  for (unsigned j = 1; j < m; ++j) p *= static_cast<double>(j) / static_cast<double>(n + j);
  for (auto& c : compositions(n, m)) d.probs.emplace(std::move(c), p);
  return d;
}

inline OccupationDistribution closed_form(unsigned n, unsigned m, Algebra algebra) {
  return algebra == Algebra::weyl ? dist_weyl(n, m) : dist_su11(n, m);
}

/// Amplitudes over (n+1)^m product states; mode 1 is the most significant
/// mixed-radix digit.
struct MultiModeState {
  unsigned m = 1;
  unsigned per_mode_cutoff = 1;
  Algebra algebra = Algebra::weyl;
  Vector amplitudes;

  unsigned n() const { return per_mode_cutoff - 1; }

  std::size_t index(const std::vector<unsigned>& digits) const {
    std::size_t idx = 0;
    for (unsigned k : digits) idx = idx * per_mode_cutoff + k;
    return idx;
  }
  std::vector<unsigned> digits(std::size_t idx) const {
    std::vector<unsigned> out(m);
    for (unsigned j = m; j-- > 0;) {
      out[j] = static_cast<unsigned>(idx % per_mode_cutoff);
      idx /= per_mode_cutoff;
    }
    return out;
  }
};

inline constexpr double kMaxAmplitudes = 1e7;

/// Single-mode creator at cutoff n+1: a^\dagger (Weyl) or K+ at kappa = 1/2.
inline fock::TruncatedOperator single_mode_creator(Algebra algebra, std::size_t cutoff) {
  if (algebra == Algebra::weyl) return fock::make_ladder(cutoff).a_dag;
  return fock::make_su11_hp(0.5, cutoff).k_plus;
}

/// Brute-force oracle: apply Delta_m = sum_j 1 x .. x creator_j x .. x 1 to the
/// m-mode vacuum n times and normalize. Does not use the closed forms.
inline MultiModeState coproduct_state(unsigned n, unsigned m, Algebra algebra) {
  bosonalg::detail::require(m >= 1, "invalid-modes", "mode count m must be >= 1");
  const double size = std::pow(static_cast<double>(n + 1), static_cast<double>(m));
  bosonalg::detail::require(size <= kMaxAmplitudes, "memory-guard",
                            "(n+1)^m = " + std::to_string(size) + " exceeds 1e7 amplitudes");
  MultiModeState state{m, n + 1, algebra, Vector::Zero(static_cast<Eigen::Index>(size))};
  state.amplitudes(0) = 1.0;
  if (n == 0) return state;

  const fock::TruncatedOperator creator = single_mode_creator(algebra, n + 1);
  std::vector<std::size_t> strides(m);
  for (unsigned j = m, s = 1; j-- > 0; s *= n + 1) strides[j] = s;

  for (unsigned step = 0; step < n; ++step) {
    Vector next = Vector::Zero(state.amplitudes.size());
    for (Eigen::Index idx = 0; idx < state.amplitudes.size(); ++idx) {
      const complex c = state.amplitudes(idx);
      if (c == 0.0) continue;
      for (unsigned j = 0; j < m; ++j) {
        const auto k = static_cast<Eigen::Index>((idx / strides[j]) % (n + 1));
        // Raising the top occupation leaves the truncated space; the
        // creator's last column is zero.
        if (k + 1 > static_cast<Eigen::Index>(n)) continue;
        next(idx + static_cast<Eigen::Index>(strides[j])) += creator(k + 1, k) * c;
      }
    }
    state.amplitudes = std::move(next);
  }
  const double norm = state.amplitudes.norm();
  if (!(norm > 0.0)) throw guard_error("zero-norm", "coproduct state vanished");
  state.amplitudes /= norm;
  return state;
}

/// |amplitude|^2 on the total-n compositions, renormalized after checking
/// that nothing leaked off shell.
inline OccupationDistribution distribution_from_state(const MultiModeState& s) {
  const double norm_sq = s.amplitudes.squaredNorm();
  if (std::abs(norm_sq - 1.0) > 1e-9) {
    throw guard_error("norm-deficit", "state norm^2 = " + std::to_string(norm_sq));
  }
  const unsigned n = s.n();
  OccupationDistribution d{n, s.m, s.algebra, {}};
  double on_shell = 0.0;
  for (auto& c : compositions(n, s.m)) {
    const double p = std::norm(s.amplitudes(static_cast<Eigen::Index>(s.index(c.parts))));
    on_shell += p;
    d.probs.emplace(std::move(c), p);
  }
  const double off_shell = norm_sq - on_shell;
  if (std::abs(off_shell) > 1e-12) {
    throw guard_error("off-shell-mass", "mass outside total-n sector = " + std::to_string(off_shell));
  }
  for (auto& [c, p] : d.probs) p /= on_shell;
  return d;
}

/// Largest entrywise difference between two distributions on the same (n, m).
inline double max_abs_difference(const OccupationDistribution& a, const OccupationDistribution& b) {
  bosonalg::detail::require(a.n == b.n && a.m == b.m && a.probs.size() == b.probs.size(),
                            "shape-mismatch", "distributions have different (n, m)");
  double worst = 0.0;
  for (const auto& [c, p] : a.probs) worst = std::max(worst, std::abs(p - b.probs.at(c)));
  return worst;
}

}  // namespace bosonalg::stats
