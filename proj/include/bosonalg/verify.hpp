#pragma once

// Invariant suite behind the `verify` subcommand. Every check is a pure
// function of pinned sizes and seeds, so reports are byte-reproducible.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "bosonalg/coproduct_stats.hpp"
#include "bosonalg/format.hpp"
#include "bosonalg/jaynes_cummings.hpp"
#include "bosonalg/lorentz.hpp"
#include "bosonalg/su11_oscillator.hpp"

namespace bosonalg::verify {

using fock::TruncatedOperator;

enum class Relation { less, less_equal, greater, within };

struct Check {
  std::string module;
  std::string name;
  double value;
  Relation relation;
  double lo;
  /// Upper end, used by `within` only.
  double hi = 0.0;

  bool passed() const {
    switch (relation) {
      case Relation::less: return value < lo;
      case Relation::less_equal: return value <= lo;
      case Relation::greater: return value > lo;
      case Relation::within: return value >= lo && value <= hi;
    }
    return false;
  }

  std::string bound() const {
    switch (relation) {
      case Relation::less: return "<" + io::format_double(lo);
      case Relation::less_equal: return "<=" + io::format_double(lo);
      case Relation::greater: return ">" + io::format_double(lo);
      case Relation::within: return "[" + io::format_double(lo) + ";" + io::format_double(hi) + "]";
    }
    return "";
  }
};

struct Report {
  std::vector<Check> checks;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed(); });
  }
  std::size_t failures() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed(); }));
  }
};

inline void write_csv(std::ostream& out, const Report& r) {
  out << "module,check,value,bound,status\n";
  for (const Check& c : r.checks) {
    out << c.module << ',' << c.name << ',' << io::format_double(c.value) << ',' << c.bound() << ','
        << (c.passed() ? "PASS" : "FAIL") << '\n';
  }
}

// ---------------------------------------------------------------- fock-core

inline double su11_relations_residual(double kappa, std::size_t cutoff, std::size_t margin) {
  const fock::SU11Generators g = fock::make_su11_hp(kappa, cutoff);
  return std::max({fock::interior_max_abs(fock::commutator(g.k_three, g.k_plus) - g.k_plus, margin),
                   fock::interior_max_abs(fock::commutator(g.k_three, g.k_minus) + g.k_minus, margin),
                   fock::interior_max_abs(fock::commutator(g.k_minus, g.k_plus) - 2.0 * g.k_three, margin)});
}

inline double casimir_residual(double kappa, std::size_t cutoff, std::size_t margin) {
  const fock::SU11Generators g = fock::make_su11_hp(kappa, cutoff);
  return fock::interior_max_abs(
      fock::casimir(g) - g.kappa.casimir() * TruncatedOperator::identity(cutoff), margin);
}

inline TruncatedOperator seeded_hermitian(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> d;
  Matrix a(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) = complex(d(rng), d(rng));
  return TruncatedOperator((a + a.adjoint()) / 2.0);
}

inline double unitarity_defect(const TruncatedOperator& h, double t) {
  const TruncatedOperator u = fock::evolve_unitary(h, t);
  return fock::max_abs((u.adjoint() * u - TruncatedOperator::identity(u.cutoff())).matrix());
}

inline double adjoint_mismatch(double kappa, std::size_t cutoff) {
  const fock::SU11Generators g = fock::make_su11_hp(kappa, cutoff);
  return fock::max_abs((g.k_plus.adjoint() - g.k_minus).matrix());
}

inline double span_scale_defect() {
  const fock::SU11Generators g = fock::make_su11_hp(0.5, 40);
  const TruncatedOperator x = lorentz::conjugate(lorentz::boost_unitary(g, 0.5), fock::make_ladder(40).number);
  const auto basis = lorentz::algebra_basis(lorentz::ProbeAlgebra::weyl, g);
  const double base = fock::span_residual(x, basis, 10);
  double worst = 0.0;
  for (complex c : {complex(-3.0), complex(1e-3), complex(1e5), complex(0.0, 2.0)}) {
    worst = std::max(worst, std::abs(fock::span_residual(c * x, basis, 10) - base));
  }
  return worst;
}

// ----------------------------------------------------------- coproduct-stats

inline double stats_oracle_equivalence(unsigned n_max, unsigned m_max) {
  double worst = 0.0;
  for (unsigned n = 0; n <= n_max; ++n)
    for (unsigned m = 2; m <= m_max; ++m)
      for (auto a : {stats::Algebra::weyl, stats::Algebra::su11_fundamental}) {
        worst = std::max(worst, stats::max_abs_difference(stats::distribution_from_state(stats::coproduct_state(n, m, a)),
                                                          stats::closed_form(n, m, a)));
      }
  return worst;
}

inline double su11_uniformity_spread(unsigned n_max, unsigned m_max) {
  double worst = 0.0;
  for (unsigned n = 0; n <= n_max; ++n)
    for (unsigned m = 1; m <= m_max; ++m) {
      double lo = 1.0, hi = 0.0;
      for (const auto& [c, p] : stats::dist_su11(n, m).probs) {
        lo = std::min(lo, p);
        hi = std::max(hi, p);
      }
      worst = std::max(worst, hi - lo);
    }
  return worst;
}

/// Relative deviation of dist_weyl from lgamma-based multinomial evaluation.
inline double weyl_multinomial_defect(unsigned n_max, unsigned m_max) {
  double worst = 0.0;
  for (unsigned n = 0; n <= n_max; ++n)
    for (unsigned m = 1; m <= m_max; ++m)
      for (const auto& [c, p] : stats::dist_weyl(n, m).probs) {
        double log_p = std::lgamma(n + 1.0) - n * std::log(static_cast<double>(m));
        for (unsigned k : c.parts) log_p -= std::lgamma(k + 1.0);
        const double q = std::exp(log_p);
        worst = std::max(worst, std::abs(p - q) / q);
      }
  return worst;
}

inline double exchangeability_defect(unsigned n_max, unsigned m_max) {
  double worst = 0.0;
  for (unsigned n = 0; n <= n_max; ++n)
    for (unsigned m = 2; m <= m_max; ++m)
      for (const auto& d : {stats::dist_weyl(n, m), stats::dist_su11(n, m)})
        for (const auto& [c, p] : d.probs) {
          std::vector<unsigned> perm = c.parts;
          std::sort(perm.begin(), perm.end());
          do {
            worst = std::max(worst, std::abs(d.at(perm) - p));
          } while (std::next_permutation(perm.begin(), perm.end()));
        }
  return worst;
}

inline double marginal_defect(unsigned n_max, unsigned m_max) {
  double worst = 0.0;
  for (unsigned n = 0; n <= n_max; ++n) {
    for (unsigned m = 2; m <= m_max; ++m) {
      std::vector<double> marginal(n + 1, 0.0);
      for (const auto& [c, p] : stats::dist_weyl(n, m).probs) marginal[c.parts[0]] += p;
      for (unsigned k = 0; k <= n; ++k) {
        const double q = std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)) *
                         std::pow(1.0 / m, k) * std::pow(1.0 - 1.0 / m, n - k);
        worst = std::max(worst, std::abs(marginal[k] - q));
      }
    }
    std::vector<double> marginal(n + 1, 0.0);
    for (const auto& [c, p] : stats::dist_su11(n, 2).probs) marginal[c.parts[0]] += p;
    for (double v : marginal) worst = std::max(worst, std::abs(v - 1.0 / (n + 1)));
  }
  return worst;
}

// ----------------------------------------------------------- su11-oscillator

inline double schwinger_relations_residual(std::size_t cutoff, std::size_t margin) {
  const oscillator::SchwingerGenerators s = oscillator::schwinger_generators(cutoff);
  return std::max({fock::interior_max_abs(fock::commutator(s.k1, s.k2) + I * s.k3, margin),
                   fock::interior_max_abs(fock::commutator(s.k2, s.k3) - I * s.k1, margin),
                   fock::interior_max_abs(fock::commutator(s.k3, s.k1) - I * s.k2, margin)});
}

inline double schwinger_casimir_residual(std::size_t cutoff, std::size_t margin) {
  const oscillator::SchwingerGenerators s = oscillator::schwinger_generators(cutoff);
  const TruncatedOperator c = s.k3 * s.k3 - s.k1 * s.k1 - s.k2 * s.k2;
  return fock::interior_max_abs(c + (3.0 / 16.0) * TruncatedOperator::identity(cutoff), margin);
}

inline double parity_sector_defect(std::size_t cutoff) {
  const oscillator::SchwingerGenerators s = oscillator::schwinger_generators(cutoff);
  double worst = 0.0;
  for (Eigen::Index k = 0; k + 2 < static_cast<Eigen::Index>(cutoff); ++k) {
    const double expected = k % 2 == 0 ? static_cast<double>(k / 2) + 0.25 : static_cast<double>((k - 1) / 2) + 0.75;
    worst = std::max(worst, std::abs(s.k3(k, k) - expected));
  }
  return worst;
}

inline double oscillator_spectrum_defect(std::size_t cutoff) {
  const oscillator::SU11Observables o = oscillator::su11_observables_linear(fock::make_su11_hp(0.5, cutoff));
  double worst = 0.0;
  for (Eigen::Index k = 0; k < static_cast<Eigen::Index>(cutoff); ++k) {
    worst = std::max(worst, std::abs(o.H(k, k) - (static_cast<double>(k) + 0.5)));
  }
  return worst;
}

inline double heisenberg_pair_residual(double kappa, std::size_t cutoff, std::size_t margin) {
  const oscillator::SU11Observables o = oscillator::su11_observables_linear(fock::make_su11_hp(kappa, cutoff));
  return std::max(fock::interior_max_abs(fock::commutator(o.H, o.Q) + I * o.P, margin),
                  fock::interior_max_abs(fock::commutator(o.H, o.P) - I * o.Q, margin));
}

inline double linear_qp_residual(double kappa, std::size_t cutoff, std::size_t margin) {
  const fock::SU11Generators g = fock::make_su11_hp(kappa, cutoff);
  const oscillator::SU11Observables o = oscillator::su11_observables_linear(g);
  return fock::interior_max_abs(fock::commutator(o.Q, o.P) - 2.0 * I * g.k_three, margin);
}

inline double linear_energy_residual(double kappa, std::size_t cutoff, std::size_t margin) {
  const fock::SU11Generators g = fock::make_su11_hp(kappa, cutoff);
  const oscillator::SU11Observables o = oscillator::su11_observables_linear(g);
  const TruncatedOperator target = g.k_three * g.k_three - g.kappa.casimir() * TruncatedOperator::identity(cutoff);
  return fock::interior_max_abs((o.P * o.P + o.Q * o.Q) / 2.0 - target, margin);
}

inline double inverse_hp_canonical_residual(double kappa, std::size_t cutoff) {
  const oscillator::InverseHP inv = oscillator::inverse_hp_ladder(fock::make_su11_hp(kappa, cutoff));
  return fock::interior_max_abs(
      fock::commutator(inv.pair.q, inv.pair.p) - I * TruncatedOperator::identity(cutoff),
      oscillator::kInverseHpMargin);
}

// ------------------------------------------------------------------- lorentz

inline double boost_exp_defect(int samples, double theta_max) {
  double worst = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double theta = theta_max * k / (samples - 1);
    worst = std::max(worst, (lorentz::exp_boost(theta) - lorentz::boost_matrix(std::cosh(theta / 2)).entries)
                                .cwiseAbs()
                                .maxCoeff());
  }
  return worst;
}

inline double group_law_defect(unsigned seed, int trials) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.5);
  double worst = 0.0;
  for (int i = 0; i < trials; ++i) {
    const double a = u(rng), b = u(rng);
    worst = std::max(worst, (lorentz::boost_matrix(std::cosh((a + b) / 2)).entries -
                             lorentz::exp_boost(a) * lorentz::exp_boost(b))
                                .cwiseAbs()
                                .maxCoeff());
  }
  return worst;
}

struct BoostProperties {
  double det_defect = 0.0;
  double hermitian_defect = 0.0;
  double orthogonal_defect = 0.0;
  /// Diagonal entry of M M^dagger - 1 at gamma = 2.
  double unitarity_witness = 0.0;
};

inline BoostProperties boost_properties() {
  BoostProperties p;
  for (double gamma : {1.0, 1.25, std::sqrt(2.0), 2.0, 3.0}) {
    const lorentz::Matrix2 m = lorentz::boost_matrix(gamma).entries;
    p.det_defect = std::max(p.det_defect, std::abs(m.determinant() - 1.0));
    p.hermitian_defect = std::max(p.hermitian_defect, (m - m.adjoint()).cwiseAbs().maxCoeff());
    p.orthogonal_defect = std::max(p.orthogonal_defect,
                                   (m * m.transpose() - lorentz::Matrix2::Identity()).cwiseAbs().maxCoeff());
  }
  const lorentz::Matrix2 m = lorentz::boost_matrix(2.0).entries;
  p.unitarity_witness = std::abs((m * m.adjoint() - lorentz::Matrix2::Identity())(0, 0));
  return p;
}

inline const std::vector<std::size_t>& symmetry_margins() {
  static const std::vector<std::size_t> margins{10, 15, 20, 25, 30, 35, 40};
  return margins;
}

/// Largest increase of the su11 residual between consecutive margins.
inline double su11_margin_monotonicity(double theta, std::size_t cutoff) {
  double worst = -1.0;
  double previous = 0.0;
  bool first = true;
  for (std::size_t m : symmetry_margins()) {
    const double r = lorentz::internal_symmetry_residual(theta, lorentz::ProbeAlgebra::su11, 0.5, cutoff, m);
    if (!first) worst = std::max(worst, r - previous);
    previous = r;
    first = false;
  }
  return worst;
}

inline double weyl_margin_floor(double theta, std::size_t cutoff) {
  double lo = 1.0;
  for (std::size_t m : symmetry_margins()) {
    lo = std::min(lo, lorentz::internal_symmetry_residual(theta, lorentz::ProbeAlgebra::weyl, 0.5, cutoff, m));
  }
  return lo;
}

inline std::vector<TruncatedOperator> symmetry_probes(const fock::SU11Generators& g, unsigned seed, int random) {
  std::vector<TruncatedOperator> out{g.k_three, fock::make_ladder(g.cutoff()).number, g.k_one(), g.k_two()};
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> d;
  for (int i = 0; i < random; ++i) out.push_back(d(rng) * g.k_one() + d(rng) * g.k_two() + d(rng) * g.k_three);
  return out;
}

inline double conjugation_hermiticity_defect(double theta, std::size_t cutoff) {
  const fock::SU11Generators g = fock::make_su11_hp(0.5, cutoff);
  const TruncatedOperator u = lorentz::boost_unitary(g, theta);
  double worst = 0.0;
  for (const auto& x : symmetry_probes(g, 17, 4)) {
    const TruncatedOperator y = lorentz::conjugate(u, x);
    worst = std::max(worst, fock::max_abs((y - y.adjoint()).matrix()));
  }
  return worst;
}

/// su11 residual of randomized Hermitian su(1,1) elements.
inline double random_su11_probe_residual(double theta, std::size_t cutoff, std::size_t margin) {
  const fock::SU11Generators g = fock::make_su11_hp(0.5, cutoff);
  const TruncatedOperator u = lorentz::boost_unitary(g, theta);
  const auto all = symmetry_probes(g, 17, 4);
  const auto basis = lorentz::algebra_basis(lorentz::ProbeAlgebra::su11, g);
  double worst = 0.0;
  for (std::size_t i = 4; i < all.size(); ++i) {
    worst = std::max(worst, fock::span_residual(lorentz::conjugate(u, all[i]), basis, margin));
  }
  return worst;
}

// ----------------------------------------------------------- jaynes-cummings

inline double spectrum_defect(jc::Variant variant, std::size_t cutoff) {
  const jc::JCModel m{variant, 1.2, 0.7, 0.8, cutoff};
  Eigen::SelfAdjointEigenSolver<Matrix> es(jc::build_hamiltonian(m).matrix());
  const std::vector<double> closed = jc::truncated_spectrum(m);
  double worst = 0.0;
  for (std::size_t k = 0; k < closed.size(); ++k) {
    worst = std::max(worst, std::abs(es.eigenvalues()(static_cast<Eigen::Index>(k)) - closed[k]));
  }
  return worst;
}

struct DriftResult {
  double excitation = 0.0;
  double norm = 0.0;
  double sz_peak = 0.0;
};

/// Drift of <n + Sz> and of the norm over a 200-point grid, detuned, excited
/// atom. Also reports max |<Sz>| seen.
inline DriftResult evolution_drift(jc::Variant variant) {
  const std::size_t cutoff = 60;
  const jc::JCModel m{variant, 1.4, 0.6, 0.5, cutoff};
  const auto initial = jc::AtomFieldState::product(jc::AtomLevel::e, jc::glauber_state(complex(1.0, 2.0), cutoff));
  const double n0 = jc::expectation_excitation(initial);
  DriftResult r;
  for (double t : jc::uniform_grid(30.0, 199)) {
    const auto s = jc::evolve_state(m, initial, t);
    r.excitation = std::max(r.excitation, std::abs(jc::expectation_excitation(s) - n0));
    r.norm = std::max(r.norm, std::abs(s.norm() - 1.0));
    r.sz_peak = std::max(r.sz_peak, std::abs(jc::expectation_sz(s)));
  }
  return r;
}

inline double linear_glauber_defect(double alpha, double lam, std::size_t cutoff, std::size_t points) {
  const jc::JCModel m{jc::Variant::linear, 1.0, 1.0, lam, cutoff};
  const auto initial = jc::AtomFieldState::product(jc::AtomLevel::g, jc::glauber_state(alpha, cutoff));
  double worst = 0.0;
  for (double t : jc::uniform_grid(10.0 / lam, points - 1)) {
    worst = std::max(worst, std::abs(jc::expectation_sz(jc::evolve_state(m, initial, t)) -
                                     jc::sz_closed_linear_glauber(alpha, lam, t)));
  }
  return worst;
}

inline double su11_glauber_defect(complex alpha, double lam0, std::size_t cutoff, std::size_t points) {
  const jc::JCModel m{jc::Variant::su11, 1.0, 1.0, lam0, cutoff};
  const auto initial = jc::AtomFieldState::product(jc::AtomLevel::g, jc::glauber_state(alpha, cutoff));
  double worst = 0.0;
  for (double t : jc::uniform_grid(std::numbers::pi / lam0, points - 1)) {
    worst = std::max(worst, std::abs(jc::expectation_sz(jc::evolve_state(m, initial, t)) -
                                     jc::sz_closed_bs_glauber(alpha, lam0, t)));
  }
  return worst;
}

inline double su11_bg_defect(complex eta, double lam0, std::size_t cutoff, std::size_t points) {
  const jc::JCModel m{jc::Variant::su11, 1.0, 1.0, lam0, cutoff};
  const auto initial = jc::AtomFieldState::product(jc::AtomLevel::g, jc::barut_girardello_state(eta, cutoff));
  double worst = 0.0;
  for (double t : jc::uniform_grid(2.0 * std::numbers::pi / lam0, points - 1)) {
    worst = std::max(worst, std::abs(jc::expectation_sz(jc::evolve_state(m, initial, t)) -
                                     jc::sz_closed_bs_bg(eta, lam0, t)));
  }
  return worst;
}

/// Series S_{1,1} against exp(x cos 2t) cos(x sin 2t).
inline double s11_identity_defect(complex zeta, std::size_t points) {
  const double x = std::norm(zeta);
  double worst = 0.0;
  for (double t : jc::uniform_grid(std::numbers::pi, points - 1)) {
    const double closed = std::exp(x * std::cos(2.0 * t)) * std::cos(x * std::sin(2.0 * t));
    worst = std::max(worst, std::abs(jc::series_S(1.0, 1.0, zeta, 1.0, t, 1e-15).value - closed));
  }
  return worst;
}

inline double su11_periodicity_defect(double lam0, std::size_t cutoff) {
  const jc::JCModel m{jc::Variant::su11, 1.0, 1.0, lam0, cutoff};
  const auto initial = jc::AtomFieldState::product(jc::AtomLevel::g, jc::glauber_state(complex(2.0, 1.0), cutoff));
  const double period = *jc::revival_period(m);
  double worst = 0.0;
  for (double t : jc::uniform_grid(period, 50)) {
    worst = std::max(worst, std::abs(jc::expectation_sz(jc::evolve_state(m, initial, t + period)) -
                                     jc::expectation_sz(jc::evolve_state(m, initial, t))));
  }
  return worst;
}

inline constexpr double kContrastOccupation = 9.0;

/// Collapse-time ratio su11/linear scaled by sqrt(nbar); NaN if either
/// variant never collapses on its grid.
inline double collapse_contrast_scaled(double nbar) {
  const jc::CollapseContrast c = jc::collapse_contrast(nbar, 1.0);
  return c.ratio ? *c.ratio * std::sqrt(nbar) : std::numeric_limits<double>::quiet_NaN();
}

// ------------------------------------------------------------------- suite

inline Report run_all() {
  Report r;
  const auto add = [&r](std::string module, std::string name, double value, Relation rel, double lo,
                        double hi = 0.0) { r.checks.push_back({std::move(module), std::move(name), value, rel, lo, hi}); };
  using R = Relation;

  for (double kappa : {0.25, 0.5, 1.0, 1.5}) {
    const std::string k = io::format_double(kappa);
    add("fock-core", "su11_relations_kappa_" + k,
        std::max({su11_relations_residual(kappa, 10, 2), su11_relations_residual(kappa, 40, 2),
                  su11_relations_residual(kappa, 90, 2)}),
        R::less, 1e-10);
    add("fock-core", "casimir_kappa_" + k, casimir_residual(kappa, 40, 2), R::less, 1e-10);
  }
  add("fock-core", "evolve_unitarity",
      std::max(unitarity_defect(fock::make_su11_hp(0.5, 40).k_one(), 0.7), unitarity_defect(seeded_hermitian(30, 7), 2.3)),
      R::less, 1e-9);
  add("fock-core", "adjoint_k_plus_bit_exact", std::max(adjoint_mismatch(0.25, 30), adjoint_mismatch(1.5, 30)),
      R::less_equal, 0.0);
  add("fock-core", "span_residual_scale_invariance", span_scale_defect(), R::less, 1e-12);

  add("coproduct-stats", "oracle_equivalence", stats_oracle_equivalence(6, 4), R::less, 1e-10);
  add("coproduct-stats", "su11_uniformity_spread", su11_uniformity_spread(12, 5), R::less, 1e-14);
  add("coproduct-stats", "weyl_multinomial_relative", weyl_multinomial_defect(25, 4), R::less, 1e-12);
  add("coproduct-stats", "exchangeability", exchangeability_defect(6, 4), R::less_equal, 0.0);
  add("coproduct-stats", "mode1_marginals", marginal_defect(10, 4), R::less, 1e-13);

  add("su11-oscillator", "schwinger_relations",
      std::max({schwinger_relations_residual(20, 4), schwinger_relations_residual(40, 4),
                schwinger_relations_residual(80, 4)}),
      R::less, 1e-10);
  add("su11-oscillator", "schwinger_casimir", schwinger_casimir_residual(40, 4), R::less, 1e-10);
  add("su11-oscillator", "parity_sectors", parity_sector_defect(40), R::less, 1e-12);
  add("su11-oscillator", "kappa_half_spectrum", oscillator_spectrum_defect(50), R::less_equal, 0.0);
  for (double kappa : {0.5, 1.0, 1.5}) {
    add("su11-oscillator", "heisenberg_pair_kappa_" + io::format_double(kappa), heisenberg_pair_residual(kappa, 50, 4),
        R::less, 1e-10);
  }
  add("su11-oscillator", "linear_qp_commutator", linear_qp_residual(0.5, 50, 4), R::less, 1e-9);
  add("su11-oscillator", "linear_energy_identity", linear_energy_residual(0.5, 50, 4), R::less, 1e-9);
  add("su11-oscillator", "inverse_hp_canonical", inverse_hp_canonical_residual(1.5, 50), R::less, 1e-9);
  add("su11-oscillator", "generalized_bracket",
      std::max(oscillator::generalized_bracket_check(fock::make_su11_hp(0.5, 50), 1.0),
               oscillator::generalized_bracket_check(fock::make_su11_hp(2.0, 50), 3.0)),
      R::less, 1e-10);

  const BoostProperties bp = boost_properties();
  add("lorentz", "boost_det", bp.det_defect, R::less, 1e-12);
  add("lorentz", "boost_hermitian", bp.hermitian_defect, R::less_equal, 0.0);
  add("lorentz", "boost_orthogonal", bp.orthogonal_defect, R::less, 1e-12);
  add("lorentz", "boost_unitarity_witness", bp.unitarity_witness, R::greater, 0.1);
  add("lorentz", "exp_boost_agreement", boost_exp_defect(20, 3.0), R::less, 1e-12);
  add("lorentz", "group_law", group_law_defect(5, 20), R::less, 1e-11);
  add("lorentz", "su11_residual_max_increase_over_margin", su11_margin_monotonicity(0.5, 80), R::less, 0.0);
  add("lorentz", "weyl_residual_min_over_margin", weyl_margin_floor(0.5, 80), R::greater, 1e-2);
  add("lorentz", "conjugation_hermiticity", conjugation_hermiticity_defect(0.5, 80), R::less, 1e-10);
  add("lorentz", "random_su11_probes_margin_40", random_su11_probe_residual(0.5, 80, 40), R::less, 1e-6);
  {
    const auto fd = lorentz::polarization_pb_residuals(2.0, 0.7, 1e-4);
    const auto ex = lorentz::polarization_pb_residuals_exact(2.0, 0.7);
    add("lorentz", "polarization_brackets_fd", *std::max_element(fd.begin(), fd.end()), R::less, 1e-6);
    add("lorentz", "polarization_brackets_exact", *std::max_element(ex.begin(), ex.end()), R::less, 1e-12);
  }

  for (auto variant : {jc::Variant::linear, jc::Variant::su11}) {
    const std::string v = jc::to_string(variant);
    const DriftResult d = evolution_drift(variant);
    add("jaynes-cummings", "excitation_drift_" + v, d.excitation, R::less, 1e-9);
    add("jaynes-cummings", "norm_drift_" + v, d.norm, R::less, 1e-10);
    add("jaynes-cummings", "sz_bound_" + v, d.sz_peak, R::less_equal, 0.5);
    add("jaynes-cummings", "spectrum_" + v, spectrum_defect(variant, 120), R::less, 1e-9);
  }
  add("jaynes-cummings", "linear_glauber_closed_vs_exact", linear_glauber_defect(3.0, 1.0, 120, 200), R::less, 1e-8);
  add("jaynes-cummings", "su11_glauber_closed_vs_exact", su11_glauber_defect(complex(1.5, 0.8), 1.0, 80, 200),
      R::less, 1e-8);
  add("jaynes-cummings", "su11_bg_closed_vs_exact", su11_bg_defect(2.0, 1.0, 100, 200), R::less, 1e-8);
  add("jaynes-cummings", "s11_series_identity", s11_identity_defect(complex(1.5, 0.4), 200), R::less, 1e-10);
  add("jaynes-cummings", "su11_periodicity", su11_periodicity_defect(2.0, 80), R::less, 1e-9);
  add("jaynes-cummings", "collapse_ratio_times_sqrt_nbar", collapse_contrast_scaled(kContrastOccupation),
      R::within, 0.7, 1.3);
  return r;
}

}  // namespace bosonalg::verify
