#include <gtest/gtest.h>

#include <numbers>

#include "bosonalg/jaynes_cummings.hpp"

namespace {

using namespace bosonalg;
using namespace bosonalg::jc;

constexpr double kPi = std::numbers::pi;

JCModel model(Variant v, double coupling, std::size_t cutoff, double omega = 1.0, double omega0 = 1.0) {
  return JCModel{v, omega, omega0, coupling, cutoff};
}

AtomFieldState ground_times(const fock::FockState& field) {
  return AtomFieldState::product(AtomLevel::g, field);
}

TEST(Hamiltonian, MatrixElements) {
  const auto hl = build_hamiltonian(model(Variant::linear, 0.7, 10, 1.3, 0.9)).matrix();
  const auto g0 = AtomFieldState::index(0, AtomLevel::g);
  EXPECT_DOUBLE_EQ(hl(g0, g0).real(), -0.45);
  EXPECT_NEAR(std::abs(hl(AtomFieldState::index(0, AtomLevel::e), AtomFieldState::index(1, AtomLevel::g)) - 0.7),
              0.0, 1e-15);
  EXPECT_NEAR(std::abs(hl(AtomFieldState::index(3, AtomLevel::e), AtomFieldState::index(4, AtomLevel::g)) - 1.4),
              0.0, 1e-14);
  const auto hs = build_hamiltonian(model(Variant::su11, 0.7, 10)).matrix();
  EXPECT_NEAR(std::abs(hs(AtomFieldState::index(1, AtomLevel::e), AtomFieldState::index(2, AtomLevel::g)) - 1.4),
              0.0, 1e-14);
  EXPECT_TRUE(build_hamiltonian(model(Variant::su11, 0.7, 10)).is_hermitian(1e-14));
  // No coupling between different excitation blocks.
  EXPECT_EQ(hl(AtomFieldState::index(0, AtomLevel::e), AtomFieldState::index(0, AtomLevel::g)), complex(0.0));
}

TEST(Spectrum, BlockEigenvalues) {
  // Resonant linear block 4: centre 3.5, R = 2 * 1 * 2 = 4.
  const auto [lo, hi] = block_eigenvalues(model(Variant::linear, 1.0, 10), 4);
  EXPECT_NEAR(lo, 1.5, 1e-14);
  EXPECT_NEAR(hi, 5.5, 1e-14);
  EXPECT_DOUBLE_EQ(rabi_frequency(model(Variant::linear, 1.0, 10), 4), 4.0);
  // Detuning 3, lambda 2, n = 1: R = sqrt(9 + 16) = 5.
  EXPECT_DOUBLE_EQ(rabi_frequency(model(Variant::linear, 2.0, 10, 4.0, 1.0), 1), 5.0);
  EXPECT_THROW(block_eigenvalues(model(Variant::linear, 1.0, 10), 0), precondition_error);
}

TEST(Spectrum, NumericMatchesClosedForm) {
  for (auto variant : {Variant::linear, Variant::su11}) {
    const JCModel m = model(variant, 0.8, 120, 1.2, 0.7);
    Eigen::SelfAdjointEigenSolver<Matrix> es(build_hamiltonian(m).matrix());
    const std::vector<double> closed = truncated_spectrum(m);
    ASSERT_EQ(closed.size(), 240u);
    for (std::size_t k = 0; k < closed.size(); ++k) {
      EXPECT_NEAR(es.eigenvalues()(static_cast<Eigen::Index>(k)), closed[k], 1e-9) << to_string(variant) << k;
    }
  }
}

TEST(CoherentStates, GlauberMeanAndRejection) {
  const auto s = glauber_state(2.0, 60);
  EXPECT_NEAR(s.norm(), 1.0, 1e-15);
  EXPECT_NEAR(expectation(s, fock::make_ladder(60).number).real(), 4.0, 1e-10);
  EXPECT_THROW(glauber_state(5.0, 60), precondition_error);
}

TEST(CoherentStates, BarutGirardelloEigenstate) {
  const complex eta(1.2, -0.5);
  const auto s = barut_girardello_state(eta, 60);
  EXPECT_NEAR(s.norm(), 1.0, 1e-15);
  const fock::SU11Generators g = fock::make_su11_hp(0.5, 60);
  const Vector lowered = g.k_minus.matrix() * s.amplitudes();
  // Last component is truncated away.
  EXPECT_LT((lowered - eta * s.amplitudes()).head(59).cwiseAbs().maxCoeff(), 1e-9);
  // |<0|eta>|^2 = 1 / I0(2|eta|).
  EXPECT_NEAR(std::norm(s[0]), 1.0 / bessel_i0(2.0 * std::abs(eta)).real(), 1e-14);
}

// Trapezoid rule on (1/pi) int_0^pi exp(z cos t) dt, spectrally accurate for
// periodic integrands.
complex i0_quadrature(complex z) {
  const int n = 400;
  complex sum = 0.0;
  for (int k = 0; k < n; ++k) sum += std::exp(z * std::cos(2.0 * kPi * (k + 0.5) / n));
  return sum / static_cast<double>(n);
}

TEST(BesselI0, KnownValuesAndQuadrature) {
  EXPECT_EQ(bessel_i0(0.0), complex(1.0));
  EXPECT_NEAR(bessel_i0(2.0).real(), 2.2795853023360673, 1e-15);
  for (complex z : {complex(0.3, 0.0), complex(4.0, 1.0), complex(-2.0, 3.0), complex(0.0, 10.0)}) {
    EXPECT_LT(std::abs(bessel_i0(z) - i0_quadrature(z)), 1e-12 * std::abs(i0_quadrature(z)));
    EXPECT_LT(std::abs(bessel_i0(z) - bessel_i0(-z)), 1e-14 * std::abs(bessel_i0(z)));
  }
  EXPECT_THROW(bessel_i0(800.0), guard_error);
}

TEST(SeriesS, ReferenceIdentities) {
  const complex zeta(1.5, 0.4);
  const double x = std::norm(zeta);
  EXPECT_NEAR(series_S(0.5, 1.0, zeta, 1.0, 0.0, 1e-15).value, std::exp(x), 1e-13 * std::exp(x));
  EXPECT_NEAR(series_S(1.0, 2.0, zeta, 1.0, 0.0, 1e-15).value, bessel_i0(2.0 * std::abs(zeta)).real(), 1e-13);
  for (double t : {0.0, 0.2, 1.1, 3.7}) {
    const double closed = std::exp(x * std::cos(2.0 * t)) * std::cos(x * std::sin(2.0 * t));
    EXPECT_NEAR(series_S(1.0, 1.0, zeta, 1.0, t, 1e-15).value, closed, 1e-10) << t;
  }
  const auto r = series_S(0.5, 1.0, 3.0, 1.0, 0.4, 1e-12);
  EXPECT_LT(r.tail_bound, 1e-12);
  EXPECT_GT(r.terms, 9);
  EXPECT_THROW(series_S(0.5, 0.5, 1.0, 1.0, 0.0, 1e-12), precondition_error);
}

TEST(Dynamics, LinearGlauberMatchesSeries) {
  const double lam = 1.0;
  const JCModel m = model(Variant::linear, lam, 120);
  const auto initial = ground_times(glauber_state(3.0, 120));
  double worst = 0.0;
  for (double t : uniform_grid(10.0 / lam, 400)) {
    worst = std::max(worst, std::abs(expectation_sz(evolve_state(m, initial, t)) - sz_closed_linear_glauber(3.0, lam, t)));
  }
  EXPECT_LT(worst, 1e-8);
}

TEST(Dynamics, Su11GlauberClosedForm) {
  const complex alpha(1.5, 0.8);
  const JCModel m = model(Variant::su11, 0.6, 80);
  const auto initial = ground_times(glauber_state(alpha, 80));
  for (double t : {0.0, 0.3, 1.7, 4.2}) {
    EXPECT_NEAR(expectation_sz(evolve_state(m, initial, t)), sz_closed_bs_glauber(alpha, 0.6, t), 1e-10) << t;
  }
}

TEST(Dynamics, Su11BarutGirardelloBesselAndSeries) {
  const complex eta = 2.0;
  const JCModel m = model(Variant::su11, 1.0, 100);
  const auto initial = ground_times(barut_girardello_state(eta, 100));
  for (double t : uniform_grid(2.0 * kPi, 200)) {
    const double closed = sz_closed_bs_bg(eta, 1.0, t);
    EXPECT_NEAR(expectation_sz(evolve_state(m, initial, t)), closed, 1e-8) << t;
    EXPECT_NEAR(sz_series_bs_bg(eta, 1.0, t), closed, 1e-11) << t;
  }
}

TEST(Dynamics, LinearBarutGirardelloSeries) {
  const complex eta(1.0, 1.0);
  const JCModel m = model(Variant::linear, 0.9, 80);
  const auto initial = ground_times(barut_girardello_state(eta, 80));
  for (double t : {0.0, 0.5, 2.0, 6.0}) {
    EXPECT_NEAR(expectation_sz(evolve_state(m, initial, t)), sz_series_linear_bg(eta, 0.9, t), 1e-10) << t;
  }
}

TEST(Dynamics, Su11Periodicity) {
  const double lam0 = 2.0;
  const JCModel m = model(Variant::su11, lam0, 80);
  const auto initial = ground_times(glauber_state(complex(2.0, 1.0), 80));
  ASSERT_TRUE(revival_period(m).has_value());
  EXPECT_NEAR(*revival_period(m), kPi / 2.0, 1e-15);
  EXPECT_FALSE(revival_period(model(Variant::linear, lam0, 80)).has_value());
  for (double t : {0.1, 0.77, 1.3}) {
    EXPECT_NEAR(expectation_sz(evolve_state(m, initial, t + kPi / lam0)), expectation_sz(evolve_state(m, initial, t)),
                1e-9);
  }
}

TEST(Dynamics, ConservationAndUnitarity) {
  for (auto variant : {Variant::linear, Variant::su11}) {
    const JCModel m = model(variant, 0.5, 60, 1.4, 0.6);
    const auto initial = AtomFieldState::product(AtomLevel::e, glauber_state(complex(1.0, 2.0), 60));
    const double n0 = expectation_excitation(initial);
    for (double t : {0.5, 3.0, 25.0}) {
      const auto s = evolve_state(m, initial, t);
      EXPECT_NEAR(s.norm(), 1.0, 1e-12);
      EXPECT_NEAR(expectation_excitation(s), n0, 1e-9);
    }
  }
}

TEST(Dynamics, BlockEvolutionMatchesDenseExponential) {
  for (auto variant : {Variant::linear, Variant::su11}) {
    const JCModel m = model(variant, 0.8, 12, 1.1, 0.7);
    const auto h = build_hamiltonian(m);
    Vector v = Vector::Zero(24);
    for (Eigen::Index k = 0; k < 24; ++k) v(k) = complex(std::cos(1.0 + k), std::sin(0.3 * k));
    v /= v.norm();
    const AtomFieldState initial(12, v);
    for (double t : {0.4, 2.5}) {
      const Vector dense = fock::evolve_unitary(h, t).matrix() * v;
      EXPECT_LT((evolve_state(m, initial, t).amplitudes() - dense).cwiseAbs().maxCoeff(), 1e-12);
    }
  }
}

TEST(Dynamics, Errors) {
  const JCModel m = model(Variant::linear, 1.0, 20);
  const auto other = ground_times(glauber_state(1.0, 30));
  EXPECT_THROW(evolve_state(m, other, 1.0), precondition_error);
  EXPECT_THROW(build_hamiltonian(model(Variant::linear, 1.0, 20, -1.0)), precondition_error);
  TimeSeries s;
  s.push_back(0.0, 0.1);
  EXPECT_THROW(s.push_back(0.0, 0.1), precondition_error);
  EXPECT_THROW(s.push_back(1.0, 0.6), guard_error);
}

TEST(Collapse, EnvelopeAndThreshold) {
  TimeSeries s;
  for (int k = 0; k <= 100; ++k) s.push_back(0.1 * k, k < 50 ? 0.5 * (k % 2) : 0.01 * (k % 2));
  const auto env = envelope(s, 0.2);
  EXPECT_DOUBLE_EQ(env.front(), 0.5);
  ASSERT_TRUE(collapse_time(s, 0.2).has_value());
  EXPECT_NEAR(*collapse_time(s, 0.2), 5.0, 1e-12);
}

}  // namespace
