#pragma once

// Jaynes-Cummings dynamics on Fock x {g, e}. Two variants share the block
// structure {|n-1, e>, |n, g>}:
//   linear: H = w n + w0 Sz + lam (a S+ + h.c.),         coupling lam sqrt(n)
//   su11:   H = w (K3 - 1/2) + w0 Sz + lam0 (K- S+ + h.c.), coupling lam0 n
// with K- the kappa = 1/2 Holstein-Primakoff lowering operator.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bosonalg/coherent_states.hpp"
#include "bosonalg/fock.hpp"
#include "bosonalg/special_functions.hpp"

namespace bosonalg::jc {

using fock::FockState;
using fock::TruncatedOperator;

enum class Variant { linear, su11 };

inline std::string to_string(Variant v) { return v == Variant::linear ? "linear" : "su11"; }

struct JCModel {
  Variant variant = Variant::linear;
  double omega = 1.0;
  double omega0 = 1.0;
  /// lam for the linear variant, lam0 for su11.
  double coupling = 1.0;
  std::size_t cutoff = 2;

  double detuning() const noexcept { return omega - omega0; }

  void validate() const {
    detail::require(omega > 0.0, "invalid-frequency", "omega must be > 0");
    detail::require(omega0 > 0.0, "invalid-frequency", "omega0 must be > 0");
    detail::require(std::isfinite(coupling), "invalid-coupling", "coupling must be finite");
    detail::require(cutoff >= 2, "invalid-cutoff",
                    "cutoff must be >= 2 (got " + std::to_string(cutoff) + ")");
  }
};

enum class AtomLevel : int { g = 0, e = 1 };

/// Amplitudes over index 2n + s, s = 0 for |g>, 1 for |e>.
class AtomFieldState {
 public:
  AtomFieldState(std::size_t cutoff, Vector amplitudes)
      : cutoff_(cutoff), amplitudes_(std::move(amplitudes)) {
    detail::require(amplitudes_.size() == static_cast<Eigen::Index>(2 * cutoff_), "cutoff-mismatch",
                    "atom-field state needs 2 * cutoff amplitudes");
  }

  static AtomFieldState product(AtomLevel level, const FockState& field) {
    const std::size_t n = field.cutoff();
    Vector v = Vector::Zero(static_cast<Eigen::Index>(2 * n));
    for (std::size_t k = 0; k < n; ++k) {
      v(static_cast<Eigen::Index>(2 * k + static_cast<std::size_t>(level))) =
          field[static_cast<Eigen::Index>(k)];
    }
    return AtomFieldState(n, std::move(v));
  }

  std::size_t cutoff() const noexcept { return cutoff_; }
  const Vector& amplitudes() const noexcept { return amplitudes_; }
  double norm() const { return amplitudes_.norm(); }

  static Eigen::Index index(std::size_t n, AtomLevel s) {
    return static_cast<Eigen::Index>(2 * n + static_cast<std::size_t>(s));
  }

 private:
  std::size_t cutoff_;
  Vector amplitudes_;
};

/// Off-diagonal block element <n-1, e|H|n, g>.
inline double block_coupling(const JCModel& m, double n) {
  return m.variant == Variant::linear ? m.coupling * std::sqrt(n) : m.coupling * n;
}

inline double rabi_frequency(const JCModel& m, double n) {
  const double g = block_coupling(m, n);
  return std::sqrt(m.detuning() * m.detuning() + 4.0 * g * g);
}

/// Sz = (|e><e| - |g><g|)/2 on the 2N-dimensional space.
inline TruncatedOperator sz_operator(std::size_t cutoff) {
  Vector d(static_cast<Eigen::Index>(2 * cutoff));
  for (std::size_t k = 0; k < cutoff; ++k) {
    d(AtomFieldState::index(k, AtomLevel::g)) = -0.5;
    d(AtomFieldState::index(k, AtomLevel::e)) = 0.5;
  }
  return TruncatedOperator::diagonal(d);
}

/// n x 1 on the 2N-dimensional space.
inline TruncatedOperator field_number_operator(std::size_t cutoff) {
  Vector d(static_cast<Eigen::Index>(2 * cutoff));
  for (std::size_t k = 0; k < cutoff; ++k) {
    d(AtomFieldState::index(k, AtomLevel::g)) = static_cast<double>(k);
    d(AtomFieldState::index(k, AtomLevel::e)) = static_cast<double>(k);
  }
  return TruncatedOperator::diagonal(d);
}

/// Dense 2N x 2N Hamiltonian assembled from the field operators.
inline TruncatedOperator build_hamiltonian(const JCModel& m) {
  m.validate();
  const std::size_t n = m.cutoff;
  const fock::Ladder l = fock::make_ladder(n);
  // Field operators in the atom-fast ordering: field (x) atom.
  const TruncatedOperator atom_id = TruncatedOperator::identity(2);
  Matrix s_plus_m = Matrix::Zero(2, 2);
  s_plus_m(1, 0) = 1.0;
  const TruncatedOperator s_plus(s_plus_m);

  TruncatedOperator field_energy = l.number;  // w (K3 - 1/2) = w n at kappa = 1/2
  TruncatedOperator lowering = l.a;
  if (m.variant == Variant::su11) lowering = fock::make_su11_hp(0.5, n).k_minus;

  const TruncatedOperator interaction = fock::tensor_product(lowering, s_plus);
  TruncatedOperator h = m.omega * fock::tensor_product(field_energy, atom_id) +
                        m.omega0 * sz_operator(n) +
                        m.coupling * (interaction + interaction.adjoint());
  return h;
}

/// (E-, E+) = n w - (Delta + w0)/2 -+ R_n / 2 for block n >= 1.
inline std::pair<double, double> block_eigenvalues(const JCModel& m, std::size_t n) {
  detail::require(n >= 1, "invalid-block", "block n = 0 is the singlet at -w0/2");
  const double centre = static_cast<double>(n) * m.omega - 0.5 * (m.detuning() + m.omega0);
  const double half = 0.5 * rabi_frequency(m, static_cast<double>(n));
  return {centre - half, centre + half};
}

/// Full spectrum of the truncated Hamiltonian from the block structure: the
/// n = 0 singlet, blocks 1..N-1, and the edge singlet |N-1, e> whose partner
/// |N, g> lies outside the cutoff. Ascending.
inline std::vector<double> truncated_spectrum(const JCModel& m) {
  std::vector<double> out;
  out.push_back(-0.5 * m.omega0);
  for (std::size_t n = 1; n < m.cutoff; ++n) {
    const auto [lo, hi] = block_eigenvalues(m, n);
    out.push_back(lo);
    out.push_back(hi);
  }
  out.push_back(static_cast<double>(m.cutoff - 1) * m.omega + 0.5 * m.omega0);
  std::sort(out.begin(), out.end());
  return out;
}

/// State at time t by closed-form 2x2 evolution of every block.
inline AtomFieldState evolve_state(const JCModel& m, const AtomFieldState& initial, double t) {
  m.validate();
  detail::require(initial.cutoff() == m.cutoff, "cutoff-mismatch",
                  "initial state cutoff " + std::to_string(initial.cutoff()) + " vs model cutoff " +
                      std::to_string(m.cutoff));
  const std::size_t n_max = m.cutoff;
  const Vector& in = initial.amplitudes();
  Vector out(in.size());

  const auto g0 = AtomFieldState::index(0, AtomLevel::g);
  out(g0) = std::exp(I * (0.5 * m.omega0 * t)) * in(g0);

  const double delta = m.detuning();
  for (std::size_t n = 1; n < n_max; ++n) {
    const auto ie = AtomFieldState::index(n - 1, AtomLevel::e);
    const auto ig = AtomFieldState::index(n, AtomLevel::g);
    const double centre = static_cast<double>(n) * m.omega - 0.5 * m.omega;
    const double g = block_coupling(m, static_cast<double>(n));
    // H_block - centre = [[-delta/2, g], [g, delta/2]], squaring to half_rabi^2.
    const double half_rabi = std::sqrt(0.25 * delta * delta + g * g);
    const double c = std::cos(half_rabi * t);
    const double s_over = half_rabi > 0.0 ? std::sin(half_rabi * t) / half_rabi : t;
    const complex phase = std::exp(-I * centre * t);
    const complex ce = in(ie);
    const complex cg = in(ig);
    out(ie) = phase * ((c + I * s_over * (0.5 * delta)) * ce - I * s_over * g * cg);
    out(ig) = phase * (-I * s_over * g * ce + (c - I * s_over * (0.5 * delta)) * cg);
  }

  const auto edge = AtomFieldState::index(n_max - 1, AtomLevel::e);
  const double edge_energy = static_cast<double>(n_max - 1) * m.omega + 0.5 * m.omega0;
  out(edge) = std::exp(-I * edge_energy * t) * in(edge);
  return AtomFieldState(n_max, std::move(out));
}

inline double expectation_sz(const AtomFieldState& s) {
  double v = 0.0;
  for (std::size_t k = 0; k < s.cutoff(); ++k) {
    v += 0.5 * (std::norm(s.amplitudes()(AtomFieldState::index(k, AtomLevel::e))) -
                std::norm(s.amplitudes()(AtomFieldState::index(k, AtomLevel::g))));
  }
  return v;
}

/// <n + Sz>, the conserved excitation number shifted by -1/2.
inline double expectation_excitation(const AtomFieldState& s) {
  double v = 0.0;
  for (std::size_t k = 0; k < s.cutoff(); ++k) {
    const double pe = std::norm(s.amplitudes()(AtomFieldState::index(k, AtomLevel::e)));
    const double pg = std::norm(s.amplitudes()(AtomFieldState::index(k, AtomLevel::g)));
    v += (static_cast<double>(k) + 0.5) * pe + (static_cast<double>(k) - 0.5) * pg;
  }
  return v;
}

enum class SeriesLabel { exact, closed_form, series };

inline std::string to_string(SeriesLabel l) {
  switch (l) {
    case SeriesLabel::exact: return "exact";
    case SeriesLabel::closed_form: return "closed-form";
    case SeriesLabel::series: return "series";
  }
  return "unknown";
}

/// <Sz(t)> samples; every value lies in [-1/2, 1/2] up to 1e-9.
struct TimeSeries {
  std::vector<double> times;
  std::vector<double> values;
  SeriesLabel label = SeriesLabel::exact;

  void push_back(double t, double v) {
    if (!times.empty() && !(t > times.back())) {
      throw precondition_error("non-increasing-times", "time grid must be strictly increasing");
    }
    if (std::abs(v) > 0.5 + 1e-9) {
      throw guard_error("sz-bound", "|<Sz>| = " + std::to_string(std::abs(v)) + " exceeds 1/2");
    }
    times.push_back(t);
    values.push_back(v);
  }
  std::size_t size() const noexcept { return times.size(); }
};

inline TimeSeries sz_exact(const JCModel& m, const AtomFieldState& initial, const std::vector<double>& times) {
  TimeSeries out;
  out.label = SeriesLabel::exact;
  for (double t : times) out.push_back(t, expectation_sz(evolve_state(m, initial, t)));
  return out;
}

/// -1/2 e^{-|alpha|^2} S_{1/2,1}(alpha), resonant linear model, Glauber field.
inline double sz_closed_linear_glauber(complex alpha, double lam, double t) {
  return -0.5 * std::exp(-std::norm(alpha)) * series_S(0.5, 1.0, alpha, lam, t, 1e-14).value;
}

/// -1/2 e^{-|alpha|^2} exp[|alpha|^2 cos(2 lam0 t)] cos[|alpha|^2 sin(2 lam0 t)],
/// resonant su11 model, Glauber field.
inline double sz_closed_bs_glauber(complex alpha, double lam0, double t) {
  const double x = std::norm(alpha);
  return -0.5 * std::exp(x * (std::cos(2.0 * lam0 * t) - 1.0)) * std::cos(x * std::sin(2.0 * lam0 * t));
}

/// -1/2 Re I0(2|eta| e^{i lam0 t}) / I0(2|eta|), resonant su11 model,
/// Barut-Girardello field.
inline double sz_closed_bs_bg(complex eta, double lam0, double t) {
  const double r = 2.0 * std::abs(eta);
  return -0.5 * bessel_i0(r * std::exp(I * (lam0 * t))).real() / bessel_i0(r).real();
}

/// Series route for the same quantity: -1/2 S_{1,2}(eta) / I0(2|eta|).
inline double sz_series_bs_bg(complex eta, double lam0, double t) {
  return -0.5 * series_S(1.0, 2.0, eta, lam0, t, 1e-15).value / bessel_i0(2.0 * std::abs(eta)).real();
}

/// -1/2 S_{1/2,2}(eta) / I0(2|eta|), resonant linear model, Barut-Girardello
/// field. No closed form; summed with a tail bound.
inline double sz_series_linear_bg(complex eta, double lam, double t) {
  return -0.5 * series_S(0.5, 2.0, eta, lam, t, 1e-15).value / bessel_i0(2.0 * std::abs(eta)).real();
}

/// pi / lam0 for su11, where all Rabi phases 2 lam0 n t are commensurate;
/// none for the linear variant.
inline std::optional<double> revival_period(const JCModel& m) {
  if (m.variant == Variant::linear) return std::nullopt;
  return std::numbers::pi / std::abs(m.coupling);
}

/// 2 pi / R at mean occupation nbar.
inline double rabi_period(const JCModel& m, double nbar) {
  return 2.0 * std::numbers::pi / rabi_frequency(m, nbar);
}

inline constexpr double kCollapseFraction = 0.1;

/// Forward moving maximum of |v| over [t_i, t_i + window]; entries whose
/// window runs past the end of the grid are absent.
inline std::vector<double> envelope(const TimeSeries& s, double window) {
  std::vector<double> out;
  if (s.size() == 0) return out;
  const double last = s.times.back();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.times[i] + window > last + 1e-12 * std::max(1.0, last)) break;
    double peak = 0.0;
    for (std::size_t j = i; j < s.size() && s.times[j] <= s.times[i] + window; ++j) {
      peak = std::max(peak, std::abs(s.values[j]));
    }
    out.push_back(peak);
  }
  return out;
}

/// First time at which the envelope drops below 0.1 of its initial value.
inline std::optional<double> collapse_time(const TimeSeries& s, double window) {
  const std::vector<double> env = envelope(s, window);
  if (env.empty()) return std::nullopt;
  const double threshold = kCollapseFraction * env.front();
  for (std::size_t i = 0; i < env.size(); ++i) {
    if (env[i] < threshold) return s.times[i];
  }
  return std::nullopt;
}

inline std::vector<double> uniform_grid(double t_max, std::size_t steps) {
  detail::require(steps >= 1, "invalid-steps", "need at least one time step");
  detail::require(t_max > 0.0, "invalid-time", "t-max must be > 0");
  std::vector<double> out(steps + 1);
  for (std::size_t i = 0; i <= steps; ++i) out[i] = t_max * static_cast<double>(i) / static_cast<double>(steps);
  return out;
}

struct CollapseContrast {
  double nbar;
  std::optional<double> linear_collapse;
  std::optional<double> su11_collapse;
  /// su11 / linear collapse time.
  std::optional<double> ratio;
  /// 1 / sqrt(nbar)
  double expected_factor;
};

inline constexpr std::size_t kSamplesPerRabiPeriod = 200;

/// Collapse times of both variants at resonance for |g> x |alpha>, |alpha|^2 =
/// nbar, matched couplings. Each series is sampled at 200 points per Rabi
/// period up to half its revival time.
inline CollapseContrast collapse_contrast(double nbar, double coupling) {
  detail::require(nbar > 0.0, "invalid-occupation", "nbar must be > 0");
  const auto cutoff = static_cast<std::size_t>(std::ceil(3.0 * nbar + 40.0));
  const FockState field = glauber_state(std::sqrt(nbar), cutoff);
  const AtomFieldState initial = AtomFieldState::product(AtomLevel::g, field);

  const auto measure = [&](Variant variant, double t_max) {
    const JCModel m{variant, 1.0, 1.0, coupling, cutoff};
    const double window = rabi_period(m, nbar);
    const auto steps = static_cast<std::size_t>(std::ceil(t_max / window * kSamplesPerRabiPeriod));
    return collapse_time(sz_exact(m, initial, uniform_grid(t_max, steps)), window);
  };
  const double lam = std::abs(coupling);
  CollapseContrast out{nbar, std::nullopt, std::nullopt, std::nullopt, 1.0 / std::sqrt(nbar)};
  // Linear revivals occur near 2 pi sqrt(nbar) / lam, su11 revivals at pi / lam.
  out.linear_collapse = measure(Variant::linear, std::numbers::pi * std::sqrt(nbar) / lam);
  out.su11_collapse = measure(Variant::su11, 0.5 * std::numbers::pi / lam);
  if (out.linear_collapse && out.su11_collapse && *out.linear_collapse > 0.0) {
    out.ratio = *out.su11_collapse / *out.linear_collapse;
  }
  return out;
}

}  // namespace bosonalg::jc
