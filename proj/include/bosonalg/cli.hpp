#pragma once

// Command-line front end. run() takes argv without the program name and
// writes the artifact to `out` (or --output) and one-line diagnostics to
// `err`. Exit status: 0 success, 2 validation error, 1 numerical guard.

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bosonalg/coproduct_stats.hpp"
#include "bosonalg/format.hpp"
#include "bosonalg/jaynes_cummings.hpp"
#include "bosonalg/lorentz.hpp"
#include "bosonalg/su11_oscillator.hpp"
#include "bosonalg/verify.hpp"

namespace bosonalg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitGuard = 1;
inline constexpr int kExitValidation = 2;

/// "re,im" or a bare real.
inline complex parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  const auto parse_real = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size() || !std::isfinite(v)) {
      throw precondition_error("complex-format", "expected \"re,im\", got \"" + text + "\"");
    }
    return v;
  };
  if (comma == std::string::npos) return {parse_real(text), 0.0};
  return {parse_real(text.substr(0, comma)), parse_real(text.substr(comma + 1))};
}

/// Positive integer from BOSONALG_THREADS, if set. There is no internal
/// parallelism, so the value is validated and otherwise unused.
inline std::optional<unsigned> thread_cap() {
  const char* v = std::getenv("BOSONALG_THREADS");
  if (v == nullptr || *v == '\0') return std::nullopt;
  char* end = nullptr;
  const long n = std::strtol(v, &end, 10);
  detail::require(end != v && *end == '\0' && n > 0, "threads",
                  std::string("BOSONALG_THREADS must be a positive integer (got \"") + v + "\")");
  return static_cast<unsigned>(n);
}

enum class Format { csv, json };

inline Format parse_format(const std::string& s) { return s == "json" ? Format::json : Format::csv; }

// ------------------------------------------------------------------ stats

struct StatsOptions {
  unsigned n = 0;
  unsigned m = 0;
  std::string algebra = "weyl";
  std::string method = "closed";
  std::string format = "csv";
};

inline void run_stats(const StatsOptions& o, std::ostream& out) {
  const stats::Algebra a = o.algebra == "su11" ? stats::Algebra::su11_fundamental : stats::Algebra::weyl;
  const stats::OccupationDistribution d = o.method == "brute"
                                              ? stats::distribution_from_state(stats::coproduct_state(o.n, o.m, a))
                                              : stats::closed_form(o.n, o.m, a);
  if (parse_format(o.format) == Format::json) {
    io::Json j;
    j["schema"] = io::kSchemaVersion;
    j["n"] = o.n;
    j["m"] = o.m;
    j["algebra"] = stats::to_string(a);
    io::Json rows = io::Json::array();
    for (const auto& [c, p] : d.probs) rows.push_back({{"k", c.parts}, {"probability", p}});
    j["distribution"] = rows;
    io::write_json(out, j);
    return;
  }
  for (unsigned j = 1; j <= o.m; ++j) out << "k_" << j << ',';
  out << "probability\n";
  for (const auto& [c, p] : d.probs) {
    for (unsigned k : c.parts) out << k << ',';
    out << io::format_double(p) << '\n';
  }
}

// ------------------------------------------------------------- oscillator

struct OscillatorOptions {
  std::vector<double> kappas{0.5, 1.0, 1.5};
  std::size_t cutoff = 50;
  std::size_t margin = 4;
  double omega = 1.0;
  double tolerance = 1e-9;
  std::string format = "csv";
};

struct IdentityRow {
  std::string identity;
  std::optional<double> kappa;
  std::size_t cutoff;
  double residual;
};

inline std::vector<IdentityRow> oscillator_rows(const OscillatorOptions& o) {
  using verify::TruncatedOperator;
  std::vector<IdentityRow> rows;
  const std::size_t n = o.cutoff;
  const std::size_t m = o.margin;
  rows.push_back({"schwinger_relations", std::nullopt, n, verify::schwinger_relations_residual(n, m)});
  rows.push_back({"schwinger_casimir", std::nullopt, n, verify::schwinger_casimir_residual(n, m)});
  rows.push_back({"schwinger_parity_sectors", std::nullopt, n, verify::parity_sector_defect(n)});
  for (double kappa : o.kappas) {
    const fock::SU11Generators g = fock::make_su11_hp(kappa, n);
    const oscillator::SU11Observables obs = oscillator::su11_observables_linear(g);
    const TruncatedOperator id = TruncatedOperator::identity(n);
    rows.push_back({"su11_relations", kappa, n, verify::su11_relations_residual(kappa, n, m)});
    rows.push_back({"casimir", kappa, n, verify::casimir_residual(kappa, n, m)});
    rows.push_back({"heisenberg_HQ", kappa, n, fock::interior_max_abs(fock::commutator(obs.H, obs.Q) + I * obs.P, m)});
    rows.push_back({"heisenberg_HP", kappa, n, fock::interior_max_abs(fock::commutator(obs.H, obs.P) - I * obs.Q, m)});
    rows.push_back({"linear_QP_commutator", kappa, n, verify::linear_qp_residual(kappa, n, m)});
    rows.push_back({"linear_energy_identity", kappa, n, verify::linear_energy_residual(kappa, n, m)});
    const oscillator::InverseHP inv = oscillator::inverse_hp_ladder(g);
    rows.push_back({"inverse_hp_QP_commutator", kappa, n,
                    fock::interior_max_abs(fock::commutator(inv.pair.q, inv.pair.p) - I * id, m)});
    rows.push_back({"inverse_hp_energy", kappa, n,
                    fock::interior_max_abs(inv.H - (g.k_three - (kappa - 0.5) * id), m)});
    rows.push_back({"generalized_bracket", kappa, n, oscillator::generalized_bracket_check(g, o.omega, m)});
  }
  return rows;
}

inline bool run_oscillator(const OscillatorOptions& o, std::ostream& out) {
  const std::vector<IdentityRow> rows = oscillator_rows(o);
  bool all = true;
  if (parse_format(o.format) == Format::json) {
    io::Json j;
    j["schema"] = io::kSchemaVersion;
    j["tolerance"] = o.tolerance;
    io::Json arr = io::Json::array();
    for (const auto& r : rows) {
      const bool pass = r.residual < o.tolerance;
      all = all && pass;
      arr.push_back({{"identity", r.identity},
                     {"kappa", r.kappa ? io::Json(*r.kappa) : io::Json(nullptr)},
                     {"cutoff", r.cutoff},
                     {"residual", r.residual},
                     {"status", pass ? "PASS" : "FAIL"}});
    }
    j["identities"] = arr;
    io::write_json(out, j);
    return all;
  }
  out << "identity,kappa,cutoff,residual,status\n";
  for (const auto& r : rows) {
    const bool pass = r.residual < o.tolerance;
    all = all && pass;
    out << r.identity << ',' << (r.kappa ? io::format_double(*r.kappa) : "") << ',' << r.cutoff << ','
        << io::format_double(r.residual) << ',' << (pass ? "PASS" : "FAIL") << '\n';
  }
  return all;
}

// ---------------------------------------------------------------- lorentz

struct LorentzOptions {
  double theta = 0.5;
  double kappa = 0.5;
  std::size_t cutoff = 80;
  std::size_t margin = 25;
  std::string algebra = "both";
};

inline void run_lorentz(const LorentzOptions& o, std::ostream& out) {
  const auto residual = [&](lorentz::ProbeAlgebra a) -> io::Json {
    const std::string tag = lorentz::to_string(a);
    if (o.algebra != "both" && o.algebra != tag) return nullptr;
    return lorentz::internal_symmetry_residual(o.theta, a, o.kappa, o.cutoff, o.margin);
  };
  const verify::BoostProperties bp = verify::boost_properties();
  io::Json j;
  j["schema"] = io::kSchemaVersion;
  j["theta"] = o.theta;
  j["kappa"] = o.kappa;
  j["cutoff"] = o.cutoff;
  j["margin"] = o.margin;
  j["residual_su11"] = residual(lorentz::ProbeAlgebra::su11);
  j["residual_weyl"] = residual(lorentz::ProbeAlgebra::weyl);
  const lorentz::Matrix2 b = lorentz::exp_boost(o.theta);
  j["boost_checks"] = {{"gamma", std::cosh(o.theta / 2.0)},
                       {"exp_vs_matrix", (b - lorentz::boost_matrix(std::cosh(o.theta / 2.0)).entries).cwiseAbs().maxCoeff()},
                       {"det_defect", bp.det_defect},
                       {"hermitian_defect", bp.hermitian_defect},
                       {"orthogonal_defect", bp.orthogonal_defect},
                       {"unitarity_witness_gamma_2", bp.unitarity_witness},
                       {"exp_boost_agreement", verify::boost_exp_defect(20, 3.0)},
                       {"group_law", verify::group_law_defect(5, 20)}};
  io::write_json(out, j);
}

// --------------------------------------------------------------------- jc

struct JCOptions {
  std::string variant = "linear";
  std::optional<std::string> alpha;
  std::optional<std::string> eta;
  double omega = 1.0;
  double omega0 = 1.0;
  double coupling = 1.0;
  std::optional<std::size_t> cutoff;
  double t_max = 10.0;
  std::size_t t_steps = 200;
  std::string compare = "both";
  std::string format = "csv";
  std::optional<std::string> summary;
};

struct JCResult {
  std::vector<double> times;
  std::optional<jc::TimeSeries> exact;
  std::optional<jc::TimeSeries> closed;
  std::optional<double> collapse_time;
  std::optional<double> revival_period;
  std::optional<double> max_abs_err;
};

inline JCResult compute_jc(const JCOptions& o) {
  detail::require(o.alpha.has_value() != o.eta.has_value(), "initial-state",
                  "give exactly one of --alpha (Glauber) or --eta (Barut-Girardello)");
  const bool glauber = o.alpha.has_value();
  const complex z = parse_complex(glauber ? *o.alpha : *o.eta);
  const std::size_t cutoff = o.cutoff ? *o.cutoff : static_cast<std::size_t>(std::ceil(3.0 * std::norm(z) + 40.0));
  const jc::JCModel m{o.variant == "su11" ? jc::Variant::su11 : jc::Variant::linear, o.omega, o.omega0, o.coupling,
                      cutoff};
  m.validate();
  const bool want_exact = o.compare != "closed";
  const bool want_closed = o.compare != "exact";
  if (want_closed) {
    detail::require(m.detuning() == 0.0, "resonance", "closed forms need omega == omega0");
  }

  const fock::FockState field = glauber ? jc::glauber_state(z, cutoff) : jc::barut_girardello_state(z, cutoff);
  const auto initial = jc::AtomFieldState::product(jc::AtomLevel::g, field);

  JCResult r;
  r.times = jc::uniform_grid(o.t_max, o.t_steps);
  if (want_exact) r.exact = jc::sz_exact(m, initial, r.times);
  if (want_closed) {
    jc::TimeSeries s;
    s.label = m.variant == jc::Variant::linear ? jc::SeriesLabel::series : jc::SeriesLabel::closed_form;
    for (double t : r.times) {
      double v = 0.0;
      if (m.variant == jc::Variant::linear) {
        v = glauber ? jc::sz_closed_linear_glauber(z, m.coupling, t) : jc::sz_series_linear_bg(z, m.coupling, t);
      } else {
        v = glauber ? jc::sz_closed_bs_glauber(z, m.coupling, t) : jc::sz_closed_bs_bg(z, m.coupling, t);
      }
      s.push_back(t, v);
    }
    r.closed = std::move(s);
  }
  if (r.exact && r.closed) {
    double worst = 0.0;
    for (std::size_t i = 0; i < r.times.size(); ++i) {
      worst = std::max(worst, std::abs(r.exact->values[i] - r.closed->values[i]));
    }
    r.max_abs_err = worst;
  }
  const double nbar = fock::expectation(field, fock::make_ladder(cutoff).number).real();
  const jc::TimeSeries& reference = r.exact ? *r.exact : *r.closed;
  if (nbar > 0.0) r.collapse_time = jc::collapse_time(reference, jc::rabi_period(m, nbar));
  r.revival_period = jc::revival_period(m);
  return r;
}

inline io::Json jc_summary(const JCResult& r) {
  const auto opt = [](const std::optional<double>& v) { return v ? io::Json(*v) : io::Json(nullptr); };
  io::Json j;
  j["schema"] = io::kSchemaVersion;
  j["collapse_time"] = opt(r.collapse_time);
  j["revival_period"] = opt(r.revival_period);
  j["max_abs_err"] = opt(r.max_abs_err);
  return j;
}

inline void write_jc(const JCOptions& o, const JCResult& r, std::ostream& out) {
  if (parse_format(o.format) == Format::json) {
    io::Json j = jc_summary(r);
    j["t"] = r.times;
    j["sz_exact"] = r.exact ? io::Json(r.exact->values) : io::Json(nullptr);
    j["sz_closed"] = r.closed ? io::Json(r.closed->values) : io::Json(nullptr);
    io::write_json(out, j);
    return;
  }
  out << "t,sz_exact,sz_closed,abs_err\n";
  for (std::size_t i = 0; i < r.times.size(); ++i) {
    out << io::format_double(r.times[i]) << ',';
    if (r.exact) out << io::format_double(r.exact->values[i]);
    out << ',';
    if (r.closed) out << io::format_double(r.closed->values[i]);
    out << ',';
    if (r.exact && r.closed) out << io::format_double(std::abs(r.exact->values[i] - r.closed->values[i]));
    out << '\n';
  }
}

// ------------------------------------------------------------------ driver

/// JSON config {"subcommand": ..., "<flag>": value, ...} as argv.
inline std::vector<std::string> config_to_args(const std::string& path) {
  std::ifstream in(path);
  detail::require(static_cast<bool>(in), "config", "cannot open config file " + path);
  io::Json j;
  try {
    j = io::Json::parse(in);
  } catch (const io::Json::parse_error& e) {
    throw precondition_error("config", std::string("invalid JSON: ") + e.what());
  }
  detail::require(j.is_object(), "config", "config must be a JSON object");
  detail::require(j.contains("subcommand") && j["subcommand"].is_string(), "config",
                  "config needs a string \"subcommand\"");
  std::vector<std::string> args;
  if (j.contains("output")) {
    detail::require(j["output"].is_string(), "config", "\"output\" must be a string");
    args.push_back("--output");
    args.push_back(j["output"].get<std::string>());
  }
  args.push_back(j["subcommand"].get<std::string>());
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() == "subcommand" || it.key() == "output") continue;
    const io::Json& v = it.value();
    const auto scalar = [&](const io::Json& x) -> std::string {
      if (x.is_string()) return x.get<std::string>();
      if (x.is_number_integer() || x.is_number_unsigned()) return x.dump();
      if (x.is_number_float()) return io::format_double(x.get<double>());
      throw precondition_error("config", "unsupported value for \"" + it.key() + "\"");
    };
    args.push_back("--" + it.key());
    if (v.is_array()) {
      for (const auto& x : v) args.push_back(scalar(x));
    } else {
      args.push_back(scalar(v));
    }
  }
  return args;
}

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  try {
    thread_cap();
    // --config replaces every other flag except --output.
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (args[i] != "--config") continue;
      detail::require(i + 1 < args.size(), "config", "--config needs a file");
      std::vector<std::string> rest;
      for (std::size_t k = 0; k < args.size(); ++k) {
        if (k == i || k == i + 1) continue;
        rest.push_back(args[k]);
      }
      std::vector<std::string> from_file = config_to_args(args[i + 1]);
      detail::require(rest.empty() || (rest.size() == 2 && rest[0] == "--output"), "config",
                      "--config cannot be combined with other flags except --output");
      rest.insert(rest.end(), from_file.begin(), from_file.end());
      args = std::move(rest);
      break;
    }

    CLI::App app{"su(1,1) and h(1) boson toolkit"};
    app.require_subcommand(1);
    std::string output;
    app.add_option("--output,-o", output, "write the artifact to this file instead of stdout");
    app.add_option("--config", "JSON config file (handled before parsing)");

    StatsOptions so;
    auto* stats_cmd = app.add_subcommand("stats", "occupation distribution of the m-mode coproduct state");
    stats_cmd->add_option("--n", so.n, "number of quanta")->required();
    stats_cmd->add_option("--m", so.m, "number of modes")->required();
    stats_cmd->add_option("--algebra", so.algebra)->check(CLI::IsMember({"weyl", "su11"}));
    stats_cmd->add_option("--method", so.method, "closed form or brute-force tensor oracle")
        ->check(CLI::IsMember({"closed", "brute"}));
    stats_cmd->add_option("--format", so.format)->check(CLI::IsMember({"csv", "json"}));

    OscillatorOptions oo;
    auto* osc_cmd = app.add_subcommand("oscillator", "residual table of the oscillator identities");
    osc_cmd->add_option("--kappa", oo.kappas, "Bargmann indices")->expected(1, -1);
    osc_cmd->add_option("--cutoff", oo.cutoff);
    osc_cmd->add_option("--margin", oo.margin);
    osc_cmd->add_option("--omega", oo.omega, "frequency in the generalized bracket");
    osc_cmd->add_option("--tolerance", oo.tolerance);
    osc_cmd->add_option("--format", oo.format)->check(CLI::IsMember({"csv", "json"}));

    LorentzOptions lo;
    auto* lor_cmd = app.add_subcommand("lorentz", "boost matrix checks and internal-symmetry residuals");
    lor_cmd->add_option("--theta", lo.theta);
    lor_cmd->add_option("--kappa", lo.kappa);
    lor_cmd->add_option("--cutoff", lo.cutoff);
    lor_cmd->add_option("--margin", lo.margin);
    lor_cmd->add_option("--algebra", lo.algebra)->check(CLI::IsMember({"su11", "weyl", "both"}));

    JCOptions jo;
    auto* jc_cmd = app.add_subcommand("jc", "<Sz(t)> for the linear or su11 Jaynes-Cummings model");
    jc_cmd->add_option("--variant", jo.variant)->check(CLI::IsMember({"linear", "su11"}));
    jc_cmd->add_option("--alpha", jo.alpha, "Glauber amplitude re,im");
    jc_cmd->add_option("--eta", jo.eta, "Barut-Girardello amplitude re,im");
    jc_cmd->add_option("--omega", jo.omega);
    jc_cmd->add_option("--omega0", jo.omega0);
    jc_cmd->add_option("--coupling", jo.coupling);
    jc_cmd->add_option("--cutoff", jo.cutoff, "default ceil(3|z|^2 + 40)");
    jc_cmd->add_option("--t-max", jo.t_max);
    jc_cmd->add_option("--t-steps", jo.t_steps);
    jc_cmd->add_option("--compare", jo.compare)->check(CLI::IsMember({"exact", "closed", "both"}));
    jc_cmd->add_option("--format", jo.format)->check(CLI::IsMember({"csv", "json"}));
    jc_cmd->add_option("--summary", jo.summary, "write the JSON summary here instead of stderr");

    auto* verify_cmd = app.add_subcommand("verify", "run the invariant suite");

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return kExitOk;
    } catch (const CLI::ParseError& e) {
      err << "bosonalg: parse error: " << e.what() << '\n';
      return kExitValidation;
    }

    std::ostringstream buffer;
    int status = kExitOk;
    std::string failure;
    if (stats_cmd->parsed()) {
      run_stats(so, buffer);
    } else if (osc_cmd->parsed()) {
      if (!run_oscillator(oo, buffer)) {
        status = kExitGuard;
        failure = "oscillator: identity residual above tolerance";
      }
    } else if (lor_cmd->parsed()) {
      run_lorentz(lo, buffer);
    } else if (jc_cmd->parsed()) {
      const JCResult r = compute_jc(jo);
      write_jc(jo, r, buffer);
      if (jo.summary) {
        std::ofstream s(*jo.summary);
        detail::require(static_cast<bool>(s), "summary", "cannot open summary file " + *jo.summary);
        io::write_json(s, jc_summary(r));
      } else {
        io::write_json(err, jc_summary(r));
      }
    } else if (verify_cmd->parsed()) {
      const verify::Report report = verify::run_all();
      verify::write_csv(buffer, report);
      if (!report.all_passed()) {
        status = kExitGuard;
        failure = "verify: " + std::to_string(report.failures()) + " check(s) failed";
      }
    }

    if (output.empty()) {
      out << buffer.str();
    } else {
      std::ofstream f(output);
      detail::require(static_cast<bool>(f), "output", "cannot open output file " + output);
      f << buffer.str();
    }
    if (!failure.empty()) err << "bosonalg: " << failure << '\n';
    return status;
  } catch (const precondition_error& e) {
    err << "bosonalg: precondition " << e.what() << '\n';
    return kExitValidation;
  } catch (const guard_error& e) {
    err << "bosonalg: guard " << e.what() << '\n';
    return kExitGuard;
  }
}

}  // namespace bosonalg::cli
