#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "landau/classical.hpp"
#include "landau/fock.hpp"
#include "landau/model.hpp"
#include "landau/quadrature.hpp"
#include "landau/wavefunction.hpp"

// Verification reports: every check becomes a ReportRecord carrying the
// expected value, the closed-form law it comes from, the per-route computed
// values, and the residual against a pinned tolerance. Reports serialize to
// JSON (stable key order, full-precision values plus a 12-significant-digit
// display column) or CSV, and identical RunConfigs produce byte-identical
// output, so reports double as regression golden files.

namespace landau::report {

using json = nlohmann::ordered_json;

struct RunConfig {
  double B = 1.0;
  double e = 1.0;
  double mass = 1.0;
  int n_max = 5;
  int m_min = -5;
  int cutoff = 20;
  int margin = 4;
  int quad_order = 64;
  int azimuthal = 128;
  bool parallel = false;
  std::optional<double> tol_override;  // when set, replaces every tolerance

  // per-check defaults
  double tol_expectation = 1e-8;
  double tol_identity = 1e-10;
  double tol_norm = 1e-10;
  double tol_hermiticity = 1e-12;
  double tol_classical_exact = 1e-12;
  double tol_classical_average = 1e-9;

  double expectation_tol() const { return tol_override.value_or(tol_expectation); }
  double identity_tol() const { return tol_override.value_or(tol_identity); }
  double norm_tol() const { return tol_override.value_or(tol_norm); }
  double hermiticity_tol() const { return tol_override.value_or(tol_hermiticity); }
  double classical_exact_tol() const { return tol_override.value_or(tol_classical_exact); }
  double classical_average_tol() const { return tol_override.value_or(tol_classical_average); }

  PhysicalConfig physical() const { return make_config(B, e, mass); }

  void validate() const {
    physical();  // checks B, e, mass
    if (n_max < 0) throw std::domain_error("n_max must be >= 0");
    if (m_min > n_max) throw std::domain_error("empty state grid: m_min > n_max");
    if (margin <= 0 || margin >= cutoff) {
      throw std::domain_error("need 0 < margin < cutoff");
    }
    if (quad_order < 1) throw std::domain_error("quad_order must be >= 1");
    if (azimuthal < 1) throw std::domain_error("azimuthal count must be >= 1");
    for (double tol : {tol_expectation, tol_identity, tol_norm,
                       tol_hermiticity, tol_classical_exact,
                       tol_classical_average,
                       tol_override.value_or(1.0)}) {
      if (!(tol > 0.0)) throw std::domain_error("tolerances must be > 0");
    }
  }
};

struct ReportRecord {
  std::string name;
  std::string inputs;  // e.g. "n=2 m=-3"; empty for global checks
  double expected = std::numeric_limits<double>::quiet_NaN();
  std::string provenance;  // closed-form law backing the expected value
  std::vector<std::pair<std::string, double>> computed;  // route -> value
  double residual = std::numeric_limits<double>::quiet_NaN();
  double tolerance = std::numeric_limits<double>::quiet_NaN();
  bool pass = false;
  std::string note;
};

struct Report {
  std::string command;
  RunConfig run;
  std::vector<ReportRecord> records;

  bool pass() const {
    return std::all_of(records.begin(), records.end(),
                       [](const ReportRecord& r) { return r.pass; });
  }
};

namespace detail {

inline std::string format_sig12(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

inline std::string format_full(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

inline std::string format_inputs(const QuantumNumbers& qn) {
  return "n=" + std::to_string(qn.n) + " m=" + std::to_string(qn.m);
}

// Residual against the expected value over all routes; records with no
// expected value (pure residual checks) compare against zero.
inline void finalize(ReportRecord& record) {
  double residual = 0.0;
  const double reference = std::isnan(record.expected) ? 0.0 : record.expected;
  for (const auto& [route, value] : record.computed) {
    residual = std::max(residual, std::abs(value - reference));
  }
  record.residual = residual;
  record.pass = residual <= record.tolerance;
}

inline unsigned sweep_workers(bool parallel) {
  return parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1u;
}

// Index-sharded parallel sweep; per-index work writes to its own slot, so
// the result (and therefore the report bytes) cannot depend on scheduling.
template <typename Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn) {
  if (count == 0) return;
  if (workers <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

inline const char* oam_provenance(const OamSpec& spec) {
  if (spec.axis == OamAxis::Origin) {
    switch (spec.kind) {
      case OamKind::Canonical:
        return "closed form: <L_can> = m (symmetric-gauge eigenvalue)";
      case OamKind::Mechanical:
        return "closed form: <L_mech> = 2n+1";
      case OamKind::Pseudo:
        return "closed form: <L_ps> = m (reduces to canonical in symmetric gauge)";
    }
  }
  switch (spec.kind) {
    case OamKind::Canonical:
      return "closed form: <L_can about guiding center> = (2n+1)/2";
    case OamKind::Mechanical:
      return "operator identity: L_mech about guiding center = (2/omega) H";
    case OamKind::Pseudo:
      return "operator identity: L_ps about guiding center = (1/omega) H";
  }
  return "";
}

}  // namespace detail

inline std::vector<QuantumNumbers> state_grid(const RunConfig& run) {
  std::vector<QuantumNumbers> states;
  for (int n = 0; n <= run.n_max; ++n) {
    for (int m = run.m_min; m <= n; ++m) states.push_back({n, m});
  }
  return states;
}

// --------------------------------------------------------------------------
// table1: the six OAM expectation values per state, quadrature and Fock
// routes side by side against the closed forms.
// --------------------------------------------------------------------------

inline Report build_table1_report(const RunConfig& run) {
  run.validate();
  const PhysicalConfig cfg = run.physical();
  const QuadratureRule rule = make_quadrature(run.quad_order, run.azimuthal);
  const fock::OperatorSet ops = fock::build_operator_set(cfg, run.cutoff);
  const auto states = state_grid(run);
  const auto specs = all_oam_specs();

  struct Row {
    std::array<double, 6> quadrature{};
    std::array<double, 6> fock_values{};
    bool interior = false;
  };
  std::vector<Row> rows(states.size());

  detail::parallel_for(states.size(), detail::sweep_workers(run.parallel), [&](std::size_t i) {
    const QuantumNumbers qn = states[i];
    Row& row = rows[i];
    row.interior =
        fock::InteriorProjector{run.cutoff, run.margin}.contains(
            ops.basis, qn);
    for (std::size_t s = 0; s < specs.size(); ++s) {
      row.quadrature[s] = expectation_oam(qn, cfg, specs[s], rule);
      if (row.interior) {
        row.fock_values[s] = expectation_fock(qn, ops, specs[s], run.margin);
      }
    }
  });

  Report report;
  report.command = "table1";
  report.run = run;
  for (std::size_t i = 0; i < states.size(); ++i) {
    const QuantumNumbers qn = states[i];
    const Row& row = rows[i];
    for (std::size_t s = 0; s < specs.size(); ++s) {
      ReportRecord record;
      record.name = "oam " + to_string(specs[s]);
      record.inputs = detail::format_inputs(qn);
      record.expected = closed_form_oam(qn, specs[s]);
      record.provenance = detail::oam_provenance(specs[s]);
      record.tolerance = run.expectation_tol();
      record.computed.emplace_back("quadrature", row.quadrature[s]);
      if (row.interior) {
        record.computed.emplace_back("fock", row.fock_values[s]);
        detail::finalize(record);
      } else {
        record.residual = std::numeric_limits<double>::quiet_NaN();
        record.pass = false;
        record.note = "state outside interior block (cutoff " +
                      std::to_string(run.cutoff) + ", margin " +
                      std::to_string(run.margin) + "); fock route skipped";
      }
      report.records.push_back(std::move(record));
    }
  }
  return report;
}

// --------------------------------------------------------------------------
// verify: hermiticity, conservation laws, operator identities, norms,
// oracle equivalence, radii, and the energy decomposition.
// --------------------------------------------------------------------------

inline Report build_verify_report(const RunConfig& run) {
  run.validate();
  const PhysicalConfig cfg = run.physical();
  const QuadratureRule rule = make_quadrature(run.quad_order, run.azimuthal);
  const fock::OperatorSet ops = fock::build_operator_set(cfg, run.cutoff);
  const fock::InteriorProjector proj =
      fock::interior_projector(run.cutoff, run.margin);
  const auto states = state_grid(run);

  Report report;
  report.command = "verify";
  report.run = run;

  // hermiticity of the full operator set
  {
    double worst = 0.0;
    std::string worst_label;
    for (const auto& entry : fock::hermiticity_checks(ops)) {
      if (entry.residual >= worst) {
        worst = entry.residual;
        worst_label = entry.name;
      }
    }
    ReportRecord record;
    record.name = "hermiticity max|M - adj(M)| over operator set";
    record.provenance = "all listed operators are observables (Hermitian)";
    record.tolerance = run.hermiticity_tol();
    record.computed.emplace_back("fock", worst);
    record.note = "worst operator: " + worst_label;
    detail::finalize(record);
    report.records.push_back(std::move(record));
  }

  for (const auto& entry : fock::conservation_checks(ops, proj)) {
    ReportRecord record;
    record.name = "conservation " + entry.name;
    record.provenance = "constant of motion: commutator with H vanishes";
    record.tolerance = run.identity_tol() * cfg.omega;
    record.computed.emplace_back("fock", entry.residual);
    detail::finalize(record);
    report.records.push_back(std::move(record));
  }

  for (const auto& entry : fock::identity_checks(ops, proj, cfg)) {
    ReportRecord record;
    record.name = "identity " + entry.name;
    record.provenance = "exact operator identity (interior block)";
    record.tolerance = run.identity_tol();
    record.computed.emplace_back("fock", entry.residual);
    detail::finalize(record);
    report.records.push_back(std::move(record));
  }

  // quadrature sweeps over the state grid
  struct Sweep {
    double norm_dev = 0.0;
    std::array<double, 6> quad{};
    std::array<double, 6> fock_values{};
    bool interior = false;
    double r2_quad = 0.0;
    EnergyParts energy{};
  };
  std::vector<Sweep> sweeps(states.size());
  const auto specs = all_oam_specs();

  detail::parallel_for(states.size(), detail::sweep_workers(run.parallel), [&](std::size_t i) {
    const QuantumNumbers qn = states[i];
    Sweep& sweep = sweeps[i];
    sweep.norm_dev = std::abs(norm_check(qn, cfg, rule) - 1.0);
    sweep.r2_quad = expectation_r2(qn, cfg, rule);
    sweep.energy = expectation_energy_parts(qn, cfg, rule);
    sweep.interior = proj.contains(ops.basis, qn);
    for (std::size_t s = 0; s < specs.size(); ++s) {
      sweep.quad[s] = expectation_oam(qn, cfg, specs[s], rule);
      if (sweep.interior) {
        sweep.fock_values[s] = expectation_fock(qn, ops, specs[s], run.margin);
      }
    }
  });

  int outside = 0;
  double norm_worst = 0.0;
  double equivalence_worst = 0.0;
  double rc2_worst = 0.0, R2_worst = 0.0, r2_sum_worst = 0.0;
  double energy_total_worst = 0.0, energy_osc_worst = 0.0,
         energy_larmor_worst = 0.0;
  const double l_B2 = cfg.l_B * cfg.l_B;
  for (std::size_t i = 0; i < states.size(); ++i) {
    const QuantumNumbers qn = states[i];
    const Sweep& sweep = sweeps[i];
    norm_worst = std::max(norm_worst, sweep.norm_dev);
    if (!sweep.interior) {
      ++outside;
      continue;
    }
    for (std::size_t s = 0; s < specs.size(); ++s) {
      equivalence_worst = std::max(
          equivalence_worst, std::abs(sweep.quad[s] - sweep.fock_values[s]));
    }
    const double rc2 = expectation_fock(qn, ops, ops.r_c2, run.margin);
    const double R2 = expectation_fock(qn, ops, ops.R2, run.margin);
    rc2_worst = std::max(rc2_worst,
                         std::abs(rc2 - (2.0 * qn.n + 1.0) * l_B2));
    R2_worst = std::max(
        R2_worst, std::abs(R2 - (2.0 * (qn.n - qn.m) + 1.0) * l_B2));
    r2_sum_worst = std::max(r2_sum_worst, std::abs(sweep.r2_quad - (rc2 + R2)));
    energy_total_worst =
        std::max(energy_total_worst,
                 std::abs(sweep.energy.total - landau_energy(cfg, qn.n)));
    energy_osc_worst = std::max(
        energy_osc_worst,
        std::abs(sweep.energy.oscillator -
                 (2.0 * qn.n - qn.m + 1.0) * cfg.omega_L));
    energy_larmor_worst =
        std::max(energy_larmor_worst,
                 std::abs(sweep.energy.larmor - qn.m * cfg.omega_L));
  }

  const auto add_sweep_record = [&](std::string name, std::string provenance,
                                    double worst, double tol) {
    ReportRecord record;
    record.name = std::move(name);
    record.inputs = "grid n<=" + std::to_string(run.n_max) +
                    " m>=" + std::to_string(run.m_min);
    record.provenance = std::move(provenance);
    record.tolerance = tol;
    record.computed.emplace_back("max_abs_deviation", worst);
    detail::finalize(record);
    report.records.push_back(std::move(record));
  };

  if (outside > 0) {
    ReportRecord record;
    record.name = "interior coverage of state grid";
    record.provenance = "every grid state must sit inside the interior block";
    record.tolerance = 0.5;
    record.computed.emplace_back("states_outside", static_cast<double>(outside));
    detail::finalize(record);
    record.note = "raise the cutoff or shrink the grid";
    report.records.push_back(std::move(record));
  }

  add_sweep_record("wavefunction norm", "normalized states: integral of |psi|^2 = 1",
                   norm_worst, run.norm_tol());
  add_sweep_record("oracle equivalence quadrature vs fock (six OAMs)",
                   "two independent routes to the same expectation values",
                   equivalence_worst, run.expectation_tol());
  add_sweep_record("cyclotron radius squared (fock)",
                   "closed form: <r_c^2> = (2n+1) l_B^2", rc2_worst,
                   run.identity_tol());
  add_sweep_record("guiding-center distance squared (fock)",
                   "closed form: <R^2> = (2n-2m+1) l_B^2", R2_worst,
                   run.identity_tol());
  add_sweep_record("r^2 additivity (quadrature vs fock radii)",
                   "closed form: <r^2> = <r_c^2> + <R^2>", r2_sum_worst,
                   run.expectation_tol());
  add_sweep_record("energy total (quadrature)",
                   "closed form: <H> = omega (n + 1/2)", energy_total_worst,
                   run.expectation_tol() * cfg.omega);
  add_sweep_record("energy oscillator part (quadrature)",
                   "closed form: <H_osc> = (2n-m+1) omega_L", energy_osc_worst,
                   run.expectation_tol() * cfg.omega);
  add_sweep_record("energy Larmor part (quadrature)",
                   "closed form: omega_L <L_can> = m omega_L",
                   energy_larmor_worst, run.expectation_tol() * cfg.omega);
  return report;
}

// --------------------------------------------------------------------------
// spectrum: E_n by closed form, quadrature, and interior Fock eigenvalues,
// with level multiplicities.
// --------------------------------------------------------------------------

inline Report build_spectrum_report(const RunConfig& run) {
  run.validate();
  const PhysicalConfig cfg = run.physical();
  const QuadratureRule rule = make_quadrature(run.quad_order, run.azimuthal);
  const fock::OperatorSet ops = fock::build_operator_set(cfg, run.cutoff);
  const fock::InteriorProjector proj =
      fock::interior_projector(run.cutoff, run.margin);
  const Eigen::VectorXd eigenvalues = fock::interior_spectrum(ops, proj);

  Report report;
  report.command = "spectrum";
  report.run = run;

  const int top_level = run.cutoff - run.margin;
  for (int n = 0; n <= run.n_max; ++n) {
    const double expected = landau_energy(cfg, n);

    // eigenvalues belonging to level n: within half a level spacing
    double fock_worst = expected;
    int multiplicity = 0;
    for (int i = 0; i < eigenvalues.size(); ++i) {
      if (std::abs(eigenvalues[i] - expected) < 0.5 * cfg.omega) {
        ++multiplicity;
        if (std::abs(eigenvalues[i] - expected) >=
            std::abs(fock_worst - expected)) {
          fock_worst = eigenvalues[i];
        }
      }
    }

    ReportRecord record;
    record.name = "E_" + std::to_string(n);
    record.inputs = "n=" + std::to_string(n);
    record.expected = expected;
    record.provenance = "closed form: E_n = omega (n + 1/2)";
    record.tolerance = run.expectation_tol() * cfg.omega;
    record.computed.emplace_back("closed_form", landau_energy(cfg, n));
    record.computed.emplace_back(
        "quadrature", expectation_energy(QuantumNumbers{n, std::min(0, run.m_min)},
                                         cfg, rule));
    record.computed.emplace_back("fock_worst_eigenvalue", fock_worst);
    detail::finalize(record);
    report.records.push_back(std::move(record));

    ReportRecord degeneracy;
    degeneracy.name = "interior degeneracy of E_" + std::to_string(n);
    degeneracy.inputs = "n=" + std::to_string(n);
    degeneracy.expected =
        n <= top_level ? static_cast<double>(top_level - n + 1) : 0.0;
    degeneracy.provenance =
        "combinatorics: one eigenvalue per admissible guiding-center mode";
    degeneracy.tolerance = 0.5;
    degeneracy.computed.emplace_back("fock",
                                     static_cast<double>(multiplicity));
    detail::finalize(degeneracy);
    report.records.push_back(std::move(degeneracy));
  }
  return report;
}

// --------------------------------------------------------------------------
// classical: trajectory datasets plus a summary report checking the
// closed-form laws and the RK4 oracle.
// --------------------------------------------------------------------------

struct ClassicalRun {
  double x0 = 0.0;
  double y0 = -1.0;
  double vx0 = 1.0;
  double vy0 = 0.0;
  int samples = 1024;  // Simpson subintervals per period and CSV rows
  double dt = 0.0;     // RK4 step; 0 selects T/1000
};

inline void write_trajectory_csv(std::ostream& os,
                                 const std::vector<classical::ClassicalState>& path,
                                 const classical::InitialConditions& ic,
                                 const PhysicalConfig& cfg) {
  os << "t,x,y,vx,vy,L_mech_origin,L_ps_origin,L_mech_gc,L_ps_gc\n";
  for (const auto& s : path) {
    const double mech_o = classical::classical_oam(
        s, ic, cfg, {OamKind::Mechanical, OamAxis::Origin});
    const double ps_o = classical::classical_oam(
        s, ic, cfg, {OamKind::Pseudo, OamAxis::Origin});
    const double mech_gc = classical::classical_oam(
        s, ic, cfg, {OamKind::Mechanical, OamAxis::GuidingCenter});
    const double ps_gc = classical::classical_oam(
        s, ic, cfg, {OamKind::Pseudo, OamAxis::GuidingCenter});
    os << detail::format_full(s.t) << ',' << detail::format_full(s.x) << ','
       << detail::format_full(s.y) << ',' << detail::format_full(s.vx) << ','
       << detail::format_full(s.vy) << ',' << detail::format_full(mech_o)
       << ',' << detail::format_full(ps_o) << ','
       << detail::format_full(mech_gc) << ',' << detail::format_full(ps_gc)
       << '\n';
  }
}

inline Report build_classical_report(const RunConfig& run,
                                     const ClassicalRun& classical_run,
                                     std::vector<classical::ClassicalState>* closed_path = nullptr,
                                     std::vector<classical::ClassicalState>* rk4_path = nullptr) {
  run.validate();
  const PhysicalConfig cfg = run.physical();
  const auto ic = classical::make_initial_conditions(
      cfg, classical_run.x0, classical_run.y0, classical_run.vx0,
      classical_run.vy0);
  const double period = 2.0 * std::numbers::pi / cfg.omega;
  const int steps =
      classical_run.dt > 0.0
          ? std::max(1, static_cast<int>(std::llround(period / classical_run.dt)))
          : 1000;
  const double dt = classical_run.dt > 0.0 ? classical_run.dt : period / 1000.0;

  const auto rk4 = classical::integrate_rk4(ic, cfg, dt, steps);
  std::vector<classical::ClassicalState> closed;
  closed.reserve(rk4.size());
  for (const auto& s : rk4) {
    closed.push_back(classical::closed_form_state(ic, cfg, s.t));
  }

  Report report;
  report.command = "classical";
  report.run = run;

  const double scale_mech = ic.r_c * cfg.m_e * ic.v0;
  const double eB = cfg.e * cfg.B;
  const double ps_origin_expected =
      0.5 * scale_mech - 0.5 * eB * (ic.X * ic.X + ic.Y * ic.Y);

  const auto add_record = [&](std::string name, std::string provenance,
                              std::string route, double value, double expected,
                              double tol) {
    ReportRecord record;
    record.name = std::move(name);
    record.inputs = "x0=" + detail::format_sig12(ic.x0) +
                    " y0=" + detail::format_sig12(ic.y0) +
                    " vx0=" + detail::format_sig12(ic.vx0) +
                    " vy0=" + detail::format_sig12(ic.vy0);
    record.expected = expected;
    record.provenance = std::move(provenance);
    record.tolerance = tol;
    record.computed.emplace_back(std::move(route), value);
    detail::finalize(record);
    report.records.push_back(std::move(record));
  };

  // one-period time averages against the closed-form laws
  add_record("time average mechanical/origin",
             "closed form: <L_mech>_T = r_c m_e v_0 (oscillatory part averages out)",
             "simpson",
             classical::time_average_oam(ic, cfg,
                                         {OamKind::Mechanical, OamAxis::Origin},
                                         classical_run.samples),
             scale_mech, run.classical_average_tol());
  add_record("time average pseudo/origin",
             "closed form: L_ps = r_c m_e v_0 / 2 - (eB/2)(X^2 + Y^2), constant",
             "simpson",
             classical::time_average_oam(ic, cfg,
                                         {OamKind::Pseudo, OamAxis::Origin},
                                         classical_run.samples),
             ps_origin_expected, run.classical_exact_tol());
  add_record("time average mechanical/guiding center",
             "closed form: r_c m_e v_0, constant", "simpson",
             classical::time_average_oam(
                 ic, cfg, {OamKind::Mechanical, OamAxis::GuidingCenter},
                 classical_run.samples),
             scale_mech, run.classical_exact_tol());
  add_record("time average pseudo/guiding center",
             "closed form: r_c m_e v_0 / 2, constant", "simpson",
             classical::time_average_oam(
                 ic, cfg, {OamKind::Pseudo, OamAxis::GuidingCenter},
                 classical_run.samples),
             0.5 * scale_mech, run.classical_exact_tol());

  // pointwise constancy along the closed form
  double mech_gc_dev = 0.0, ps_gc_dev = 0.0, ps_origin_dev = 0.0;
  double gc_extract_closed = 0.0;
  for (const auto& s : closed) {
    mech_gc_dev = std::max(
        mech_gc_dev,
        std::abs(classical::classical_oam(
                     s, ic, cfg, {OamKind::Mechanical, OamAxis::GuidingCenter}) -
                 scale_mech));
    ps_gc_dev = std::max(
        ps_gc_dev,
        std::abs(classical::classical_oam(
                     s, ic, cfg, {OamKind::Pseudo, OamAxis::GuidingCenter}) -
                 0.5 * scale_mech));
    ps_origin_dev = std::max(
        ps_origin_dev,
        std::abs(classical::classical_oam(s, ic, cfg,
                                          {OamKind::Pseudo, OamAxis::Origin}) -
                 ps_origin_expected));
    const auto [X, Y] = classical::guiding_center(cfg, s.x, s.y, s.vx, s.vy);
    gc_extract_closed = std::max(
        gc_extract_closed, std::max(std::abs(X - ic.X), std::abs(Y - ic.Y)));
  }
  add_record("constancy mechanical/guiding center (closed form)",
             "closed form: r_c m_e v_0 at every instant", "max_abs_deviation",
             mech_gc_dev, 0.0, run.classical_exact_tol());
  add_record("constancy pseudo/guiding center (closed form)",
             "closed form: r_c m_e v_0 / 2 at every instant",
             "max_abs_deviation", ps_gc_dev, 0.0, run.classical_exact_tol());
  add_record("constancy pseudo/origin (closed form)",
             "closed form: constant of motion", "max_abs_deviation",
             ps_origin_dev, 0.0, run.classical_exact_tol());
  add_record("guiding-center re-extraction (closed form)",
             "X, Y are constants of motion", "max_abs_deviation",
             gc_extract_closed, 0.0, run.classical_exact_tol());

  // RK4 oracle against the closed form
  double state_dev = 0.0, gc_extract_rk4 = 0.0;
  for (std::size_t i = 0; i < rk4.size(); ++i) {
    state_dev = std::max({state_dev, std::abs(rk4[i].x - closed[i].x),
                          std::abs(rk4[i].y - closed[i].y),
                          std::abs(rk4[i].vx - closed[i].vx),
                          std::abs(rk4[i].vy - closed[i].vy)});
    const auto [X, Y] =
        classical::guiding_center(cfg, rk4[i].x, rk4[i].y, rk4[i].vx, rk4[i].vy);
    gc_extract_rk4 = std::max(
        gc_extract_rk4, std::max(std::abs(X - ic.X), std::abs(Y - ic.Y)));
  }
  add_record("rk4 vs closed form (one period)",
             "RK4 global error O(dt^4)", "max_abs_deviation", state_dev, 0.0,
             run.tol_override.value_or(1e-9) * std::max(ic.r_c, ic.v0));

  const double speed_end = std::hypot(rk4.back().vx, rk4.back().vy);
  add_record("rk4 speed drift over one period",
             "magnetic force does no work", "abs_deviation",
             std::abs(speed_end - ic.v0), 0.0,
             run.tol_override.value_or(1e-10) * ic.v0);

  add_record("guiding-center re-extraction (rk4)",
             "X, Y are constants of motion", "max_abs_deviation",
             gc_extract_rk4, 0.0, run.tol_override.value_or(1e-9));

  // conservation of the pseudo OAM along the numerical trajectory
  double drift = 0.0;
  std::vector<double> ps_values(rk4.size());
  for (std::size_t i = 0; i < rk4.size(); ++i) {
    ps_values[i] = classical::classical_oam(rk4[i], ic, cfg,
                                            {OamKind::Pseudo, OamAxis::Origin});
  }
  for (std::size_t i = 1; i + 1 < rk4.size(); ++i) {
    drift = std::max(drift,
                     std::abs((ps_values[i + 1] - ps_values[i - 1]) / (2.0 * dt)));
  }
  add_record("pseudo-OAM drift |dL_ps/dt| along rk4",
             "L_ps about the origin is conserved", "max_abs_derivative", drift,
             0.0,
             run.tol_override.value_or(1e-6) * cfg.omega * scale_mech);

  if (closed_path) *closed_path = std::move(closed);
  if (rk4_path) *rk4_path = rk4;
  return report;
}

// --------------------------------------------------------------------------
// serialization
// --------------------------------------------------------------------------

inline json config_json(const RunConfig& run) {
  json j;
  j["B"] = run.B;
  j["e"] = run.e;
  j["mass"] = run.mass;
  j["n_max"] = run.n_max;
  j["m_min"] = run.m_min;
  j["cutoff"] = run.cutoff;
  j["margin"] = run.margin;
  j["quad_order"] = run.quad_order;
  j["azimuthal"] = run.azimuthal;
  j["parallel"] = run.parallel;
  if (run.tol_override) {
    j["tol_override"] = *run.tol_override;
  } else {
    j["tol_override"] = nullptr;
  }
  return j;
}

inline json to_json(const Report& report) {
  json j;
  j["command"] = report.command;
  j["config"] = config_json(report.run);
  j["pass"] = report.pass();
  json records = json::array();
  for (const auto& record : report.records) {
    json r;
    r["name"] = record.name;
    if (!record.inputs.empty()) r["inputs"] = record.inputs;
    if (!std::isnan(record.expected)) {
      r["expected"] = record.expected;
      r["expected_display"] = detail::format_sig12(record.expected);
    }
    r["provenance"] = record.provenance;
    json computed;
    json display;
    for (const auto& [route, value] : record.computed) {
      computed[route] = value;
      display[route] = detail::format_sig12(value);
    }
    r["computed"] = computed;
    r["display"] = display;
    if (!std::isnan(record.residual)) r["residual"] = record.residual;
    r["tolerance"] = record.tolerance;
    r["pass"] = record.pass;
    if (!record.note.empty()) r["note"] = record.note;
    records.push_back(std::move(r));
  }
  j["records"] = std::move(records);
  return j;
}

inline std::string to_json_string(const Report& report) {
  return to_json(report).dump(2) + "\n";
}

namespace detail {

inline std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

}  // namespace detail

inline std::string to_csv_string(const Report& report) {
  std::string out = "name,inputs,expected,residual,tolerance,pass,computed\n";
  for (const auto& record : report.records) {
    std::string computed;
    for (const auto& [route, value] : record.computed) {
      if (!computed.empty()) computed += ';';
      computed += route + "=" + detail::format_full(value);
    }
    out += detail::csv_escape(record.name) + ',' +
           detail::csv_escape(record.inputs) + ',' +
           (std::isnan(record.expected) ? ""
                                        : detail::format_full(record.expected)) +
           ',' +
           (std::isnan(record.residual) ? ""
                                        : detail::format_full(record.residual)) +
           ',' + detail::format_full(record.tolerance) + ',' +
           (record.pass ? "true" : "false") + ',' +
           detail::csv_escape(computed) + '\n';
  }
  return out;
}

}  // namespace landau::report
