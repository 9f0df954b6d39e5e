// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Tolerances are pinned here, not configurable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "landau/landau.hpp"
#include "oracles.hpp"

using namespace landau;

namespace {

struct Criterion {
  std::string name;
  bool pass;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<QuantumNumbers> full_grid() {
  std::vector<QuantumNumbers> states;
  for (int n = 0; n <= 5; ++n) {
    for (int m = -5; m <= n; ++m) states.push_back({n, m});
  }
  return states;
}

std::string detail_line(double residual, double tol, double elapsed,
                        double budget) {
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "max residual %.3e (tol %.0e), %.2f s (budget %.0f s)",
                residual, tol, elapsed, budget);
  return buf;
}

// 1. Table-1 reproduction by both quantum routes, 1e-8, under 10 s.
Criterion criterion_table1() {
  const auto start = Clock::now();
  const auto cfg = make_config(1.0, 1.0, 1.0);
  const auto rule = make_quadrature(64, 128);
  const auto ops = fock::build_operator_set(cfg, 20);
  double worst = 0.0;
  for (const auto& qn : full_grid()) {
    for (const auto& spec : all_oam_specs()) {
      const double expected = closed_form_oam(qn, spec);
      worst = std::max(worst, std::abs(expectation_oam(qn, cfg, spec, rule) -
                                       expected));
      worst = std::max(worst, std::abs(fock::expectation_fock(qn, ops, spec, 4) -
                                       expected));
    }
  }
  const double elapsed = seconds_since(start);
  return {"table-1 reproduction (quadrature + fock, n<=5, m>=-5)",
          worst <= 1e-8 && elapsed < 10.0,
          detail_line(worst, 1e-8, elapsed, 10)};
}

// 2. Radii formulas: fock within 1e-10, quadrature additivity within 1e-8.
Criterion criterion_radii() {
  const auto cfg = make_config(1.0, 1.0, 1.0);
  const auto rule = make_quadrature(64, 128);
  const auto ops = fock::build_operator_set(cfg, 20);
  const double l_B2 = cfg.l_B * cfg.l_B;
  double worst_fock = 0.0;
  double worst_quad = 0.0;
  for (const auto& qn : full_grid()) {
    const double rc2 = fock::expectation_fock(qn, ops, ops.r_c2, 4);
    const double R2 = fock::expectation_fock(qn, ops, ops.R2, 4);
    worst_fock = std::max(worst_fock,
                          std::abs(rc2 - (2.0 * qn.n + 1.0) * l_B2));
    worst_fock = std::max(
        worst_fock, std::abs(R2 - (2.0 * (qn.n - qn.m) + 1.0) * l_B2));
    worst_quad = std::max(
        worst_quad, std::abs(expectation_r2(qn, cfg, rule) - (rc2 + R2)));
  }
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "fock residual %.3e (tol 1e-10), additivity %.3e (tol 1e-8)",
                worst_fock, worst_quad);
  return {"radii formulas <r_c^2>, <R^2>, <r^2>",
          worst_fock <= 1e-10 && worst_quad <= 1e-8, buf};
}

// 3. Operator identity suite at cutoff 20, margin 4: residuals 1e-10,
// under 5 s (including the operator build).
Criterion criterion_identities() {
  const auto start = Clock::now();
  const auto cfg = make_config(1.0, 1.0, 1.0);
  const auto ops = fock::build_operator_set(cfg, 20);
  const auto proj = fock::interior_projector(20, 4);
  double worst = 0.0;
  for (const auto& entry : fock::conservation_checks(ops, proj)) {
    worst = std::max(worst, entry.residual);
  }
  for (const auto& entry : fock::identity_checks(ops, proj, cfg)) {
    worst = std::max(worst, entry.residual);
  }
  const double elapsed = seconds_since(start);
  return {"operator identity suite (cutoff 20, margin 4)",
          worst <= 1e-10 && elapsed < 5.0,
          detail_line(worst, 1e-10, elapsed, 5)};
}

// 4. Energy decomposition <H> = <H_osc> + omega_L m on the full grid, 1e-8.
Criterion criterion_energy() {
  const auto cfg = make_config(1.0, 1.0, 1.0);
  const auto rule = make_quadrature(64, 128);
  double worst = 0.0;
  for (const auto& qn : full_grid()) {
    const auto parts = expectation_energy_parts(qn, cfg, rule);
    worst = std::max(worst, std::abs(parts.total - landau_energy(cfg, qn.n)));
    worst = std::max(worst, std::abs(parts.oscillator -
                                     (2.0 * qn.n - qn.m + 1.0) * cfg.omega_L));
    worst = std::max(worst, std::abs(parts.larmor - qn.m * cfg.omega_L));
  }
  char buf[160];
  std::snprintf(buf, sizeof(buf), "max residual %.3e (tol 1e-8)", worst);
  return {"energy decomposition (oscillator + Larmor)", worst <= 1e-8, buf};
}

// 5. Classical suite: case A constants (1e-12), case B averages (1e-9 /
// 1e-12), RK4 oracle, pseudo-OAM drift; under 2 s.
Criterion criterion_classical() {
  const auto start = Clock::now();
  const auto cfg = make_config(1.0, 1.0, 1.0);
  bool pass = true;
  double worst = 0.0;
  const auto track = [&](double residual, double tol) {
    pass = pass && residual <= tol;
    worst = std::max(worst, residual);
  };

  // case A: instantaneous values r_c m_e v0 and half of it
  const auto a = classical::case_a(cfg, 1.0);
  const double a_scale = a.r_c * cfg.m_e * a.v0;
  for (double t : {0.0, 0.9, 2.7, 5.8}) {
    const auto s = classical::closed_form_state(a, cfg, t);
    track(std::abs(classical::classical_oam(
                       s, a, cfg, {OamKind::Mechanical, OamAxis::Origin}) -
                   a_scale),
          1e-12);
    track(std::abs(classical::classical_oam(
                       s, a, cfg, {OamKind::Pseudo, OamAxis::Origin}) -
                   0.5 * a_scale),
          1e-12);
  }

  // case B centered at (3, 4)
  const auto b = classical::case_b(cfg, 1.0, 3.0, 4.0);
  const double b_scale = b.r_c * cfg.m_e * b.v0;
  const double ps_expected =
      0.5 * b_scale - 0.5 * cfg.e * cfg.B * (b.X * b.X + b.Y * b.Y);
  track(std::abs(classical::time_average_oam(
                     b, cfg, {OamKind::Mechanical, OamAxis::Origin}, 1024) -
                 b_scale),
        1e-9);
  for (double t : {0.0, 1.3, 4.1}) {
    const auto s = classical::closed_form_state(b, cfg, t);
    track(std::abs(classical::classical_oam(
                       s, b, cfg, {OamKind::Pseudo, OamAxis::Origin}) -
                   ps_expected),
          1e-12);
  }

  // RK4 against the closed form over one period at dt = T/1000
  const double T = 2.0 * std::numbers::pi / cfg.omega;
  const auto path = classical::integrate_rk4(b, cfg, T / 1000.0, 1000);
  double rk4_dev = 0.0;
  for (const auto& s : path) {
    const auto ref = classical::closed_form_state(b, cfg, s.t);
    rk4_dev = std::max({rk4_dev, std::abs(s.x - ref.x), std::abs(s.y - ref.y),
                        std::abs(s.vx - ref.vx), std::abs(s.vy - ref.vy)});
  }
  track(rk4_dev, 1e-9 * std::max(b.r_c, b.v0));

  // pseudo-OAM drift along the numerical trajectory
  std::vector<double> ps_series;
  ps_series.reserve(path.size());
  for (const auto& s : path) {
    ps_series.push_back(classical::classical_oam(
        s, b, cfg, {OamKind::Pseudo, OamAxis::Origin}));
  }
  double drift = 0.0;
  const double dt = T / 1000.0;
  for (std::size_t i = 1; i + 1 < ps_series.size(); ++i) {
    drift = std::max(
        drift, std::abs((ps_series[i + 1] - ps_series[i - 1]) / (2.0 * dt)));
  }
  track(drift, 1e-6 * cfg.omega * b.r_c * cfg.m_e * b.v0);

  const double elapsed = seconds_since(start);
  pass = pass && elapsed < 2.0;
  return {"classical suite (cases A/B, averages, RK4 oracle, drift)", pass,
          detail_line(worst, 1e-9, elapsed, 2)};
}

// 6. Property suites: normalization, recurrence-vs-series, derivative,
// m-independence, sign correlation.
Criterion criterion_properties() {
  const auto cfg = make_config(1.0, 1.0, 1.0);
  const auto rule = make_quadrature(64, 128);
  const auto ops = fock::build_operator_set(cfg, 20);
  bool pass = true;
  std::string failure;
  const auto track = [&](bool ok, const char* what) {
    if (!ok && failure.empty()) failure = what;
    pass = pass && ok;
  };

  // normalization within 1e-10 on the full grid
  double norm_worst = 0.0;
  for (const auto& qn : full_grid()) {
    norm_worst = std::max(norm_worst,
                          std::abs(norm_check(qn, cfg, rule) - 1.0));
  }
  track(norm_worst <= 1e-10, "normalization");

  // Laguerre recurrence vs series, relative 1e-10
  double laguerre_worst = 0.0;
  for (int degree = 0; degree <= 15; ++degree) {
    for (int order = 0; order <= 10; ++order) {
      for (double z : {0.1, 1.0, 5.0, 20.0}) {
        const double recurrence = assoc_laguerre(degree, order, z);
        const double series = oracles::laguerre_series(degree, order, z);
        const double scale =
            std::max({1.0, std::abs(recurrence), std::abs(series)});
        laguerre_worst =
            std::max(laguerre_worst, std::abs(recurrence - series) / scale);
      }
    }
  }
  track(laguerre_worst <= 1e-10, "laguerre recurrence vs series");

  // analytic vs finite-difference radial derivative, relative 1e-6
  std::mt19937 gen(41);
  std::uniform_real_distribution<double> dist(0.05, 5.0);
  const double h = 1e-5 * cfg.l_B;
  bool derivative_ok = true;
  for (const auto& qn : full_grid()) {
    for (int point = 0; point < 20; ++point) {
      const double r = dist(gen);
      const double analytic = radial_profile_derivative(qn, cfg, r);
      const double fd = (radial_profile(qn, cfg, r + h) -
                         radial_profile(qn, cfg, r - h)) /
                        (2.0 * h);
      derivative_ok = derivative_ok &&
                      std::abs(fd - analytic) <=
                          1e-6 * (std::abs(analytic) + 1e-2);
    }
  }
  track(derivative_ok, "radial derivative vs finite differences");

  // m-independence of the mechanical and guiding-center OAMs
  double spread_worst = 0.0;
  for (int n = 0; n <= 5; ++n) {
    for (const auto& spec :
         {OamSpec{OamKind::Mechanical, OamAxis::Origin},
          OamSpec{OamKind::Canonical, OamAxis::GuidingCenter},
          OamSpec{OamKind::Mechanical, OamAxis::GuidingCenter},
          OamSpec{OamKind::Pseudo, OamAxis::GuidingCenter}}) {
      double lo = INFINITY, hi = -INFINITY;
      for (int m = -5; m <= n; ++m) {
        const double v = expectation_oam(QuantumNumbers{n, m}, cfg, spec, rule);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
      spread_worst = std::max(spread_worst, hi - lo);
    }
  }
  track(spread_worst <= 1e-8, "m-independence");

  // sign correlation <L_can> > 0 iff <r_c^2> > <R^2>
  bool signs_ok = true;
  for (const auto& qn : full_grid()) {
    const double l_can = fock::expectation_fock(qn, ops, ops.l_can_origin, 4);
    const double gap = fock::expectation_fock(qn, ops, ops.r_c2, 4) -
                       fock::expectation_fock(qn, ops, ops.R2, 4);
    if (qn.m == 0) {
      signs_ok = signs_ok && std::abs(gap) <= 1e-10;
    } else {
      signs_ok = signs_ok && (l_can > 0.0) == (gap > 0.0);
    }
  }
  track(signs_ok, "sign correlation");

  char buf[200];
  if (pass) {
    std::snprintf(buf, sizeof(buf),
                  "norm %.3e, laguerre %.3e, m-spread %.3e (all within "
                  "tolerance)",
                  norm_worst, laguerre_worst, spread_worst);
  } else {
    std::snprintf(buf, sizeof(buf), "FAILED: %s", failure.c_str());
  }
  return {"property suites (norm, laguerre, derivative, m-independence, "
          "signs)",
          pass, buf};
}

}  // namespace

int main() {
  const std::vector<Criterion> results = {
      criterion_table1(),   criterion_radii(),     criterion_identities(),
      criterion_energy(),   criterion_classical(), criterion_properties(),
  };
  int failures = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    failures += r.pass ? 0 : 1;
    std::printf("[%s] criterion %zu: %s — %s\n", r.pass ? "PASS" : "FAIL",
                i + 1, r.name.c_str(), r.detail.c_str());
  }
  if (failures == 0) {
    std::printf("all %zu acceptance criteria passed\n", results.size());
  } else {
    std::printf("%d acceptance criteria FAILED\n", failures);
  }
  return failures == 0 ? 0 : 1;
}
