#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "landau/model.hpp"

// Classical route: cyclotron orbits of the EOM m_e dv/dt = -e (v x B) in
// the z = 0 plane. Closed-form solution
//
//   v_x(t) = v_0 cos(omega t + alpha),  v_y(t) = v_0 sin(omega t + alpha),
//   x(t) = X + v_y(t)/omega,            y(t) = Y - v_x(t)/omega,
//
// with the guiding center X = x_0 - v_{y0}/omega, Y = y_0 + v_{x0}/omega.
// (These are the values consistent with x(0) = x_0, y(0) = y_0 and with the
// classical limit of the quantum guiding-center operators; the commonly
// quoted X = x_0 - v_{x0}/omega, Y = y_0 - v_{y0}/omega variant does not
// satisfy the displayed solution at t = 0.)
//
// Only the mechanical and pseudo OAMs exist here; there is no gauge
// potential, so requesting the canonical kind is an error.

namespace landau::classical {

struct ClassicalState {
  double t;
  double x, y;
  double vx, vy;
};

struct InitialConditions {
  double x0, y0;
  double vx0, vy0;
  // derived
  double v0;     // initial speed
  double alpha;  // velocity phase, quadrant-correct; 0 when v0 = 0
  double r_c;    // cyclotron radius v0/omega
  double X, Y;   // guiding center
};

// X = x - v_y/omega, Y = y + v_x/omega; constants of motion along the orbit.
inline std::pair<double, double> guiding_center(const PhysicalConfig& cfg,
                                                double x, double y, double vx,
                                                double vy) {
  return {x - vy / cfg.omega, y + vx / cfg.omega};
}

inline InitialConditions make_initial_conditions(const PhysicalConfig& cfg,
                                                 double x0, double y0,
                                                 double vx0, double vy0) {
  for (double v : {x0, y0, vx0, vy0}) {
    if (!std::isfinite(v)) {
      throw std::domain_error("initial conditions must be finite");
    }
  }
  InitialConditions ic{};
  ic.x0 = x0;
  ic.y0 = y0;
  ic.vx0 = vx0;
  ic.vy0 = vy0;
  ic.v0 = std::hypot(vx0, vy0);
  ic.alpha = ic.v0 == 0.0 ? 0.0 : std::atan2(vy0, vx0);
  ic.r_c = ic.v0 / cfg.omega;
  const auto [X, Y] = guiding_center(cfg, x0, y0, vx0, vy0);
  ic.X = X;
  ic.Y = Y;
  return ic;
}

inline ClassicalState closed_form_state(const InitialConditions& ic,
                                        const PhysicalConfig& cfg, double t) {
  const double phase = cfg.omega * t + ic.alpha;
  ClassicalState s{};
  s.t = t;
  s.vx = ic.v0 * std::cos(phase);
  s.vy = ic.v0 * std::sin(phase);
  s.x = ic.X + s.vy / cfg.omega;
  s.y = ic.Y - s.vx / cfg.omega;
  return s;
}

inline double classical_oam(const ClassicalState& s,
                            const InitialConditions& ic,
                            const PhysicalConfig& cfg, const OamSpec& spec) {
  if (spec.kind == OamKind::Canonical) {
    throw std::invalid_argument(
        "canonical OAM is undefined in the classical module (no gauge "
        "potential)");
  }
  const double half_eB = 0.5 * cfg.e * cfg.B;
  if (spec.axis == OamAxis::Origin) {
    const double mech = cfg.m_e * (s.x * s.vy - s.y * s.vx);
    if (spec.kind == OamKind::Mechanical) return mech;
    return mech - half_eB * (s.x * s.x + s.y * s.y);
  }
  const double rx = s.x - ic.X;
  const double ry = s.y - ic.Y;
  const double mech = cfg.m_e * (rx * s.vy - ry * s.vx);
  if (spec.kind == OamKind::Mechanical) return mech;
  return mech - half_eB * (rx * rx + ry * ry);
}

// (1/T) int_0^T L dt over one exact period, composite Simpson on the
// closed-form solution. Spectrally accurate here: the integrands are a
// constant plus a single harmonic of the cyclotron frequency.
inline double time_average_oam(const InitialConditions& ic,
                               const PhysicalConfig& cfg, const OamSpec& spec,
                               int samples) {
  if (samples < 16) {
    throw std::domain_error("need samples >= 16, got " +
                            std::to_string(samples));
  }
  const int n = samples % 2 == 0 ? samples : samples + 1;
  const double period = 2.0 * std::numbers::pi / cfg.omega;
  const double h = period / n;
  double sum = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double value =
        classical_oam(closed_form_state(ic, cfg, i * h), ic, cfg, spec);
    const double coeff = (i == 0 || i == n) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    sum += coeff * value;
  }
  return sum * h / (3.0 * period);
}

// Fourth-order Runge-Kutta on the EOM; the independent oracle for the
// closed form. Returns steps+1 states including t = 0.
inline std::vector<ClassicalState> integrate_rk4(const InitialConditions& ic,
                                                 const PhysicalConfig& cfg,
                                                 double dt, int steps) {
  if (!std::isfinite(dt) || dt <= 0.0) {
    throw std::domain_error("time step must be positive, got " +
                            std::to_string(dt));
  }
  if (steps < 0) {
    throw std::domain_error("step count must be non-negative");
  }
  const double omega = cfg.omega;
  // EOM with charge -e, B || +z: (dx, dy, dvx, dvy) = (vx, vy, -w vy, +w vx)
  struct Derivative {
    double dx, dy, dvx, dvy;
  };
  const auto deriv = [omega](const ClassicalState& s) {
    return Derivative{s.vx, s.vy, -omega * s.vy, omega * s.vx};
  };
  const auto advance = [](const ClassicalState& s, const Derivative& d,
                          double h) {
    ClassicalState out = s;
    out.x += h * d.dx;
    out.y += h * d.dy;
    out.vx += h * d.dvx;
    out.vy += h * d.dvy;
    return out;
  };

  std::vector<ClassicalState> trajectory;
  trajectory.reserve(steps + 1);
  ClassicalState s{0.0, ic.x0, ic.y0, ic.vx0, ic.vy0};
  trajectory.push_back(s);
  for (int i = 0; i < steps; ++i) {
    const Derivative k1 = deriv(s);
    const Derivative k2 = deriv(advance(s, k1, 0.5 * dt));
    const Derivative k3 = deriv(advance(s, k2, 0.5 * dt));
    const Derivative k4 = deriv(advance(s, k3, dt));
    s.x += dt / 6.0 * (k1.dx + 2.0 * k2.dx + 2.0 * k3.dx + k4.dx);
    s.y += dt / 6.0 * (k1.dy + 2.0 * k2.dy + 2.0 * k3.dy + k4.dy);
    s.vx += dt / 6.0 * (k1.dvx + 2.0 * k2.dvx + 2.0 * k3.dvx + k4.dvx);
    s.vy += dt / 6.0 * (k1.dvy + 2.0 * k2.dvy + 2.0 * k3.dvy + k4.dvy);
    s.t = (i + 1) * dt;
    trajectory.push_back(s);
  }
  return trajectory;
}

// Convenience constructors for the two reference orbits: case A has the
// guiding center at the origin, case B at (X, Y).
inline InitialConditions case_a(const PhysicalConfig& cfg, double v0) {
  return make_initial_conditions(cfg, 0.0, -v0 / cfg.omega, v0, 0.0);
}

inline InitialConditions case_b(const PhysicalConfig& cfg, double v0, double X,
                                double Y) {
  return make_initial_conditions(cfg, X, Y - v0 / cfg.omega, v0, 0.0);
}

}  // namespace landau::classical
