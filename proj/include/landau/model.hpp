#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

// Shared model types for the Landau-level problem: physical scales, the
// (n, m) state labels of the symmetric gauge, and the taxonomy of the six
// orbital angular momenta (canonical / mechanical / pseudo, each about the
// coordinate origin or about the guiding center).
//
// Conventions, fixed once here and inherited by every other header:
// natural units hbar = c = 1, electron charge -e with e > 0, uniform field
// B along +z.

namespace landau {

struct PhysicalConfig {
  double B;        // field strength, > 0
  double e;        // elementary charge magnitude, > 0
  double m_e;      // electron mass, > 0
  double omega;    // cyclotron frequency eB/m_e
  double omega_L;  // Larmor frequency omega/2
  double l_B;      // magnetic length 1/sqrt(eB)
};

inline PhysicalConfig make_config(double B, double e, double m_e) {
  auto require_positive = [](double v, const char* name) {
    if (!std::isfinite(v) || v <= 0.0) {
      throw std::domain_error(std::string(name) +
                              " must be positive and finite, got " +
                              std::to_string(v));
    }
  };
  require_positive(B, "B");
  require_positive(e, "e");
  require_positive(m_e, "m_e");

  PhysicalConfig cfg{};
  cfg.B = B;
  cfg.e = e;
  cfg.m_e = m_e;
  cfg.omega = e * B / m_e;
  cfg.omega_L = 0.5 * cfg.omega;
  cfg.l_B = 1.0 / std::sqrt(e * B);
  return cfg;
}

// E_n = omega (n + 1/2); levels are equally spaced by omega.
inline double landau_energy(const PhysicalConfig& cfg, int n) {
  if (n < 0) {
    throw std::domain_error("Landau index must be non-negative, got n=" +
                            std::to_string(n));
  }
  return cfg.omega * (static_cast<double>(n) + 0.5);
}

// Labels of a symmetric-gauge eigenstate: n >= 0 and m <= n; m is unbounded
// below (the infinite Landau degeneracy).
struct QuantumNumbers {
  int n;
  int m;
};

inline QuantumNumbers validate_quantum_numbers(int n, int m) {
  if (n < 0 || m > n) {
    throw std::domain_error("invalid state (n=" + std::to_string(n) +
                            ", m=" + std::to_string(m) +
                            "): need n >= 0 and m <= n");
  }
  return QuantumNumbers{n, m};
}

enum class OamKind { Canonical, Mechanical, Pseudo };
enum class OamAxis { Origin, GuidingCenter };

// Which OAM about which reference axis. All six combinations are valid.
struct OamSpec {
  OamKind kind;
  OamAxis axis;
};

inline const char* to_string(OamKind kind) {
  switch (kind) {
    case OamKind::Canonical: return "canonical";
    case OamKind::Mechanical: return "mechanical";
    case OamKind::Pseudo: return "pseudo";
  }
  return "?";
}

inline const char* to_string(OamAxis axis) {
  switch (axis) {
    case OamAxis::Origin: return "origin";
    case OamAxis::GuidingCenter: return "guiding_center";
  }
  return "?";
}

inline std::string to_string(const OamSpec& spec) {
  return std::string(to_string(spec.kind)) + "/" + to_string(spec.axis);
}

// Fixed sweep order: origin row then guiding-center row, canonical /
// mechanical / pseudo within each.
inline constexpr std::array<OamSpec, 6> all_oam_specs() {
  return {OamSpec{OamKind::Canonical, OamAxis::Origin},
          OamSpec{OamKind::Mechanical, OamAxis::Origin},
          OamSpec{OamKind::Pseudo, OamAxis::Origin},
          OamSpec{OamKind::Canonical, OamAxis::GuidingCenter},
          OamSpec{OamKind::Mechanical, OamAxis::GuidingCenter},
          OamSpec{OamKind::Pseudo, OamAxis::GuidingCenter}};
}

// Closed-form expectation value of `spec` in the state (n, m); these are the
// exact results the numerical routes are checked against:
//   origin:         m, 2n+1, m
//   guiding center: (2n+1)/2, 2n+1, (2n+1)/2
inline double closed_form_oam(const QuantumNumbers& qn, const OamSpec& spec) {
  const double odd = 2.0 * qn.n + 1.0;
  if (spec.axis == OamAxis::Origin) {
    return spec.kind == OamKind::Mechanical ? odd : static_cast<double>(qn.m);
  }
  return spec.kind == OamKind::Mechanical ? odd : 0.5 * odd;
}

}  // namespace landau
