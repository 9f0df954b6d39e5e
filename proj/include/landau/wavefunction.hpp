#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include "landau/model.hpp"
#include "landau/quadrature.hpp"
#include "landau/special_functions.hpp"

// Real-space route: the symmetric-gauge eigenfunction
//
//   psi_{n,m}(r, phi) = N_{n,m} e^{i m phi}/sqrt(2 pi)
//                       e^{-rho/2} rho^{|m|/2} L^{|m|}_{n_r}(rho),
//   rho = r^2 / (2 l_B^2),
//
// and expectation values of the six OAMs, the energy, and <r^2> by
// Gauss-Laguerre quadrature in rho. Azimuthal integrals reduce analytically
// (the e^{i m phi} phase cancels in every density); norm_check keeps the
// full 2D product grid as an independent check of that reduction.

namespace landau {

struct WavefunctionPoint {
  double r;
  double phi;
  std::complex<double> value;
};

namespace detail {

// Weight-free radial factors at a quadrature node: with k = |m| and
// P(rho) = rho^{k/2} L^k_{n_r}(rho), the radial profile is
// R = N e^{-rho/2} P and its rho-derivative is N e^{-rho/2} Pd with
//   Pd = -(1/2) P + (k/2) rho^{k/2-1} L + rho^{k/2} L'.
struct RadialParts {
  double P;
  double Pd;
};

inline RadialParts radial_parts(int n_r, int k, double rho) {
  const double L = assoc_laguerre(n_r, k, rho);
  const double Ld = assoc_laguerre_derivative(LaguerreParams{n_r, k}, rho);
  const double half_pow =
      (rho == 0.0 && k == 0) ? 1.0 : std::pow(rho, 0.5 * k);
  const double P = half_pow * L;
  double Pd = -0.5 * P + half_pow * Ld;
  if (k > 0) Pd += 0.5 * k * std::pow(rho, 0.5 * k - 1.0) * L;
  return {P, Pd};
}

}  // namespace detail

// Real radial profile R(r) with int_0^inf R^2 r dr = 1.
inline double radial_profile(const QuantumNumbers& qn,
                             const PhysicalConfig& cfg, double r) {
  if (!std::isfinite(r) || r < 0.0) {
    throw std::domain_error("radius must be finite and >= 0, got " +
                            std::to_string(r));
  }
  const int k = std::abs(qn.m);
  const int n_r = radial_index(qn.n, qn.m);
  const double rho = r * r / (2.0 * cfg.l_B * cfg.l_B);
  const double N = normalization(qn.n, qn.m, cfg.l_B);
  if (rho == 0.0) {
    // rho^{k/2} is 1 for m = 0 and vanishes otherwise
    return k == 0 ? N * assoc_laguerre(n_r, 0, 0.0) : 0.0;
  }
  const auto parts = detail::radial_parts(n_r, k, rho);
  return N * std::exp(-0.5 * rho) * parts.P;
}

// dR/dr, using d/dz L^k_p = -L^{k+1}_{p-1} for the polynomial factor.
inline double radial_profile_derivative(const QuantumNumbers& qn,
                                        const PhysicalConfig& cfg, double r) {
  if (!std::isfinite(r) || r < 0.0) {
    throw std::domain_error("radius must be finite and >= 0, got " +
                            std::to_string(r));
  }
  const int k = std::abs(qn.m);
  const int n_r = radial_index(qn.n, qn.m);
  const double l_B2 = cfg.l_B * cfg.l_B;
  const double N = normalization(qn.n, qn.m, cfg.l_B);
  if (r == 0.0) {
    // finite limit only for |m| = 1: N L^1_{n_r}(0) / (sqrt(2) l_B)
    if (k != 1) return 0.0;
    return N * (n_r + 1.0) / (std::numbers::sqrt2 * cfg.l_B);
  }
  const double rho = r * r / (2.0 * l_B2);
  const auto parts = detail::radial_parts(n_r, k, rho);
  return N * std::exp(-0.5 * rho) * parts.Pd * (r / l_B2);
}

inline std::complex<double> psi_value(const QuantumNumbers& qn,
                                      const PhysicalConfig& cfg, double r,
                                      double phi) {
  const double radial = radial_profile(qn, cfg, r);
  const double phase = qn.m * phi;
  const double scale = radial / std::sqrt(2.0 * std::numbers::pi);
  return {scale * std::cos(phase), scale * std::sin(phase)};
}

namespace detail {

// sum_i w_i f(P_i, Pd_i, rho_i) against the e^{-rho} weight, fixed node
// order. The N^2 e^{-rho} factor of the density is absorbed into the rule.
template <typename Term>
double radial_integral(const QuantumNumbers& qn, const PhysicalConfig& cfg,
                       const QuadratureRule& rule, Term&& term) {
  const int k = std::abs(qn.m);
  const int n_r = radial_index(qn.n, qn.m);
  const double N = normalization(qn.n, qn.m, cfg.l_B);
  const double N2 = N * N;
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double rho = rule.nodes[i];
    const auto parts = radial_parts(n_r, k, rho);
    sum += rule.weights[i] * N2 * term(parts, rho);
  }
  return sum;
}

}  // namespace detail

// Full 2D norm integral over the product (radial x azimuthal) grid,
// evaluating |psi|^2 pointwise so the phi reduction is actually exercised.
inline double norm_check(const QuantumNumbers& qn, const PhysicalConfig& cfg,
                         const QuadratureRule& rule) {
  const double l_B2 = cfg.l_B * cfg.l_B;
  const double two_pi = 2.0 * std::numbers::pi;
  const double dphi = two_pi / rule.azimuthal_count;
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double rho = rule.nodes[i];
    const double r = std::sqrt(2.0 * l_B2 * rho);
    // divide out the rule's e^{-rho} weight from the sampled density
    const double envelope = std::exp(rho);
    double ring = 0.0;
    for (int j = 0; j < rule.azimuthal_count; ++j) {
      ring += std::norm(psi_value(qn, cfg, r, j * dphi));
    }
    sum += rule.weights[i] * envelope * ring * dphi * l_B2;
  }
  return sum;
}

// Radial-route norm; equals norm_check up to round-off and is what the
// expectation values are normalized against.
inline double norm_radial(const QuantumNumbers& qn, const PhysicalConfig& cfg,
                          const QuadratureRule& rule) {
  const double l_B2 = cfg.l_B * cfg.l_B;
  return detail::radial_integral(
      qn, cfg, rule, [l_B2](const detail::RadialParts& p, double) {
        return l_B2 * p.P * p.P;
      });
}

// <r^2> = 2 l_B^2 <rho>; closed form 2 l_B^2 (2n - m + 1).
inline double expectation_r2(const QuantumNumbers& qn,
                             const PhysicalConfig& cfg,
                             const QuadratureRule& rule) {
  const double l_B2 = cfg.l_B * cfg.l_B;
  return detail::radial_integral(
      qn, cfg, rule, [l_B2](const detail::RadialParts& p, double rho) {
        return 2.0 * l_B2 * l_B2 * rho * p.P * p.P;
      });
}

// H = H_osc + omega_L L_can with H_osc a 2D oscillator at the Larmor
// frequency; the kinetic part is integrated in gradient form.
struct EnergyParts {
  double oscillator;  // <H_osc>, closed form (2n - m + 1) omega_L
  double larmor;      // omega_L m
  double total;       // omega (n + 1/2)
};

inline EnergyParts expectation_energy_parts(const QuantumNumbers& qn,
                                            const PhysicalConfig& cfg,
                                            const QuadratureRule& rule) {
  const double m2 = static_cast<double>(qn.m) * qn.m;
  const int k = std::abs(qn.m);

  // radial kinetic: (1/2m_e) int (dR/dr)^2 r dr -> (rho/m_e) Pd^2
  const double kinetic_r = detail::radial_integral(
      qn, cfg, rule, [&](const detail::RadialParts& p, double rho) {
        return rho * p.Pd * p.Pd / cfg.m_e;
      });

  // centrifugal: (m^2/2m_e) int R^2/r^2 r dr -> (m^2/4m_e) P^2/rho
  const double kinetic_phi =
      k == 0 ? 0.0
             : detail::radial_integral(
                   qn, cfg, rule, [&](const detail::RadialParts& p, double rho) {
                     return m2 * p.P * p.P / (4.0 * cfg.m_e * rho);
                   });

  // oscillator potential: (m_e omega_L^2/2) <r^2>
  const double potential = 0.5 * cfg.m_e * cfg.omega_L * cfg.omega_L *
                           expectation_r2(qn, cfg, rule);

  EnergyParts parts{};
  parts.oscillator = kinetic_r + kinetic_phi + potential;
  parts.larmor = cfg.omega_L * qn.m * norm_radial(qn, cfg, rule);
  parts.total = parts.oscillator + parts.larmor;
  return parts;
}

inline double expectation_energy(const QuantumNumbers& qn,
                                 const PhysicalConfig& cfg,
                                 const QuadratureRule& rule) {
  return expectation_energy_parts(qn, cfg, rule).total;
}

// Expectation value of the requested OAM via the symmetric-gauge operator
// reductions, everything sourced from quadrature:
//   canonical/origin   <-i d/dphi> = m * norm
//   mechanical/origin  L_mech = L_can + (eB/2) r^2
//   pseudo/origin      L_ps = L_mech - (eB/2) r^2
//   mechanical/gc      (2/omega) <H>
//   pseudo/gc          (1/omega) <H>
//   canonical/gc       (2/omega) <H> - (1/2) L_can - (eB/4) r^2
inline double expectation_oam(const QuantumNumbers& qn,
                              const PhysicalConfig& cfg, const OamSpec& spec,
                              const QuadratureRule& rule) {
  const double eB = cfg.e * cfg.B;
  const double canonical_origin = qn.m * norm_radial(qn, cfg, rule);
  if (spec.axis == OamAxis::Origin) {
    switch (spec.kind) {
      case OamKind::Canonical:
        return canonical_origin;
      case OamKind::Mechanical:
        return canonical_origin + 0.5 * eB * expectation_r2(qn, cfg, rule);
      case OamKind::Pseudo: {
        const double mech =
            canonical_origin + 0.5 * eB * expectation_r2(qn, cfg, rule);
        return mech - 0.5 * eB * expectation_r2(qn, cfg, rule);
      }
    }
  }
  const double energy = expectation_energy(qn, cfg, rule);
  switch (spec.kind) {
    case OamKind::Mechanical:
      return 2.0 * energy / cfg.omega;
    case OamKind::Pseudo:
      return energy / cfg.omega;
    case OamKind::Canonical:
      return 2.0 * energy / cfg.omega - 0.5 * canonical_origin -
             0.25 * eB * expectation_r2(qn, cfg, rule);
  }
  throw std::logic_error("unreachable OAM spec");
}

}  // namespace landau
