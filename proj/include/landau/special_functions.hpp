#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "landau/model.hpp"

// Associated Laguerre polynomials L^k_p(z) with integer degree p >= 0 and
// integer order k >= 0, plus the symmetric-gauge normalization constant.
// Only what the radial profiles need; no non-integer orders, no complex
// arguments.

namespace landau {

struct LaguerreParams {
  int degree;  // lower index: the radial quantum number n_r
  int order;   // upper index: |m|
};

// n_r = n - (m + |m|)/2, i.e. n - m for m >= 0 and n for m < 0.
// Non-negative for every valid (n, m).
inline int radial_index(int n, int m) {
  validate_quantum_numbers(n, m);
  return m >= 0 ? n - m : n;
}

// Upward three-term recurrence in the degree:
//   L^k_0 = 1,  L^k_1 = 1 + k - z,
//   j L^k_j = (2j - 1 + k - z) L^k_{j-1} - (j - 1 + k) L^k_{j-2}.
// Stable for z >= 0 in the ranges used here.
inline double assoc_laguerre(const LaguerreParams& params, double z) {
  if (params.degree < 0 || params.order < 0) {
    throw std::domain_error("Laguerre indices must be non-negative (degree=" +
                            std::to_string(params.degree) + ", order=" +
                            std::to_string(params.order) + ")");
  }
  if (!std::isfinite(z) || z < 0.0) {
    throw std::domain_error("Laguerre argument must be finite and >= 0, got " +
                            std::to_string(z));
  }
  const int p = params.degree;
  const double k = static_cast<double>(params.order);
  if (p == 0) return 1.0;
  double prev = 1.0;
  double curr = 1.0 + k - z;
  for (int j = 2; j <= p; ++j) {
    const double next =
        ((2.0 * j - 1.0 + k - z) * curr - (j - 1.0 + k) * prev) / j;
    prev = curr;
    curr = next;
  }
  return curr;
}

inline double assoc_laguerre(int degree, int order, double z) {
  return assoc_laguerre(LaguerreParams{degree, order}, z);
}

// d/dz L^k_p(z) = -L^{k+1}_{p-1}(z); zero for the degree-0 polynomial.
inline double assoc_laguerre_derivative(const LaguerreParams& params,
                                        double z) {
  if (params.degree == 0) return 0.0;
  return -assoc_laguerre(LaguerreParams{params.degree - 1, params.order + 1},
                         z);
}

inline double log_factorial(int n) {
  return std::lgamma(static_cast<double>(n) + 1.0);
}

// N_{n,m} = (1/l_B) sqrt(n_r! / (n_r + |m|)!), evaluated through log-gamma
// differences; the denominator factorial overflows native integers already
// around |m| ~ 20.
inline double normalization(int n, int m, double l_B) {
  if (!std::isfinite(l_B) || l_B <= 0.0) {
    throw std::domain_error("magnetic length must be positive, got " +
                            std::to_string(l_B));
  }
  const int n_r = radial_index(n, m);
  const int k = std::abs(m);
  return std::exp(0.5 * (log_factorial(n_r) - log_factorial(n_r + k))) / l_B;
}

}  // namespace landau
