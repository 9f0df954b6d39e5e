#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <vector>

// Gauss-Laguerre quadrature in the dimensionless radial variable
// rho = r^2 / (2 l_B^2):
//
//   sum_i w_i f(x_i)  ~=  int_0^inf e^{-rho} f(rho) drho,
//
// exact for polynomial f up to degree 2*order - 1. Every radial integrand
// built from the symmetric-gauge states is exactly of this
// weight-times-polynomial form, so the rule integrates them to round-off.
// A uniform azimuthal grid is carried alongside as an independent check of
// the (analytically trivial) phi integrals.

namespace landau {

struct QuadratureRule {
  std::vector<double> nodes;    // rho_i, ascending
  std::vector<double> weights;  // w_i > 0
  int azimuthal_count = 128;

  int radial_order() const { return static_cast<int>(nodes.size()); }
};

namespace detail {

// Scaled polynomials S_k(x) = L_k(x) e^{-x/2}; they obey the same
// three-term recurrence as L_k and stay O(1) across the node range, so no
// overflow at any practical order. Returns (S_order, S_{order-1}).
inline std::pair<double, double> scaled_laguerre_pair(int order, double x) {
  double prev = std::exp(-0.5 * x);  // S_0
  if (order == 0) return {prev, 0.0};
  double curr = (1.0 - x) * prev;  // S_1
  for (int k = 2; k <= order; ++k) {
    const double next = ((2.0 * k - 1.0 - x) * curr - (k - 1.0) * prev) / k;
    prev = curr;
    curr = next;
  }
  return {curr, prev};
}

}  // namespace detail

// Nodes start as the eigenvalues of the symmetric tridiagonal Jacobi matrix
// (diagonal 2k+1, off-diagonal k) and are polished by Newton steps on the
// scaled recurrence; weights come from w_i = x_i / ((N+1) L_{N+1}(x_i))^2.
// The eigenvector route to the weights is avoided: the large-node weights
// are ~e^{-x} and the eigensolver's absolute error destroys their relative
// accuracy.
inline QuadratureRule make_quadrature(int radial_order,
                                      int azimuthal_count = 128) {
  if (radial_order < 1) {
    throw std::domain_error("quadrature order must be >= 1, got " +
                            std::to_string(radial_order));
  }
  if (azimuthal_count < 1) {
    throw std::domain_error("azimuthal count must be >= 1, got " +
                            std::to_string(azimuthal_count));
  }

  Eigen::VectorXd diag(radial_order);
  Eigen::VectorXd subdiag(radial_order > 1 ? radial_order - 1 : 0);
  for (int k = 0; k < radial_order; ++k) {
    diag[k] = 2.0 * k + 1.0;
    if (k + 1 < radial_order) subdiag[k] = static_cast<double>(k + 1);
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, subdiag, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("Gauss-Laguerre eigensolve failed");
  }

  QuadratureRule rule;
  rule.azimuthal_count = azimuthal_count;
  rule.nodes.resize(radial_order);
  rule.weights.resize(radial_order);
  const int N = radial_order;
  for (int i = 0; i < N; ++i) {
    double x = solver.eigenvalues()[i];
    for (int step = 0; step < 3; ++step) {
      const auto [s_n, s_nm1] = detail::scaled_laguerre_pair(N, x);
      // x L_N' = N (L_N - L_{N-1}), so L_N / L_N' = x S_N / (N (S_N - S_{N-1}))
      const double slope = N * (s_n - s_nm1);
      if (slope == 0.0) break;
      x -= x * s_n / slope;
    }
    const auto [s_np1, unused] = detail::scaled_laguerre_pair(N + 1, x);
    const double denom = (N + 1.0) * s_np1;
    rule.nodes[i] = x;
    rule.weights[i] = x * std::exp(-x) / (denom * denom);
  }

  for (int i = 0; i < N; ++i) {
    if (!std::isfinite(rule.nodes[i]) || !std::isfinite(rule.weights[i]) ||
        rule.weights[i] <= 0.0 || (i > 0 && rule.nodes[i] <= rule.nodes[i - 1])) {
      throw std::runtime_error("Gauss-Laguerre construction failed at order " +
                               std::to_string(radial_order));
    }
  }
  return rule;
}

// sum_i w_i == int_0^inf e^{-rho} drho == 1; deviation is a direct measure
// of node/weight quality.
inline double quadrature_moment_error(const QuadratureRule& rule) {
  double sum = 0.0;
  for (double w : rule.weights) sum += w;
  return sum - 1.0;
}

}  // namespace landau
