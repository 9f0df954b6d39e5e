#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "landau/quadrature.hpp"
#include "landau/special_functions.hpp"
#include "oracles.hpp"

using namespace landau;

TEST_CASE("order-two rule matches the closed-form nodes and weights") {
  const auto rule = make_quadrature(2);
  const double s = std::sqrt(2.0);
  REQUIRE(rule.nodes.size() == 2);
  CHECK(rule.nodes[0] == doctest::Approx(2.0 - s).epsilon(1e-13));
  CHECK(rule.nodes[1] == doctest::Approx(2.0 + s).epsilon(1e-13));
  CHECK(rule.weights[0] == doctest::Approx((2.0 + s) / 4.0).epsilon(1e-13));
  CHECK(rule.weights[1] == doctest::Approx((2.0 - s) / 4.0).epsilon(1e-13));
}

TEST_CASE("weights are positive, nodes ascending, zeroth moment exact") {
  for (int order : {1, 2, 8, 64, 128}) {
    const auto rule = make_quadrature(order);
    CHECK(rule.radial_order() == order);
    double prev = 0.0;
    for (int i = 0; i < order; ++i) {
      CHECK(rule.weights[i] > 0.0);
      CHECK(rule.nodes[i] > prev);
      prev = rule.nodes[i];
    }
    CHECK(std::abs(quadrature_moment_error(rule)) <= 1e-12);
  }
}

TEST_CASE("polynomial moments are integrated exactly") {
  // int_0^inf rho^j e^{-rho} drho = j!, exact for j <= 2*order - 1
  const auto rule = make_quadrature(8);
  for (int j = 0; j <= 15; ++j) {
    double sum = 0.0;
    for (int i = 0; i < rule.radial_order(); ++i) {
      sum += rule.weights[i] * std::pow(rule.nodes[i], j);
    }
    const double exact = static_cast<double>(oracles::factorial_u64(j));
    CHECK(sum == doctest::Approx(exact).epsilon(1e-12));
  }
}

TEST_CASE("Laguerre orthogonality against the weight") {
  // int_0^inf rho^k e^{-rho} L^k_p L^k_q drho = delta_pq (p+k)!/p!
  const auto rule = make_quadrature(64);
  for (int k = 0; k <= 4; ++k) {
    for (int p = 0; p <= 6; ++p) {
      for (int q = 0; q <= 6; ++q) {
        double sum = 0.0;
        for (int i = 0; i < rule.radial_order(); ++i) {
          const double rho = rule.nodes[i];
          sum += rule.weights[i] * std::pow(rho, k) *
                 assoc_laguerre(p, k, rho) * assoc_laguerre(q, k, rho);
        }
        const double expected =
            p == q ? static_cast<double>(oracles::factorial_u64(p + k)) /
                         static_cast<double>(oracles::factorial_u64(p))
                   : 0.0;
        CHECK(std::abs(sum - expected) <= 1e-8);
      }
    }
  }
}

TEST_CASE("invalid rule parameters are rejected") {
  CHECK_THROWS_AS(make_quadrature(0), std::domain_error);
  CHECK_THROWS_AS(make_quadrature(-3), std::domain_error);
  CHECK_THROWS_AS(make_quadrature(8, 0), std::domain_error);
}
