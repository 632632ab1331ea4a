// Copyright 2026 The ricbounds Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "ricb/bounds_simple.hpp"
#include "ricb/error.hpp"

using namespace ricb;

namespace {

// E[h^2 ; |h| >= nu] for standard normal h, by quadrature.
double truncated_second_moment(double nu) {
  const auto phi = [](double h) {
    return h * h * std::exp(-0.5 * h * h) / std::sqrt(2.0 * std::numbers::pi);
  };
  return 2.0 * oracle::integrate(phi, nu, nu + 40.0, 1e-14);
}

double erfinv_by_bisection(double p) {
  return oracle::bisect([](double x) { return std::erf(x); }, p, 0.0, 7.0);
}

}  // namespace

TEST_SUITE("bounds_simple") {
  TEST_CASE("shape validation") {
    CHECK_NOTHROW(ProblemShape(0.5, 0.05));
    CHECK_NOTHROW(ProblemShape(1.0, 0.999999));
    CHECK_THROWS_AS(ProblemShape(0.5, 0.5), DomainError);
    CHECK_THROWS_AS(ProblemShape(0.5, 0.0), DomainError);
    CHECK_THROWS_AS(ProblemShape(1.2, 0.1), DomainError);
    CHECK_THROWS_AS(ProblemShape(0.5, -0.1), DomainError);
    CHECK_THROWS_AS(ProblemShape(0.5, 1e-8), DomainError);
    CHECK_THROWS_AS(ProblemShape::from_rho(0.5, 1.0), DomainError);
    CHECK(ProblemShape::from_rho(0.5, 0.2).beta() == doctest::Approx(0.1));
  }

  TEST_CASE("tail_term near beta = 1 collapses to sqrt(beta)") {
    const double beta = 1.0 - 1e-6;
    CHECK(std::abs(tail_term(beta) - 1.0) <= 1e-5);
  }

  TEST_CASE("tail_term(0.01) gives the alpha = 0.1 simple upper bound") {
    CHECK(std::abs(1.0 + tail_term(0.01) / std::sqrt(0.1) - 1.9192) <= 5e-4);
  }

  TEST_CASE("tail_term squared is the truncated Gaussian second moment") {
    for (double beta : {0.001, 0.05, 0.2, 0.5, 0.9}) {
      const double nu = std::sqrt(2.0) * erfinv_by_bisection(1.0 - beta);
      const double ref = truncated_second_moment(nu);
      CHECK(std::abs(tail_term(beta) * tail_term(beta) - ref) <= 1e-10);
    }
  }

  TEST_CASE("tail_term domain") {
    CHECK_THROWS_AS(tail_term(0.0), DomainError);
    CHECK_THROWS_AS(tail_term(1.0), DomainError);
    CHECK_THROWS_AS(tail_term(1e-7), DomainError);
  }

  TEST_CASE("simple bounds at published cells") {
    CHECK(std::abs(simple_upper(ProblemShape(0.5, 0.05)).value - 1.7471) <= 5e-4);
    CHECK(std::abs(simple_upper(ProblemShape(0.9, 0.45)).value - 2.0017) <= 5e-4);
    CHECK(std::abs(simple_lower(ProblemShape(0.1, 0.005)).value - 0.3031) <= 5e-4);
    CHECK(std::abs(simple_lower(ProblemShape(0.5, 0.15)).value + 0.056) <= 5e-4);
  }

  TEST_CASE("simple upper at the alpha = 1 endpoint is 2") {
    CHECK(std::abs(simple_upper(ProblemShape(1.0, 1.0 - 1e-6)).value - 2.0) <= 1e-5);
  }

  TEST_CASE("result metadata") {
    const auto up = simple_upper(ProblemShape(0.3, 0.1));
    CHECK(up.kind == BoundKind::upper_simple);
    CHECK(up.converged);
    CHECK_FALSE(up.params.has_value());
    CHECK(up.value >= 1.0);
    const auto lo = simple_lower(ProblemShape(0.3, 0.1));
    CHECK(lo.kind == BoundKind::lower_simple);
    CHECK(lo.value <= 1.0);
    CHECK_FALSE(lo.params.has_value());
  }

  TEST_CASE("mirror identity") {
    for (double alpha = 0.05; alpha <= 1.0; alpha += 0.05) {
      for (double rho = 0.01; rho < 1.0; rho += 0.07) {
        const ProblemShape s = ProblemShape::from_rho(alpha, rho);
        CHECK(simple_upper(s).value + simple_lower(s).value == doctest::Approx(2.0).epsilon(1e-15));
      }
    }
  }

  TEST_CASE("tail_term is nondecreasing in beta") {
    double prev = tail_term(0.001);
    for (double beta = 0.002; beta <= 0.999; beta += 0.001) {
      const double cur = tail_term(beta);
      CHECK(cur >= prev);
      prev = cur;
    }
  }

  TEST_CASE("monotone in alpha at fixed beta") {
    const double beta = 0.05;
    double up_prev = simple_upper(ProblemShape(0.06, beta)).value;
    double lo_prev = simple_lower(ProblemShape(0.06, beta)).value;
    for (double alpha = 0.07; alpha <= 1.0; alpha += 0.01) {
      const ProblemShape s(alpha, beta);
      CHECK(simple_upper(s).value < up_prev);
      CHECK(simple_lower(s).value > lo_prev);
      up_prev = simple_upper(s).value;
      lo_prev = simple_lower(s).value;
    }
  }

  TEST_CASE("optimal_nu") {
    CHECK(std::abs(optimal_nu(1.0 - 1e-6)) <= 1e-5);
    CHECK(std::abs(optimal_nu(0.5) - std::sqrt(2.0) * erfinv_by_bisection(0.5)) <= 1e-12);
  }

  TEST_CASE("truncated moment objective matches its closed form") {
    for (double beta : {0.01, 0.3}) {
      for (double nu = 0.0; nu <= 5.0; nu += 0.25) {
        const double ref = beta * nu * nu + std::erfc(nu / std::sqrt(2.0)) * (1.0 - nu * nu) +
                           2.0 * nu * std::exp(-0.5 * nu * nu) / std::sqrt(2.0 * std::numbers::pi);
        CHECK(std::abs(truncated_moment_objective(beta, nu) - ref) <= 1e-13);
      }
    }
  }

  TEST_CASE("optimal_nu minimises the truncated moment objective") {
    for (double beta = 0.01; beta < 0.99; beta += 0.04) {
      const double t2 = tail_term(beta) * tail_term(beta);
      CHECK(std::abs(truncated_moment_objective(beta, optimal_nu(beta)) - t2) <= 1e-9);
      double scan_min = 1e300;
      for (double nu = 0.0; nu <= 8.0; nu += 1e-3) {
        const double g = truncated_moment_objective(beta, nu);
        CHECK(t2 <= g + 1e-12);
        scan_min = std::min(scan_min, g);
      }
      CHECK(std::abs(scan_min - t2) <= 1e-6);
    }
  }
}
