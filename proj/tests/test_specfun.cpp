// Copyright 2026 The ricbounds Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "oracles.hpp"
#include "ricb/error.hpp"
#include "ricb/specfun.hpp"

namespace sf = ricb::specfun;

TEST_SUITE("specfun") {
  TEST_CASE("erf at the origin and in saturation") {
    CHECK(sf::erf(0.0) == 0.0);
    CHECK(std::abs(sf::erf(10.0) - 1.0) <= 1e-14);
    CHECK(std::abs(sf::erf(-10.0) + 1.0) <= 1e-14);
  }

  TEST_CASE("erf(0.5) agrees with quadrature") {
    const double q = oracle::integrate(
        [](double t) { return 2.0 / std::sqrt(std::numbers::pi) * std::exp(-t * t); }, 0.0, 0.5);
    CHECK(std::abs(sf::erf(0.5) - q) <= 1e-12);
  }

  TEST_CASE("erf is odd, bounded and tracks the C library") {
    for (double x = -6.0; x <= 6.0; x += 0.01) {
      CHECK(sf::erf(-x) == -sf::erf(x));
      CHECK(std::abs(sf::erf(x)) <= 1.0);
      CHECK(std::abs(sf::erf(x) - std::erf(x)) <= 1e-14);
    }
  }

  TEST_CASE("erf is strictly increasing on a grid") {
    double prev = sf::erf(-5.0);
    for (double x = -4.99; x <= 5.0; x += 0.01) {
      const double cur = sf::erf(x);
      CHECK(cur > prev);
      prev = cur;
    }
  }

  TEST_CASE("erfc basics") {
    CHECK(sf::erfc(0.0) == 1.0);
    for (double x = -6.0; x <= 6.0; x += 0.005)
      CHECK(std::abs(sf::erf(x) + sf::erfc(x) - 1.0) <= 1e-14);
  }

  TEST_CASE("erfc(5) agrees with a continued-fraction oracle") {
    const double ref = static_cast<double>(oracle::erfc_cf(5.0L));
    CHECK(std::abs(sf::erfc(5.0) - ref) <= 1e-12 * ref);
  }

  TEST_CASE("erfc keeps relative accuracy on [0, 30]") {
    for (double x = 0.0; x <= 30.0; x += 0.05) {
      const double ref = x >= 2.0 ? static_cast<double>(oracle::erfc_cf(x)) : std::erfc(x);
      CAPTURE(x);
      if (ref >= std::numeric_limits<double>::min())
        CHECK(std::abs(sf::erfc(x) - ref) <= 1e-12 * ref);
      else
        CHECK(std::abs(sf::erfc(x) - ref) <= 2.0 * std::numeric_limits<double>::denorm_min());
    }
    CHECK(sf::erfc(27.2) > 0.0);
    CHECK(sf::erfc(27.5) == 0.0);
  }

  TEST_CASE("erfcx values") {
    CHECK(sf::erfcx(0.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(sf::erfcx(50.0) * 50.0 * std::sqrt(std::numbers::pi) - 1.0) <= 1e-3);
    const long double composed = std::exp(4.0L) * std::erfc(2.0L);
    CHECK(std::abs(sf::erfcx(2.0) - static_cast<double>(composed)) <= 1e-12 * sf::erfcx(2.0));
    CHECK(sf::erfcx(std::numeric_limits<double>::infinity()) == 0.0);
  }

  TEST_CASE("erfcx matches the scaled product on [0, 5]") {
    for (double x = 0.0; x <= 5.0; x += 0.01) {
      const double direct = std::exp(x * x) * sf::erfc(x);
      CHECK(std::abs(sf::erfcx(x) - direct) <= 1e-12 * sf::erfcx(x));
    }
  }

  TEST_CASE("erfcx continues smoothly past its large-argument switch") {
    for (double x = 5.0; x <= 27.0; x += 0.25) {
      const long double ref = std::exp(static_cast<long double>(x) * x) * oracle::erfc_cf(x);
      CHECK(std::abs(sf::erfcx(x) - static_cast<double>(ref)) <= 1e-12 * sf::erfcx(x));
    }
  }

  TEST_CASE("erfcx is strictly decreasing") {
    double prev = sf::erfcx(0.0);
    for (double x = 0.01; x <= 100.0; x *= 1.05) {
      const double cur = sf::erfcx(x);
      CHECK(cur < prev);
      prev = cur;
    }
  }

  TEST_CASE("erfcx rejects negative arguments") {
    CHECK_THROWS_AS(sf::erfcx(-0.1), ricb::DomainError);
    CHECK_THROWS_AS(sf::erfcx(std::numeric_limits<double>::quiet_NaN()), ricb::DomainError);
  }

  TEST_CASE("erfinv at the origin and round trips") {
    CHECK(sf::erfinv(0.0) == 0.0);
    CHECK(std::abs(sf::erfinv(sf::erf(1.3)) - 1.3) <= 1e-10);
    for (int i = 0; i < 1000; ++i) {
      const double x = -4.0 + 8.0 * i / 999.0;
      // Rounding erf(x) alone moves the preimage by eps / erf'(x).
      const double slope = 2.0 / std::sqrt(std::numbers::pi) * std::exp(-x * x);
      const double tol = 1e-10 + 2.0 * std::numeric_limits<double>::epsilon() / slope;
      CHECK(std::abs(sf::erfinv(sf::erf(x)) - x) <= tol);
    }
  }

  TEST_CASE("erfinv(0.99) agrees with bisection on erf") {
    const double ref = oracle::bisect([](double x) { return std::erf(x); }, 0.99, 0.0, 6.0);
    CHECK(std::abs(sf::erfinv(0.99) - ref) <= 1e-12);
  }

  TEST_CASE("erf(erfinv(p)) reproduces p") {
    for (double p = -0.999999; p < 1.0; p += 0.00731) CHECK(std::abs(sf::erf(sf::erfinv(p)) - p) <= 1e-12);
    for (double q = 1e-12; q < 0.1; q *= 3.0) {
      const double p = 1.0 - q;
      const double tail = 1.0 - p;  // exact
      CHECK(std::abs(sf::erf(sf::erfinv(p)) - p) <= 1e-12);
      CHECK(std::abs(sf::erfc(sf::erfinv(p)) - tail) <= 1e-9 * tail);
    }
  }

  TEST_CASE("erfinv rejects the singular endpoints") {
    CHECK_THROWS_AS(sf::erfinv(1.0), ricb::DomainError);
    CHECK_THROWS_AS(sf::erfinv(-1.0), ricb::DomainError);
    CHECK_THROWS_AS(sf::erfinv(1.5), ricb::DomainError);
    CHECK_THROWS_AS(sf::erfinv(std::numeric_limits<double>::quiet_NaN()), ricb::DomainError);
  }
}
