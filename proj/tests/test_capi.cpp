// Copyright 2026 The ricbounds Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <thread>
#include <vector>

#include "ricb/ricb.h"

TEST_SUITE("capi") {
  TEST_CASE("version and status names") {
    CHECK(std::string(ricb_version()) == "0.1.0");
    CHECK(std::string(ricb_status_name(RICB_OK)) == "ok");
    CHECK(std::string(ricb_status_name(RICB_ERR_DOMAIN)) == "domain error");
    CHECK(std::string(ricb_status_name(static_cast<ricb_status>(99))) == "unknown status");
  }

  TEST_CASE("bound kind names round trip") {
    for (auto k : {RICB_UPPER_SIMPLE, RICB_LOWER_SIMPLE, RICB_UPPER_LIFTED, RICB_LOWER_LIFTED}) {
      ricb_bound_kind parsed{};
      REQUIRE(ricb_parse_bound_kind(ricb_bound_kind_name(k), &parsed) == RICB_OK);
      CHECK(parsed == k);
    }
    ricb_bound_kind parsed{};
    CHECK(ricb_parse_bound_kind("sideways", &parsed) == RICB_ERR_PARSE);
    CHECK(ricb_parse_bound_kind(nullptr, &parsed) == RICB_ERR_NULL);
  }

  TEST_CASE("simple and lifted bounds") {
    ricb_bound_result r{};
    REQUIRE(ricb_bound(RICB_UPPER_SIMPLE, 0.1, 0.01, nullptr, &r) == RICB_OK);
    CHECK(std::abs(r.value - 1.9192) <= 5e-4);
    CHECK(r.has_params == 0);
    CHECK(r.converged == 1);

    double beta = 0.0;
    REQUIRE(ricb_beta_from_rho(0.3, 0.3, &beta) == RICB_OK);
    REQUIRE(ricb_bound(RICB_UPPER_LIFTED, 0.3, beta, nullptr, &r) == RICB_OK);
    CHECK(std::abs(r.value - 2.1409) <= 5e-3);
    CHECK(r.has_params == 1);
    CHECK(r.gamma > r.c3 / 2.0);
    CHECK(r.evaluations > 0);

    REQUIRE(ricb_bound(RICB_LOWER_SIMPLE, 0.7, 0.21, nullptr, &r) == RICB_OK);
    CHECK(std::abs(r.value - 0.0247) <= 5e-4);
  }

  TEST_CASE("shape errors carry a message") {
    ricb_bound_result r{};
    CHECK(ricb_bound(RICB_UPPER_SIMPLE, 0.5, 0.6, nullptr, &r) == RICB_ERR_DOMAIN);
    CHECK(std::strlen(ricb_last_error()) > 0);
    CHECK(ricb_bound(RICB_UPPER_SIMPLE, 0.5, 0.1, nullptr, nullptr) == RICB_ERR_NULL);
    double beta = 0.0;
    CHECK(ricb_beta_from_rho(0.5, 1.0, &beta) == RICB_ERR_DOMAIN);
    CHECK(ricb_bound(static_cast<ricb_bound_kind>(7), 0.5, 0.1, nullptr, &r) != RICB_OK);
  }

  TEST_CASE("config handle") {
    ricb_config* cfg = nullptr;
    REQUIRE(ricb_config_create(&cfg) == RICB_OK);
    CHECK(ricb_config_set_inner_tol(cfg, 0.0) == RICB_ERR_DOMAIN);
    CHECK(ricb_config_set_c3_range(cfg, 2.0, 1.0) == RICB_ERR_DOMAIN);
    CHECK(ricb_config_set_multistart(cfg, 0) == RICB_ERR_DOMAIN);
    REQUIRE(ricb_config_set_c3_range(cfg, 1e-4, 1e-3) == RICB_OK);
    REQUIRE(ricb_config_set_outer_tol(cfg, 1e-7) == RICB_OK);
    REQUIRE(ricb_config_set_max_evals(cfg, 5000) == RICB_OK);
    double inner = 0, outer = 0, lo = 0, hi = 0;
    int ms = 0;
    uint64_t evals = 0;
    REQUIRE(ricb_config_get(cfg, &inner, &outer, &ms, &lo, &hi, &evals) == RICB_OK);
    CHECK(outer == 1e-7);
    CHECK(lo == 1e-4);
    CHECK(hi == 1e-3);
    CHECK(evals == 5000);
    CHECK(ms == 4);

    ricb_bound_result r{};
    REQUIRE(ricb_bound(RICB_LOWER_LIFTED, 0.1, 0.05, cfg, &r) == RICB_OK);
    CHECK(r.converged == 0);
    CHECK(std::isfinite(r.value));
    ricb_config_destroy(cfg);
    ricb_config_destroy(nullptr);
    CHECK(ricb_config_create(nullptr) == RICB_ERR_NULL);
  }

  TEST_CASE("reference tables") {
    double v = 0.0;
    REQUIRE(ricb_reference_lookup(1, 0.5, 0.3, "xi_uric_u", &v) == RICB_OK);
    CHECK(v == 2.0560);
    CHECK(ricb_reference_lookup(5, 0.5, 0.7, "xi_lric_l", &v) == RICB_ERR_NOT_FOUND);
    CHECK(std::string(ricb_last_error()).find("table 5") != std::string::npos);
    CHECK(ricb_reference_lookup(1, 0.5, 0.3, "nonsense", &v) == RICB_ERR_PARSE);
    int found = 1;
    REQUIRE(ricb_reference_find(5, 0.5, 0.7, "xi_lric_l", &found, &v) == RICB_OK);
    CHECK(found == 0);
    REQUIRE(ricb_reference_find(7, 0.1, 0.5, "c3_opt", &found, &v) == RICB_OK);
    CHECK(found == 1);
    CHECK(v == 37.468);

    CHECK(ricb_reference_count() == 405);
    int table = 0;
    double alpha = 0, rho = 0, value = 0;
    const char* quantity = nullptr;
    REQUIRE(ricb_reference_entry(0, &table, &alpha, &rho, &quantity, &value) == RICB_OK);
    CHECK(quantity != nullptr);
    CHECK(ricb_reference_entry(405, &table, &alpha, &rho, &quantity, &value) ==
          RICB_ERR_NOT_FOUND);

    REQUIRE(ricb_bt_relation(1.8970, 1, &v) == RICB_OK);
    CHECK(v == doctest::Approx(2.5986).epsilon(1e-4));
    REQUIRE(ricb_bt_relation(0.4224, 0, &v) == RICB_OK);
    CHECK(v == doctest::Approx(0.8216).epsilon(1e-4));
    CHECK(ricb_bt_relation(-1.0, 1, &v) == RICB_ERR_DOMAIN);
  }

  TEST_CASE("empirical handle") {
    ricb_empirical* run = nullptr;
    REQUIRE(ricb_empirical_run(5, 8, 2, 5, 100, 1, 2, &run) == RICB_OK);
    ricb_estimate_summary u{}, l{};
    REQUIRE(ricb_empirical_summary(run, RICB_URIC, &u) == RICB_OK);
    REQUIRE(ricb_empirical_summary(run, RICB_LRIC, &l) == RICB_OK);
    CHECK(u.trials == 5);
    CHECK(u.sampled == 0);
    CHECK(u.supports_per_trial == 28);
    CHECK(l.mean <= u.mean);
    const double* values = nullptr;
    size_t count = 0;
    REQUIRE(ricb_empirical_per_trial(run, RICB_URIC, &values, &count) == RICB_OK);
    CHECK(count == 5);
    double mean = 0.0;
    for (size_t i = 0; i < count; ++i) mean += values[i] / 5.0;
    CHECK(mean == doctest::Approx(u.mean).epsilon(1e-14));
    ricb_empirical_destroy(run);
    ricb_empirical_destroy(nullptr);

    CHECK(ricb_empirical_run(8, 5, 2, 5, 100, 1, 1, &run) == RICB_ERR_DOMAIN);
    CHECK(ricb_empirical_run(5, 8, 2, 5, 0, 1, 1, &run) == RICB_ERR_DOMAIN);
    CHECK(ricb_empirical_run(5, 8, 2, 5, 100, 1, 1, nullptr) == RICB_ERR_NULL);
  }

  TEST_CASE("special functions") {
    double v = 0.0;
    REQUIRE(ricb_erf(0.5, &v) == RICB_OK);
    CHECK(v == doctest::Approx(std::erf(0.5)).epsilon(1e-15));
    REQUIRE(ricb_erfc(5.0, &v) == RICB_OK);
    CHECK(v == doctest::Approx(std::erfc(5.0)).epsilon(1e-13));
    REQUIRE(ricb_erfcx(30.0, &v) == RICB_OK);
    CHECK(v == doctest::Approx(0.01879).epsilon(1e-3));
    REQUIRE(ricb_erfinv(0.5, &v) == RICB_OK);
    CHECK(std::abs(std::erf(v) - 0.5) <= 1e-15);
    CHECK(ricb_erfinv(1.0, &v) == RICB_ERR_DOMAIN);
    CHECK(ricb_erfcx(-1.0, &v) == RICB_ERR_DOMAIN);
    CHECK(ricb_erf(0.5, nullptr) == RICB_ERR_NULL);
  }

  TEST_CASE("last error is per thread") {
    double v = 0.0;
    REQUIRE(ricb_erfinv(2.0, &v) == RICB_ERR_DOMAIN);
    const std::string mine = ricb_last_error();
    std::thread([] {
      double w = 0.0;
      (void)ricb_erfcx(-3.0, &w);
    }).join();
    CHECK(std::string(ricb_last_error()) == mine);
  }
}
