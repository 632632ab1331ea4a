// Copyright 2026 The ricbounds Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <string>

#include "ricb/error.hpp"
#include "ricb/reference_tables.hpp"

using namespace ricb;

TEST_SUITE("reference_tables") {
  TEST_CASE("builtin data loads and is complete") {
    const auto& t = ReferenceTables::builtin();
    CHECK(t.entries().size() == 405);
    CHECK_NOTHROW(t.check_complete());
  }

  TEST_CASE("lookup of published cells") {
    const auto& t = ReferenceTables::builtin();
    CHECK(t.lookup(1, 0.5, 0.3, Quantity::xi_uric_u) == 2.0560);
    CHECK(t.lookup(5, 0.9, 0.5, Quantity::xi_lric_l) == -0.002);
    CHECK(t.lookup(7, 0.1, 0.5, Quantity::c3_opt) == 37.468);
    CHECK(t.lookup(7, 0.1, 0.05, Quantity::c3_opt) == 0.4592);
    CHECK(t.lookup(2, 0.9, 0.9, Quantity::xi_uric_BT) == 2.3769);
    CHECK(t.lookup(4, 0.9, 0.9, Quantity::c3_opt) == 0.0051);
  }

  TEST_CASE("a missing cell names itself") {
    const auto& t = ReferenceTables::builtin();
    try {
      (void)t.lookup(5, 0.5, 0.7, Quantity::xi_lric_l);
      FAIL("expected NotFoundError");
    } catch (const NotFoundError& e) {
      const std::string msg = e.what();
      CHECK(msg.find("table 5") != std::string::npos);
      CHECK(msg.find("alpha=0.5") != std::string::npos);
      CHECK(msg.find("rho=0.7") != std::string::npos);
      CHECK(msg.find("xi_lric_l") != std::string::npos);
    }
    CHECK_FALSE(t.find(9, 0.1, 0.1, Quantity::xi_uric_u).has_value());
  }

  TEST_CASE("quantity names round trip") {
    for (auto q : {Quantity::xi_uric_BT, Quantity::xi_uric_u, Quantity::xi_uric_u_low,
                   Quantity::xi_lric_BT, Quantity::xi_lric_l, Quantity::xi_lric_l_lift,
                   Quantity::c3_opt, Quantity::nu_opt, Quantity::gamma_opt})
      CHECK(parse_quantity(to_string(q)) == q);
    CHECK_THROWS_AS(parse_quantity("xi"), ParseError);
  }

  TEST_CASE("lifted values never lose to the simple ones") {
    const auto& t = ReferenceTables::builtin();
    for (const auto& e : t.select(6, Quantity::xi_uric_u_low))
      CHECK(e.value <= t.lookup(6, e.alpha, e.rho, Quantity::xi_uric_u));
    for (const auto& e : t.select(8, Quantity::xi_lric_l_lift))
      CHECK(e.value >= t.lookup(8, e.alpha, e.rho, Quantity::xi_lric_l));
  }

  TEST_CASE("comparison tables repeat the detailed tables") {
    const auto& t = ReferenceTables::builtin();
    for (const auto& e : t.select(6, Quantity::xi_uric_u_low)) {
      const int detail = e.rho <= 0.5 ? 3 : 4;
      const int simple = e.rho <= 0.5 ? 1 : 2;
      CHECK(e.value == t.lookup(detail, e.alpha, e.rho, Quantity::xi_uric_u_low));
      CHECK(t.lookup(6, e.alpha, e.rho, Quantity::xi_uric_u) ==
            t.lookup(simple, e.alpha, e.rho, Quantity::xi_uric_u));
      CHECK(t.lookup(6, e.alpha, e.rho, Quantity::xi_uric_BT) ==
            t.lookup(simple, e.alpha, e.rho, Quantity::xi_uric_BT));
    }
    for (const auto& e : t.select(8, Quantity::xi_lric_l_lift)) {
      CHECK(e.value == t.lookup(7, e.alpha, e.rho, Quantity::xi_lric_l_lift));
      CHECK(t.lookup(8, e.alpha, e.rho, Quantity::xi_lric_l) ==
            t.lookup(5, e.alpha, e.rho, Quantity::xi_lric_l));
    }
  }

  TEST_CASE("parse rejects malformed input") {
    const std::string header = "table_id,alpha,rho,quantity,value\n";
    CHECK_THROWS_AS(ReferenceTables::parse("id,a,r,q,v\n1,0.1,0.1,xi_uric_u,1.9\n"), ParseError);
    CHECK_THROWS_AS(ReferenceTables::parse(header + "1,0.1,0.1,xi_uric_u\n"), ParseError);
    CHECK_THROWS_AS(ReferenceTables::parse(header + "1,0.1,0.1,xi_uric_u,1.9,3\n"), ParseError);
    CHECK_THROWS_AS(ReferenceTables::parse(header + "1,0.1,zero,xi_uric_u,1.9\n"), ParseError);
    CHECK_THROWS_AS(ReferenceTables::parse(header + "1,0.1,0.1,bogus,1.9\n"), ParseError);
    CHECK_THROWS_AS(
        ReferenceTables::parse(header + "1,0.1,0.1,xi_uric_u,1.9\n1,0.1,0.1,xi_uric_u,1.8\n"),
        ParseError);
    CHECK_THROWS_AS(ReferenceTables::parse(""), ParseError);
  }

  TEST_CASE("parse accepts CRLF and blank lines; completeness catches gaps") {
    const auto t = ReferenceTables::parse(
        "table_id,alpha,rho,quantity,value\r\n\r\n1,0.1,0.1,xi_uric_u,1.9192\r\n");
    CHECK(t.lookup(1, 0.1, 0.1, Quantity::xi_uric_u) == 1.9192);
    CHECK_THROWS_AS(t.check_complete(), ParseError);
  }

  TEST_CASE("raw asset is exposed") {
    const auto csv = builtin_reference_csv();
    CHECK(csv.substr(0, 33) == "table_id,alpha,rho,quantity,value");
  }

  TEST_CASE("bt_relation") {
    CHECK(bt_relation(1.0, Side::upper) == 0.0);
    CHECK(bt_relation(1.0, Side::lower) == 0.0);
    CHECK(bt_relation(1.8970, Side::upper) == doctest::Approx(2.5986).epsilon(1e-4));
    CHECK(bt_relation(0.4224, Side::lower) == doctest::Approx(0.8216).epsilon(1e-4));
    CHECK_THROWS_AS(bt_relation(-0.1, Side::upper), DomainError);
  }
}
