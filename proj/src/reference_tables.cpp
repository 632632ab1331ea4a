// Copyright 2026 The ricbounds Authors
// SPDX-License-Identifier: Apache-2.0

#include "ricb/reference_tables.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <utility>

#include "ricb/error.hpp"

namespace ricb {
namespace {

constexpr std::array<std::pair<Quantity, std::string_view>, 9> kNames{{
    {Quantity::xi_uric_BT, "xi_uric_BT"},
    {Quantity::xi_uric_u, "xi_uric_u"},
    {Quantity::xi_uric_u_low, "xi_uric_u_low"},
    {Quantity::xi_lric_BT, "xi_lric_BT"},
    {Quantity::xi_lric_l, "xi_lric_l"},
    {Quantity::xi_lric_l_lift, "xi_lric_l_lift"},
    {Quantity::c3_opt, "c3_opt"},
    {Quantity::nu_opt, "nu_opt"},
    {Quantity::gamma_opt, "gamma_opt"},
}};

// Grid coordinates are printed with at most two decimals.
constexpr double kKeyTol = 1e-9;

bool same_key(const ReferenceEntry& e, int table_id, double alpha, double rho, Quantity q) {
  return e.table_id == table_id && e.quantity == q && std::abs(e.alpha - alpha) < kKeyTol &&
         std::abs(e.rho - rho) < kKeyTol;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

template <typename T>
T parse_number(std::string_view field, std::size_t line_no) {
  field = trim(field);
  T out{};
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), out);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ParseError("reference data line " + std::to_string(line_no) + ": bad number '" +
                     std::string(field) + "'");
  }
  return out;
}

std::string describe(int table_id, double alpha, double rho, Quantity q) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "table %d, alpha=%g, rho=%g, quantity=%s", table_id, alpha, rho,
                std::string(to_string(q)).c_str());
  return buf;
}

// Published cell counts per (table, quantity).
const std::map<std::pair<int, Quantity>, std::size_t>& expected_counts() {
  static const std::map<std::pair<int, Quantity>, std::size_t> counts{
      {{1, Quantity::xi_uric_BT}, 15},     {{1, Quantity::xi_uric_u}, 15},
      {{2, Quantity::xi_uric_BT}, 10},     {{2, Quantity::xi_uric_u}, 10},
      {{3, Quantity::c3_opt}, 15},         {{3, Quantity::nu_opt}, 15},
      {{3, Quantity::gamma_opt}, 15},      {{3, Quantity::xi_uric_u_low}, 15},
      {{4, Quantity::c3_opt}, 10},         {{4, Quantity::nu_opt}, 10},
      {{4, Quantity::gamma_opt}, 10},      {{4, Quantity::xi_uric_u_low}, 10},
      {{5, Quantity::xi_lric_BT}, 20},     {{5, Quantity::xi_lric_l}, 20},
      {{6, Quantity::xi_uric_BT}, 25},     {{6, Quantity::xi_uric_u}, 25},
      {{6, Quantity::xi_uric_u_low}, 25},  {{7, Quantity::c3_opt}, 20},
      {{7, Quantity::nu_opt}, 20},         {{7, Quantity::gamma_opt}, 20},
      {{7, Quantity::xi_lric_l_lift}, 20}, {{8, Quantity::xi_lric_BT}, 20},
      {{8, Quantity::xi_lric_l}, 20},      {{8, Quantity::xi_lric_l_lift}, 20},
  };
  return counts;
}

}  // namespace

std::string_view to_string(Quantity q) noexcept {
  for (const auto& [value, name] : kNames)
    if (value == q) return name;
  return "?";
}

Quantity parse_quantity(std::string_view name) {
  for (const auto& [value, label] : kNames)
    if (label == name) return value;
  throw ParseError("unknown quantity '" + std::string(name) + "'");
}

ReferenceTables ReferenceTables::parse(std::string_view csv) {
  ReferenceTables out;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (!csv.empty()) {
    const auto nl = csv.find('\n');
    std::string_view line = trim(csv.substr(0, nl));
    csv.remove_prefix(nl == std::string_view::npos ? csv.size() : nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    if (!header_seen) {
      if (line != "table_id,alpha,rho,quantity,value")
        throw ParseError("reference data: unexpected header '" + std::string(line) + "'");
      header_seen = true;
      continue;
    }

    std::array<std::string_view, 5> fields;
    std::size_t count = 0;
    while (count < fields.size()) {
      const auto comma = line.find(',');
      fields[count++] = line.substr(0, comma);
      if (comma == std::string_view::npos) {
        line = {};
        break;
      }
      line.remove_prefix(comma + 1);
    }
    if (count != fields.size() || !line.empty()) {
      throw ParseError("reference data line " + std::to_string(line_no) +
                       ": expected 5 fields");
    }

    ReferenceEntry e;
    e.table_id = parse_number<int>(fields[0], line_no);
    e.alpha = parse_number<double>(fields[1], line_no);
    e.rho = parse_number<double>(fields[2], line_no);
    e.quantity = parse_quantity(trim(fields[3]));
    e.value = parse_number<double>(fields[4], line_no);
    if (out.find(e.table_id, e.alpha, e.rho, e.quantity)) {
      throw ParseError("reference data line " + std::to_string(line_no) + ": duplicate cell (" +
                       describe(e.table_id, e.alpha, e.rho, e.quantity) + ")");
    }
    out.entries_.push_back(e);
  }
  if (!header_seen) throw ParseError("reference data: missing header");
  return out;
}

const ReferenceTables& ReferenceTables::builtin() {
  static const ReferenceTables tables = [] {
    auto t = parse(builtin_reference_csv());
    t.check_complete();
    return t;
  }();
  return tables;
}

std::optional<double> ReferenceTables::find(int table_id, double alpha, double rho,
                                            Quantity q) const noexcept {
  for (const auto& e : entries_)
    if (same_key(e, table_id, alpha, rho, q)) return e.value;
  return std::nullopt;
}

double ReferenceTables::lookup(int table_id, double alpha, double rho, Quantity q) const {
  if (auto v = find(table_id, alpha, rho, q)) return *v;
  throw NotFoundError("no reference cell for " + describe(table_id, alpha, rho, q));
}

std::vector<ReferenceEntry> ReferenceTables::select(int table_id, Quantity q) const {
  std::vector<ReferenceEntry> out;
  for (const auto& e : entries_)
    if (e.table_id == table_id && e.quantity == q) out.push_back(e);
  return out;
}

void ReferenceTables::check_complete() const {
  std::map<std::pair<int, Quantity>, std::size_t> seen;
  for (const auto& e : entries_) ++seen[{e.table_id, e.quantity}];
  const auto& expected = expected_counts();
  for (const auto& [key, n] : expected) {
    const auto it = seen.find(key);
    const std::size_t got = it == seen.end() ? 0 : it->second;
    if (got != n) {
      throw ParseError("reference data: table " + std::to_string(key.first) + " " +
                       std::string(to_string(key.second)) + " has " + std::to_string(got) +
                       " cells, expected " + std::to_string(n));
    }
  }
  for (const auto& [key, n] : seen) {
    if (!expected.contains(key)) {
      throw ParseError("reference data: unexpected quantity " +
                       std::string(to_string(key.second)) + " in table " +
                       std::to_string(key.first));
    }
  }
}

double bt_relation(double xi_bt, Side side) {
  if (!(xi_bt >= 0.0)) throw DomainError("bt_relation needs xi >= 0");
  const double sq = xi_bt * xi_bt;
  return side == Side::upper ? sq - 1.0 : 1.0 - sq;
}

}  // namespace ricb
