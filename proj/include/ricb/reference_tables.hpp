// Copyright 2026 The ricbounds Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

// Published numerical tables of RIC bounds, compiled into the library.
//
// Table ids:
//   1, 2  simple upper bound and BT comparison (rho <= 0.5, rho > 0.5)
//   3, 4  lifted upper bound with optimizing (c3, nu, gamma)
//   5     simple lower bound and BT comparison
//   6     upper-bound comparison: BT, simple, lifted
//   7     lifted lower bound with optimizing (c3, nu, gamma)
//   8     lower-bound comparison: BT, simple, lifted
//
// Cells are keyed by (table, alpha, rho = beta/alpha, quantity).

namespace ricb {

enum class Quantity {
  xi_uric_BT,
  xi_uric_u,
  xi_uric_u_low,
  xi_lric_BT,
  xi_lric_l,
  xi_lric_l_lift,
  c3_opt,
  nu_opt,
  gamma_opt,
};

std::string_view to_string(Quantity q) noexcept;

/// Throws ParseError on an unknown name.
Quantity parse_quantity(std::string_view name);

struct ReferenceEntry {
  int table_id = 0;
  double alpha = 0.0;
  double rho = 0.0;
  Quantity quantity = Quantity::xi_uric_u;
  double value = 0.0;
};

class ReferenceTables {
 public:
  /// The embedded dataset, parsed and count-checked once.
  static const ReferenceTables& builtin();

  /// Parses `table_id,alpha,rho,quantity,value` records after a header line.
  /// Throws ParseError on malformed lines or duplicate keys.
  static ReferenceTables parse(std::string_view csv);

  /// Throws NotFoundError naming the cell when absent.
  double lookup(int table_id, double alpha, double rho, Quantity q) const;
  std::optional<double> find(int table_id, double alpha, double rho, Quantity q) const noexcept;

  /// Entries of one table and quantity, in file order.
  std::vector<ReferenceEntry> select(int table_id, Quantity q) const;

  std::span<const ReferenceEntry> entries() const noexcept { return entries_; }

  /// Throws ParseError unless every table holds exactly its published number
  /// of cells per quantity.
  void check_complete() const;

 private:
  std::vector<ReferenceEntry> entries_;
};

enum class Side { upper, lower };

/// Converts a BT comparison value to the U / L constant of that literature:
/// xi^2 - 1 for the upper side, 1 - xi^2 for the lower side.
double bt_relation(double xi_bt, Side side);

/// The raw embedded CSV text.
std::string_view builtin_reference_csv() noexcept;

}  // namespace ricb
