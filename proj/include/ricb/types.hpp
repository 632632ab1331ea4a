// Copyright 2026 The ricbounds Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace ricb {

/// Admissible range for beta = k/n.  The closed forms hit erfinv
/// singularities at 0 and 1, so the ends are cut off rather than
/// extrapolated.
inline constexpr double kBetaMin = 1e-6;
inline constexpr double kBetaMax = 1.0 - 1e-6;

/// Linear-regime pair (alpha, beta) = (m/n, k/n) with 0 < beta < alpha <= 1.
class ProblemShape {
 public:
  /// Throws DomainError unless 0 < beta < alpha <= 1 and beta is admissible.
  ProblemShape(double alpha, double beta);

  /// Builds the shape from the table indexing (alpha, rho = beta/alpha).
  static ProblemShape from_rho(double alpha, double rho);

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  double rho() const noexcept { return beta_ / alpha_; }

 private:
  double alpha_;
  double beta_;
};

enum class BoundKind { upper_simple, lower_simple, upper_lifted, lower_lifted };

std::string_view to_string(BoundKind kind) noexcept;

/// Parses "upper-simple", "lower-simple", "upper-lifted", "lower-lifted".
std::optional<BoundKind> parse_bound_kind(std::string_view text) noexcept;

inline bool is_lifted(BoundKind kind) noexcept {
  return kind == BoundKind::upper_lifted || kind == BoundKind::lower_lifted;
}

/// Scaled comparison parameter c3 together with the scaled dual pair
/// (gamma, nu) of the exponential-moment term.  Feasible points satisfy
/// c3 >= 0, nu >= 0 and c3 / (4 gamma) < 1/2.
struct LiftedParams {
  double c3 = 0.0;
  double gamma = 0.0;
  double nu = 0.0;
};

struct BoundResult {
  BoundKind kind = BoundKind::upper_simple;
  /// Bound on lim E xi / sqrt(m).
  double value = 0.0;
  /// Present exactly for the lifted kinds.
  std::optional<LiftedParams> params;
  bool converged = true;
  std::uint64_t evaluations = 0;
};

}  // namespace ricb
