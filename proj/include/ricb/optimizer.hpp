// Copyright 2026 The ricbounds Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <functional>

#include "ricb/types.hpp"

// Nested derivative-free search for the lifted bounds.
//
// Inner problem, at fixed c3: minimise i_uric_inner over gamma > c3/2,
// nu >= 0.  The search runs in unconstrained coordinates (u, v) with
// gamma = c3/2 + e^u and nu = e^v, from a deterministic log-spaced grid of
// Nelder-Mead starts.
//
// Outer problem: a log grid over c3 followed by golden-section refinement
// around the best grid point.  The upper bound minimises the upper objective,
// the lower bound maximises the lower objective.
//
// Everything is sequential and deterministic: equal inputs give
// bit-identical results.

namespace ricb {

struct OptimizerConfig {
  double inner_tol = 1e-10;  ///< absolute objective tolerance, inner solve
  double outer_tol = 1e-6;   ///< absolute width of the final c3 bracket
  int multistart_grid = 4;   ///< inner starts per axis
  double c3_min = 1e-4;
  double c3_max = 64.0;
  std::uint64_t max_evals = 20000;  ///< objective budget per inner solve

  /// Throws DomainError on non-positive tolerances/budgets or an empty
  /// bracket.
  void validate() const;
};

struct OptimReport {
  LiftedParams best_params;
  double best_value = 0.0;
  std::uint64_t evaluations = 0;
  bool converged = false;
  int restarts_used = 0;  ///< multistart seeds that were run
};

/// Minimises i_uric_inner(c3, beta, ., .).  Non-convergence within budget is
/// reported through converged = false; best-so-far is always returned.
OptimReport minimize_inner(double c3, double beta, const OptimizerConfig& config = {});

/// Lifted upper bound: minimum of the upper objective over c3, never worse
/// than the simple upper bound.
BoundResult optimize_upper(const ProblemShape& shape, const OptimizerConfig& config = {});

/// Lifted lower bound: maximum of the lower objective over c3, never worse
/// than the simple lower bound.
BoundResult optimize_lower(const ProblemShape& shape, const OptimizerConfig& config = {});

/// Dispatches on kind to the simple or lifted routines.
BoundResult compute_bound(BoundKind kind, const ProblemShape& shape,
                          const OptimizerConfig& config = {});

namespace search {

struct SimplexResult {
  std::array<double, 2> x{};
  double value = 0.0;
  std::uint64_t evaluations = 0;
  bool converged = false;
};

/// Nelder-Mead on R^2 with standard coefficients.  Stops once the spread of
/// vertex values is <= ftol and the simplex diameter is <= xtol, or when
/// max_evals is spent.  Non-finite values are treated as +infinity.
SimplexResult nelder_mead(const std::function<double(const std::array<double, 2>&)>& f,
                          std::array<double, 2> start, double step, double ftol, double xtol,
                          std::uint64_t max_evals);

struct LineResult {
  double x = 0.0;
  double value = 0.0;
  std::uint64_t evaluations = 0;
};

/// Golden-section minimisation of f on [lo, hi] down to a bracket of width
/// tol.  Among equal values the smaller abscissa wins.
LineResult golden_section(const std::function<double(double)>& f, double lo, double hi,
                          double tol);

}  // namespace search
}  // namespace ricb
