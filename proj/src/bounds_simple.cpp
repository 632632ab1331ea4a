// Copyright 2026 The ricbounds Authors
// SPDX-License-Identifier: Apache-2.0

#include "ricb/bounds_simple.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "ricb/error.hpp"
#include "ricb/specfun.hpp"

namespace ricb {
namespace {

void require_admissible_beta(double beta, const char* fn) {
  if (!(beta >= kBetaMin - 1e-15 && beta <= kBetaMax + 1e-15)) {
    std::ostringstream msg;
    msg << fn << ": beta=" << beta << " outside [" << kBetaMin << ", " << kBetaMax << "]";
    throw DomainError(msg.str());
  }
}

}  // namespace

double tail_term(double beta) {
  require_admissible_beta(beta, "tail_term");
  const double t = specfun::erfinv(1.0 - beta);
  return std::sqrt(beta + 2.0 * t / (std::sqrt(std::numbers::pi) * std::exp(t * t)));
}

double optimal_nu(double beta) {
  require_admissible_beta(beta, "optimal_nu");
  return std::numbers::sqrt2 * specfun::erfinv(1.0 - beta);
}

double truncated_moment_objective(double beta, double nu) {
  if (!(nu >= 0.0) || !std::isfinite(nu)) {
    throw DomainError("truncated_moment_objective: nu must be finite and >= 0");
  }
  const double inv_sqrt_2pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);
  return beta * nu * nu + specfun::erfc(nu / std::numbers::sqrt2) * (1.0 - nu * nu) +
         2.0 * nu * std::exp(-0.5 * nu * nu) * inv_sqrt_2pi;
}

BoundResult simple_upper(const ProblemShape& shape) {
  BoundResult r;
  r.kind = BoundKind::upper_simple;
  r.value = 1.0 + tail_term(shape.beta()) / std::sqrt(shape.alpha());
  r.converged = true;
  r.evaluations = 1;
  return r;
}

BoundResult simple_lower(const ProblemShape& shape) {
  BoundResult r;
  r.kind = BoundKind::lower_simple;
  r.value = 1.0 - tail_term(shape.beta()) / std::sqrt(shape.alpha());
  r.converged = true;
  r.evaluations = 1;
  return r;
}

}  // namespace ricb
