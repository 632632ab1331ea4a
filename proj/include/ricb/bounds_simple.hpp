// Copyright 2026 The ricbounds Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "ricb/types.hpp"

// Closed-form bounds on the restricted isometry constants.  Both are
// 1 -/+ tail_term(beta) / sqrt(alpha); the tail term is the limiting
// root-mean-square of the k largest Gaussian magnitudes, normalised by n.

namespace ricb {

/// sqrt(beta + 2 t / (sqrt(pi) e^{t^2})), t = erfinv(1 - beta).
/// Throws DomainError for beta outside [kBetaMin, kBetaMax].
double tail_term(double beta);

/// sqrt(2) erfinv(1 - beta): the threshold at which the c3 -> 0 limit of
/// the moment objective is minimised.
double optimal_nu(double beta);

/// beta nu^2 + erfc(nu/sqrt2)(1 - nu^2) + 2 nu e^{-nu^2/2} / sqrt(2 pi).
/// Its minimum over nu >= 0 equals tail_term(beta)^2.
double truncated_moment_objective(double beta, double nu);

BoundResult simple_upper(const ProblemShape& shape);

/// May be negative; reported as computed.
BoundResult simple_lower(const ProblemShape& shape);

}  // namespace ricb
