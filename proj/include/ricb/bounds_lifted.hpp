// Copyright 2026 The ricbounds Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "ricb/types.hpp"

// Building blocks of the lifted (exponential comparison) bounds.
//
// For a scaled comparison parameter c3 > 0 the upper-side objective is
//
//   (1/sqrt(alpha)) * ( -c3/2 + I_uric(c3, beta) + I_sph(c3, alpha; plus) )
//
// and the lower side is its reflection with the minus-branch spherical term.
// I_uric is the minimum over (gamma, nu) of i_uric_inner, which in turn is
// built from the scalar moment E exp(c3 * max(h^2/(4 gamma) - nu, 0)) of a
// standard normal h (big_i_uric).

namespace ricb {

struct OptimizerConfig;

enum class SphBranch { plus, minus };

/// (2 c3 +/- sqrt(4 c3^2 + 16 alpha)) / 8.  Requires c3 > 0, alpha in (0, 1].
double gamma_hat(double c3, double alpha, SphBranch branch);

/// gamma_hat - (alpha / (2 c3)) log(1 - c3 / (2 gamma_hat)).
double i_sph(double c3, double alpha, SphBranch branch);

/// E exp(c3 max(h^2/(4 gamma) - nu, 0)), h ~ N(0, 1).
///
/// Evaluated as erf(sqrt(2 nu gamma)) + erfcx(z) e^{-2 nu gamma} / sqrt(1 - 2p)
/// with p = c3/(4 gamma) and z = sqrt(2 nu gamma (1 - 2p)); the exponential
/// factors of the textbook form C erfc(a/sqrt2) are combined before
/// evaluation so neither underflows on its own.
/// Throws DomainError when p >= 1/2, c3 <= 0, gamma <= 0 or nu < 0.
double big_i_uric(const LiftedParams& params);

/// log(big_i_uric(params)), accurate also when the moment is close to 1.
double log_big_i_uric(const LiftedParams& params);

/// Same as log_big_i_uric with 1 - 2p supplied by the caller.  The optimizer
/// knows the gap gamma - c3/2 exactly and passes it through this entry.
double log_big_i_uric_with_gap(double gamma, double nu, double one_minus_2p);

/// C erfc(a/sqrt2) evaluated with the combined exponent (the stable path).
double moment_tail_scaled(const LiftedParams& params);

/// C erfc(a/sqrt2) evaluated literally as e^r / sqrt(1 - 2p) * erfc(a/sqrt2).
/// Reference path only; underflows for large nu * gamma.
double moment_tail_direct(const LiftedParams& params);

/// nu beta + gamma + log(big_i_uric) / c3.
double i_uric_inner(double c3, double beta, double gamma, double nu);

/// Assembles the upper objective from an already minimised inner value.
double upper_from_inner(double c3, double alpha, double inner_min);

/// Assembles the lower objective from an already minimised inner value.
double lower_from_inner(double c3, double alpha, double inner_min);

/// Upper objective at fixed c3 with the inner (gamma, nu) problem solved by
/// the optimizer.  The bound is the minimum of this over c3.
double lifted_upper_objective(double c3, const ProblemShape& shape,
                              const OptimizerConfig& config);
double lifted_upper_objective(double c3, const ProblemShape& shape);

/// Lower objective at fixed c3; the bound is the maximum of this over c3.
double lifted_lower_objective(double c3, const ProblemShape& shape,
                              const OptimizerConfig& config);
double lifted_lower_objective(double c3, const ProblemShape& shape);

/// Lower objective with caller-supplied (gamma, nu) instead of the inner
/// minimum.  Used to re-evaluate tabulated parameter triples.
double lifted_lower_at(const LiftedParams& params, const ProblemShape& shape);

/// Upper objective with caller-supplied (gamma, nu).
double lifted_upper_at(const LiftedParams& params, const ProblemShape& shape);

}  // namespace ricb
