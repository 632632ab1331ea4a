// Copyright 2026 The ricbounds Authors
// SPDX-License-Identifier: Apache-2.0

#include "ricb/bounds_lifted.hpp"

#include <cmath>
#include <sstream>

#include "ricb/error.hpp"
#include "ricb/optimizer.hpp"
#include "ricb/specfun.hpp"

namespace ricb {
namespace {

void require_c3_alpha(double c3, double alpha, const char* fn) {
  if (!(c3 > 0.0) || !std::isfinite(c3)) {
    std::ostringstream msg;
    msg << fn << ": c3=" << c3 << " must be finite and > 0";
    throw DomainError(msg.str());
  }
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    std::ostringstream msg;
    msg << fn << ": alpha=" << alpha << " outside (0, 1]";
    throw DomainError(msg.str());
  }
}

// Returns 1 - 2p after validating the parameter point.
double check_moment_params(double c3, double gamma, double nu, const char* fn) {
  if (!(c3 > 0.0) || !std::isfinite(c3)) {
    throw DomainError(std::string(fn) + ": c3 must be finite and > 0");
  }
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw DomainError(std::string(fn) + ": gamma must be finite and > 0");
  }
  if (!(nu >= 0.0) || !std::isfinite(nu)) {
    throw DomainError(std::string(fn) + ": nu must be finite and >= 0");
  }
  const double q = (2.0 * gamma - c3) / (2.0 * gamma);
  if (!(q > 0.0)) {
    std::ostringstream msg;
    msg << fn << ": c3/(4 gamma)=" << c3 / (4.0 * gamma) << " must be < 1/2";
    throw DomainError(msg.str());
  }
  return q;
}

// C erfc(a/sqrt2) through erfcx, given s = 2 nu gamma and q = 1 - 2p.
double scaled_tail(double s, double q) {
  return specfun::erfcx(std::sqrt(s * q)) * std::exp(-s) / std::sqrt(q);
}

}  // namespace

double gamma_hat(double c3, double alpha, SphBranch branch) {
  require_c3_alpha(c3, alpha, "gamma_hat");
  const double root = std::sqrt(4.0 * c3 * c3 + 16.0 * alpha);
  if (branch == SphBranch::plus) return (2.0 * c3 + root) / 8.0;
  // Conjugate form avoids cancellation when c3 is small: the product of the
  // two roots is -alpha/4.
  return -(alpha / 4.0) / ((2.0 * c3 + root) / 8.0);
}

double i_sph(double c3, double alpha, SphBranch branch) {
  const double g = gamma_hat(c3, alpha, branch);
  const double shift = -c3 / (2.0 * g);
  if (!(shift > -1.0)) {
    throw Error("i_sph: non-positive log argument (internal error)");
  }
  return g - (alpha / (2.0 * c3)) * std::log1p(shift);
}

double moment_tail_scaled(const LiftedParams& params) {
  const double q = check_moment_params(params.c3, params.gamma, params.nu, "moment_tail_scaled");
  return scaled_tail(2.0 * params.nu * params.gamma, q);
}

double moment_tail_direct(const LiftedParams& params) {
  const double q = check_moment_params(params.c3, params.gamma, params.nu, "moment_tail_direct");
  const double r = -params.c3 * params.nu;
  const double c = std::exp(r) / std::sqrt(q);
  const double a = 2.0 * std::sqrt(params.nu * params.gamma) * std::sqrt(q);
  return c * specfun::erfc(a / std::sqrt(2.0));
}

double big_i_uric(const LiftedParams& params) {
  const double q = check_moment_params(params.c3, params.gamma, params.nu, "big_i_uric");
  const double s = 2.0 * params.nu * params.gamma;
  return scaled_tail(s, q) + specfun::erf(std::sqrt(s));
}

double log_big_i_uric_with_gap(double gamma, double nu, double one_minus_2p) {
  if (!(one_minus_2p > 0.0 && one_minus_2p <= 1.0)) {
    throw DomainError("log_big_i_uric: 1 - 2p must lie in (0, 1]");
  }
  const double s = 2.0 * nu * gamma;
  // I - 1 = C erfc(a/sqrt2) - erfc(sqrt(2 nu gamma)); both terms are
  // nonnegative and the difference is O(c3) for small c3.
  return std::log1p(scaled_tail(s, one_minus_2p) - specfun::erfc(std::sqrt(s)));
}

double log_big_i_uric(const LiftedParams& params) {
  const double q = check_moment_params(params.c3, params.gamma, params.nu, "log_big_i_uric");
  return log_big_i_uric_with_gap(params.gamma, params.nu, q);
}

double i_uric_inner(double c3, double beta, double gamma, double nu) {
  return nu * beta + gamma + log_big_i_uric({c3, gamma, nu}) / c3;
}

double upper_from_inner(double c3, double alpha, double inner_min) {
  return (-0.5 * c3 + inner_min + i_sph(c3, alpha, SphBranch::plus)) / std::sqrt(alpha);
}

double lower_from_inner(double c3, double alpha, double inner_min) {
  return (0.5 * c3 - inner_min - i_sph(c3, alpha, SphBranch::minus)) / std::sqrt(alpha);
}

double lifted_upper_objective(double c3, const ProblemShape& shape,
                              const OptimizerConfig& config) {
  const OptimReport inner = minimize_inner(c3, shape.beta(), config);
  return upper_from_inner(c3, shape.alpha(), inner.best_value);
}

double lifted_upper_objective(double c3, const ProblemShape& shape) {
  return lifted_upper_objective(c3, shape, OptimizerConfig{});
}

double lifted_lower_objective(double c3, const ProblemShape& shape,
                              const OptimizerConfig& config) {
  const OptimReport inner = minimize_inner(c3, shape.beta(), config);
  return lower_from_inner(c3, shape.alpha(), inner.best_value);
}

double lifted_lower_objective(double c3, const ProblemShape& shape) {
  return lifted_lower_objective(c3, shape, OptimizerConfig{});
}

double lifted_lower_at(const LiftedParams& params, const ProblemShape& shape) {
  const double inner = i_uric_inner(params.c3, shape.beta(), params.gamma, params.nu);
  return lower_from_inner(params.c3, shape.alpha(), inner);
}

double lifted_upper_at(const LiftedParams& params, const ProblemShape& shape) {
  const double inner = i_uric_inner(params.c3, shape.beta(), params.gamma, params.nu);
  return upper_from_inner(params.c3, shape.alpha(), inner);
}

}  // namespace ricb
