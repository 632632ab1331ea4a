// Copyright 2026 The ricbounds Authors
// SPDX-License-Identifier: Apache-2.0

#include "ricb/types.hpp"

#include <cmath>
#include <sstream>

#include "ricb/error.hpp"

namespace ricb {
namespace {

// alpha * rho products such as 1.0 * 0.999999 land within a few ulps of the
// clamp edges; accept those.
constexpr double kEdgeSlack = 1e-15;

}  // namespace

ProblemShape::ProblemShape(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  std::ostringstream msg;
  if (!std::isfinite(alpha) || !std::isfinite(beta)) {
    msg << "shape: alpha and beta must be finite";
  } else if (!(alpha > 0.0 && alpha <= 1.0)) {
    msg << "shape: alpha=" << alpha << " outside (0, 1]";
  } else if (!(beta > 0.0 && beta < alpha)) {
    msg << "shape: beta=" << beta << " must satisfy 0 < beta < alpha=" << alpha;
  } else if (beta < kBetaMin - kEdgeSlack || beta > kBetaMax + kEdgeSlack) {
    msg << "shape: beta=" << beta << " outside admissible [" << kBetaMin << ", " << kBetaMax
        << "]";
  } else {
    return;
  }
  throw DomainError(msg.str());
}

ProblemShape ProblemShape::from_rho(double alpha, double rho) {
  if (!std::isfinite(rho) || !(rho > 0.0 && rho < 1.0)) {
    std::ostringstream msg;
    msg << "shape: rho=" << rho << " outside (0, 1)";
    throw DomainError(msg.str());
  }
  return ProblemShape(alpha, alpha * rho);
}

std::string_view to_string(BoundKind kind) noexcept {
  switch (kind) {
    case BoundKind::upper_simple:
      return "upper-simple";
    case BoundKind::lower_simple:
      return "lower-simple";
    case BoundKind::upper_lifted:
      return "upper-lifted";
    case BoundKind::lower_lifted:
      return "lower-lifted";
  }
  return "unknown";
}

std::optional<BoundKind> parse_bound_kind(std::string_view text) noexcept {
  for (auto kind : {BoundKind::upper_simple, BoundKind::lower_simple, BoundKind::upper_lifted,
                    BoundKind::lower_lifted}) {
    if (text == to_string(kind)) return kind;
  }
  return std::nullopt;
}

}  // namespace ricb
