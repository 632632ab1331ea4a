// Copyright 2026 The ricbounds Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Error-function family in double precision.
//
// erf, erfc and erfcx share one set of rational Chebyshev approximations
// (W. J. Cody, Math. Comp. 23, 1969) so that erf(x) + erfc(x) == 1 to
// rounding and erfc keeps full relative accuracy in the far tail.  erfinv
// starts from a polynomial seed and is polished by Newton steps on erf.
//
// All functions are pure and reentrant.  Domain violations throw
// ricb::DomainError; clamping is left to the caller.

namespace ricb::specfun {

double erf(double x);

/// 1 - erf(x), without cancellation for large positive x.
double erfc(double x);

/// e^{x^2} erfc(x) for x >= 0.
double erfcx(double x);

/// Inverse of erf on (-1, 1).
double erfinv(double p);

}  // namespace ricb::specfun
