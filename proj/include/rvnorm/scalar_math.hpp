#pragma once

namespace rvnorm {

/// Gamma function on (0, 60], Lanczos approximation (g = 7, 9 coefficients).
/// Relative error <= 1e-12 on that range. Arguments x <= 0 are rejected.
double gamma_fn(double x);

/// Central binomial coefficient with a real parameter d >= 1:
///   C(d, d/2) = Gamma(d+1) / Gamma(d/2+1)^2.
/// By the Legendre duplication formula this equals
/// 2^d Gamma((d+1)/2) / (sqrt(pi) Gamma(d/2+1)).
double central_binomial(double d);

/// Same coefficient through the duplication-formula route; exposed so the two
/// closed forms can be checked against each other.
double central_binomial_dup(double d);

/// Trapezoidal estimate (periodic, `nodes` uniform panels on [0, 2pi]) of
///   2^d / (2pi C(d, d/2)) * integral_0^{2pi} |cos t|^d dt,
/// which is identically 1 for every d >= 1. Used as a self-test of the
/// normalization that makes the complexified norm extend the Hermitian one.
/// Convergence is spectral for smooth integrands but degrades to O(nodes^-2)
/// near d = 1 where |cos t|^d has derivative kinks at t = pi/2, 3pi/2.
double cos_power_mean(double d, int nodes);

} // namespace rvnorm
