#pragma once

namespace logsym {

// Error function, |abs error| <= 1e-12 over the real line.
double erf(double x);

// Complementary error function, computed without cancellation for x > 0.
double erfc(double x);

// Regularized lower incomplete gamma P(s, x) = gamma(s, x) / Gamma(s),
// s > 0, x >= 0. Series expansion for x < s + 1, continued fraction
// otherwise; absolute accuracy ~1e-14.
double regularized_lower_gamma(double s, double x);

// Q(s, x) = 1 - P(s, x), evaluated directly so the upper tail keeps
// full relative accuracy.
double regularized_upper_gamma(double s, double x);

// Standard normal CDF. Tail-safe: built on erfc so Phi(-8) is still
// accurate in relative terms.
double normal_cdf(double z);

// Standard normal quantile: the z with Phi(z) = p, found by Newton
// iteration on the erf-based CDF from a rational initial guess.
// Round-trip guarantee |Phi(z) - p| <= 1e-10 for p in (0, 1).
// Throws DomainError for p outside (0, 1).
double inverse_normal_cdf(double p);

}  // namespace logsym
