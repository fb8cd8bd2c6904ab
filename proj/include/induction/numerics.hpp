#pragma once

// Special functions and exact binomial quantities used throughout the
// library. Everything here is a pure function of its arguments.

#include <cstdint>

namespace induction {

using Count = std::uint64_t;

namespace numerics {

/// Natural log of the Beta function b(x, y) for x, y > 0.
///
/// Accurate to ~1e-14 relative even when one argument is in the millions and
/// the other is small, where the naive lgamma difference cancels badly.
double log_beta(double x, double y);

/// Natural log of the Gamma function, Stirling-remainder corrected for
/// x >= 10 and std::lgamma below.
double log_gamma(double x);

/// Regularized incomplete beta I_theta(a, b).
///
/// Continued fraction (modified Lentz) with the usual symmetry switch at
/// theta = (a + 1) / (a + b + 2). Throws DomainError for theta outside [0, 1]
/// or non-positive shapes and NumericalError if the fraction fails to
/// converge.
double regularized_incomplete_beta(double theta, double a, double b);

/// C(n, t) theta^t (1 - theta)^(n - t), evaluated in log space with 0^0 = 1.
double binomial_pmf(Count n, Count t, double theta);

/// P(T_n >= t | theta). Exactly 1 for t == 0.
double binomial_right_tail(Count n, Count t, double theta);

/// P(T_n <= t | theta). Exactly 1 for t == n.
double binomial_left_tail(Count n, Count t, double theta);

/// ln C(n, t).
double log_binomial_coefficient(Count n, Count t);

}  // namespace numerics
}  // namespace induction
