#pragma once
// Incomplete beta machinery backing the exact binomial bound.

#include <cstddef>

namespace riskcal {

double log_beta(double a, double b);

// Regularized incomplete beta I_x(a, b), continued-fraction evaluation.
double incomplete_beta(double a, double b, double x);

// Inverse of I_x(a, b): the x with I_x(a,b) = p, |residual| < 1e-10.
// Bracketed secant with bisection fallback. Throws on non-convergence.
double beta_quantile(double a, double b, double p);

// P[Binomial(n, p) <= k], exact via the incomplete beta identity.
double binomial_cdf(std::size_t k, std::size_t n, double p);

}  // namespace riskcal
