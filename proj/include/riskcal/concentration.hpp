#pragma once
// Per-threshold corrections and upper confidence bounds: Hoeffding,
// empirical Bernstein, Clopper-Pearson, Wasserstein shift, CVaR tail.
// k is the number of simultaneous tests the delta budget is split over
// (k = grid size for union-bound sweeps, k = 1 for fixed-sequence sweeps).

#include <cstddef>

#include "riskcal/special.hpp"
#include "riskcal/types.hpp"

namespace riskcal {

enum class CorrectionMethod { HoeffdingUnion, Hoeffding, BernsteinUnion, Bernstein, CP, DRO, CVaR };

struct Correction {
    double value = 0.0;  // nonnegative, finite
    CorrectionMethod method = CorrectionMethod::Hoeffding;
};

// sqrt(ln(k/delta) / (2n))
double hoeffding_correction(std::size_t n, std::size_t k, double delta);

// sqrt(2 var_hat ln(3k/delta) / n) + 3 ln(3k/delta) / n; var_hat in [0, 0.25]
double bernstein_correction(std::size_t n, std::size_t k, double delta, double var_hat);

// Quantile of Beta(S+1, n-S) at 1-delta; 1 when S = n.
double clopper_pearson_ucb(std::size_t successes, std::size_t n, double delta);

// min(risk_hat + epsilon + hoeffding_correction(n, k, delta), 1)
double dro_ucb(double risk_hat, std::size_t n, std::size_t k, double delta, double epsilon);

// Mean of the ceil(n*beta) largest losses plus sqrt(ln(k/delta) / (2 n beta^2)).
double cvar_ucb(const LossVector& losses, double beta, std::size_t k, double delta);

}  // namespace riskcal
