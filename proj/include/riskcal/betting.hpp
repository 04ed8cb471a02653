#pragma once
// Betting-based confidence bounds: the WSR wealth process with the GROW
// adaptive betting fraction, upper-bound inversion over a candidate-mean
// grid, and the transfer warm-start that blends a source domain's risk
// profile into the running estimates at weight n_eff / (n_eff + t).

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "riskcal/types.hpp"

namespace riskcal {

struct BettingConfig {
    double delta = 0.10;
    double lambda_max = 0.5;   // in (0, 0.5]: keeps every wealth factor positive
    double m_grid_step = 1e-3;  // in (0, 0.1]
    double mu0 = 0.5;          // cold-start pseudo-observation for the mean
    double sigma2_0 = 0.25;    // cold-start pseudo-observation for the variance
    void validate() const;
};

struct TransferPrior {
    double source_risk = 0.0;  // in [0,1]
    double source_var = 0.0;   // in [0,0.25]
    double n_eff = 0.0;        // prior strength in pseudo-observations; 0 = plain WSR
};

// GROW betting fraction: clip((mu_hat - m) / (sigma2_hat + (mu_hat - m)^2), 0, lambda_max).
// Returns 0 when the numerator and denominator both vanish.
double grow_lambda(double mu_hat, double sigma2_hat, double m, double lambda_max);

// Prior blend at weight w = n_eff / (n_eff + t); w = 0 when n_eff = t = 0.
// Returns (blended mean, blended variance).
std::pair<double, double> tib_blend(double running_mu, double running_var, std::size_t t,
                                    const TransferPrior& prior);

// Running mean/variance with pseudo-count shrinkage (mu0, sigma2_0 count as
// one observation each), optionally blended with a transfer prior. mu() and
// var() expose the estimates entering the NEXT step, so betting fractions
// computed from them are predictable.
class RunningEstimator {
public:
    RunningEstimator(const BettingConfig& cfg, const TransferPrior* prior)
        : mu0_(cfg.mu0), sigma2_0_(cfg.sigma2_0), prior_(prior) {}

    double mu() const;
    double var() const;
    void observe(double x);

private:
    double mu0_;
    double sigma2_0_;
    const TransferPrior* prior_;
    std::size_t t_ = 0;
    double sum_ = 0.0;
    double sum_sq_dev_ = 0.0;  // running sum of (x_i - mu_i)^2
};

struct WealthResult {
    double final_wealth = 1.0;
    double max_wealth = 1.0;  // running max including K_0 = 1
};

// Wealth process K_t = prod(1 + lambda_t (X_t - m)) with GROW fractions from
// the (optionally blended) running estimates. A nonnegative supermartingale
// whenever m >= E[X].
WealthResult wsr_wealth(const LossVector& losses, double m, const BettingConfig& cfg,
                        const std::optional<TransferPrior>& prior = {});

struct WealthTrace {
    std::vector<double> lambdas;  // lambdas[t-1] is the fraction bet at step t
    std::vector<double> wealth;   // wealth[t] = K_t, wealth[0] = 1
    double max_wealth = 1.0;
};

WealthTrace wsr_wealth_trace(const LossVector& losses, double m, const BettingConfig& cfg,
                             const std::optional<TransferPrior>& prior = {});

// Upper confidence bound on the loss mean by inversion over the candidate
// grid m in {0, step, ..., 1}. A candidate is rejected when the wealth of the
// complementary process (the same kernel run on 1 - X at candidate 1 - m,
// i.e. betting that the losses run below m) ever reaches 1/delta. Returns
// one grid step above the largest surviving candidate, 1 when the top of the
// grid survives. Anytime-valid via the running-max (Ville) criterion.
double wsr_ucb(const LossVector& losses, const BettingConfig& cfg,
               const std::optional<TransferPrior>& prior = {});

namespace detail {

// Wealth trace with a configurable lower clip on the betting fraction.
// lambda_lo = 0 is the valid one-sided process; the validity suite's
// negative control passes lambda_lo < 0 to demonstrate that signed bets
// break the supermartingale guarantee.
WealthTrace wealth_trace_clipped(std::span<const std::uint8_t> losses, double m,
                                 const BettingConfig& cfg,
                                 const std::optional<TransferPrior>& prior, double lambda_lo);

}  // namespace detail

}  // namespace riskcal
