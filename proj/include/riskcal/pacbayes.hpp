#pragma once
// PAC-Bayes-lambda bound with Bernoulli KL and grid-optimized lambda.
// The transfer variant uses a source domain's risk at the same threshold as
// the Bernoulli prior; without one the complexity term falls back to ln K.

#include <cstddef>
#include <optional>
#include <vector>

namespace riskcal {

struct PacBayesConfig {
    std::vector<double> lambda_grid;  // nonempty, strictly increasing, positive
    double clip_eps = 1e-10;          // symmetric clipping for the KL endpoints
    std::size_t k_fallback = 100;     // uninformative-prior complexity: KL = ln(k_fallback)

    PacBayesConfig();
    void validate() const;

    static std::vector<double> default_lambda_grid();  // 200 log-spaced points in [0.01, 100]
};

// KL(Bernoulli(p) || Bernoulli(q)) after clipping both into [clip_eps, 1-clip_eps].
double bernoulli_kl(double p, double q, double clip_eps);

// (1 - exp(-lambda r)) / (1 - exp(-lambda)) + (kl + ln(2 sqrt(n) / delta)) / (lambda n)
double pacbayes_lambda_bound(double risk_hat, double kl, std::size_t n, double delta, double lambda);

// Minimum of the lambda bound over the grid, clipped into [0,1].
double pacbayes_ucb(double risk_hat, std::size_t n, std::optional<double> prior_risk,
                    const PacBayesConfig& cfg, double delta);

}  // namespace riskcal
