#include "riskcal/betting.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace riskcal {

void BettingConfig::validate() const {
    if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("BettingConfig: delta must be in (0,1)");
    if (!(lambda_max > 0.0 && lambda_max <= 0.5))
        throw std::invalid_argument("BettingConfig: lambda_max must be in (0, 0.5]");
    if (!(m_grid_step > 0.0 && m_grid_step <= 0.1))
        throw std::invalid_argument("BettingConfig: m_grid_step must be in (0, 0.1]");
    if (!(mu0 >= 0.0 && mu0 <= 1.0)) throw std::invalid_argument("BettingConfig: mu0 must be in [0,1]");
    if (!(sigma2_0 >= 0.0 && sigma2_0 <= 0.25))
        throw std::invalid_argument("BettingConfig: sigma2_0 must be in [0, 0.25]");
}

double grow_lambda(double mu_hat, double sigma2_hat, double m, double lambda_max) {
    const double diff = mu_hat - m;
    const double denom = sigma2_hat + diff * diff;
    if (denom <= 0.0) return 0.0;
    return std::clamp(diff / denom, 0.0, lambda_max);
}

std::pair<double, double> tib_blend(double running_mu, double running_var, std::size_t t,
                                    const TransferPrior& prior) {
    const double denom = prior.n_eff + static_cast<double>(t);
    const double w = denom > 0.0 ? prior.n_eff / denom : 0.0;
    return {w * prior.source_risk + (1.0 - w) * running_mu,
            w * prior.source_var + (1.0 - w) * running_var};
}

double RunningEstimator::mu() const {
    const double run = (mu0_ + sum_) / static_cast<double>(t_ + 1);
    if (!prior_) return run;
    return tib_blend(run, 0.0, t_, *prior_).first;
}

double RunningEstimator::var() const {
    const double run = (sigma2_0_ + sum_sq_dev_) / static_cast<double>(t_ + 1);
    if (!prior_) return run;
    return tib_blend(0.0, run, t_, *prior_).second;
}

void RunningEstimator::observe(double x) {
    ++t_;
    sum_ += x;
    const double mu_t = (mu0_ + sum_) / static_cast<double>(t_ + 1);
    const double d = x - mu_t;
    sum_sq_dev_ += d * d;
}

namespace {

const TransferPrior* active_prior(const std::optional<TransferPrior>& prior) {
    if (!prior) return nullptr;
    if (prior->n_eff < 0.0) throw std::invalid_argument("TransferPrior: n_eff must be nonnegative");
    if (!(prior->source_risk >= 0.0 && prior->source_risk <= 1.0))
        throw std::invalid_argument("TransferPrior: source_risk must be in [0,1]");
    if (!(prior->source_var >= 0.0 && prior->source_var <= 0.25))
        throw std::invalid_argument("TransferPrior: source_var must be in [0,0.25]");
    return &*prior;
}

}  // namespace

WealthResult wsr_wealth(const LossVector& losses, double m, const BettingConfig& cfg,
                        const std::optional<TransferPrior>& prior) {
    cfg.validate();
    if (!(m >= 0.0 && m <= 1.0)) throw std::invalid_argument("wsr_wealth: m must be in [0,1]");
    const TransferPrior* p = active_prior(prior);

    RunningEstimator est(cfg, p);
    WealthResult out;
    for (std::uint8_t xi : losses.losses) {
        const double x = static_cast<double>(xi);
        const double lambda = grow_lambda(est.mu(), est.var(), m, cfg.lambda_max);
        const double factor = 1.0 + lambda * (x - m);
        assert(factor > 0.0);
        out.final_wealth *= factor;
        out.max_wealth = std::max(out.max_wealth, out.final_wealth);
        est.observe(x);
    }
    return out;
}

WealthTrace wsr_wealth_trace(const LossVector& losses, double m, const BettingConfig& cfg,
                             const std::optional<TransferPrior>& prior) {
    return detail::wealth_trace_clipped(losses.losses, m, cfg, prior, 0.0);
}

double wsr_ucb(const LossVector& losses, const BettingConfig& cfg,
               const std::optional<TransferPrior>& prior) {
    cfg.validate();
    if (losses.losses.empty()) throw std::invalid_argument("wsr_ucb: empty losses");
    const TransferPrior* p = active_prior(prior);

    const std::size_t n = losses.n();
    // The estimates entering each step do not depend on the candidate m:
    // compute them once and reuse across the grid.
    std::vector<double> mu(n), var(n);
    {
        RunningEstimator est(cfg, p);
        for (std::size_t t = 0; t < n; ++t) {
            mu[t] = est.mu();
            var[t] = est.var();
            est.observe(static_cast<double>(losses.losses[t]));
        }
    }

    const double threshold = 1.0 / cfg.delta;
    const double step = cfg.m_grid_step;
    const long top = std::lround(std::floor(1.0 / step + 1e-9));

    // Scan candidates from the top down. The first one whose complementary
    // wealth never reaches 1/delta is the largest surviving candidate; one
    // grid step above it is the conservative bound. Rejected candidates exit
    // early at the Ville crossing.
    for (long i = top; i >= 0; --i) {
        const double m = std::min(1.0, static_cast<double>(i) * step);
        double wealth = 1.0;
        bool rejected = false;
        for (std::size_t t = 0; t < n; ++t) {
            // complement-process GROW fraction: bet that losses run below m
            const double diff = m - mu[t];
            double lambda = 0.0;
            if (diff > 0.0) lambda = std::min(diff / (var[t] + diff * diff), cfg.lambda_max);
            wealth *= 1.0 + lambda * (m - static_cast<double>(losses.losses[t]));
            if (wealth >= threshold) {
                rejected = true;
                break;
            }
        }
        if (!rejected) return std::min(1.0, m + step);
    }
    // m = 0 always survives (its betting fraction is identically 0)
    return std::min(1.0, step);
}

namespace detail {

WealthTrace wealth_trace_clipped(std::span<const std::uint8_t> losses, double m,
                                 const BettingConfig& cfg,
                                 const std::optional<TransferPrior>& prior, double lambda_lo) {
    cfg.validate();
    const TransferPrior* p = active_prior(prior);

    WealthTrace trace;
    trace.lambdas.reserve(losses.size());
    trace.wealth.reserve(losses.size() + 1);
    trace.wealth.push_back(1.0);

    RunningEstimator est(cfg, p);
    double wealth = 1.0;
    for (std::uint8_t xi : losses) {
        const double x = static_cast<double>(xi);
        const double diff = est.mu() - m;
        const double denom = est.var() + diff * diff;
        const double lambda =
            denom > 0.0 ? std::clamp(diff / denom, lambda_lo, cfg.lambda_max) : 0.0;
        wealth *= 1.0 + lambda * (x - m);
        trace.lambdas.push_back(lambda);
        trace.wealth.push_back(wealth);
        trace.max_wealth = std::max(trace.max_wealth, wealth);
        est.observe(x);
    }
    return trace;
}

}  // namespace detail

}  // namespace riskcal
