#include "riskcal/concentration.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace riskcal {

namespace {
void check_common(std::size_t n, std::size_t k, double delta) {
    if (n < 1) throw std::invalid_argument("correction: n must be positive");
    if (k < 1) throw std::invalid_argument("correction: k must be positive");
    if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("correction: delta must be in (0,1)");
}
}  // namespace

double hoeffding_correction(std::size_t n, std::size_t k, double delta) {
    check_common(n, k, delta);
    return std::sqrt(std::log(static_cast<double>(k) / delta) / (2.0 * static_cast<double>(n)));
}

double bernstein_correction(std::size_t n, std::size_t k, double delta, double var_hat) {
    check_common(n, k, delta);
    if (!(var_hat >= 0.0 && var_hat <= 0.25))
        throw std::invalid_argument("bernstein_correction: var_hat must be in [0, 0.25] for binary losses");
    const double l = std::log(3.0 * static_cast<double>(k) / delta);
    const double nd = static_cast<double>(n);
    return std::sqrt(2.0 * var_hat * l / nd) + 3.0 * l / nd;
}

double clopper_pearson_ucb(std::size_t successes, std::size_t n, double delta) {
    check_common(n, 1, delta);
    if (successes > n) throw std::invalid_argument("clopper_pearson_ucb: successes > n");
    if (successes == n) return 1.0;
    return beta_quantile(static_cast<double>(successes) + 1.0,
                         static_cast<double>(n - successes), 1.0 - delta);
}

double dro_ucb(double risk_hat, std::size_t n, std::size_t k, double delta, double epsilon) {
    if (!(epsilon >= 0.0)) throw std::invalid_argument("dro_ucb: epsilon must be nonnegative");
    return std::min(risk_hat + epsilon + hoeffding_correction(n, k, delta), 1.0);
}

double cvar_ucb(const LossVector& losses, double beta, std::size_t k, double delta) {
    if (losses.losses.empty()) throw std::invalid_argument("cvar_ucb: empty losses");
    if (!(beta > 0.0 && beta < 1.0 + 1e-12))
        throw std::invalid_argument("cvar_ucb: beta must be in (0,1]");
    const std::size_t n = losses.n();
    check_common(n, k, delta);
    const std::size_t tail =
        std::min<std::size_t>(n, static_cast<std::size_t>(std::ceil(static_cast<double>(n) * beta)));
    // losses are binary: the tail mean is min(ones, tail) / tail
    const std::size_t ones = losses.sum();
    const double cvar_hat =
        static_cast<double>(std::min(ones, tail)) / static_cast<double>(tail);
    const double corr = std::sqrt(std::log(static_cast<double>(k) / delta) /
                                  (2.0 * static_cast<double>(n) * beta * beta));
    return cvar_hat + corr;
}

}  // namespace riskcal
