#include "riskcal/special.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace riskcal {

namespace {

// Lentz continued fraction for the incomplete beta; converges fast when
// x < (a+1)/(a+b+2), the symmetry transform covers the rest.
double beta_cont_frac(double a, double b, double x) {
    constexpr int kMaxIter = 300;
    constexpr double kEps = 1e-16;
    constexpr double kTiny = 1e-300;

    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        const double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) return h;
    }
    throw std::runtime_error("incomplete_beta: continued fraction did not converge (a=" +
                             std::to_string(a) + ", b=" + std::to_string(b) +
                             ", x=" + std::to_string(x) + ")");
}

}  // namespace

double log_beta(double a, double b) {
    return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

double incomplete_beta(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0)) throw std::invalid_argument("incomplete_beta: a, b must be positive");
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double log_front = a * std::log(x) + b * std::log1p(-x) - log_beta(a, b);
    const double front = std::exp(log_front);
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return front * beta_cont_frac(a, b, x) / a;
    }
    return 1.0 - front * beta_cont_frac(b, a, 1.0 - x) / b;
}

double beta_quantile(double a, double b, double p) {
    if (!(a > 0.0) || !(b > 0.0)) throw std::invalid_argument("beta_quantile: a, b must be positive");
    if (!(p > 0.0) || !(p < 1.0)) throw std::invalid_argument("beta_quantile: p must be in (0,1)");

    constexpr double kTol = 1e-10;
    constexpr int kMaxIter = 200;

    double lo = 0.0, hi = 1.0;
    double flo = -p, fhi = 1.0 - p;  // f(x) = I_x(a,b) - p
    double x = 0.5;

    for (int it = 0; it < kMaxIter; ++it) {
        // secant proposal from the bracket endpoints, bisection when it leaves the bracket
        double cand = lo - flo * (hi - lo) / (fhi - flo);
        const double mid = 0.5 * (lo + hi);
        if (!(cand > lo) || !(cand < hi)) cand = mid;
        x = cand;
        const double fx = incomplete_beta(a, b, x) - p;
        if (std::fabs(fx) < kTol || hi - lo < 1e-15) return x;
        if (fx < 0.0) {
            lo = x;
            flo = fx;
        } else {
            hi = x;
            fhi = fx;
        }
        // force a bisection step when the secant stalls against one endpoint
        if (it % 8 == 7) {
            const double m = 0.5 * (lo + hi);
            const double fm = incomplete_beta(a, b, m) - p;
            if (std::fabs(fm) < kTol) return m;
            if (fm < 0.0) {
                lo = m;
                flo = fm;
            } else {
                hi = m;
                fhi = fm;
            }
        }
    }
    throw std::runtime_error("beta_quantile: no convergence (a=" + std::to_string(a) +
                             ", b=" + std::to_string(b) + ", p=" + std::to_string(p) + ")");
}

double binomial_cdf(std::size_t k, std::size_t n, double p) {
    if (n == 0) throw std::invalid_argument("binomial_cdf: n must be positive");
    if (k >= n) return 1.0;
    if (p <= 0.0) return 1.0;
    if (p >= 1.0) return 0.0;
    // P[S <= k] = I_{1-p}(n-k, k+1)
    return incomplete_beta(static_cast<double>(n - k), static_cast<double>(k + 1), 1.0 - p);
}

}  // namespace riskcal
