#include "riskcal/core.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "riskcal/rng.hpp"

namespace riskcal {

void Dataset::validate() const {
    if (records.empty()) throw std::invalid_argument("Dataset: empty");
    if (num_classes <= 0) throw std::invalid_argument("Dataset: num_classes must be positive");
    for (const auto& r : records) {
        if (!(r.confidence >= 0.0 && r.confidence <= 1.0))
            throw std::invalid_argument("Dataset: record " + r.id + " has confidence outside [0,1]");
        if (r.predicted < 0 || r.predicted >= num_classes || r.gold < 0 || r.gold >= num_classes)
            throw std::invalid_argument("Dataset: record " + r.id + " has label outside [0,num_classes)");
        if (r.has_probs()) {
            double sum = 0.0, maxp = 0.0;
            for (double p : r.probs) {
                if (!(p >= 0.0 && p <= 1.0))
                    throw std::invalid_argument("Dataset: record " + r.id + " has prob outside [0,1]");
                sum += p;
                maxp = std::max(maxp, p);
            }
            if (std::fabs(sum - 1.0) > 1e-6)
                throw std::invalid_argument("Dataset: record " + r.id + " probs sum to " +
                                            std::to_string(sum) + ", expected 1");
            if (std::fabs(maxp - r.confidence) > 1e-6)
                throw std::invalid_argument("Dataset: record " + r.id +
                                            " confidence does not equal max(probs)");
            if (r.has_logits() && r.logits.size() != r.probs.size())
                throw std::invalid_argument("Dataset: record " + r.id + " probs/logits length mismatch");
        }
    }
}

void ThresholdGrid::validate() const {
    if (thresholds.empty()) throw std::invalid_argument("ThresholdGrid: empty");
    for (std::size_t i = 0; i < thresholds.size(); ++i) {
        if (!(thresholds[i] >= 0.0 && thresholds[i] <= 1.0))
            throw std::invalid_argument("ThresholdGrid: threshold outside [0,1]");
        if (i > 0 && !(thresholds[i] > thresholds[i - 1]))
            throw std::invalid_argument("ThresholdGrid: thresholds must be strictly increasing");
    }
}

ThresholdGrid ThresholdGrid::regular(std::size_t k, double step) {
    ThresholdGrid g;
    g.thresholds.reserve(k);
    for (std::size_t i = 0; i < k; ++i) g.thresholds.push_back(static_cast<double>(i) * step);
    g.validate();
    return g;
}

void RiskBudget::validate() const {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("RiskBudget: alpha must be in (0,1)");
    if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("RiskBudget: delta must be in (0,1)");
}

double LossVector::mean() const {
    if (losses.empty()) return 0.0;
    return static_cast<double>(sum()) / static_cast<double>(losses.size());
}

std::size_t LossVector::sum() const {
    return std::accumulate(losses.begin(), losses.end(), std::size_t{0});
}

const RiskProfileEntry& RiskProfile::at_or_below(double tau) const {
    if (entries.empty()) throw std::invalid_argument("RiskProfile: empty");
    const RiskProfileEntry* best = &entries.front();
    for (const auto& e : entries) {
        if (e.tau <= tau) best = &e;
        else break;
    }
    return *best;
}

double empirical_risk(const Dataset& ds, double tau) {
    if (ds.empty()) throw std::invalid_argument("empirical_risk: empty dataset");
    std::size_t bad = 0;
    for (const auto& r : ds.records)
        if (r.predicted != r.gold && r.confidence >= tau) ++bad;
    return static_cast<double>(bad) / static_cast<double>(ds.size());
}

double coverage(const Dataset& ds, double tau) {
    if (ds.empty()) throw std::invalid_argument("coverage: empty dataset");
    std::size_t sel = 0;
    for (const auto& r : ds.records)
        if (r.confidence >= tau) ++sel;
    return static_cast<double>(sel) / static_cast<double>(ds.size());
}

LossVector losses_at(const Dataset& ds, double tau) {
    if (ds.empty()) throw std::invalid_argument("losses_at: empty dataset");
    LossVector lv;
    lv.tau = tau;
    lv.losses.reserve(ds.size());
    for (const auto& r : ds.records)
        lv.losses.push_back(r.predicted != r.gold && r.confidence >= tau ? 1 : 0);
    return lv;
}

std::pair<Dataset, Dataset> stratified_split(const Dataset& ds, double frac_cal, std::uint64_t seed) {
    if (ds.empty()) throw std::invalid_argument("stratified_split: empty dataset");
    if (!(frac_cal > 0.0 && frac_cal < 1.0))
        throw std::invalid_argument("stratified_split: frac_cal must be in (0,1)");

    std::map<int, std::vector<std::size_t>> by_class;
    for (std::size_t i = 0; i < ds.size(); ++i) by_class[ds.records[i].gold].push_back(i);

    std::vector<bool> to_cal(ds.size(), false);
    for (auto& [label, idx] : by_class) {
        // per-class stream so the shuffle does not depend on other classes
        Rng rng(derive_stream(seed, 0x5370u, static_cast<std::uint64_t>(label)));
        for (std::size_t i = idx.size(); i > 1; --i) {
            const std::size_t j = rng.uniform_int(i);
            std::swap(idx[i - 1], idx[j]);
        }
        // nearest integer, ties toward calibration
        const std::size_t n_cal =
            static_cast<std::size_t>(std::floor(frac_cal * static_cast<double>(idx.size()) + 0.5));
        for (std::size_t i = 0; i < n_cal && i < idx.size(); ++i) to_cal[idx[i]] = true;
    }

    Dataset cal, test;
    cal.num_classes = test.num_classes = ds.num_classes;
    for (std::size_t i = 0; i < ds.size(); ++i)
        (to_cal[i] ? cal : test).records.push_back(ds.records[i]);
    return {std::move(cal), std::move(test)};
}

RiskProfile risk_profile(const Dataset& ds, const ThresholdGrid& grid) {
    grid.validate();
    RiskProfile profile;
    profile.entries.reserve(grid.size());
    for (double tau : grid.thresholds) {
        const LossVector lv = losses_at(ds, tau);
        const double r = lv.mean();
        double var = 0.0;
        for (auto x : lv.losses) {
            const double d = static_cast<double>(x) - r;
            var += d * d;
        }
        var /= static_cast<double>(lv.n());
        profile.entries.push_back({tau, r, var, lv.n()});
    }
    return profile;
}

}  // namespace riskcal
