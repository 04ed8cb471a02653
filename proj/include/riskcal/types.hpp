#pragma once
// Domain types shared across the library.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace riskcal {

struct PredictionRecord {
    std::string id;
    double confidence = 0.0;  // in [0,1]
    int predicted = 0;
    int gold = 0;
    std::vector<double> probs;   // empty when absent; sums to 1, max == confidence
    std::vector<double> logits;  // empty when absent; same length as probs when both present

    bool has_probs() const { return !probs.empty(); }
    bool has_logits() const { return !logits.empty(); }
};

struct Dataset {
    std::vector<PredictionRecord> records;
    int num_classes = 0;

    std::size_t size() const { return records.size(); }
    bool empty() const { return records.empty(); }

    // Throws std::invalid_argument naming the offending record.
    void validate() const;
};

struct ThresholdGrid {
    std::vector<double> thresholds;  // strictly increasing, all in [0,1]

    std::size_t size() const { return thresholds.size(); }
    void validate() const;

    // The paper protocol grid: K points at 0.01 increments starting at 0.
    static ThresholdGrid regular(std::size_t k = 100, double step = 0.01);
};

struct RiskBudget {
    double alpha = 0.10;
    double delta = 0.10;
    void validate() const;
};

struct LossVector {
    std::vector<std::uint8_t> losses;  // each 0 or 1, one per calibration record
    double tau = 0.0;

    std::size_t n() const { return losses.size(); }
    double mean() const;
    std::size_t sum() const;
};

struct RiskProfileEntry {
    double tau = 0.0;
    double risk_hat = 0.0;
    double var_hat = 0.0;  // population second central moment of the losses
    std::size_t n = 0;
};

struct RiskProfile {
    std::vector<RiskProfileEntry> entries;  // one per grid threshold, increasing tau

    // Entry at the nearest grid threshold <= tau (first entry when tau is below the grid).
    const RiskProfileEntry& at_or_below(double tau) const;
};

}  // namespace riskcal
