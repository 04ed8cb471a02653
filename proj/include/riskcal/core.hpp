#pragma once
// Empirical risk/coverage at a threshold, loss vectors, risk profiles, and
// the stratified calibration/test split. All functions are pure.

#include <cstdint>
#include <utility>

#include "riskcal/types.hpp"

namespace riskcal {

// Fraction of records that are both selected (confidence >= tau) and wrong.
double empirical_risk(const Dataset& ds, double tau);

// Fraction of records with confidence >= tau.
double coverage(const Dataset& ds, double tau);

// Per-record binary losses 1[predicted != gold && confidence >= tau], dataset order.
LossVector losses_at(const Dataset& ds, double tau);

// Per-class split: round(frac_cal * class_count) records go to calibration,
// ties toward calibration. Deterministic per seed; order-independent across
// classes (per-class derived streams). Returns (calibration, test).
std::pair<Dataset, Dataset> stratified_split(const Dataset& ds, double frac_cal, std::uint64_t seed);

// Empirical risk and loss variance (population normalization) at every grid threshold.
RiskProfile risk_profile(const Dataset& ds, const ThresholdGrid& grid);

}  // namespace riskcal
