#pragma once

// Monte-Carlo check of the Cramér–Rao bound: sample measurement outcomes of
// the evolved probe, estimate g with a linear unbiased estimator and compare
// the spread of the estimates with 1/(n I_g).

#include <cstdint>
#include <optional>
#include <vector>

#include "gravimetry/fisher.hpp"
#include "gravimetry/gaussian.hpp"

namespace gravimetry {

struct ExperimentPlan {
  SqueezeSpec spec;
  ProbeParams params;
  double tau;
  MeasurementSpec meas;
  std::size_t n;            // trials per experiment, >= 2
  std::size_t experiments;  // repeated experiments, >= 1
  std::uint64_t seed;
};

struct EstimationResult {
  double g_hat_mean;
  double g_hat_var;
  double crb;             // 1 / (n I_g)
  double normalized_var;  // g_hat_var / crb
};

/// Readings of one measurement run. Position and momentum runs fill
/// `scalar`; general-dyne runs fill `pairs` with (z, p) outcomes.
struct Outcomes {
  MeasurementKind kind;
  std::vector<double> scalar;
  std::vector<Vec2> pairs;

  std::size_t size() const noexcept {
    return kind == MeasurementKind::kGeneraldyne ? pairs.size() : scalar.size();
  }
};

/// SplitMix64 finalizer; used to derive independent stream seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// Draws n outcomes of `meas` on `state`. General-dyne outcomes follow
/// Normal(mean, V + V_m), sampled through the Cholesky factor. `params`
/// supplies sigma0 and hbar for V_m. Deterministic for a fixed seed.
Outcomes sample_outcomes(const GaussianState& state, const MeasurementSpec& meas,
                         const ProbeParams& params, std::size_t n, std::uint64_t seed);

/// Linear unbiased estimate of g for a probe released with zero mean.
/// General-dyne needs the outcome covariance V + V_m (GLS weight).
double estimate_g(const Outcomes& outcomes, const MeasurementSpec& meas, double tau,
                  const ProbeParams& params, std::optional<Mat2> outcome_cov = std::nullopt);

EstimationResult cramer_rao_check(const ExperimentPlan& plan);

}  // namespace gravimetry
