#include "gravimetry/measurement_lab.hpp"

#include <cmath>
#include <numeric>
#include <random>

#include "gravimetry/errors.hpp"
#include "gravimetry/freefall.hpp"
#include "gravimetry/parallel.hpp"

namespace gravimetry {

namespace {

/// Coefficients w with g_hat = w · x for one outcome x (mean-zero release).
/// Scalar kinds use only w.x.
Vec2 single_shot_weights(const MeasurementSpec& meas, double tau, const ProbeParams& params,
                         const std::optional<Mat2>& outcome_cov) {
  if (!std::isfinite(tau) || !(tau > 0.0)) {
    throw UndefinedRatioError("g estimate is undefined at tau = 0");
  }
  switch (meas.kind()) {
    case MeasurementKind::kPosition:
      return {-2.0 / (tau * tau), 0.0};
    case MeasurementKind::kMomentum:
      return {-1.0 / (params.mass() * tau), 0.0};
    case MeasurementKind::kGeneraldyne:
      break;
  }
  if (!outcome_cov) {
    throw InvalidArgumentError("general-dyne estimate needs the outcome covariance");
  }
  require_valid({Vec2{}, *outcome_cov});
  const Vec2 b = mean_sensitivity({tau, params});
  const Vec2 wb = inverse(*outcome_cov) * b;
  return (1.0 / dot(b, wb)) * wb;
}

Outcomes draw(const GaussianState& state, const MeasurementSpec& meas, const Mat2& outcome_cov,
              std::size_t n, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Outcomes out{meas.kind(), {}, {}};
  switch (meas.kind()) {
    case MeasurementKind::kPosition:
    case MeasurementKind::kMomentum: {
      const bool position = meas.kind() == MeasurementKind::kPosition;
      const double centre = position ? state.mean.x : state.mean.y;
      const double sd = std::sqrt(position ? state.cov.a : state.cov.d);
      out.scalar.resize(n);
      for (auto& x : out.scalar) x = centre + sd * normal(engine);
      break;
    }
    case MeasurementKind::kGeneraldyne: {
      const auto chol = cholesky_lower(outcome_cov);
      if (!chol) throw InvalidStateError("outcome covariance is not positive semi-definite");
      out.pairs.resize(n);
      for (auto& x : out.pairs) {
        const Vec2 u{normal(engine), normal(engine)};
        x = state.mean + (*chol) * u;
      }
      break;
    }
  }
  return out;
}

Mat2 outcome_covariance(const GaussianState& state, const MeasurementSpec& meas,
                        const ProbeParams& params) {
  if (meas.kind() != MeasurementKind::kGeneraldyne) return state.cov;
  return state.cov + measurement_covariance(meas, params);
}

double apply_weights(const Outcomes& outcomes, Vec2 w) {
  if (outcomes.kind == MeasurementKind::kGeneraldyne) {
    double acc = 0.0;
    for (const Vec2& x : outcomes.pairs) acc += dot(w, x);
    return acc / static_cast<double>(outcomes.pairs.size());
  }
  const double sum = std::accumulate(outcomes.scalar.begin(), outcomes.scalar.end(), 0.0);
  return w.x * sum / static_cast<double>(outcomes.scalar.size());
}

struct MeanVar {
  double mean;
  double var;
};

MeanVar sample_mean_var(const std::vector<double>& xs) {
  const double n = static_cast<double>(xs.size());
  const double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return {mean, ss / (n - 1.0)};
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Outcomes sample_outcomes(const GaussianState& state, const MeasurementSpec& meas,
                         const ProbeParams& params, std::size_t n, std::uint64_t seed) {
  return draw(state, meas, outcome_covariance(state, meas, params), n, seed);
}

double estimate_g(const Outcomes& outcomes, const MeasurementSpec& meas, double tau,
                  const ProbeParams& params, std::optional<Mat2> outcome_cov) {
  if (outcomes.size() == 0) throw InvalidArgumentError("no outcomes to estimate from");
  if (outcomes.kind != meas.kind()) {
    throw InvalidArgumentError("outcomes were recorded with a different measurement");
  }
  return apply_weights(outcomes, single_shot_weights(meas, tau, params, outcome_cov));
}

EstimationResult cramer_rao_check(const ExperimentPlan& plan) {
  if (plan.n < 2) throw InvalidArgumentError("need at least two trials per experiment");
  if (plan.experiments < 1) throw InvalidArgumentError("need at least one experiment");

  const GaussianState state = evolved_probe(plan.spec, plan.params, plan.tau);
  const Mat2 cov = outcome_covariance(state, plan.meas, plan.params);
  const Vec2 w = single_shot_weights(plan.meas, plan.tau, plan.params, cov);
  const double crb =
      1.0 / (static_cast<double>(plan.n) *
             cfi_generaldyne(plan.spec, plan.params, plan.tau, plan.meas));

  MeanVar stats{};
  if (plan.experiments == 1) {
    // One experiment: the estimate is the average of n single-shot
    // estimates, so its variance is their sample variance over n.
    const Outcomes outcomes = draw(state, plan.meas, cov, plan.n, mix_seed(plan.seed, 0));
    std::vector<double> shots(plan.n);
    for (std::size_t i = 0; i < plan.n; ++i) {
      shots[i] = outcomes.kind == MeasurementKind::kGeneraldyne ? dot(w, outcomes.pairs[i])
                                                                : w.x * outcomes.scalar[i];
    }
    const MeanVar single = sample_mean_var(shots);
    stats = {single.mean, single.var / static_cast<double>(plan.n)};
  } else {
    std::vector<double> estimates(plan.experiments);
    parallel_for(plan.experiments, [&](std::size_t e) {
      const Outcomes outcomes = draw(state, plan.meas, cov, plan.n, mix_seed(plan.seed, e));
      estimates[e] = apply_weights(outcomes, w);
    });
    stats = sample_mean_var(estimates);
  }
  return {stats.mean, stats.var, crb, stats.var / crb};
}

}  // namespace gravimetry
