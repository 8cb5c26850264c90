#include "gravimetry/fisher.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "gravimetry/errors.hpp"
#include "gravimetry/numerics.hpp"

namespace gravimetry {

namespace {

void require_time(double tau) {
  if (!std::isfinite(tau) || tau < 0.0) {
    throw InvalidArgumentError("interrogation time tau must be finite and >= 0");
  }
}

void require_positive_time(double tau, const char* what) {
  require_time(tau);
  if (tau == 0.0) {
    throw UndefinedRatioError(std::string(what) + " is undefined at tau = 0");
  }
}

double trace_term(const Mat2& cov, const Mat2& d_cov) {
  const Mat2 m = inverse(cov) * d_cov;
  return trace(m * m);
}

constexpr int kCoarsePoints = 256;
constexpr double kPhaseTolerance = 1e-6;
constexpr double kTieTolerance = 1e-9;

}  // namespace

MeasurementSpec MeasurementSpec::generaldyne(double s) {
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw InvalidArgumentError("general-dyne parameter s must be finite and > 0");
  }
  return MeasurementSpec(MeasurementKind::kGeneraldyne, s);
}

MeasurementSpec MeasurementSpec::from_s(double s) {
  if (s == 0.0) return position();
  if (s == std::numeric_limits<double>::infinity()) return momentum();
  return generaldyne(s);
}

double MeasurementSpec::s() const noexcept {
  switch (kind_) {
    case MeasurementKind::kPosition:
      return 0.0;
    case MeasurementKind::kMomentum:
      return std::numeric_limits<double>::infinity();
    case MeasurementKind::kGeneraldyne:
      break;
  }
  return s_;
}

Mat2 measurement_covariance(const MeasurementSpec& meas, const ProbeParams& params) {
  if (meas.kind() != MeasurementKind::kGeneraldyne) {
    throw InvalidArgumentError("ancilla covariance is only defined for general-dyne kinds");
  }
  const double w = meas.s() * params.sigma0() * params.sigma0();
  const double hbar = params.hbar();
  return Mat2::diag(0.5 * w, hbar * hbar / (2.0 * w));
}

double qfi_pure_gaussian(const GaussianState& state, Vec2 d_mean, const Mat2& d_cov) {
  require_valid(state);
  return trace_term(state.cov, d_cov) / 4.0 + inverse_quadratic_form(state.cov, d_mean);
}

double cfi_gaussian(const Mat2& outcome_cov, Vec2 d_mean, const Mat2& d_cov) {
  require_valid({Vec2{}, outcome_cov});
  return trace_term(outcome_cov, d_cov) / 2.0 + inverse_quadratic_form(outcome_cov, d_mean);
}

double qfi_gaussian_oracle(const SqueezeSpec& spec, const ProbeParams& params, double tau) {
  const EvolutionSpec evo{tau, params};
  const GaussianState state = evolve(make_squeezed_vacuum(spec, params), evo);
  return qfi_pure_gaussian(state, mean_sensitivity(evo), Mat2{});
}

double qfi_gaussian_oracle_fd(const StateFamily& state_at, double g, double dg) {
  if (!(dg > 0.0)) throw InvalidArgumentError("finite-difference step must be > 0");
  const GaussianState centre = state_at(g);
  const GaussianState up = state_at(g + dg);
  const GaussianState down = state_at(g - dg);
  const double inv = 1.0 / (2.0 * dg);
  const Vec2 d_mean = inv * (up.mean - down.mean);
  const Mat2 d_cov = inv * (up.cov - down.cov);
  return qfi_pure_gaussian(centre, d_mean, d_cov);
}

double qfi_closed_form(const SqueezeSpec& spec, const ProbeParams& params, double tau) {
  require_time(tau);
  const double gamma = correlation_gamma(spec);
  const double var_z = params.sigma0() * params.sigma0() * width_factor(spec);
  const double k = params.mass() / params.hbar();
  const double t2 = tau * tau;
  return (1.0 + gamma * gamma) * t2 * t2 / (4.0 * var_z) + 2.0 * gamma * k * t2 * tau +
         4.0 * var_z * k * k * t2;
}

double qfi_vacuum(const ProbeParams& params, double tau) {
  require_time(tau);
  const double s0sq = params.sigma0() * params.sigma0();
  const double tau0 = params.tau0();
  const double t2 = tau * tau;
  return t2 * t2 / (4.0 * s0sq) + 4.0 * tau0 * tau0 * t2 / s0sq;
}

double rqfi(const SqueezeSpec& spec, const ProbeParams& params, double tau) {
  require_positive_time(tau, "relative QFI");
  return qfi_closed_form(spec, params, tau) / qfi_vacuum(params, tau);
}

double rqfi_asymptote(const SqueezeSpec& spec, TimeRegime regime) {
  const double c = width_factor(spec);
  if (regime == TimeRegime::kShort) return c;
  const double gamma = correlation_gamma(spec);
  return (1.0 + gamma * gamma) / c;
}

double sensitivity(const SqueezeSpec& spec, const ProbeParams& params, double tau) {
  require_positive_time(tau, "sensitivity");
  return std::sqrt(tau / qfi_closed_form(spec, params, tau));
}

double cfi_generaldyne(const SqueezeSpec& spec, const ProbeParams& params, double tau,
                       const MeasurementSpec& meas) {
  const EvolutionSpec evo{tau, params};
  const GaussianState state = evolve(make_squeezed_vacuum(spec, params), evo);
  const Vec2 d = mean_sensitivity(evo);
  switch (meas.kind()) {
    case MeasurementKind::kPosition:
      return d.x * d.x / state.cov.a;
    case MeasurementKind::kMomentum:
      return d.y * d.y / state.cov.d;
    case MeasurementKind::kGeneraldyne:
      break;
  }
  return cfi_gaussian(state.cov + measurement_covariance(meas, params), d, Mat2{});
}

double ratio_R(const SqueezeSpec& spec, const ProbeParams& params, double tau,
               const MeasurementSpec& meas) {
  require_positive_time(tau, "CFI/QFI ratio");
  return cfi_generaldyne(spec, params, tau, meas) / qfi_closed_form(spec, params, tau);
}

std::optional<double> saturation_time(const SqueezeSpec& spec, const ProbeParams& params) {
  const double gamma = correlation_gamma(spec);
  if (!(gamma < 0.0)) return std::nullopt;
  const double var_z = params.sigma0() * params.sigma0() * width_factor(spec);
  return -4.0 * gamma * params.mass() * var_z / (params.hbar() * (1.0 + gamma * gamma));
}

PhaseOptimum optimal_phase(double r, const ProbeParams& params, double tau,
                           const MeasurementSpec& meas) {
  require_positive_time(tau, "optimal phase");
  const auto ratio_at = [&](double theta) { return ratio_R({r, theta}, params, tau, meas); };

  constexpr double step = std::numbers::pi / kCoarsePoints;
  std::vector<double> coarse(kCoarsePoints);
  for (int k = 0; k < kCoarsePoints; ++k) coarse[k] = ratio_at(k * step);

  const auto [lo_it, hi_it] = std::minmax_element(coarse.begin(), coarse.end());
  if (*hi_it - *lo_it <= kTieTolerance * std::abs(*hi_it)) return {0.0, coarse[0]};

  std::optional<PhaseOptimum> best;
  const auto consider = [&](double theta, double value) {
    theta = reduce_phase(theta);
    if (!best) {
      best = PhaseOptimum{theta, value};
      return;
    }
    const double tie = kTieTolerance * std::max(std::abs(value), std::abs(best->ratio));
    if (value > best->ratio + tie || (std::abs(value - best->ratio) <= tie && theta < best->theta)) {
      best = PhaseOptimum{theta, value};
    }
  };

  for (int k = 0; k < kCoarsePoints; ++k) {
    const double left = coarse[(k + kCoarsePoints - 1) % kCoarsePoints];
    const double right = coarse[(k + 1) % kCoarsePoints];
    if (coarse[k] < left || coarse[k] < right) continue;
    const double centre = k * step;
    const ScalarOptimum refined =
        golden_section_maximize(ratio_at, centre - step, centre + step, kPhaseTolerance);
    if (refined.value >= coarse[k]) {
      consider(refined.x, refined.value);
    } else {
      consider(centre, coarse[k]);
    }
  }
  return *best;
}

FisherReport fisher_report(const SqueezeSpec& spec, const ProbeParams& params, double tau,
                           const MeasurementSpec& meas) {
  require_positive_time(tau, "Fisher report");
  const double f = qfi_closed_form(spec, params, tau);
  const double f_vac = qfi_vacuum(params, tau);
  const double i = cfi_generaldyne(spec, params, tau, meas);
  return {tau, f, f_vac, f / f_vac, i, i / f, std::sqrt(tau / f)};
}

}  // namespace gravimetry
