#include "gravimetry/gaussian.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gravimetry/errors.hpp"

namespace gravimetry {

namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw InvalidArgumentError(std::string(name) + " must be positive and finite");
  }
}

}  // namespace

double reduce_phase(double theta) {
  double t = std::fmod(theta, std::numbers::pi);
  if (t < 0.0) t += std::numbers::pi;
  // fmod of a value just below a multiple of pi can round up to pi itself.
  if (t >= std::numbers::pi) t = 0.0;
  return t;
}

SqueezeSpec::SqueezeSpec(double r, double theta) : r_(r), theta_(0.0) {
  if (!std::isfinite(r) || r < 0.0) {
    throw InvalidArgumentError("squeezing amplitude r must be finite and >= 0");
  }
  if (!std::isfinite(theta)) {
    throw InvalidArgumentError("squeezing phase theta must be finite");
  }
  theta_ = reduce_phase(theta);
}

ProbeParams::ProbeParams(double mass, double sigma0, double hbar, double g)
    : mass_(mass), sigma0_(sigma0), hbar_(hbar), g_(g) {
  require_positive(mass, "mass");
  require_positive(sigma0, "sigma0");
  require_positive(hbar, "hbar");
  if (!std::isfinite(g)) throw InvalidArgumentError("g must be finite");
}

ProbeParams ProbeParams::natural(double g) { return {1.0, 1.0, 1.0, g}; }

double correlation_gamma(const SqueezeSpec& spec) {
  return std::sinh(2.0 * spec.r()) * std::sin(2.0 * spec.theta());
}

double width_factor(const SqueezeSpec& spec) {
  const double two_r = 2.0 * spec.r();
  return std::cosh(two_r) - std::sinh(two_r) * std::cos(2.0 * spec.theta());
}

double sigma_of(const SqueezeSpec& spec, double sigma0) {
  return sigma0 * std::sqrt(width_factor(spec));
}

GaussianState make_squeezed_vacuum(const SqueezeSpec& spec, const ProbeParams& params) {
  const double gamma = correlation_gamma(spec);
  const double var_z = params.sigma0() * params.sigma0() * width_factor(spec);
  const double hbar = params.hbar();
  return {Vec2{0.0, 0.0},
          Mat2::symmetric(var_z, 0.5 * hbar * gamma,
                          hbar * hbar * (1.0 + gamma * gamma) / (4.0 * var_z))};
}

double sr_uncertainty(const GaussianState& state) { return det(state.cov); }

Mat2 doubled_covariance(const GaussianState& state) { return 2.0 * state.cov; }

void require_valid(const GaussianState& state) {
  const Mat2& v = state.cov;
  if (!(v.a > 0.0) || !(v.d > 0.0)) {
    throw InvalidStateError("covariance diagonal must be positive");
  }
  if (v.b != v.c) throw InvalidStateError("covariance must be symmetric");
  if (!(det(v) > 0.0)) throw InvalidStateError("covariance is singular");
}

double wigner(const GaussianState& state, double z, double p) {
  const double d = det(state.cov);
  if (!(d > 0.0)) throw InvalidStateError("Wigner function needs det V > 0");
  const Vec2 delta{z - state.mean.x, p - state.mean.y};
  const double q = inverse_quadratic_form(state.cov, delta);
  return std::exp(-0.5 * q) / (2.0 * std::numbers::pi * std::sqrt(d));
}

}  // namespace gravimetry
