#include "gravimetry/freefall.hpp"

#include <cmath>

#include "gravimetry/errors.hpp"

namespace gravimetry {

namespace {

void require_time(double tau) {
  if (!std::isfinite(tau) || tau < 0.0) {
    throw InvalidArgumentError("interrogation time tau must be finite and >= 0");
  }
}

}  // namespace

Mat2 free_symplectic(double tau, double mass) { return {1.0, tau / mass, 0.0, 1.0}; }

GaussianState evolve(const GaussianState& state, const EvolutionSpec& spec) {
  require_time(spec.tau);
  const double tau = spec.tau;
  const double m = spec.params.mass();
  const double g = spec.params.g();
  const Vec2 mean{state.mean.x + state.mean.y * tau / m - 0.5 * g * tau * tau,
                  state.mean.y - m * g * tau};

  // Written out rather than S V Sᵀ so that V12 == V21 holds bit-for-bit.
  const Mat2& v = state.cov;
  const double k = tau / m;
  const double v12 = v.b + v.d * k;
  const double v11 = v.a + 2.0 * v.b * k + v.d * k * k;
  return {mean, Mat2::symmetric(v11, v12, v.d)};
}

Vec2 mean_sensitivity(const EvolutionSpec& spec) {
  require_time(spec.tau);
  return {-0.5 * spec.tau * spec.tau, -spec.params.mass() * spec.tau};
}

GaussianState evolved_probe(const SqueezeSpec& squeeze, const ProbeParams& params, double tau) {
  return evolve(make_squeezed_vacuum(squeeze, params), {tau, params});
}

}  // namespace gravimetry
