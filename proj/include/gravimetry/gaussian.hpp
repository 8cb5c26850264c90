#pragma once

// Single-mode Gaussian probe states: squeezed-vacuum preparation,
// Schrödinger–Robertson invariant and Wigner-function evaluation.
//
// Covariances use the standard convention
//   V_ij = <{d_i, d_j}>/2 - <d_i><d_j>,   d = (z, p),
// so det V >= ħ²/4 with equality for pure states. The doubled matrix
// sigma_ij = <{d_i, d_j}> - 2<d_i><d_j> = 2 V is available through
// doubled_covariance() for comparison with literature formulas.

#include "gravimetry/linalg.hpp"

namespace gravimetry {

/// Squeezing amplitude r >= 0 and phase theta, stored reduced to [0, pi).
class SqueezeSpec {
 public:
  /// Throws InvalidArgumentError if r < 0 or either value is not finite.
  SqueezeSpec(double r, double theta);

  double r() const noexcept { return r_; }
  double theta() const noexcept { return theta_; }

  static SqueezeSpec vacuum() { return {0.0, 0.0}; }

 private:
  double r_;
  double theta_;
};

/// Physical constants of the probe and the field (SI unless natural()).
class ProbeParams {
 public:
  /// Throws InvalidArgumentError unless mass, sigma0, hbar > 0 and g finite.
  ProbeParams(double mass, double sigma0, double hbar, double g);

  /// m = sigma0 = hbar = 1.
  static ProbeParams natural(double g = 9.81);

  double mass() const noexcept { return mass_; }
  double sigma0() const noexcept { return sigma0_; }
  double hbar() const noexcept { return hbar_; }
  double g() const noexcept { return g_; }

  /// Characteristic time tau0 = m sigma0² / hbar.
  double tau0() const noexcept { return mass_ * sigma0_ * sigma0_ / hbar_; }

  ProbeParams with_g(double g) const { return {mass_, sigma0_, hbar_, g}; }

 private:
  double mass_;
  double sigma0_;
  double hbar_;
  double g_;
};

struct GaussianState {
  Vec2 mean;  // (<z>, <p>)
  Mat2 cov;   // standard convention, symmetric
};

constexpr double kReducedPlanck = 1.054571817e-34;  // J s

/// Reduces any real angle into [0, pi).
double reduce_phase(double theta);

/// gamma = sinh(2r) sin(2 theta).
double correlation_gamma(const SqueezeSpec& spec);

/// sigma² / sigma0² = cosh(2r) - sinh(2r) cos(2 theta).
double width_factor(const SqueezeSpec& spec);

/// Initial position standard deviation sigma.
double sigma_of(const SqueezeSpec& spec, double sigma0);

GaussianState make_squeezed_vacuum(const SqueezeSpec& spec, const ProbeParams& params);

/// det V; equals ħ²/4 for pure states.
double sr_uncertainty(const GaussianState& state);

/// The doubled covariance 2V.
Mat2 doubled_covariance(const GaussianState& state);

/// Throws InvalidStateError unless V is symmetric with V11, V22 > 0 and det V > 0.
void require_valid(const GaussianState& state);

/// W(z, p) = exp(-½ δᵀ V⁻¹ δ) / (2π √det V).
double wigner(const GaussianState& state, double z, double p);

}  // namespace gravimetry
