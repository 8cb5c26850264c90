#pragma once

// Quantum and classical Fisher information for estimating g with a
// free-falling squeezed probe.
//
// Two independent routes are provided for the QFI: the closed form in
// (tau, r, theta) and the generic pure-Gaussian expression
//   F = Tr[(V⁻¹ ∂V)²]/4 + (∂d)ᵀ V⁻¹ (∂d)
// evaluated on the evolved state. The CFI of a Gaussian measurement with
// ancilla covariance V_m uses the outcome covariance V + V_m:
//   I = Tr[(Ṽ⁻¹ ∂Ṽ)²]/2 + (∂d)ᵀ Ṽ⁻¹ (∂d).
// Since g only displaces the mean, both trace terms vanish here.

#include <functional>
#include <optional>

#include "gravimetry/freefall.hpp"
#include "gravimetry/gaussian.hpp"

namespace gravimetry {

enum class MeasurementKind { kPosition, kMomentum, kGeneraldyne };

/// Gaussian projective measurement. Position and momentum are the exact
/// s -> 0 and s -> inf members of the general-dyne family.
class MeasurementSpec {
 public:
  static MeasurementSpec position() { return MeasurementSpec(MeasurementKind::kPosition, 0.0); }
  static MeasurementSpec momentum() { return MeasurementSpec(MeasurementKind::kMomentum, 0.0); }
  /// Throws InvalidArgumentError unless 0 < s < inf.
  static MeasurementSpec generaldyne(double s);
  static MeasurementSpec heterodyne() { return generaldyne(1.0); }
  /// s == 0 -> position, s == +inf -> momentum, otherwise general-dyne.
  static MeasurementSpec from_s(double s);

  MeasurementKind kind() const noexcept { return kind_; }
  /// The general-dyne parameter; 0 for position and +inf for momentum.
  double s() const noexcept;

 private:
  MeasurementSpec(MeasurementKind kind, double s) : kind_(kind), s_(s) {}

  MeasurementKind kind_;
  double s_;
};

/// Ancilla covariance diag(s sigma0²/2, ħ²/(2 s sigma0²)) of a general-dyne
/// measurement (pure: det = ħ²/4). Only defined for kind() == kGeneraldyne.
Mat2 measurement_covariance(const MeasurementSpec& meas, const ProbeParams& params);

enum class TimeRegime { kShort, kLong };

struct FisherReport {
  double tau;
  double qfi;         // F_g
  double qfi_vacuum;  // F_vac
  double rqfi;        // Q = F_g / F_vac
  double cfi;         // I_g for the chosen measurement
  double ratio;       // R = I_g / F_g
  double sensitivity; // eta = sqrt(tau / F_g)
};

struct PhaseOptimum {
  double theta;
  double ratio;
};

// Generic Gaussian oracles --------------------------------------------------

/// Pure-state QFI from the parameter derivatives of mean and covariance.
double qfi_pure_gaussian(const GaussianState& state, Vec2 d_mean, const Mat2& d_cov);

/// CFI of a Gaussian outcome law with covariance `outcome_cov`.
double cfi_gaussian(const Mat2& outcome_cov, Vec2 d_mean, const Mat2& d_cov);

/// Generic-formula QFI of the evolved squeezed vacuum with analytic
/// derivatives (∂d from mean_sensitivity, ∂V = 0).
double qfi_gaussian_oracle(const SqueezeSpec& spec, const ProbeParams& params, double tau);

/// Maps a value of g to the (pure) probe state at fixed tau.
using StateFamily = std::function<GaussianState(double g)>;

/// Generic-formula QFI with both derivatives taken by central differences
/// of step dg around g.
double qfi_gaussian_oracle_fd(const StateFamily& state_at, double g, double dg);

// Closed forms -------------------------------------------------------------

/// (1+γ²)τ⁴/(4σ²) + 2γ(m/ħ)τ³ + 4σ²(m/ħ)²τ².
double qfi_closed_form(const SqueezeSpec& spec, const ProbeParams& params, double tau);

/// τ⁴/(4σ0²) + 4τ0²τ²/σ0².
double qfi_vacuum(const ProbeParams& params, double tau);

/// Q = F_g / F_vac. Throws UndefinedRatioError at tau == 0.
double rqfi(const SqueezeSpec& spec, const ProbeParams& params, double tau);

/// Exact tau -> 0 and tau -> inf limits of Q: σ²/σ0² and (1+γ²)σ0²/σ².
double rqfi_asymptote(const SqueezeSpec& spec, TimeRegime regime);

/// eta = sqrt(tau / F_g). Throws UndefinedRatioError at tau == 0.
double sensitivity(const SqueezeSpec& spec, const ProbeParams& params, double tau);

// Measurements -------------------------------------------------------------

double cfi_generaldyne(const SqueezeSpec& spec, const ProbeParams& params, double tau,
                       const MeasurementSpec& meas);

/// R = I_g / F_g. Throws UndefinedRatioError at tau == 0.
double ratio_R(const SqueezeSpec& spec, const ProbeParams& params, double tau,
               const MeasurementSpec& meas);

/// Time at which a momentum measurement saturates the QFI. Exists iff γ < 0:
/// F_g - I_p = τ² (1+γ²)/(4σ²) (τ - τ*)² with τ* = -4γ m σ² / (ħ (1+γ²)).
std::optional<double> saturation_time(const SqueezeSpec& spec, const ProbeParams& params);

/// Maximizes R over theta in [0, pi) at fixed r and tau: 256-point coarse
/// scan, golden-section refinement of every coarse local maximum, ties
/// (within 1e-12 relative) resolved toward smaller theta.
PhaseOptimum optimal_phase(double r, const ProbeParams& params, double tau,
                           const MeasurementSpec& meas);

FisherReport fisher_report(const SqueezeSpec& spec, const ProbeParams& params, double tau,
                           const MeasurementSpec& meas);

}  // namespace gravimetry
