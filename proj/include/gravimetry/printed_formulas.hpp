#pragma once

// Closed forms transcribed exactly as they appear in the source derivation,
// typos included. Nothing in the library calls these; they exist so the
// audit can quantify how far each printed expression is from the values the
// library computes. Covariance entries here use the doubled convention.

#include "gravimetry/gaussian.hpp"

namespace gravimetry::as_printed {

double qfi_tau0_form(const SqueezeSpec& spec, const ProbeParams& params, double tau);
double qfi_mass_form(const SqueezeSpec& spec, const ProbeParams& params, double tau);
double qfi_vacuum_form(const ProbeParams& params, double tau);
double rqfi_form(const SqueezeSpec& spec, const ProbeParams& params, double tau);

/// Third-order small-tau expansion of Q.
double rqfi_short_series(const SqueezeSpec& spec, const ProbeParams& params, double tau);
/// Third-order large-tau expansion of Q.
double rqfi_long_series(const SqueezeSpec& spec, const ProbeParams& params, double tau);

/// Short/long-time prefactors of F_vac as quoted.
double short_time_factor(const SqueezeSpec& spec);
double long_time_factor(const SqueezeSpec& spec);
/// theta = pi/4 long-time factor as quoted: sinh²2r + sech 2r.
double long_time_factor_quarter_pi(double r);

enum class LimitPhase { kZero, kQuarterPi, kHalfPi };
/// Tabulated short/long-time limits of Q; `long_time` selects the asymptotic one.
double tabulated_limit(LimitPhase phase, bool long_time, double r);

double cov_sigma11(const SqueezeSpec& spec, const ProbeParams& params, double tau);
double cov_sigma22(const SqueezeSpec& spec, const ProbeParams& params, double tau);
double cov_sigma12(const SqueezeSpec& spec, const ProbeParams& params, double tau);

double cfi_general(const SqueezeSpec& spec, const ProbeParams& params, double tau, double s);
double cfi_position(const SqueezeSpec& spec, const ProbeParams& params, double tau);
double cfi_momentum(const SqueezeSpec& spec, const ProbeParams& params, double tau);
double cfi_heterodyne(const SqueezeSpec& spec, const ProbeParams& params, double tau);
double ratio_general(const SqueezeSpec& spec, const ProbeParams& params, double tau, double s);

}  // namespace gravimetry::as_printed
