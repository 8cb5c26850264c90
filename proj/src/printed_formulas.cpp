#include "gravimetry/printed_formulas.hpp"

#include <cmath>

namespace gravimetry::as_printed {

namespace {

struct Symbols {
  double gamma;
  double sigma2;   // σ²
  double sigma02;  // σ0²
  double m;
  double hbar;
  double tau0;
  double sinh2r;
  double cosh2r;
  double sin2t;
  double cos2t;
};

Symbols symbols(const SqueezeSpec& spec, const ProbeParams& params) {
  const double s0 = params.sigma0();
  return {correlation_gamma(spec),
          s0 * s0 * width_factor(spec),
          s0 * s0,
          params.mass(),
          params.hbar(),
          params.tau0(),
          std::sinh(2.0 * spec.r()),
          std::cosh(2.0 * spec.r()),
          std::sin(2.0 * spec.theta()),
          std::cos(2.0 * spec.theta())};
}

}  // namespace

double qfi_tau0_form(const SqueezeSpec& spec, const ProbeParams& params, double tau) {
  const Symbols k = symbols(spec, params);
  const double bracket = k.cosh2r - k.sinh2r * k.cos2t;
  return (k.sinh2r * k.sinh2r * k.sin2t * k.sin2t + 1.0) / (4.0 * k.sigma02 * bracket) *
             std::pow(tau, 4) +
         2.0 * k.tau0 * k.sinh2r * k.sin2t / k.sigma02 * std::pow(tau, 3) +
         4.0 * k.tau0 * k.tau0 * bracket / k.sigma02 * tau * tau;
}

double qfi_mass_form(const SqueezeSpec& spec, const ProbeParams& params, double tau) {
  const Symbols k = symbols(spec, params);
  const double bracket = k.cosh2r - k.sinh2r * k.cos2t;
  return (k.sinh2r * k.sinh2r * k.sin2t * k.sin2t + 1.0) / (4.0 * k.sigma02 * bracket) *
             std::pow(tau, 4) +
         2.0 * k.m * k.sinh2r * k.sin2t / k.hbar * std::pow(tau, 3) +
         4.0 * bracket * k.tau0 * k.tau0 / k.sigma02 * tau * tau;
}

double qfi_vacuum_form(const ProbeParams& params, double tau) {
  const double s02 = params.sigma0() * params.sigma0();
  const double m = params.mass();
  const double hbar = params.hbar();
  return std::pow(tau, 4) / (4.0 * s02) + 4.0 * m * m * s02 * tau * tau / (hbar * hbar);
}

double rqfi_form(const SqueezeSpec& spec, const ProbeParams& params, double tau) {
  const Symbols k = symbols(spec, params);
  const double bracket = k.cosh2r - k.sinh2r * k.cos2t;
  const double den = std::pow(tau, 4) + 16.0 * k.tau0 * k.tau0 * tau * tau;
  return (k.sinh2r * k.sinh2r * k.sin2t * k.sin2t + 1.0) * std::pow(tau, 4) / (bracket * den) +
         8.0 * k.sinh2r * k.sin2t * k.tau0 * std::pow(tau, 3) / den +
         16.0 * bracket * k.tau0 * k.tau0 * tau * tau / den;
}

double rqfi_short_series(const SqueezeSpec& spec, const ProbeParams& params, double tau) {
  const Symbols k = symbols(spec, params);
  return k.sigma2 / k.sigma02 + k.sinh2r * k.sin2t / (2.0 * k.tau0) * tau +
         k.sinh2r * k.cos2t / (8.0 * k.tau0 * k.tau0) * tau * tau +
         k.sinh2r * k.sin2t / (32.0 * std::pow(k.tau0, 3)) * std::pow(tau, 3);
}

double rqfi_long_series(const SqueezeSpec& spec, const ProbeParams& params, double tau) {
  const Symbols k = symbols(spec, params);
  return (k.sinh2r * k.sinh2r * k.sin2t * k.sin2t + 1.0) * k.sigma02 / k.sigma2 +
         8.0 * k.sinh2r * k.sin2t * k.tau0 / tau -
         32.0 * k.sinh2r * k.cos2t * k.tau0 * k.tau0 / (tau * tau) -
         128.0 * k.sinh2r * k.sin2t * std::pow(k.tau0, 3) / std::pow(tau, 3);
}

double short_time_factor(const SqueezeSpec& spec) { return width_factor(spec); }

double long_time_factor(const SqueezeSpec& spec) {
  const double gamma = correlation_gamma(spec);
  return 1.0 / width_factor(spec) + gamma * gamma;
}

double long_time_factor_quarter_pi(double r) {
  const double s = std::sinh(2.0 * r);
  return s * s + 1.0 / std::cosh(2.0 * r);
}

double tabulated_limit(LimitPhase phase, bool long_time, double r) {
  switch (phase) {
    case LimitPhase::kZero:
      return long_time ? std::exp(2.0 * r) : std::exp(-2.0 * r);
    case LimitPhase::kHalfPi:
      return long_time ? std::exp(-2.0 * r) : std::exp(2.0 * r);
    case LimitPhase::kQuarterPi:
      break;
  }
  const double c = std::cosh(2.0 * r);
  return long_time ? c * c : c;
}

double cov_sigma11(const SqueezeSpec& spec, const ProbeParams& params, double tau) {
  const Symbols k = symbols(spec, params);
  const double x = tau / k.tau0;
  return k.sigma2 * (k.gamma * k.gamma + 1.0) / 2.0 * x * x + 2.0 * k.sigma2 * k.gamma * x +
         2.0 * k.sigma2;
}

double cov_sigma22(const SqueezeSpec& spec, const ProbeParams& params, double /*tau*/) {
  const Symbols k = symbols(spec, params);
  return (k.gamma * k.gamma + 1.0) / 2.0 * k.m * k.m * k.sigma2 / (k.tau0 * k.tau0);
}

double cov_sigma12(const SqueezeSpec& spec, const ProbeParams& params, double tau) {
  const Symbols k = symbols(spec, params);
  return k.hbar * (k.gamma * k.gamma + 1.0) / 2.0 * tau / k.tau0 + k.gamma * k.hbar;
}

double cfi_general(const SqueezeSpec& spec, const ProbeParams& params, double tau, double s) {
  const Symbols k = symbols(spec, params);
  const double g2 = k.gamma * k.gamma;
  const double num = 8.0 * tau * tau * s * k.sigma2 * std::pow(k.m, 4) * (2.0 * k.sigma2 + s) +
                     16.0 * k.hbar * k.gamma * std::pow(k.m, 3) * s * k.sigma2 +
                     s * std::pow(tau, 3) +
                     std::pow(tau, 3) * k.m * k.m *
                         (k.hbar * k.hbar * (g2 + 1.0) * s + 2.0 * k.sigma2);
  const double den = 2.0 * k.hbar * k.hbar * s * s * k.m * k.m * (g2 + 1.0) +
                     4.0 * k.m * k.m * s * k.sigma2 + 8.0 * k.m * k.m * k.sigma2 * k.sigma2 +
                     4.0 * k.m * k.m * s * k.sigma2 +
                     8.0 * k.hbar * k.gamma * k.m * tau * k.sigma2 +
                     2.0 * tau * tau * k.hbar * k.hbar * (g2 + 1.0);
  return num / den;
}

double cfi_position(const SqueezeSpec& spec, const ProbeParams& params, double tau) {
  const Symbols k = symbols(spec, params);
  const double h = k.hbar;
  return std::pow(tau, 4) * k.m * k.m * k.sigma2 /
         (h * h * k.gamma * k.gamma * tau * tau + 4.0 * h * k.gamma * k.m * k.sigma2 * tau +
          4.0 * k.m * k.m * k.sigma2 * k.sigma2 + tau * tau * h * h);
}

double cfi_momentum(const SqueezeSpec& spec, const ProbeParams& params, double tau) {
  const Symbols k = symbols(spec, params);
  return 4.0 * tau * tau * k.m * k.m * k.sigma2 / (k.hbar * k.hbar * (k.gamma * k.gamma + 1.0));
}

double cfi_heterodyne(const SqueezeSpec& spec, const ProbeParams& params, double tau) {
  const Symbols k = symbols(spec, params);
  const double h = k.hbar;
  const double g2 = k.gamma * k.gamma;
  const double s2 = k.sigma2;
  const double num = 4.0 * tau * tau * (2.0 * s2 * s2 + s2) * std::pow(k.m, 4) +
                     4.0 * std::pow(tau, 3) * s2 * h * k.gamma * std::pow(k.m, 3) +
                     std::pow(tau, 4) * (h * h * (g2 + 1.0) / 2.0 + s2) * k.m * k.m;
  // The printed denominator carries a stray factor "2" in its fourth term.
  const double den = (g2 + 2.0 * s2 + 1.0) * k.m * h * h + 4.0 * k.m * s2 * s2 +
                     2.0 * k.m * s2 + 4.0 * h * k.gamma * 2.0 * k.m * s2 * tau +
                     tau * tau * h * h * (g2 + 1.0);
  return num / den;
}

double ratio_general(const SqueezeSpec& spec, const ProbeParams& params, double tau, double s) {
  const Symbols k = symbols(spec, params);
  const double h = k.hbar;
  const double m = k.m;
  const double s2 = k.sigma2;
  const double big_gamma = k.gamma * k.gamma + 1.0;
  const double num =
      8.0 * tau * tau * m * m * s2 * h * h *
      ((big_gamma * h * h * s / 8.0 + s2 / 4.0) * tau * tau + k.gamma * h * m * s * tau * s2 +
       s * s2 * (2.0 * s2 + s) * m * m);
  const double den =
      (8.0 * (m * m * (2.0 * s * s2 + s * s * big_gamma) + tau * tau * big_gamma) * h * h +
       32.0 * k.gamma * h * m * tau * s2 + 16.0 * m * m * s2 * (2.0 * s2 + s)) *
      (big_gamma * tau * tau * h * h / 16.0 + k.gamma * h * m * tau * s2 / 2.0 +
       m * m * s2 * s2) *
      tau * tau;
  return num / den;
}

}  // namespace gravimetry::as_printed
