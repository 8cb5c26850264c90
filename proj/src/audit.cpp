#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include <fmt/format.h>

#include "gravimetry/fisher.hpp"
#include "gravimetry/freefall.hpp"
#include "gravimetry/printed_formulas.hpp"
#include "gravimetry/sweep.hpp"

namespace gravimetry {

namespace {

namespace printed = as_printed;

struct Point {
  double tau = std::numeric_limits<double>::quiet_NaN();
  double r = std::numeric_limits<double>::quiet_NaN();
  double theta = std::numeric_limits<double>::quiet_NaN();
  double s = std::numeric_limits<double>::quiet_NaN();
};

std::string label(const Point& pt) {
  std::string out;
  const auto add = [&](const char* name, double v) {
    if (std::isnan(v)) return;
    if (!out.empty()) out += ';';
    out += fmt::format("{}={:.6g}", name, v);
  };
  add("tau", pt.tau);
  add("r", pt.r);
  add("theta", pt.theta);
  add("s", pt.s);
  return out;
}

double relative_deviation(double library, double printed) {
  if (library == printed) return 0.0;
  if (library == 0.0) return std::numeric_limits<double>::infinity();
  return std::abs(printed - library) / std::abs(library);
}

/// Tracks the grid point where a printed form deviates most.
class Worst {
 public:
  explicit Worst(std::string formula) : formula_(std::move(formula)) {}

  void add(const Point& pt, double library, double printed) {
    const double dev = relative_deviation(library, printed);
    if (!seen_ || dev > dev_ || (std::isnan(dev) && !std::isnan(dev_))) {
      seen_ = true;
      dev_ = dev;
      point_ = pt;
      library_ = library;
      printed_ = printed;
    }
  }

  std::vector<Cell> row() const {
    return {formula_, label(point_), library_, printed_, dev_};
  }

 private:
  std::string formula_;
  bool seen_ = false;
  double dev_ = 0.0;
  Point point_;
  double library_ = 0.0;
  double printed_ = 0.0;
};

using Evaluator = std::function<double(const SqueezeSpec&, double tau)>;

std::vector<Cell> over_state_grid(const SweepConfig& c, const std::string& name,
                                  const Evaluator& library, const Evaluator& printed_form) {
  Worst worst(name);
  for (double tau : c.tau) {
    for (double r : c.r) {
      for (double theta : c.theta) {
        const SqueezeSpec spec{r, theta};
        worst.add({tau, r, theta}, library(spec, tau), printed_form(spec, tau));
      }
    }
  }
  return worst.row();
}

using SEvaluator = std::function<double(const SqueezeSpec&, double tau, double s)>;

std::vector<Cell> over_s_grid(const SweepConfig& c, const std::string& name,
                              const SEvaluator& library, const SEvaluator& printed_form) {
  Worst worst(name);
  for (double tau : c.tau) {
    for (double r : c.r) {
      for (double theta : c.theta) {
        for (double s : c.s) {
          const SqueezeSpec spec{r, theta};
          worst.add({tau, r, theta, s}, library(spec, tau, s), printed_form(spec, tau, s));
        }
      }
    }
  }
  return worst.row();
}

}  // namespace

Dataset run_audit(const SweepConfig& config) {
  SweepConfig c = config;
  c.mode = SweepMode::kAudit;
  c = resolve(std::move(c));
  const ProbeParams& params = c.params;
  Dataset data{columns_for(SweepMode::kAudit), {}};
  auto& rows = data.rows;

  const auto doubled_cov = [&](const SqueezeSpec& spec, double tau) {
    return doubled_covariance(evolved_probe(spec, params, tau));
  };
  const auto cfi_at = [&](const MeasurementSpec& meas) {
    return [&params, meas](const SqueezeSpec& spec, double tau) {
      return cfi_generaldyne(spec, params, tau, meas);
    };
  };

  rows.push_back(over_state_grid(
      c, "qfi_tau0_form",
      [&](const SqueezeSpec& spec, double tau) { return qfi_closed_form(spec, params, tau); },
      [&](const SqueezeSpec& spec, double tau) {
        return printed::qfi_tau0_form(spec, params, tau);
      }));
  rows.push_back(over_state_grid(
      c, "qfi_mass_form",
      [&](const SqueezeSpec& spec, double tau) { return qfi_closed_form(spec, params, tau); },
      [&](const SqueezeSpec& spec, double tau) {
        return printed::qfi_mass_form(spec, params, tau);
      }));
  rows.push_back(over_state_grid(
      c, "qfi_vacuum_form",
      [&](const SqueezeSpec&, double tau) { return qfi_vacuum(params, tau); },
      [&](const SqueezeSpec&, double tau) { return printed::qfi_vacuum_form(params, tau); }));
  rows.push_back(over_state_grid(
      c, "rqfi_form",
      [&](const SqueezeSpec& spec, double tau) { return rqfi(spec, params, tau); },
      [&](const SqueezeSpec& spec, double tau) {
        return printed::rqfi_form(spec, params, tau);
      }));

  rows.push_back(over_state_grid(
      c, "cov_sigma11",
      [&](const SqueezeSpec& spec, double tau) { return doubled_cov(spec, tau).a; },
      [&](const SqueezeSpec& spec, double tau) { return printed::cov_sigma11(spec, params, tau); }));
  rows.push_back(over_state_grid(
      c, "cov_sigma22",
      [&](const SqueezeSpec& spec, double tau) { return doubled_cov(spec, tau).d; },
      [&](const SqueezeSpec& spec, double tau) { return printed::cov_sigma22(spec, params, tau); }));
  rows.push_back(over_state_grid(
      c, "cov_sigma12",
      [&](const SqueezeSpec& spec, double tau) { return doubled_cov(spec, tau).b; },
      [&](const SqueezeSpec& spec, double tau) { return printed::cov_sigma12(spec, params, tau); }));

  rows.push_back(over_state_grid(c, "cfi_position", cfi_at(MeasurementSpec::position()),
                                 [&](const SqueezeSpec& spec, double tau) {
                                   return printed::cfi_position(spec, params, tau);
                                 }));
  rows.push_back(over_state_grid(c, "cfi_momentum", cfi_at(MeasurementSpec::momentum()),
                                 [&](const SqueezeSpec& spec, double tau) {
                                   return printed::cfi_momentum(spec, params, tau);
                                 }));
  rows.push_back(over_state_grid(c, "cfi_heterodyne", cfi_at(MeasurementSpec::heterodyne()),
                                 [&](const SqueezeSpec& spec, double tau) {
                                   return printed::cfi_heterodyne(spec, params, tau);
                                 }));
  rows.push_back(over_s_grid(
      c, "cfi_general",
      [&](const SqueezeSpec& spec, double tau, double s) {
        return cfi_generaldyne(spec, params, tau, MeasurementSpec::from_s(s));
      },
      [&](const SqueezeSpec& spec, double tau, double s) {
        return printed::cfi_general(spec, params, tau, s);
      }));
  rows.push_back(over_s_grid(
      c, "ratio_general",
      [&](const SqueezeSpec& spec, double tau, double s) {
        return ratio_R(spec, params, tau, MeasurementSpec::from_s(s));
      },
      [&](const SqueezeSpec& spec, double tau, double s) {
        return printed::ratio_general(spec, params, tau, s);
      }));

  constexpr double kPi = std::numbers::pi;
  const struct {
    const char* name;
    printed::LimitPhase phase;
    double theta;
  } limit_rows[] = {
      {"limit_theta_0", printed::LimitPhase::kZero, 0.0},
      {"limit_theta_pi_4", printed::LimitPhase::kQuarterPi, kPi / 4.0},
      {"limit_theta_pi_2", printed::LimitPhase::kHalfPi, kPi / 2.0},
  };
  for (const auto& entry : limit_rows) {
    for (const bool long_time : {false, true}) {
      Worst worst(std::string(entry.name) + (long_time ? "_long" : "_short"));
      for (double r : c.r) {
        const SqueezeSpec spec{r, entry.theta};
        worst.add({std::numeric_limits<double>::quiet_NaN(), r, entry.theta},
                  rqfi_asymptote(spec, long_time ? TimeRegime::kLong : TimeRegime::kShort),
                  printed::tabulated_limit(entry.phase, long_time, r));
      }
      rows.push_back(worst.row());
    }
  }

  {
    Worst worst("long_time_factor_pi_4");
    for (double r : c.r) {
      const SqueezeSpec spec{r, kPi / 4.0};
      worst.add({std::numeric_limits<double>::quiet_NaN(), r, kPi / 4.0},
                rqfi_asymptote(spec, TimeRegime::kLong),
                printed::long_time_factor_quarter_pi(r));
    }
    rows.push_back(worst.row());
  }
  for (const bool long_time : {false, true}) {
    Worst worst(long_time ? "long_time_factor" : "short_time_factor");
    for (double r : c.r) {
      for (double theta : c.theta) {
        const SqueezeSpec spec{r, theta};
        worst.add({std::numeric_limits<double>::quiet_NaN(), r, theta},
                  rqfi_asymptote(spec, long_time ? TimeRegime::kLong : TimeRegime::kShort),
                  long_time ? printed::long_time_factor(spec)
                            : printed::short_time_factor(spec));
      }
    }
    rows.push_back(worst.row());
  }

  const double tau0 = params.tau0();
  for (const bool long_time : {false, true}) {
    Worst worst(long_time ? "rqfi_long_series" : "rqfi_short_series");
    const std::vector<double> scales =
        long_time ? std::vector<double>{1e2, 1e3, 1e4} : std::vector<double>{1e-3, 1e-2, 1e-1};
    for (double scale : scales) {
      const double tau = scale * tau0;
      for (double r : c.r) {
        for (double theta : c.theta) {
          const SqueezeSpec spec{r, theta};
          worst.add({tau, r, theta}, rqfi(spec, params, tau),
                    long_time ? printed::rqfi_long_series(spec, params, tau)
                              : printed::rqfi_short_series(spec, params, tau));
        }
      }
    }
    rows.push_back(worst.row());
  }
  return data;
}

}  // namespace gravimetry
