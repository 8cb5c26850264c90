#include "gravimetry/sweep.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "gravimetry/errors.hpp"
#include "gravimetry/fisher.hpp"
#include "gravimetry/freefall.hpp"
#include "gravimetry/measurement_lab.hpp"
#include "gravimetry/parallel.hpp"

namespace gravimetry {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

struct ModeInfo {
  SweepMode mode;
  const char* command;
  const char* long_name;
};

constexpr ModeInfo kModes[] = {
    {SweepMode::kQfiVsTime, "qfi", "qfi-vs-time"},
    {SweepMode::kRqfiTime, "rqfi", "rqfi-time"},
    {SweepMode::kRqfiMap, "rqfi-map", "rqfi-map"},
    {SweepMode::kRatioMap, "ratio-map", "ratio-map"},
    {SweepMode::kWignerGrid, "wigner", "wigner-grid"},
    {SweepMode::kSensitivity, "sensitivity", "sensitivity"},
    {SweepMode::kMontecarlo, "montecarlo", "montecarlo"},
    {SweepMode::kAudit, "audit", "audit"},
};

std::vector<double> scaled(std::vector<double> values, double factor) {
  for (double& v : values) v *= factor;
  return values;
}

void default_grid(std::vector<double>& grid, std::vector<double> fallback) {
  if (grid.empty()) grid = std::move(fallback);
}

void require_single(const std::vector<double>& grid, const char* field, const char* mode) {
  if (grid.size() != 1) {
    throw ConfigError(field, std::string("mode '") + mode + "' takes exactly one value");
  }
}

void require_each(const std::vector<double>& grid, const char* field, bool (*ok)(double),
                  const char* message) {
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!ok(grid[i])) throw ConfigError(std::string(field) + "[" + std::to_string(i) + "]", message);
  }
}

const std::vector<double>& theta_axis() {
  static const std::vector<double> axis = expand({0.0, kPi, 181, Spacing::kLinear, false});
  return axis;
}

std::vector<double> canonical_phases() { return {0.0, kPi / 4.0, kPi / 2.0}; }

/// Evaluates `row(i)` for every flat index concurrently, keeping index order.
template <typename RowFn>
void fill_rows(Dataset& data, std::size_t count, RowFn&& row) {
  data.rows.resize(count);
  parallel_for(count, [&](std::size_t i) { data.rows[i] = row(i); });
}

}  // namespace

std::vector<double> expand(const Range& range, const std::string& field) {
  if (range.count == 0) throw ConfigError(field + ".count", "must be >= 1");
  if (!std::isfinite(range.min) || !std::isfinite(range.max)) {
    throw ConfigError(field, "range endpoints must be finite");
  }
  if (range.spacing == Spacing::kLog && !(range.min > 0.0 && range.max > 0.0)) {
    throw ConfigError(field, "log spacing needs positive endpoints");
  }
  std::vector<double> values(range.count);
  if (range.count == 1) {
    values[0] = range.min;
    return values;
  }
  const double intervals =
      static_cast<double>(range.endpoint ? range.count - 1 : range.count);
  for (std::size_t i = 0; i < range.count; ++i) {
    const double f = static_cast<double>(i) / intervals;
    if (range.spacing == Spacing::kLinear) {
      values[i] = range.min + f * (range.max - range.min);
    } else {
      values[i] = range.min * std::pow(range.max / range.min, f);
    }
  }
  if (range.endpoint) values.back() = range.max;
  return values;
}

std::string mode_name(SweepMode mode) {
  for (const auto& info : kModes) {
    if (info.mode == mode) return info.long_name;
  }
  return "unknown";
}

std::optional<SweepMode> parse_mode(const std::string& name) {
  for (const auto& info : kModes) {
    if (name == info.command || name == info.long_name) return info.mode;
  }
  return std::nullopt;
}

std::vector<std::string> columns_for(SweepMode mode) {
  switch (mode) {
    case SweepMode::kQfiVsTime:
      return {"tau", "r", "theta", "F", "F_vac", "Q"};
    case SweepMode::kRqfiTime:
    case SweepMode::kRqfiMap:
      return {"tau", "r", "theta", "Q"};
    case SweepMode::kRatioMap:
      return {"tau", "theta", "s", "I", "F", "R"};
    case SweepMode::kWignerGrid:
      return {"z", "p", "W"};
    case SweepMode::kSensitivity:
      return {"tau", "r", "theta", "eta"};
    case SweepMode::kMontecarlo:
      return {"n", "experiments", "g_hat_mean", "g_hat_var", "crb", "normalized_var"};
    case SweepMode::kAudit:
      return {"formula", "grid_point", "library_value", "printed_value", "rel_dev"};
  }
  return {};
}

SweepConfig resolve(SweepConfig c) {
  const double tau0 = c.params.tau0();
  switch (c.mode) {
    case SweepMode::kQfiVsTime:
      default_grid(c.tau, scaled(expand({0.01, 1.0, 100}), tau0));
      default_grid(c.r, {0.4, 0.5, 0.6});
      default_grid(c.theta, canonical_phases());
      break;
    case SweepMode::kRqfiTime:
      default_grid(c.tau, scaled(expand({0.01, 50.0, 200, Spacing::kLog}), tau0));
      default_grid(c.r, {0.5});
      default_grid(c.theta, canonical_phases());
      break;
    case SweepMode::kRqfiMap:
      default_grid(c.tau, scaled(expand({0.01, 50.0, 200, Spacing::kLog}), tau0));
      default_grid(c.r, {0.5});
      default_grid(c.theta, theta_axis());
      break;
    case SweepMode::kRatioMap:
      default_grid(c.tau, scaled(expand({0.05, 5.0, 100}), tau0));
      default_grid(c.r, {0.5});
      default_grid(c.theta, theta_axis());
      default_grid(c.s, {kInf});
      require_single(c.r, "grids.r", "ratio-map");
      break;
    case SweepMode::kWignerGrid: {
      default_grid(c.r, {0.5});
      default_grid(c.theta, {kPi / 4.0});
      require_single(c.r, "grids.r", "wigner");
      require_single(c.theta, "grids.theta", "wigner");
      break;
    }
    case SweepMode::kSensitivity:
      default_grid(c.tau, scaled(expand({0.01, 1.0, 100}), tau0));
      default_grid(c.r, {0.0, 0.5});
      default_grid(c.theta, canonical_phases());
      break;
    case SweepMode::kMontecarlo:
      default_grid(c.tau, {tau0});
      default_grid(c.r, {0.0});
      default_grid(c.theta, {0.0});
      default_grid(c.s, {kInf});
      default_grid(c.trials, {10000.0});
      require_single(c.tau, "grids.tau", "montecarlo");
      require_single(c.r, "grids.r", "montecarlo");
      require_single(c.theta, "grids.theta", "montecarlo");
      require_single(c.s, "grids.s", "montecarlo");
      require_each(c.trials, "grids.n", [](double n) { return n >= 2.0 && n == std::floor(n) && n < 1e12; },
                   "trial count must be an integer >= 2");
      if (c.experiments < 1) throw ConfigError("experiments", "must be >= 1");
      break;
    case SweepMode::kAudit:
      default_grid(c.tau, scaled({0.1, 0.5, 1.0, 2.0, 5.0}, tau0));
      default_grid(c.r, {0.5});
      default_grid(c.theta, expand({0.0, kPi, 8, Spacing::kLinear, false}));
      default_grid(c.s, {0.1, 0.5, 1.0, 2.0, 10.0});
      require_each(c.s, "grids.s", [](double s) { return s > 0.0 && std::isfinite(s); },
                   "audit s values must be finite and > 0");
      break;
  }
  if (c.mode != SweepMode::kWignerGrid) {
    require_each(c.tau, "grids.tau", [](double t) { return t > 0.0 && std::isfinite(t); },
                 "tau must be finite and > 0");
  }
  require_each(c.r, "grids.r", [](double r) { return r >= 0.0 && std::isfinite(r); },
               "r must be finite and >= 0");
  require_each(c.theta, "grids.theta", [](double t) { return std::isfinite(t); },
               "theta must be finite");
  require_each(c.s, "grids.s", [](double s) { return s >= 0.0; }, "s must be >= 0 (or inf)");
  return c;
}

Dataset run_sweep(const SweepConfig& config) {
  const SweepConfig c = resolve(config);
  if (c.mode == SweepMode::kAudit) return run_audit(c);

  Dataset data{columns_for(c.mode), {}};
  const ProbeParams& params = c.params;
  const std::size_t nr = c.r.size();
  const std::size_t nt = c.theta.size();

  switch (c.mode) {
    case SweepMode::kQfiVsTime:
      fill_rows(data, c.tau.size() * nr * nt, [&](std::size_t i) -> std::vector<Cell> {
        const double tau = c.tau[i / (nr * nt)];
        const double r = c.r[(i / nt) % nr];
        const double theta = c.theta[i % nt];
        const double f = qfi_closed_form({r, theta}, params, tau);
        const double f_vac = qfi_vacuum(params, tau);
        return {tau, r, theta, f, f_vac, f / f_vac};
      });
      break;
    case SweepMode::kRqfiTime:
    case SweepMode::kRqfiMap:
      fill_rows(data, c.tau.size() * nr * nt, [&](std::size_t i) -> std::vector<Cell> {
        const double tau = c.tau[i / (nr * nt)];
        const double r = c.r[(i / nt) % nr];
        const double theta = c.theta[i % nt];
        return {tau, r, theta, rqfi({r, theta}, params, tau)};
      });
      break;
    case SweepMode::kSensitivity:
      fill_rows(data, c.tau.size() * nr * nt, [&](std::size_t i) -> std::vector<Cell> {
        const double tau = c.tau[i / (nr * nt)];
        const double r = c.r[(i / nt) % nr];
        const double theta = c.theta[i % nt];
        return {tau, r, theta, sensitivity({r, theta}, params, tau)};
      });
      break;
    case SweepMode::kRatioMap: {
      const double r = c.r.front();
      const std::size_t ns = c.s.size();
      fill_rows(data, c.tau.size() * nt * ns, [&](std::size_t i) -> std::vector<Cell> {
        const double tau = c.tau[i / (nt * ns)];
        const double theta = c.theta[(i / ns) % nt];
        const double s = c.s[i % ns];
        const SqueezeSpec spec{r, theta};
        const double info = cfi_generaldyne(spec, params, tau, MeasurementSpec::from_s(s));
        const double f = qfi_closed_form(spec, params, tau);
        return {tau, theta, s, info, f, info / f};
      });
      break;
    }
    case SweepMode::kWignerGrid: {
      const GaussianState state = make_squeezed_vacuum({c.r.front(), c.theta.front()}, params);
      const double sz = std::sqrt(state.cov.a);
      const double sp = std::sqrt(state.cov.d);
      const std::vector<double> zs = c.z.empty() ? expand({-4.0 * sz, 4.0 * sz, 101}) : c.z;
      const std::vector<double> ps = c.p.empty() ? expand({-4.0 * sp, 4.0 * sp, 101}) : c.p;
      fill_rows(data, zs.size() * ps.size(), [&](std::size_t i) -> std::vector<Cell> {
        const double z = zs[i / ps.size()];
        const double p = ps[i % ps.size()];
        return {z, p, wigner(state, z, p)};
      });
      break;
    }
    case SweepMode::kMontecarlo: {
      // Rows run one after another; each cramer_rao_check parallelizes internally.
      for (std::size_t i = 0; i < c.trials.size(); ++i) {
        const ExperimentPlan plan{{c.r.front(), c.theta.front()},
                                  params,
                                  c.tau.front(),
                                  MeasurementSpec::from_s(c.s.front()),
                                  static_cast<std::size_t>(c.trials[i]),
                                  c.experiments,
                                  mix_seed(c.seed, i)};
        const EstimationResult res = cramer_rao_check(plan);
        data.rows.push_back({c.trials[i], static_cast<double>(c.experiments), res.g_hat_mean,
                             res.g_hat_var, res.crb, res.normalized_var});
      }
      break;
    }
    case SweepMode::kAudit:
      break;
  }
  return data;
}

}  // namespace gravimetry
