// gravimetry: dataset sweeps for squeezed free-fall probes.
//
//   gravimetry rqfi --theta 0,pi/4,pi/2 --out rqfi.csv
//   gravimetry ratio-map --config configs/ratio_momentum.json
//   gravimetry montecarlo --n 10000 --experiments 200 --seed 7

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gravimetry/config.hpp"
#include "gravimetry/dataset.hpp"
#include "gravimetry/errors.hpp"
#include "gravimetry/sweep.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

struct Flags {
  std::string config;
  std::optional<std::string> out;
  std::optional<std::string> format;
  std::optional<std::string> units;
  std::optional<std::string> seed;
  std::optional<std::string> experiments;
  std::optional<std::string> tau, r, theta, s, z, p, n;
  std::optional<std::string> m, sigma0, hbar, g;
};

void add_flags(CLI::App& cmd, Flags& f) {
  cmd.add_option("--config", f.config, "JSON sweep configuration");
  cmd.add_option("--out", f.out, "Output file (default: standard output)");
  cmd.add_option("--format", f.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  cmd.add_option("--units", f.units, "natural or si")->check(CLI::IsMember({"natural", "si"}));
  cmd.add_option("--seed", f.seed, "Random seed (unsigned 64-bit)");
  cmd.add_option("--experiments", f.experiments, "Monte-Carlo repetitions");

  const char* grid_help = "Grid: list 'a,b,c' or range 'min:max:count[:log][:open]'";
  cmd.add_option("--tau", f.tau, grid_help);
  cmd.add_option("--r", f.r, grid_help);
  cmd.add_option("--theta", f.theta, grid_help);
  cmd.add_option("--s", f.s, "General-dyne s grid (0 = position, inf = momentum)");
  cmd.add_option("--z", f.z, grid_help);
  cmd.add_option("--p", f.p, grid_help);
  cmd.add_option("--n", f.n, "Trials per Monte-Carlo experiment");

  cmd.add_option("--m", f.m, "Probe mass [kg]");
  cmd.add_option("--sigma0", f.sigma0, "Vacuum position width [m]");
  cmd.add_option("--hbar", f.hbar, "Reduced Planck constant");
  cmd.add_option("--g", f.g, "Gravitational acceleration");
}

/// File values first, then every flag given on the command line.
nlohmann::json merged_document(const Flags& f, const std::string& mode) {
  nlohmann::json doc = f.config.empty() ? nlohmann::json::object()
                                        : gravimetry::load_config_file(f.config);
  if (!doc.is_object()) throw gravimetry::ConfigError("<root>", "config must be a JSON object");
  doc["mode"] = mode;

  const auto set = [&](const char* key, const std::optional<std::string>& v) {
    if (v) doc[key] = *v;
  };
  set("output", f.out);
  set("format", f.format);
  set("units", f.units);
  set("seed", f.seed);
  set("experiments", f.experiments);

  const auto set_in = [&](const char* section, const char* key,
                          const std::optional<std::string>& v) {
    if (!v) return;
    if (!doc.contains(section)) doc[section] = nlohmann::json::object();
    if (!doc[section].is_object()) throw gravimetry::ConfigError(section, "expected an object");
    doc[section][key] = *v;
  };
  set_in("grids", "tau", f.tau);
  set_in("grids", "r", f.r);
  set_in("grids", "theta", f.theta);
  set_in("grids", "s", f.s);
  set_in("grids", "z", f.z);
  set_in("grids", "p", f.p);
  set_in("grids", "n", f.n);
  set_in("params", "m", f.m);
  set_in("params", "sigma0", f.sigma0);
  set_in("params", "hbar", f.hbar);
  set_in("params", "g", f.g);
  return doc;
}

int run(const Flags& flags, const std::string& mode) {
  try {
    const gravimetry::SweepConfig config =
        gravimetry::config_from_json(merged_document(flags, mode));
    const gravimetry::Dataset data = gravimetry::run_sweep(config);
    if (config.output.empty()) {
      if (config.format == gravimetry::Format::kCsv) {
        gravimetry::write_csv(std::cout, data);
      } else {
        gravimetry::write_json(std::cout, data);
      }
      std::cout.flush();
      if (!std::cout) throw gravimetry::IoError("failed writing to standard output");
    } else {
      gravimetry::emit(data, config.format, config.output);
    }
    return 0;
  } catch (const gravimetry::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const gravimetry::IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const gravimetry::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fisher-information sweeps for free-fall gravimetry with squeezed probes"};
  app.require_subcommand(1);

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"qfi", "QFI and vacuum QFI against evolution time"},
      {"rqfi", "Relative QFI against evolution time"},
      {"rqfi-map", "Relative QFI over (tau, theta)"},
      {"ratio-map", "CFI/QFI ratio over (tau, theta, s)"},
      {"wigner", "Wigner function of the initial state on a (z, p) grid"},
      {"sensitivity", "Sensitivity sqrt(tau / F) against evolution time"},
      {"montecarlo", "Estimator variance against the Cramer-Rao bound"},
      {"audit", "Deviation of printed closed forms from library values"},
  };
  Flags flags;
  std::string chosen;
  for (const auto& [name, help] : commands) {
    CLI::App* cmd = app.add_subcommand(name, help);
    add_flags(*cmd, flags);
    cmd->callback([&chosen, name = name] { chosen = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }
  return run(flags, chosen);
}
