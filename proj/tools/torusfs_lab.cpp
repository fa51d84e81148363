// Command-line driver for the torusfs experiments.
//
//   torusfs-lab identities     [flags]
//   torusfs-lab bound-sweep    [flags]
//   torusfs-lab converge-sweep [flags]
//   torusfs-lab kernels-dump   [flags]

#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "torusfs/error.hpp"
#include "torusfs/lab/config.hpp"
#include "torusfs/lab/experiments.hpp"
#include "torusfs/lab/report.hpp"
#include "torusfs/version.hpp"

namespace {

using namespace torusfs::lab;

struct Flags {
  std::optional<std::string> grid, degrees, p, epsilon, funcs, out, format, seed, config;
};

void add_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--grid", f.grid, "grid size per axis (power of two)");
  cmd->add_option("--degrees", f.degrees, "comma-separated degree schedule, e.g. 4,8,16");
  cmd->add_option("--p", f.p, "comma-separated exponents in (0,1]");
  cmd->add_option("--epsilon", f.epsilon, "comma-separated exceedance thresholds");
  cmd->add_option("--funcs", f.funcs, "comma-separated function ids, or 'all'");
  cmd->add_option("--out", f.out, "output directory");
  cmd->add_option("--format", f.format, "csv or csv+plots");
  cmd->add_option("--seed", f.seed, "seed of the random polynomials");
  cmd->add_option("--config", f.config, "key=value config file; flags override it");
}

LabConfig resolve(const Flags& f, LabConfig base) {
  if (f.config) apply_overrides(base, read_config_file(*f.config));
  std::map<std::string, std::string> kv;
  if (f.grid) kv["grid"] = *f.grid;
  if (f.degrees) kv["degrees"] = *f.degrees;
  if (f.p) kv["p"] = *f.p;
  if (f.epsilon) kv["epsilon"] = *f.epsilon;
  if (f.funcs) kv["funcs"] = *f.funcs;
  if (f.out) kv["out"] = *f.out;
  if (f.format) kv["format"] = *f.format;
  if (f.seed) kv["seed"] = *f.seed;
  apply_overrides(base, kv);
  validate(base);
  return base;
}

std::string output_path(const LabConfig& c, const std::string& name) {
  return (std::filesystem::path(c.out_dir) / name).string();
}

int finish(const LabConfig& config, const SweepReport& report, const std::string& file, const CheckResult& check) {
  const std::string path = output_path(config, file);
  write_csv(report, config_hash(config), path);
  std::cout << "wrote " << report.rows.size() << " rows to " << path << "\n";
  if (config.format == OutputFormat::CsvPlots && report.command != "identities") {
    auto plots = write_plots(report, output_path(config, "plots"));
    std::cout << "wrote " << plots.size() << " plots to " << output_path(config, "plots") << "\n";
  }
  constexpr std::size_t kShown = 20;
  for (std::size_t i = 0; i < check.failures.size() && i < kShown; ++i) std::cout << "FAIL " << check.failures[i] << "\n";
  if (check.failures.size() > kShown) std::cout << "... " << check.failures.size() - kShown << " more\n";
  std::cout << (check.passed ? "all checks passed" : "checks failed") << "\n";
  return check.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Double Fourier series summability lab"};
  app.set_version_flag("--version", std::string(torusfs::kVersion));
  app.require_subcommand(1);

  Flags identities_flags, bound_flags, converge_flags, kernel_flags;
  auto* identities = app.add_subcommand("identities", "verify the summation-by-parts and decomposition identities");
  auto* bound = app.add_subcommand("bound-sweep", "L_p size of strong logarithmic means against the L log L modular");
  auto* converge = app.add_subcommand("converge-sweep", "error means in L_p and in measure");
  auto* kernels = app.add_subcommand("kernels-dump", "sample the Dirichlet-type kernels to CSV");
  add_flags(identities, identities_flags);
  add_flags(bound, bound_flags);
  add_flags(converge, converge_flags);
  add_flags(kernels, kernel_flags);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*identities) {
      LabConfig c = resolve(identities_flags, identity_defaults());
      SweepReport r = run_identity_suite(c);
      return finish(c, r, "identities.csv", check_identities(r));
    }
    if (*bound) {
      LabConfig c = resolve(bound_flags, LabConfig{});
      SweepReport r = run_bound_sweep(c);
      return finish(c, r, "bound_sweep.csv", check_bound_sweep(r));
    }
    if (*converge) {
      LabConfig c = resolve(converge_flags, LabConfig{});
      SweepReport r = run_convergence_sweep(c);
      return finish(c, r, "converge_sweep.csv", check_convergence(r));
    }
    if (*kernels) {
      LabConfig c = resolve(kernel_flags, LabConfig{});
      const std::string path = output_path(c, "kernels.csv");
      auto samples = dump_kernels(c);
      write_kernel_csv(samples, config_hash(c), path);
      std::cout << "wrote " << samples.size() << " samples to " << path << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
