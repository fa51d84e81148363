#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace torusfs::lab {

enum class OutputFormat { Csv, CsvPlots };

/// Settings shared by every lab experiment.
struct LabConfig {
  int grid = 256;
  std::vector<int> degrees{4, 8, 16, 32, 64};
  std::vector<double> p_values{0.5, 0.75};
  std::vector<double> epsilons{0.1, 0.05};
  /// Function ids, or {"all"} for the experiment's default corpus.
  std::vector<std::string> funcs{"all"};
  std::string out_dir = "lab_out";
  OutputFormat format = OutputFormat::Csv;
  std::uint64_t seed = 20240601;
  std::vector<int> kernel_orders{0, 1, 5, 16};
  int kernel_samples = 1025;
};

/// Defaults for the identity suite: 128x128 grid, degrees up to 16.
LabConfig identity_defaults();

/// Flat key=value overrides; '#' starts a comment. Keys: grid, degrees, p,
/// epsilon, funcs, out, format, seed, kernel_orders, kernel_samples.
/// Throws std::invalid_argument on unknown keys or malformed values.
void apply_overrides(LabConfig& config, const std::map<std::string, std::string>& values);

std::map<std::string, std::string> parse_config_text(const std::string& text);
std::map<std::string, std::string> read_config_file(const std::string& path);

/// Throws std::invalid_argument unless grid is a power of two >= 4,
/// every p is in (0, 1], every epsilon is positive and degrees are
/// nonnegative. Degrees above grid/4 are left for the experiments to
/// report row by row.
void validate(const LabConfig& config);

/// Sorted key=value lines describing the configuration.
std::string canonical(const LabConfig& config);

/// 64-bit FNV-1a of the canonical form, as 16 hex digits.
std::string config_hash(const LabConfig& config);

std::vector<int> parse_int_list(const std::string& text);
std::vector<double> parse_double_list(const std::string& text);
std::vector<std::string> parse_string_list(const std::string& text);

}  // namespace torusfs::lab
