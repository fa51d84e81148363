#pragma once

#include <string>
#include <vector>

namespace torusfs::lab {

struct SweepRow {
  std::string function_id;
  int n = 0;
  int m = 0;
  /// p or epsilon, 0 when the metric has no parameter.
  double param = 0.0;
  std::string metric;
  double value = 0.0;
  int grid_nx = 0;
  int grid_ny = 0;
  /// "ok", or a short error description for rows that could not be computed.
  std::string status = "ok";

  bool ok() const { return status == "ok"; }
};

struct SweepReport {
  std::string command;
  std::vector<SweepRow> rows;

  /// Rows matching function_id and metric (and param when given), in insertion order.
  std::vector<SweepRow> series(const std::string& function_id, const std::string& metric) const;
  std::vector<SweepRow> series(const std::string& function_id, const std::string& metric, double param) const;
};

struct KernelSample {
  std::string kernel;
  int order = 0;
  double u = 0.0;
  double value = 0.0;
};

/// 17 significant digits, "%.17g".
std::string format_value(double v);

/// "# torusfs <version> command=<cmd> config_hash=<hash>"
std::string metadata_line(const std::string& command, const std::string& hash);

/// Writes the report as CSV. Throws std::runtime_error naming the path on
/// file-system errors.
void write_csv(const SweepReport& report, const std::string& hash, const std::string& path);
std::string to_csv(const SweepReport& report, const std::string& hash);

void write_kernel_csv(const std::vector<KernelSample>& samples, const std::string& hash, const std::string& path);
std::string to_kernel_csv(const std::vector<KernelSample>& samples, const std::string& hash);

/// One SVG line plot per (function, metric) pair with n on a log axis and
/// one series per parameter value. Returns the files written.
std::vector<std::string> write_plots(const SweepReport& report, const std::string& dir);

}  // namespace torusfs::lab
