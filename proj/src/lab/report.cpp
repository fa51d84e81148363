#include "torusfs/lab/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "torusfs/version.hpp"

namespace torusfs::lab {

namespace {

void write_text(const std::string& path, const std::string& text) {
  std::filesystem::path p(path);
  std::error_code ec;
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path(), ec);
  if (ec) throw std::runtime_error("cannot create directory for '" + path + "': " + ec.message());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

std::string sanitize(const std::string& s) {
  std::string out;
  for (char c : s) out += (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-') ? c : '_';
  return out;
}

}  // namespace

std::vector<SweepRow> SweepReport::series(const std::string& function_id, const std::string& metric) const {
  std::vector<SweepRow> out;
  for (const auto& r : rows)
    if (r.function_id == function_id && r.metric == metric) out.push_back(r);
  return out;
}

std::vector<SweepRow> SweepReport::series(const std::string& function_id, const std::string& metric,
                                          double param) const {
  std::vector<SweepRow> out;
  for (const auto& r : rows)
    if (r.function_id == function_id && r.metric == metric && r.param == param) out.push_back(r);
  return out;
}

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string metadata_line(const std::string& command, const std::string& hash) {
  return std::string("# torusfs ") + kVersion + " command=" + command + " config_hash=" + hash;
}

std::string to_csv(const SweepReport& report, const std::string& hash) {
  std::ostringstream os;
  os << metadata_line(report.command, hash) << "\n";
  os << "function_id,n,m,param,metric,value,grid_nx,grid_ny,status\n";
  for (const auto& r : report.rows) {
    std::string status = r.status;
    std::replace(status.begin(), status.end(), ',', ';');
    os << r.function_id << ',' << r.n << ',' << r.m << ',' << format_value(r.param) << ',' << r.metric << ','
       << format_value(r.value) << ',' << r.grid_nx << ',' << r.grid_ny << ',' << status << "\n";
  }
  return os.str();
}

void write_csv(const SweepReport& report, const std::string& hash, const std::string& path) {
  write_text(path, to_csv(report, hash));
}

std::string to_kernel_csv(const std::vector<KernelSample>& samples, const std::string& hash) {
  std::ostringstream os;
  os << metadata_line("kernels-dump", hash) << "\n";
  os << "kernel,order,u,value\n";
  for (const auto& s : samples)
    os << s.kernel << ',' << s.order << ',' << format_value(s.u) << ',' << format_value(s.value) << "\n";
  return os.str();
}

void write_kernel_csv(const std::vector<KernelSample>& samples, const std::string& hash, const std::string& path) {
  write_text(path, to_kernel_csv(samples, hash));
}

std::vector<std::string> write_plots(const SweepReport& report, const std::string& dir) {
  // (function, metric) -> param -> points
  std::map<std::pair<std::string, std::string>, std::map<double, std::vector<std::pair<double, double>>>> groups;
  for (const auto& r : report.rows) {
    if (!r.ok() || r.n < 1 || !std::isfinite(r.value)) continue;
    groups[{r.function_id, r.metric}][r.param].emplace_back(r.n, r.value);
  }

  static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"};
  constexpr double W = 640, H = 400, L = 70, R = 20, T = 40, B = 50;

  std::vector<std::string> written;
  for (const auto& [key, by_param] : groups) {
    double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
    std::size_t longest = 0;
    for (const auto& [p, pts] : by_param) {
      longest = std::max(longest, pts.size());
      for (auto [x, y] : pts) {
        xmin = std::min(xmin, std::log2(x));
        xmax = std::max(xmax, std::log2(x));
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
      }
    }
    if (longest < 2) continue;
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) {
      ymax += 0.5 * std::max(1.0, std::abs(ymax));
      ymin -= 0.5 * std::max(1.0, std::abs(ymin));
    }
    auto sx = [&](double n) { return L + (std::log2(n) - xmin) / (xmax - xmin) * (W - L - R); };
    auto sy = [&](double v) { return H - B - (v - ymin) / (ymax - ymin) * (H - T - B); };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">"
        << key.first << ": " << key.second << "</text>\n";
    svg << "<line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << W - R << "\" y2=\"" << H - B
        << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << L << "\" y1=\"" << T << "\" x2=\"" << L << "\" y2=\"" << H - B << "\" stroke=\"black\"/>\n";
    for (int e = static_cast<int>(std::ceil(xmin)); e <= static_cast<int>(std::floor(xmax)); ++e) {
      const double n = std::exp2(e);
      svg << "<text x=\"" << sx(n) << "\" y=\"" << H - B + 18 << "\" text-anchor=\"middle\" font-family=\"sans-serif\""
          << " font-size=\"11\">" << static_cast<long>(n) << "</text>\n";
    }
    for (double v : {ymin, 0.5 * (ymin + ymax), ymax}) {
      svg << "<text x=\"" << L - 6 << "\" y=\"" << sy(v) + 4 << "\" text-anchor=\"end\" font-family=\"sans-serif\""
          << " font-size=\"11\">" << format_value(v).substr(0, 10) << "</text>\n";
    }
    svg << "<text x=\"" << W / 2 << "\" y=\"" << H - 10
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">n = m (log scale)</text>\n";
    std::size_t color = 0;
    for (const auto& [p, pts] : by_param) {
      const char* c = kColors[color++ % std::size(kColors)];
      svg << "<polyline fill=\"none\" stroke=\"" << c << "\" stroke-width=\"2\" points=\"";
      for (auto [x, y] : pts) svg << sx(x) << "," << sy(y) << " ";
      svg << "\"/>\n";
      for (auto [x, y] : pts) svg << "<circle cx=\"" << sx(x) << "\" cy=\"" << sy(y) << "\" r=\"3\" fill=\"" << c << "\"/>\n";
      svg << "<text x=\"" << W - R - 4 << "\" y=\"" << T + 14 * color << "\" text-anchor=\"end\" fill=\"" << c
          << "\" font-family=\"sans-serif\" font-size=\"11\">param " << format_value(p) << "</text>\n";
    }
    svg << "</svg>\n";

    const std::string path =
        (std::filesystem::path(dir) / (sanitize(key.first) + "__" + sanitize(key.second) + ".svg")).string();
    write_text(path, svg.str());
    written.push_back(path);
  }
  return written;
}

}  // namespace torusfs::lab
