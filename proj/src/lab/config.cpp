#include "torusfs/lab/config.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "torusfs/grid.hpp"

namespace torusfs::lab {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

template <class T>
T parse_number(const std::string& s) {
  T value{};
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end) throw std::invalid_argument("malformed number '" + s + "'");
  return value;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

template <class T, class F>
std::string join(const std::vector<T>& xs, F f) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += f(xs[i]);
  }
  return out;
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& s : split(text)) out.push_back(parse_number<int>(s));
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& s : split(text)) out.push_back(parse_number<double>(s));
  if (out.empty()) throw std::invalid_argument("empty number list");
  return out;
}

std::vector<std::string> parse_string_list(const std::string& text) {
  auto out = split(text);
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

LabConfig identity_defaults() {
  LabConfig c;
  c.grid = 128;
  c.degrees = {1, 2, 4, 8, 16};
  return c;
}

void apply_overrides(LabConfig& config, const std::map<std::string, std::string>& values) {
  for (const auto& [key, value] : values) {
    if (key == "grid")
      config.grid = parse_number<int>(value);
    else if (key == "degrees")
      config.degrees = parse_int_list(value);
    else if (key == "p")
      config.p_values = parse_double_list(value);
    else if (key == "epsilon")
      config.epsilons = parse_double_list(value);
    else if (key == "funcs")
      config.funcs = parse_string_list(value);
    else if (key == "out")
      config.out_dir = value;
    else if (key == "format") {
      if (value == "csv")
        config.format = OutputFormat::Csv;
      else if (value == "csv+plots")
        config.format = OutputFormat::CsvPlots;
      else
        throw std::invalid_argument("format must be csv or csv+plots, got '" + value + "'");
    } else if (key == "seed")
      config.seed = parse_number<std::uint64_t>(value);
    else if (key == "kernel_orders")
      config.kernel_orders = parse_int_list(value);
    else if (key == "kernel_samples")
      config.kernel_samples = parse_number<int>(value);
    else
      throw std::invalid_argument("unknown config key '" + key + "'");
  }
}

std::map<std::string, std::string> parse_config_text(const std::string& text) {
  std::map<std::string, std::string> out;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key=value");
    out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return out;
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

void validate(const LabConfig& c) {
  if (c.grid < 4 || !is_power_of_two(c.grid))
    throw std::invalid_argument("grid " + std::to_string(c.grid) + " must be a power of two >= 4");
  for (int d : c.degrees)
    if (d < 0) throw std::invalid_argument("degrees must be nonnegative");
  for (double p : c.p_values)
    if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("p = " + format_double(p) + " outside (0, 1]");
  for (double e : c.epsilons)
    if (!(e > 0.0)) throw std::invalid_argument("epsilon = " + format_double(e) + " must be positive");
  for (int o : c.kernel_orders)
    if (o < 0) throw std::invalid_argument("kernel orders must be nonnegative");
  if (c.kernel_samples < 2) throw std::invalid_argument("kernel_samples must be at least 2");
}

std::string canonical(const LabConfig& c) {
  std::map<std::string, std::string> kv;
  kv["grid"] = std::to_string(c.grid);
  kv["degrees"] = join(c.degrees, [](int d) { return std::to_string(d); });
  kv["p"] = join(c.p_values, format_double);
  kv["epsilon"] = join(c.epsilons, format_double);
  kv["funcs"] = join(c.funcs, [](const std::string& s) { return s; });
  kv["format"] = c.format == OutputFormat::Csv ? "csv" : "csv+plots";
  kv["seed"] = std::to_string(c.seed);
  kv["kernel_orders"] = join(c.kernel_orders, [](int d) { return std::to_string(d); });
  kv["kernel_samples"] = std::to_string(c.kernel_samples);
  std::string out;
  for (const auto& [k, v] : kv) out += k + "=" + v + "\n";
  return out;
}

std::string config_hash(const LabConfig& c) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : canonical(c)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace torusfs::lab
