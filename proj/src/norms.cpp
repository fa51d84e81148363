#include "torusfs/norms.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "torusfs/error.hpp"

namespace torusfs {

YoungFunction::YoungFunction(std::string label, std::function<double(double)> q)
    : label_(std::move(label)), q_(std::move(q)) {}

YoungFunction YoungFunction::scaled(double c) const {
  if (!(c > 0.0)) throw DomainError("Young function scale must be positive");
  std::ostringstream os;
  os << c << "*" << label_;
  return YoungFunction(os.str(), [q = q_, c](double u) { return c * q(u); });
}

double log_plus(double u) { return u > 1.0 ? std::log(u) : 0.0; }

YoungFunction u_log_plus_u() {
  return YoungFunction("u*log+u", [](double u) { return u * log_plus(u); });
}

double lp_quasinorm(const SampledField& field, double p) {
  if (!(p > 0.0)) {
    std::ostringstream os;
    os << "exponent p = " << p << " must be positive";
    throw DomainError(os.str());
  }
  const double integral = quad_integral(field, [p](cplx v) { return std::pow(std::abs(v), p); });
  return std::pow(integral, 1.0 / p);
}

double llogl_modular(const SampledField& field) {
  return quad_integral(field, [](cplx v) {
    const double a = std::abs(v);
    return a * log_plus(a);
  });
}

double orlicz_modular(const SampledField& field, const YoungFunction& q, double k) {
  return quad_integral(field, [&q, k](cplx v) { return q(std::abs(v) / k); });
}

double luxemburg_norm(const SampledField& field, const YoungFunction& q) {
  double peak = 0.0;
  for (const cplx& v : field.values()) peak = std::max(peak, std::abs(v));
  if (peak == 0.0) return 0.0;

  auto admissible = [&](double k) { return orlicz_modular(field, q, k) <= 1.0; };

  constexpr double kCeiling = 1e18;
  double hi = peak;
  while (!admissible(hi)) {
    hi *= 2.0;
    if (hi > kCeiling) {
      std::ostringstream os;
      os << "Orlicz modular under " << q.label() << " stays above 1 for every scale up to " << kCeiling;
      throw DivergenceError(os.str());
    }
  }
  double lo = hi;
  do {
    lo *= 0.5;
    if (lo < 1e-300) return hi;
  } while (admissible(lo));
  hi = 2.0 * lo;

  // invariant: modular(lo) > 1 >= modular(hi)
  while (hi - lo > 1e-10 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (admissible(mid))
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

ExceedanceReport exceedance_measure(const SampledField& field, double epsilon) {
  if (!(epsilon > 0.0)) {
    std::ostringstream os;
    os << "threshold epsilon = " << epsilon << " must be positive";
    throw DomainError(os.str());
  }
  long count = 0;
  for (const cplx& v : field.values())
    if (std::abs(v) > epsilon) ++count;
  ExceedanceReport r;
  r.epsilon = epsilon;
  r.node_fraction = static_cast<double>(count) / field.size();
  r.measure = r.node_fraction * kTorusArea;
  return r;
}

}  // namespace torusfs
