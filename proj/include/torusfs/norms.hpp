#pragma once

#include <functional>
#include <string>

#include "torusfs/grid.hpp"

namespace torusfs {

/// Convex generator Q of an Orlicz space. The evaluator is applied to |u|,
/// so Q is even by construction.
class YoungFunction {
 public:
  YoungFunction(std::string label, std::function<double(double)> q);

  double operator()(double u) const { return q_(std::abs(u)); }
  const std::string& label() const { return label_; }

  /// c * Q, still a Young function for c > 0.
  YoungFunction scaled(double c) const;

 private:
  std::string label_;
  std::function<double(double)> q_;
};

/// log+ u = log u for u > 1, else 0.
double log_plus(double u);

/// Q(u) = u log+ u, the generator of L log L.
YoungFunction u_log_plus_u();

/// (integral of |f|^p)^{1/p}; a quasinorm for p < 1. Throws DomainError for p <= 0.
double lp_quasinorm(const SampledField& field, double p);

/// Integral of |f| log+ |f|.
double llogl_modular(const SampledField& field);

/// Integral of Q(|f| / k).
double orlicz_modular(const SampledField& field, const YoungFunction& q, double k);

/// inf { k > 0 : integral of Q(|f| / k) <= 1 }, by bracketing and bisection
/// to relative width 1e-10. The returned k satisfies the constraint. A zero
/// field has norm 0. Throws DivergenceError if no k up to 1e18 satisfies it.
double luxemburg_norm(const SampledField& field, const YoungFunction& q);

struct ExceedanceReport {
  double epsilon = 0.0;
  /// Fraction of nodes with |value| > epsilon.
  double node_fraction = 0.0;
  /// node_fraction * 4 pi^2.
  double measure = 0.0;
};

/// Empirical measure of { |f| > epsilon } by node counting. Throws
/// DomainError for epsilon <= 0.
ExceedanceReport exceedance_measure(const SampledField& field, double epsilon);

}  // namespace torusfs
