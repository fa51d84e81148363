#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "torusfs/grid.hpp"

namespace torusfs::lab {

enum class FunctionClass { Polynomial, Smooth, Discontinuous, LlogLStress };

const char* class_name(FunctionClass c);

struct TestFunction {
  std::string id;
  Evaluator evaluator;
  FunctionClass class_tag;
  /// Trigonometric degree in x and y for polynomials, -1 otherwise.
  int degree_x = -1;
  int degree_y = -1;
};

/// Real trigonometric polynomial sum c(j,k) e^{i(jx+ky)} with Hermitian
/// coefficients drawn from a seeded generator.
class RandomTrigPolynomial {
 public:
  RandomTrigPolynomial(int degree_x, int degree_y, std::uint64_t seed);

  int degree_x() const { return dx_; }
  int degree_y() const { return dy_; }
  cplx coefficient(int j, int k) const;
  double operator()(double x, double y) const;

 private:
  int dx_;
  int dy_;
  std::vector<cplx> coeffs_;
};

/// Uniform double in [0, 1) from a 64-bit splitmix stream; identical on every
/// platform for a given seed.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  double uniform();

 private:
  std::uint64_t state_;
};

/// Every named function the lab knows about. The random members depend on
/// the seed.
std::vector<TestFunction> registry(std::uint64_t seed);

/// Ids of the sweep corpus: one, cos_x, cos_x_cos_y, poly4, smooth_step,
/// spike10, spike100.
std::vector<std::string> default_sweep_ids();

/// Ids of the ten random polynomials used by the identity suite.
std::vector<std::string> default_identity_ids();

/// Looks up ids in the registry; "all" is not handled here. Throws
/// std::invalid_argument for an unknown id.
std::vector<TestFunction> select(const std::vector<std::string>& ids, std::uint64_t seed);

}  // namespace torusfs::lab
