#include "torusfs/kernels.hpp"

#include <cmath>
#include <sstream>

#include "torusfs/error.hpp"
#include "torusfs/grid.hpp"

namespace torusfs {

namespace {

// Below this |sin(u/2)| the closed forms are replaced by their Taylor
// expansions about u = 0.
constexpr double kGuard = 1e-9;

double reduce(double u) { return std::remainder(u, 2.0 * kPi); }

void check_order(int n, int lo, const char* what) {
  if (n < lo || n > kMaxKernelOrder) {
    std::ostringstream os;
    os << what << " order " << n << " outside [" << lo << ", " << kMaxKernelOrder << "]";
    throw DomainError(os.str());
  }
}

}  // namespace

const char* kernel_name(KernelTag tag) {
  switch (tag) {
    case KernelTag::Dirichlet:
      return "Dirichlet";
    case KernelTag::ConjugateDirichlet:
      return "ConjugateDirichlet";
    case KernelTag::ModifiedDirichlet:
      return "ModifiedDirichlet";
  }
  return "?";
}

double dirichlet(int n, double u) {
  check_order(n, 0, "Dirichlet");
  u = reduce(u);
  const double a = n + 0.5;
  const double s = std::sin(0.5 * u);
  if (std::abs(s) < kGuard) return a * (1.0 - (a * a - 0.25) * u * u / 6.0);
  return std::sin(a * u) / (2.0 * s);
}

double conjugate_dirichlet(int m, double u) {
  check_order(m, 1, "conjugate Dirichlet");
  u = reduce(u);
  const double s = std::sin(0.5 * u);
  if (std::abs(s) < kGuard) return 0.5 * m * (m + 1.0) * u;
  // cos(u/2) - cos((m+1/2)u) = 2 sin((m+1)u/2) sin(mu/2)
  return std::sin(0.5 * (m + 1.0) * u) * std::sin(0.5 * m * u) / s;
}

double modified_dirichlet(int n, double u) {
  check_order(n, 0, "modified Dirichlet");
  u = reduce(u);
  const double s = std::sin(0.5 * u);
  if (std::abs(s) < kGuard) return n * (1.0 - (n * n / 6.0 + 1.0 / 12.0) * u * u);
  return std::sin(n * u) * std::cos(0.5 * u) / (2.0 * s);
}

double evaluate(const KernelKind& kind, double u) {
  switch (kind.tag) {
    case KernelTag::Dirichlet:
      return dirichlet(kind.order, u);
    case KernelTag::ConjugateDirichlet:
      return conjugate_dirichlet(kind.order, u);
    case KernelTag::ModifiedDirichlet:
      return modified_dirichlet(kind.order, u);
  }
  return 0.0;
}

}  // namespace torusfs
