#pragma once

namespace torusfs {

enum class KernelTag { Dirichlet, ConjugateDirichlet, ModifiedDirichlet };

/// Largest kernel order accepted by the closed-form evaluators.
inline constexpr int kMaxKernelOrder = 1 << 20;

/// A kernel family together with its order.
struct KernelKind {
  KernelTag tag;
  int order;
};

const char* kernel_name(KernelTag tag);

/// D_n(u) = sin((n + 1/2) u) / (2 sin(u / 2)), equal to n + 1/2 at u = 0 mod 2pi.
double dirichlet(int n, double u);

/// Conjugate Dirichlet kernel sum_{j=1}^{m} sin(j u)
///   = 1 / (2 tan(u/2)) - cos((m + 1/2) u) / (2 sin(u/2)),
/// zero at u = 0 mod 2pi. Defined for m >= 1; m = 0 throws DomainError.
double conjugate_dirichlet(int m, double u);

/// Dbar_n(u) = sin(n u) / (2 tan(u / 2)) = (D_{n-1}(u) + D_n(u)) / 2, equal to n at u = 0.
double modified_dirichlet(int n, double u);

/// Dispatches on kind.tag.
double evaluate(const KernelKind& kind, double u);

}  // namespace torusfs
