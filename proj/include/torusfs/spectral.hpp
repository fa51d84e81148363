#pragma once

#include <functional>
#include <span>
#include <vector>

#include "torusfs/grid.hpp"

namespace torusfs {

/// Selects the variables that carry the (-i sign) conjugation multiplier.
/// a conjugates in x, b in y; both must be 0 or 1.
struct ConjugacyFlag {
  int a = 0;
  int b = 0;

  constexpr ConjugacyFlag() = default;
  ConjugacyFlag(int a_, int b_);

  friend bool operator==(const ConjugacyFlag&, const ConjugacyFlag&) = default;
};

/// All four flags in the order 00, 10, 01, 11.
std::span<const ConjugacyFlag> all_conjugacy_flags();

/// Truncation rule along one axis of frequency space.
///
/// Modes |j| <= degree are kept with weight 1, except that a modified axis
/// keeps |j| == degree with weight 1/2. This is the Fourier form of the
/// modified kernel (D_{n-1} + D_n) / 2. A conjugate axis multiplies by
/// -i sign(j) on top.
struct AxisOperator {
  int degree = 0;
  bool conjugate = false;
  bool modified = false;

  /// Applies the axis weight of mode j to c. Exact: the only operations
  /// are zeroing, halving and multiplication by +-i.
  cplx apply(int j, cplx c) const;
};

/// Fourier coefficients c(j, k), |j| <= mx, |k| <= my, of a field sampled
/// on grid(). j is the x-frequency and k the y-frequency.
class SpectralField {
 public:
  SpectralField(TorusGrid grid, int mx, int my, std::vector<cplx> coeffs, bool real_source);

  const TorusGrid& grid() const { return grid_; }
  int mx() const { return mx_; }
  int my() const { return my_; }
  bool real_source() const { return real_source_; }

  /// Dense (2mx+1) x (2my+1) table; entry (j, k) at (k + my) * (2mx+1) + (j + mx).
  std::span<const cplx> coeffs() const { return coeffs_; }
  const cplx& operator()(int j, int k) const { return coeffs_[(k + my_) * (2 * mx_ + 1) + (j + mx_)]; }

  /// Largest |j| (resp. |k|) whose coefficients exceed rel_tol times the
  /// largest coefficient magnitude; 0 for a field that is identically zero.
  int degree_x(double rel_tol = 1e-12) const;
  int degree_y(double rel_tol = 1e-12) const;

 private:
  TorusGrid grid_;
  int mx_;
  int my_;
  std::vector<cplx> coeffs_;
  bool real_source_;
};

/// Fourier coefficients through a 2-d FFT. Requires 2 mx < nx and
/// 2 my < ny, otherwise throws AliasingError.
SpectralField coefficients(const SampledField& field, int mx, int my);

/// Rectangle-rule quadrature of (1/4pi^2) f e^{-i(jx + ky)}. O(N) per
/// coefficient; used to cross-check the transform.
cplx direct_coefficient(const SampledField& field, int j, int k);

/// Applies x and y axis operators to the coefficients and evaluates the
/// result on spec.grid(). Throws TruncationError when an axis degree
/// exceeds the retained box and DomainError for a modified axis of degree 0.
SampledField synthesize(const SpectralField& spec, const AxisOperator& x, const AxisOperator& y);

/// S_{n,m}: sharp truncation to |j| <= n, |k| <= m.
SampledField partial_sum(const SpectralField& spec, int n, int m);

/// Conjugate partial sums S^{ab}_{n,m}. Flag (0,0) gives partial_sum.
SampledField conjugate_partial_sum(const SpectralField& spec, int n, int m, ConjugacyFlag flag);

/// Partial sums built from the modified kernel on the selected axes,
/// optionally conjugated. Covers Sbar_{n,m} and the mixed operators that
/// pair a conjugate kernel on one axis with a modified kernel on the other.
SampledField modified_partial_sum(const SpectralField& spec, int n, int m, bool modified_x,
                                  bool modified_y, ConjugacyFlag flag);

/// Independent oracle: quadrature of the kernel convolution
///   (1/pi^2) sum_s sum_t f(s,t) K_x(x - s) K_y(y - t) h_x h_y
/// with K chosen per axis among D_n, the conjugate kernel and Dbar_n.
/// The double sum is evaluated one axis at a time. Requires
/// nx >= 4 (n + 1) and ny >= 4 (m + 1), otherwise throws ResolutionError.
SampledField oracle_partial_sum(const SampledField& field, int n, int m, ConjugacyFlag flag,
                                bool modified_x, bool modified_y);

/// Visits every grid node with the table of conjugate partial sums
/// S^{ab}_{i,j}, 0 <= i <= n, 0 <= j <= m, at that node. The table is laid
/// out i-major: entry (i, j) at i * (m + 1) + j. Nodes are visited in
/// row-major order; the table is built incrementally in (i, j) ascending
/// order so results do not depend on the caller.
using PartialSumVisitor = std::function<void(int node, std::span<const cplx> table)>;
void for_each_partial_sum_table(const SpectralField& spec, int n, int m, ConjugacyFlag flag,
                                const PartialSumVisitor& visit);

// Single-variable counterparts.

class LineSpectrum {
 public:
  LineSpectrum(int grid_size, int cutoff, std::vector<cplx> coeffs, bool real_source);

  int grid_size() const { return grid_size_; }
  int cutoff() const { return cutoff_; }
  bool real_source() const { return real_source_; }
  std::span<const cplx> coeffs() const { return coeffs_; }
  const cplx& operator[](int j) const { return coeffs_[j + cutoff_]; }
  int degree(double rel_tol = 1e-12) const;

 private:
  int grid_size_;
  int cutoff_;
  std::vector<cplx> coeffs_;
  bool real_source_;
};

/// Requires 2 cutoff < n.
LineSpectrum line_coefficients(const LineField& field, int cutoff);

LineField synthesize_line(const LineSpectrum& spec, const AxisOperator& op);

}  // namespace torusfs
