#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace torusfs {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTorusArea = 4.0 * kPi * kPi;

/// Uniform discretization of [-pi, pi)^2. Node j sits at -pi + 2*pi*j/n.
class TorusGrid {
 public:
  /// Throws SizingError unless both counts are powers of two and >= 4.
  TorusGrid(int nx, int ny);

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  int size() const { return nx_ * ny_; }
  double hx() const;
  double hy() const;
  double x(int jx) const;
  double y(int jy) const;

  /// Row-major, y outer, x inner.
  int index(int jx, int jy) const { return jy * nx_ + jx; }

  friend bool operator==(const TorusGrid&, const TorusGrid&) = default;

 private:
  int nx_;
  int ny_;
};

TorusGrid make_grid(int nx, int ny);

bool is_power_of_two(int n);

/// Complex samples of a function on a TorusGrid. All entries are finite.
class SampledField {
 public:
  SampledField(TorusGrid grid, std::vector<cplx> values);

  static SampledField zeros(const TorusGrid& grid);

  const TorusGrid& grid() const { return grid_; }
  std::span<const cplx> values() const { return values_; }
  const cplx& at(int jx, int jy) const { return values_[grid_.index(jx, jy)]; }
  const cplx& operator[](int i) const { return values_[i]; }
  int size() const { return static_cast<int>(values_.size()); }

  /// True when every imaginary part is exactly zero.
  bool is_real() const;

  /// Trigonometric interpolant evaluated at (x, y). At a grid node the
  /// stored sample is returned unchanged.
  cplx interpolate(double x, double y) const;

  friend SampledField operator+(const SampledField& a, const SampledField& b);
  friend SampledField operator-(const SampledField& a, const SampledField& b);
  friend SampledField operator*(const SampledField& a, const SampledField& b);
  friend SampledField operator*(cplx c, const SampledField& a);

 private:
  TorusGrid grid_;
  std::vector<cplx> values_;
};

using Evaluator = std::function<cplx(double x, double y)>;

/// Evaluates f at every node. Throws SamplingError naming the first node
/// where f is not finite.
SampledField sample(const Evaluator& f, const TorusGrid& grid);

/// Rectangle rule h_x * h_y * sum(values).
cplx quad_integral(const SampledField& field);

/// Same rule applied to an arbitrary per-node real function of the field.
double quad_integral(const SampledField& field, const std::function<double(cplx)>& g);

// One-dimensional counterparts used by the single-variable operators.

/// Samples of a function on the uniform grid of [-pi, pi) with n nodes.
class LineField {
 public:
  explicit LineField(std::vector<cplx> values);

  int n() const { return static_cast<int>(values_.size()); }
  double x(int j) const;
  std::span<const cplx> values() const { return values_; }
  const cplx& operator[](int j) const { return values_[j]; }

 private:
  std::vector<cplx> values_;
};

LineField sample_line(const std::function<cplx(double)>& f, int n);

}  // namespace torusfs
