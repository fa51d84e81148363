#include "torusfs/grid.hpp"

#include <cmath>
#include <sstream>

#include "torusfs/error.hpp"

namespace torusfs {

namespace {

bool finite(cplx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

// Index of the node within 1e-14 of t on an n-point grid, or -1.
int node_index(double t, int n) {
  const double h = 2.0 * kPi / n;
  double s = (t + kPi) / h;
  double r = std::round(s);
  if (std::abs(s - r) > 1e-14 * n) return -1;
  int j = static_cast<int>(r) % n;
  return j < 0 ? j + n : j;
}

// Periodic cardinal function of the even-n trigonometric interpolant,
// (1/n) sin(n u / 2) cot(u / 2).
double cardinal(double u, int n) {
  double s = std::sin(0.5 * u);
  if (std::abs(s) < 1e-15) return 1.0;
  return std::sin(0.5 * n * u) * std::cos(0.5 * u) / (s * n);
}

}  // namespace

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

TorusGrid::TorusGrid(int nx, int ny) : nx_(nx), ny_(ny) {
  if (nx < 4 || ny < 4 || !is_power_of_two(nx) || !is_power_of_two(ny)) {
    std::ostringstream os;
    os << "grid " << nx << "x" << ny << " invalid: both counts must be powers of two >= 4";
    throw SizingError(os.str());
  }
}

double TorusGrid::hx() const { return 2.0 * kPi / nx_; }
double TorusGrid::hy() const { return 2.0 * kPi / ny_; }
double TorusGrid::x(int jx) const { return -kPi + hx() * jx; }
double TorusGrid::y(int jy) const { return -kPi + hy() * jy; }

TorusGrid make_grid(int nx, int ny) { return TorusGrid(nx, ny); }

SampledField::SampledField(TorusGrid grid, std::vector<cplx> values)
    : grid_(grid), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != grid_.size()) {
    std::ostringstream os;
    os << "field has " << values_.size() << " values, grid expects " << grid_.size();
    throw GridMismatchError(os.str());
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!finite(values_[i])) {
      std::ostringstream os;
      os << "non-finite field value at flat index " << i;
      throw SamplingError(os.str());
    }
  }
}

SampledField SampledField::zeros(const TorusGrid& grid) {
  return SampledField(grid, std::vector<cplx>(grid.size()));
}

bool SampledField::is_real() const {
  for (const cplx& v : values_)
    if (v.imag() != 0.0) return false;
  return true;
}

cplx SampledField::interpolate(double x, double y) const {
  const int nx = grid_.nx();
  const int ny = grid_.ny();
  int ix = node_index(x, nx);
  int iy = node_index(y, ny);
  if (ix >= 0 && iy >= 0) return at(ix, iy);

  std::vector<double> wx(nx), wy(ny);
  for (int j = 0; j < nx; ++j) wx[j] = ix >= 0 ? (j == ix ? 1.0 : 0.0) : cardinal(x - grid_.x(j), nx);
  for (int k = 0; k < ny; ++k) wy[k] = iy >= 0 ? (k == iy ? 1.0 : 0.0) : cardinal(y - grid_.y(k), ny);

  cplx acc{};
  for (int k = 0; k < ny; ++k) {
    if (wy[k] == 0.0) continue;
    cplx row{};
    for (int j = 0; j < nx; ++j) row += wx[j] * at(j, k);
    acc += wy[k] * row;
  }
  return acc;
}

namespace {

template <class Op>
SampledField combine(const SampledField& a, const SampledField& b, Op op) {
  if (!(a.grid() == b.grid())) throw GridMismatchError("fields live on different grids");
  std::vector<cplx> out(a.size());
  for (int i = 0; i < a.size(); ++i) out[i] = op(a[i], b[i]);
  return SampledField(a.grid(), std::move(out));
}

}  // namespace

SampledField operator+(const SampledField& a, const SampledField& b) {
  return combine(a, b, [](cplx u, cplx v) { return u + v; });
}

SampledField operator-(const SampledField& a, const SampledField& b) {
  return combine(a, b, [](cplx u, cplx v) { return u - v; });
}

SampledField operator*(const SampledField& a, const SampledField& b) {
  return combine(a, b, [](cplx u, cplx v) { return u * v; });
}

SampledField operator*(cplx c, const SampledField& a) {
  std::vector<cplx> out(a.size());
  for (int i = 0; i < a.size(); ++i) out[i] = c * a[i];
  return SampledField(a.grid(), std::move(out));
}

SampledField sample(const Evaluator& f, const TorusGrid& grid) {
  std::vector<cplx> values(grid.size());
  for (int jy = 0; jy < grid.ny(); ++jy) {
    for (int jx = 0; jx < grid.nx(); ++jx) {
      cplx v = f(grid.x(jx), grid.y(jy));
      if (!finite(v)) {
        std::ostringstream os;
        os.precision(17);
        os << "evaluator is not finite at node (" << jx << ", " << jy << ") = (" << grid.x(jx) << ", "
           << grid.y(jy) << ")";
        throw SamplingError(os.str());
      }
      values[grid.index(jx, jy)] = v;
    }
  }
  return SampledField(grid, std::move(values));
}

cplx quad_integral(const SampledField& field) {
  cplx sum{};
  for (const cplx& v : field.values()) sum += v;
  return field.grid().hx() * field.grid().hy() * sum;
}

double quad_integral(const SampledField& field, const std::function<double(cplx)>& g) {
  double sum = 0.0;
  for (const cplx& v : field.values()) sum += g(v);
  return field.grid().hx() * field.grid().hy() * sum;
}

LineField::LineField(std::vector<cplx> values) : values_(std::move(values)) {
  const int n = static_cast<int>(values_.size());
  if (n < 4 || !is_power_of_two(n)) {
    std::ostringstream os;
    os << "line grid of " << n << " nodes invalid: must be a power of two >= 4";
    throw SizingError(os.str());
  }
  for (int j = 0; j < n; ++j) {
    if (!finite(values_[j])) {
      std::ostringstream os;
      os << "non-finite line value at node " << j;
      throw SamplingError(os.str());
    }
  }
}

double LineField::x(int j) const { return -kPi + 2.0 * kPi * j / n(); }

LineField sample_line(const std::function<cplx(double)>& f, int n) {
  if (n < 4 || !is_power_of_two(n)) {
    std::ostringstream os;
    os << "line grid of " << n << " nodes invalid: must be a power of two >= 4";
    throw SizingError(os.str());
  }
  std::vector<cplx> values(n);
  for (int j = 0; j < n; ++j) {
    double x = -kPi + 2.0 * kPi * j / n;
    values[j] = f(x);
    if (!finite(values[j])) {
      std::ostringstream os;
      os.precision(17);
      os << "evaluator is not finite at node " << j << " (x = " << x << ")";
      throw SamplingError(os.str());
    }
  }
  return LineField(std::move(values));
}

}  // namespace torusfs
