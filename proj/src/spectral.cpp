#include "torusfs/spectral.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "fft.hpp"
#include "torusfs/error.hpp"
#include "torusfs/kernels.hpp"

namespace torusfs {

using detail::FftDirection;

namespace {

constexpr std::array<ConjugacyFlag, 4> make_flags() {
  std::array<ConjugacyFlag, 4> f{};
  f[1].a = 1;
  f[2].b = 1;
  f[3].a = 1;
  f[3].b = 1;
  return f;
}
constexpr std::array<ConjugacyFlag, 4> kFlags = make_flags();

int wrap(int j, int n) {
  int r = j % n;
  return r < 0 ? r + n : r;
}

double parity(int j) { return (j % 2 == 0) ? 1.0 : -1.0; }

// e^{2 pi i t / n} for t = 0..n-1.
std::vector<cplx> roots_of_unity(int n) {
  std::vector<cplx> w(n);
  for (int t = 0; t < n; ++t) w[t] = std::polar(1.0, 2.0 * kPi * t / n);
  return w;
}

void check_axis(const AxisOperator& op, int cutoff, const char* axis) {
  if (op.degree < 0 || op.degree > cutoff) {
    std::ostringstream os;
    os << axis << "-degree " << op.degree << " outside the retained range [0, " << cutoff << "]";
    throw TruncationError(os.str());
  }
  if (op.modified && op.degree == 0) {
    std::ostringstream os;
    os << "modified " << axis << "-axis needs degree >= 1";
    throw DomainError(os.str());
  }
}

int max_degree(const std::vector<double>& per_mode, int cutoff, double rel_tol) {
  double peak = *std::max_element(per_mode.begin(), per_mode.end());
  if (peak == 0.0) return 0;
  for (int d = cutoff; d > 0; --d) {
    if (per_mode[cutoff + d] > rel_tol * peak || per_mode[cutoff - d] > rel_tol * peak) return d;
  }
  return 0;
}

// Kernel realizing an AxisOperator as a convolution, (1/pi) int f(t) K(x - t) dt.
double axis_kernel(const AxisOperator& op, double u) {
  const int n = op.degree;
  if (!op.conjugate) return op.modified ? modified_dirichlet(n, u) : dirichlet(n, u);
  auto conj = [u](int m) { return m == 0 ? 0.0 : conjugate_dirichlet(m, u); };
  return op.modified ? 0.5 * (conj(n - 1) + conj(n)) : conj(n);
}

}  // namespace

ConjugacyFlag::ConjugacyFlag(int a_, int b_) : a(a_), b(b_) {
  if ((a != 0 && a != 1) || (b != 0 && b != 1)) {
    std::ostringstream os;
    os << "conjugacy flag (" << a << ", " << b << ") must have entries in {0, 1}";
    throw DomainError(os.str());
  }
}

std::span<const ConjugacyFlag> all_conjugacy_flags() { return kFlags; }

cplx AxisOperator::apply(int j, cplx c) const {
  const int aj = std::abs(j);
  if (aj > degree) return 0.0;
  if (modified && aj == degree) c *= 0.5;
  if (conjugate) {
    if (j == 0) return 0.0;
    // (-i) c = (im, -re); (+i) c = (-im, re)
    c = j > 0 ? cplx(c.imag(), -c.real()) : cplx(-c.imag(), c.real());
  }
  return c;
}

SpectralField::SpectralField(TorusGrid grid, int mx, int my, std::vector<cplx> coeffs, bool real_source)
    : grid_(grid), mx_(mx), my_(my), coeffs_(std::move(coeffs)), real_source_(real_source) {
  if (mx < 0 || my < 0) throw DomainError("spectral cutoffs must be nonnegative");
  if (coeffs_.size() != static_cast<std::size_t>((2 * mx + 1) * (2 * my + 1)))
    throw DomainError("coefficient table size does not match the cutoffs");
  for (const cplx& c : coeffs_)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) throw SamplingError("non-finite Fourier coefficient");
}

int SpectralField::degree_x(double rel_tol) const {
  std::vector<double> per(2 * mx_ + 1, 0.0);
  for (int k = -my_; k <= my_; ++k)
    for (int j = -mx_; j <= mx_; ++j) per[j + mx_] = std::max(per[j + mx_], std::abs((*this)(j, k)));
  return max_degree(per, mx_, rel_tol);
}

int SpectralField::degree_y(double rel_tol) const {
  std::vector<double> per(2 * my_ + 1, 0.0);
  for (int k = -my_; k <= my_; ++k)
    for (int j = -mx_; j <= mx_; ++j) per[k + my_] = std::max(per[k + my_], std::abs((*this)(j, k)));
  return max_degree(per, my_, rel_tol);
}

SpectralField coefficients(const SampledField& field, int mx, int my) {
  const TorusGrid& g = field.grid();
  if (mx < 0 || my < 0 || 2 * mx >= g.nx() || 2 * my >= g.ny()) {
    std::ostringstream os;
    os << "cutoff (" << mx << ", " << my << ") aliases on a " << g.nx() << "x" << g.ny()
       << " grid: need 2*mx < nx and 2*my < ny";
    throw AliasingError(os.str());
  }
  std::vector<cplx> data(field.values().begin(), field.values().end());
  detail::fft2(data, g.ny(), g.nx(), FftDirection::Forward);

  const double scale = 1.0 / g.size();
  const bool real = field.is_real();
  std::vector<cplx> coeffs((2 * mx + 1) * (2 * my + 1));
  for (int k = -my; k <= my; ++k) {
    for (int j = -mx; j <= mx; ++j) {
      // node x_l = -pi + 2 pi l / nx contributes the phase (-1)^j
      cplx c = data[wrap(k, g.ny()) * g.nx() + wrap(j, g.nx())] * (scale * parity(j + k));
      coeffs[(k + my) * (2 * mx + 1) + (j + mx)] = c;
    }
  }
  return SpectralField(g, mx, my, std::move(coeffs), real);
}

cplx direct_coefficient(const SampledField& field, int j, int k) {
  const TorusGrid& g = field.grid();
  cplx sum{};
  for (int jy = 0; jy < g.ny(); ++jy) {
    for (int jx = 0; jx < g.nx(); ++jx) {
      sum += field.at(jx, jy) * std::polar(1.0, -(j * g.x(jx) + k * g.y(jy)));
    }
  }
  return sum / static_cast<double>(g.size());
}

SampledField synthesize(const SpectralField& spec, const AxisOperator& x, const AxisOperator& y) {
  check_axis(x, spec.mx(), "x");
  check_axis(y, spec.my(), "y");
  const TorusGrid& g = spec.grid();
  std::vector<cplx> data(g.size());
  for (int k = -y.degree; k <= y.degree; ++k) {
    for (int j = -x.degree; j <= x.degree; ++j) {
      cplx c = y.apply(k, x.apply(j, spec(j, k)));
      data[wrap(k, g.ny()) * g.nx() + wrap(j, g.nx())] = c * parity(j + k);
    }
  }
  detail::fft2(data, g.ny(), g.nx(), FftDirection::Backward);
  // Every axis weight maps Hermitian tables to Hermitian tables.
  if (spec.real_source())
    for (cplx& v : data) v = cplx(v.real(), 0.0);
  return SampledField(g, std::move(data));
}

SampledField partial_sum(const SpectralField& spec, int n, int m) {
  return synthesize(spec, AxisOperator{n}, AxisOperator{m});
}

SampledField conjugate_partial_sum(const SpectralField& spec, int n, int m, ConjugacyFlag flag) {
  return synthesize(spec, AxisOperator{n, flag.a == 1}, AxisOperator{m, flag.b == 1});
}

SampledField modified_partial_sum(const SpectralField& spec, int n, int m, bool modified_x,
                                  bool modified_y, ConjugacyFlag flag) {
  return synthesize(spec, AxisOperator{n, flag.a == 1, modified_x}, AxisOperator{m, flag.b == 1, modified_y});
}

SampledField oracle_partial_sum(const SampledField& field, int n, int m, ConjugacyFlag flag, bool modified_x,
                                bool modified_y) {
  const TorusGrid& g = field.grid();
  if (n < 0 || m < 0) throw DomainError("oracle degrees must be nonnegative");
  if (g.nx() < 4 * (n + 1) || g.ny() < 4 * (m + 1)) {
    std::ostringstream os;
    os << "grid " << g.nx() << "x" << g.ny() << " too coarse for kernel quadrature at degrees (" << n << ", "
       << m << "): need nx >= 4(n+1) and ny >= 4(m+1)";
    throw ResolutionError(os.str());
  }
  const AxisOperator ox{n, flag.a == 1, modified_x};
  const AxisOperator oy{m, flag.b == 1, modified_y};
  if ((modified_x && n == 0) || (modified_y && m == 0)) throw DomainError("modified axis needs degree >= 1");

  // Kernels depend only on node differences.
  std::vector<double> kx(g.nx()), ky(g.ny());
  for (int d = 0; d < g.nx(); ++d) kx[d] = axis_kernel(ox, g.hx() * d);
  for (int d = 0; d < g.ny(); ++d) ky[d] = axis_kernel(oy, g.hy() * d);

  const double wx = g.hx() / kPi;
  const double wy = g.hy() / kPi;

  std::vector<cplx> pass(g.size());
  for (int t = 0; t < g.ny(); ++t) {
    for (int l = 0; l < g.nx(); ++l) {
      cplx acc{};
      for (int s = 0; s < g.nx(); ++s) acc += field.at(s, t) * kx[wrap(l - s, g.nx())];
      pass[g.index(l, t)] = wx * acc;
    }
  }
  std::vector<cplx> out(g.size());
  for (int q = 0; q < g.ny(); ++q) {
    for (int l = 0; l < g.nx(); ++l) {
      cplx acc{};
      for (int t = 0; t < g.ny(); ++t) acc += pass[g.index(l, t)] * ky[wrap(q - t, g.ny())];
      out[g.index(l, q)] = wy * acc;
    }
  }
  return SampledField(g, std::move(out));
}

void for_each_partial_sum_table(const SpectralField& spec, int n, int m, ConjugacyFlag flag,
                                const PartialSumVisitor& visit) {
  const AxisOperator ox{n, flag.a == 1};
  const AxisOperator oy{m, flag.b == 1};
  check_axis(ox, spec.mx(), "x");
  check_axis(oy, spec.my(), "y");

  const TorusGrid& g = spec.grid();
  const int nx = g.nx();
  const int ny = g.ny();
  const bool real = spec.real_source();
  const std::vector<cplx> wx = roots_of_unity(nx);
  const std::vector<cplx> wy = roots_of_unity(ny);

  const int cols = m + 1;
  const int pmin = real ? 0 : -n;
  // rows[(p - pmin) * cols + j] = sum_{|k| <= j} c~(p, k) e^{i k y}
  std::vector<cplx> rows((n - pmin + 1) * cols);
  std::vector<cplx> ex(n - pmin + 1);
  std::vector<cplx> table((n + 1) * cols);

  for (int q = 0; q < ny; ++q) {
    for (int p = pmin; p <= n; ++p) {
      cplx acc = oy.apply(0, ox.apply(p, spec(p, 0)));
      rows[(p - pmin) * cols] = acc;
      for (int k = 1; k <= m; ++k) {
        const cplx e = wy[wrap(k * q, ny)] * parity(k);
        acc += oy.apply(k, ox.apply(p, spec(p, k))) * e;
        acc += oy.apply(-k, ox.apply(p, spec(p, -k))) * std::conj(e);
        rows[(p - pmin) * cols + k] = acc;
      }
    }
    for (int l = 0; l < nx; ++l) {
      for (int p = pmin; p <= n; ++p) ex[p - pmin] = wx[wrap(p * l, nx)] * parity(p);
      const cplx* r0 = &rows[(0 - pmin) * cols];
      for (int j = 0; j < cols; ++j) table[j] = real ? cplx(r0[j].real(), 0.0) : r0[j];
      for (int i = 1; i <= n; ++i) {
        const cplx* rp = &rows[(i - pmin) * cols];
        const cplx ep = ex[i - pmin];
        cplx* cur = &table[i * cols];
        const cplx* prev = &table[(i - 1) * cols];
        if (real) {
          // conjugate-symmetric pair collapses to twice the real part
          for (int j = 0; j < cols; ++j) {
            const double term = ep.real() * rp[j].real() - ep.imag() * rp[j].imag();
            cur[j] = cplx(prev[j].real() + 2.0 * term, 0.0);
          }
        } else {
          const cplx* rn = &rows[(-i - pmin) * cols];
          const cplx en = ex[-i - pmin];
          for (int j = 0; j < cols; ++j) cur[j] = prev[j] + ep * rp[j] + en * rn[j];
        }
      }
      visit(g.index(l, q), table);
    }
  }
}

LineSpectrum::LineSpectrum(int grid_size, int cutoff, std::vector<cplx> coeffs, bool real_source)
    : grid_size_(grid_size), cutoff_(cutoff), coeffs_(std::move(coeffs)), real_source_(real_source) {
  if (coeffs_.size() != static_cast<std::size_t>(2 * cutoff + 1))
    throw DomainError("line coefficient count does not match the cutoff");
}

int LineSpectrum::degree(double rel_tol) const {
  std::vector<double> per(coeffs_.size());
  for (std::size_t i = 0; i < per.size(); ++i) per[i] = std::abs(coeffs_[i]);
  return max_degree(per, cutoff_, rel_tol);
}

LineSpectrum line_coefficients(const LineField& field, int cutoff) {
  const int n = field.n();
  if (cutoff < 0 || 2 * cutoff >= n) {
    std::ostringstream os;
    os << "cutoff " << cutoff << " aliases on a " << n << "-point line: need 2*cutoff < n";
    throw AliasingError(os.str());
  }
  std::vector<cplx> data(field.values().begin(), field.values().end());
  bool real = std::all_of(data.begin(), data.end(), [](cplx v) { return v.imag() == 0.0; });
  detail::fft1(data, FftDirection::Forward);
  std::vector<cplx> coeffs(2 * cutoff + 1);
  for (int j = -cutoff; j <= cutoff; ++j) coeffs[j + cutoff] = data[wrap(j, n)] * (parity(j) / n);
  return LineSpectrum(n, cutoff, std::move(coeffs), real);
}

LineField synthesize_line(const LineSpectrum& spec, const AxisOperator& op) {
  check_axis(op, spec.cutoff(), "x");
  const int n = spec.grid_size();
  std::vector<cplx> data(n);
  for (int j = -op.degree; j <= op.degree; ++j) data[wrap(j, n)] = op.apply(j, spec[j]) * parity(j);
  detail::fft1(data, FftDirection::Backward);
  if (spec.real_source())
    for (cplx& v : data) v = cplx(v.real(), 0.0);
  return LineField(std::move(data));
}

}  // namespace torusfs
