#include "torusfs/means.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "torusfs/error.hpp"

namespace torusfs {

namespace {

bool is_strong(MeanFamily f) { return f != MeanFamily::NorlundLogLinear; }

void check_degrees(int n, int m) {
  if (n < 0 || m < 0) throw DomainError("mean degrees must be nonnegative");
}

struct ResidualAccumulator {
  double sup = 0.0;
  double sumsq = 0.0;

  void add(double diff) {
    diff = std::abs(diff);
    sup = std::max(sup, diff);
    sumsq += diff * diff;
  }
  ResidualReport report(double cell_area) const { return {sup, std::sqrt(cell_area * sumsq)}; }
};

ResidualReport compare(const SampledField& a, const SampledField& b) {
  ResidualAccumulator acc;
  for (int p = 0; p < a.size(); ++p) acc.add(std::abs(a[p] - b[p]));
  return acc.report(a.grid().hx() * a.grid().hy());
}

ResidualReport compare(const LineField& a, const LineField& b) {
  ResidualAccumulator acc;
  for (int p = 0; p < a.n(); ++p) acc.add(std::abs(a[p] - b[p]));
  return acc.report(2.0 * kPi / a.n());
}

}  // namespace

LogWeights harmonic_sum(int n) {
  if (n < 0) throw DomainError("harmonic_sum needs n >= 0");
  double sum = 0.0;
  double comp = 0.0;
  for (int k = 1; k <= n + 1; ++k) {
    const double term = 1.0 / k;
    const double t = sum + term;
    comp += std::abs(sum) >= term ? (sum - t) + term : (term - t) + sum;
    sum = t;
  }
  return {n, sum + comp};
}

const char* family_name(MeanFamily family) {
  switch (family) {
    case MeanFamily::NorlundLogLinear:
      return "norlund_log_linear";
    case MeanFamily::NorlundLogStrong:
      return "norlund_log_strong";
    case MeanFamily::RieszLogStrong:
      return "riesz_log_strong";
    case MeanFamily::FejerStrong:
      return "fejer_strong";
  }
  return "?";
}

std::vector<double> axis_weights(MeanFamily family, int n) {
  std::vector<double> w(n + 1);
  const double l = harmonic_sum(n).l;
  for (int i = 0; i <= n; ++i) {
    switch (family) {
      case MeanFamily::NorlundLogLinear:
      case MeanFamily::NorlundLogStrong:
        w[i] = 1.0 / ((n - i + 1) * l);
        break;
      case MeanFamily::RieszLogStrong:
        w[i] = 1.0 / ((i + 1) * l);
        break;
      case MeanFamily::FejerStrong:
        w[i] = 1.0 / (n + 1);
        break;
    }
  }
  return w;
}

SampledField summability_mean(const SpectralField& spec, int n, int m, const MeanKind& kind) {
  check_degrees(n, m);
  const TorusGrid& g = spec.grid();
  if (kind.center && !(kind.center->grid() == g)) {
    std::ostringstream os;
    os << "center grid " << kind.center->grid().nx() << "x" << kind.center->grid().ny()
       << " does not match operand grid " << g.nx() << "x" << g.ny();
    throw GridMismatchError(os.str());
  }
  const std::vector<double> wx = axis_weights(kind.family, n);
  const std::vector<double> wy = axis_weights(kind.family, m);
  const bool strong = is_strong(kind.family);
  const int cols = m + 1;

  std::vector<cplx> out(g.size());
  for_each_partial_sum_table(spec, n, m, kind.flag, [&](int node, std::span<const cplx> table) {
    const cplx c = kind.center ? (*kind.center)[node] : cplx{};
    if (strong) {
      double acc = 0.0;
      for (int i = 0; i <= n; ++i) {
        double row = 0.0;
        for (int j = 0; j <= m; ++j) row += wy[j] * std::abs(table[i * cols + j] - c);
        acc += wx[i] * row;
      }
      out[node] = acc;
    } else {
      cplx acc{};
      for (int i = 0; i <= n; ++i) {
        cplx row{};
        for (int j = 0; j <= m; ++j) row += wy[j] * (table[i * cols + j] - c);
        acc += wx[i] * row;
      }
      out[node] = acc;
    }
  });
  return SampledField(g, std::move(out));
}

SampledField norlund_log_mean(const SpectralField& spec, int n, int m) {
  return summability_mean(spec, n, m, MeanKind{MeanFamily::NorlundLogLinear});
}

SampledField strong_mean(const SpectralField& spec, int n, int m, const MeanKind& kind) {
  if (!is_strong(kind.family)) throw DomainError("strong_mean needs a strong family; use norlund_log_mean");
  return summability_mean(spec, n, m, kind);
}

LineField strong_mean_1d(const LineSpectrum& spec, int n, const LineMeanKind& kind) {
  if (n < 0) throw DomainError("mean degree must be nonnegative");
  if (!is_strong(kind.family)) throw DomainError("strong_mean_1d needs a strong family");
  if (n > spec.cutoff()) {
    std::ostringstream os;
    os << "degree " << n << " exceeds cutoff " << spec.cutoff();
    throw TruncationError(os.str());
  }
  const int size = spec.grid_size();
  if (kind.center && kind.center->n() != size) throw GridMismatchError("center line size does not match operand");

  const std::vector<double> w = axis_weights(kind.family, n);
  std::vector<LineField> sums;
  sums.reserve(n + 1);
  for (int i = 0; i <= n; ++i) sums.push_back(synthesize_line(spec, AxisOperator{i, kind.conjugate}));

  std::vector<cplx> out(size);
  for (int p = 0; p < size; ++p) {
    const cplx c = kind.center ? (*kind.center)[p] : cplx{};
    double acc = 0.0;
    for (int i = 0; i <= n; ++i) acc += w[i] * std::abs(sums[i][p] - c);
    out[p] = acc;
  }
  return LineField(std::move(out));
}

ResidualReport hardy_identity_residual(const SpectralField& spec, int n, int m, ConjugacyFlag flag) {
  if (n < 1 || m < 1) throw DomainError("Hardy identity check needs n, m >= 1");
  const TorusGrid& g = spec.grid();
  const int cols = m + 1;
  std::vector<double> sigma((n + 1) * cols);
  std::vector<double> prefix((n + 1) * cols);
  ResidualAccumulator acc;

  for_each_partial_sum_table(spec, n, m, flag, [&](int, std::span<const cplx> table) {
    // left side: l_n l_m R_{n,m}, straight from the definition
    double lhs = 0.0;
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= m; ++j) lhs += std::abs(table[i * cols + j]) / ((i + 1.0) * (j + 1.0));

    // strong Fejér means sigma_{i,j} from rectangle sums of |S|
    for (int i = 0; i <= n; ++i) {
      double row = 0.0;
      for (int j = 0; j <= m; ++j) {
        row += std::abs(table[i * cols + j]);
        prefix[i * cols + j] = row + (i > 0 ? prefix[(i - 1) * cols + j] : 0.0);
        sigma[i * cols + j] = prefix[i * cols + j] / ((i + 1.0) * (j + 1.0));
      }
    }

    double rhs = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j) rhs += sigma[i * cols + j] / ((i + 2.0) * (j + 2.0));
    for (int j = 0; j < m; ++j) rhs += sigma[n * cols + j] / (j + 2.0);
    for (int i = 0; i < n; ++i) rhs += sigma[i * cols + m] / (i + 2.0);
    rhs += sigma[n * cols + m];

    acc.add(lhs - rhs);
  });
  return acc.report(g.hx() * g.hy());
}

std::vector<HardyResidual> hardy_identity_residuals(const SpectralField& spec, int n_max, int m_max,
                                                    ConjugacyFlag flag) {
  if (n_max < 1 || m_max < 1) throw DomainError("Hardy identity check needs n, m >= 1");
  const TorusGrid& g = spec.grid();
  const int cols = m_max + 1;
  const std::size_t cells = static_cast<std::size_t>(n_max + 1) * cols;

  std::vector<double> box(cells);     // sum_{p<=i, q<=j} |S_{p,q}|
  std::vector<double> lhs(cells);     // sum_{p<=i, q<=j} |S_{p,q}| / ((p+1)(q+1))
  std::vector<double> sigma(cells);   // box / ((i+1)(j+1))
  std::vector<double> inner(cells);   // sum_{p<=i, q<=j} sigma_{p,q} / ((p+2)(q+2))
  std::vector<double> along_j(cells); // sum_{q<=j} sigma_{i,q} / (q+2)
  std::vector<double> along_i(cells); // sum_{p<=i} sigma_{p,j} / (p+2)
  std::vector<ResidualAccumulator> acc(cells);

  for_each_partial_sum_table(spec, n_max, m_max, flag, [&](int, std::span<const cplx> table) {
    for (int i = 0; i <= n_max; ++i) {
      double row_abs = 0.0;
      double row_w = 0.0;
      double row_inner = 0.0;
      for (int j = 0; j <= m_max; ++j) {
        const std::size_t c = static_cast<std::size_t>(i) * cols + j;
        const std::size_t up = c - cols;
        const double a = std::abs(table[c]);
        row_abs += a;
        row_w += a / ((i + 1.0) * (j + 1.0));
        box[c] = row_abs + (i > 0 ? box[up] : 0.0);
        lhs[c] = row_w + (i > 0 ? lhs[up] : 0.0);
        sigma[c] = box[c] / ((i + 1.0) * (j + 1.0));
        row_inner += sigma[c] / ((i + 2.0) * (j + 2.0));
        inner[c] = row_inner + (i > 0 ? inner[up] : 0.0);
        along_j[c] = sigma[c] / (j + 2.0) + (j > 0 ? along_j[c - 1] : 0.0);
        along_i[c] = sigma[c] / (i + 2.0) + (i > 0 ? along_i[up] : 0.0);
      }
    }
    for (int n = 1; n <= n_max; ++n) {
      for (int m = 1; m <= m_max; ++m) {
        const std::size_t c = static_cast<std::size_t>(n) * cols + m;
        const double rhs = inner[c - cols - 1] + along_j[c - 1] + along_i[c - cols] + sigma[c];
        acc[c].add(lhs[c] - rhs);
      }
    }
  });

  std::vector<HardyResidual> out;
  out.reserve(static_cast<std::size_t>(n_max) * m_max);
  for (int n = 1; n <= n_max; ++n)
    for (int m = 1; m <= m_max; ++m)
      out.push_back({n, m, acc[static_cast<std::size_t>(n) * cols + m].report(g.hx() * g.hy())});
  return out;
}

namespace {

LineField line_product(const LineField& f, const LineField& g) {
  std::vector<cplx> v(f.n());
  for (int p = 0; p < f.n(); ++p) v[p] = f[p] * g[p];
  return LineField(std::move(v));
}

}  // namespace

ResidualReport decomposition_residual_1d(const LineSpectrum& spec, int n, int k) {
  if (k < 0 || k > n) {
    std::ostringstream os;
    os << "index k = " << k << " outside [0, " << n << "]";
    throw DomainError(os.str());
  }
  const int cutoff = spec.cutoff();
  const int deg = spec.degree();
  if (deg + n + 1 > cutoff) {
    std::ostringstream os;
    os << "cutoff " << cutoff << " cannot hold products of degree " << deg << " + " << n + 1;
    throw TruncationError(os.str());
  }
  const int size = spec.grid_size();
  const LineField f = synthesize_line(spec, AxisOperator{cutoff});
  const LineField alpha = sample_line([n](double x) { return cplx(std::sin((n + 1.0) * x)); }, size);
  const LineField beta = sample_line([n](double x) { return cplx(std::cos((n + 1.0) * x)); }, size);

  const LineSpectrum f_alpha = line_coefficients(line_product(f, alpha), cutoff);
  const LineSpectrum f_beta = line_coefficients(line_product(f, beta), cutoff);

  const LineField lhs = synthesize_line(spec, AxisOperator{n - k});
  const LineField conj_beta = synthesize_line(f_beta, AxisOperator{k, true});
  const LineField conj_alpha = synthesize_line(f_alpha, AxisOperator{k, true});
  const LineField plain_beta = synthesize_line(f_beta, AxisOperator{k});
  const LineField plain_alpha = synthesize_line(f_alpha, AxisOperator{k});
  const LineField modified = synthesize_line(spec, AxisOperator{n + 1, false, true});

  std::vector<cplx> rhs(size);
  for (int p = 0; p < size; ++p) {
    rhs[p] = -alpha[p] * conj_beta[p] + beta[p] * conj_alpha[p] - beta[p] * plain_beta[p] -
             alpha[p] * plain_alpha[p] + modified[p];
  }
  return compare(lhs, LineField(std::move(rhs)));
}

Decomposition2dReport decomposition_residual_2d(const SpectralField& spec, int n, int m, int i, int j) {
  if (i < 0 || i > n || j < 0 || j > m) {
    std::ostringstream os;
    os << "indices (" << i << ", " << j << ") outside [0, " << n << "] x [0, " << m << "]";
    throw DomainError(os.str());
  }
  const int mx = spec.mx();
  const int my = spec.my();
  const int dx = spec.degree_x();
  const int dy = spec.degree_y();
  if (dx + n + 1 > mx || dy + m + 1 > my) {
    std::ostringstream os;
    os << "cutoff (" << mx << ", " << my << ") cannot hold products of degree (" << dx << " + " << n + 1 << ", "
       << dy << " + " << m + 1 << ")";
    throw TruncationError(os.str());
  }
  const TorusGrid& g = spec.grid();
  const SampledField f = synthesize(spec, AxisOperator{mx}, AxisOperator{my});
  const SampledField alpha_x = sample([n](double x, double) { return cplx(std::sin((n + 1.0) * x)); }, g);
  const SampledField beta_x = sample([n](double x, double) { return cplx(std::cos((n + 1.0) * x)); }, g);
  const SampledField alpha_y = sample([m](double, double y) { return cplx(std::sin((m + 1.0) * y)); }, g);
  const SampledField beta_y = sample([m](double, double y) { return cplx(std::cos((m + 1.0) * y)); }, g);
  auto analyse = [mx, my](const SampledField& field) { return coefficients(field, mx, my); };

  Decomposition2dReport report;
  const SampledField lhs = partial_sum(spec, n - i, m - j);

  // (a) tensor factorization through two one-axis passes
  const SampledField y_pass = partial_sum(spec, mx, m - j);
  const SpectralField y_spec = analyse(y_pass);
  report.factorization = compare(lhs, partial_sum(y_spec, n - i, my));

  // (b) the one-variable decomposition in x applied to g = S_{m-j}(f; y)
  const SpectralField g_alpha = analyse(y_pass * alpha_x);
  const SpectralField g_beta = analyse(y_pass * beta_x);
  const SampledField i1 = -1.0 * (alpha_x * synthesize(g_beta, AxisOperator{i, true}, AxisOperator{my}));
  const SampledField i2 = beta_x * synthesize(g_alpha, AxisOperator{i, true}, AxisOperator{my});
  const SampledField i3 = -1.0 * (beta_x * synthesize(g_beta, AxisOperator{i}, AxisOperator{my}));
  const SampledField i4 = -1.0 * (alpha_x * synthesize(g_alpha, AxisOperator{i}, AxisOperator{my}));
  const SampledField tail = synthesize(y_spec, AxisOperator{n + 1, false, true}, AxisOperator{my});
  report.expansion = compare(lhs, i1 + i2 + i3 + i4 + tail);

  // (c) I_1 = -alpha_n(x) S_{m-j}(S~_i(f beta_n; x); y) and its five terms
  const SampledField h = f * beta_x;
  const SpectralField h_spec = analyse(h);
  const SampledField i1_direct =
      -1.0 * (alpha_x * synthesize(h_spec, AxisOperator{i, true}, AxisOperator{m - j}));
  const SpectralField h_beta = analyse(h * beta_y);
  const SpectralField h_alpha = analyse(h * alpha_y);
  const ConjugacyFlag both{1, 1};
  const ConjugacyFlag first{1, 0};
  const SampledField t1 = alpha_x * alpha_y * conjugate_partial_sum(h_beta, i, j, both);
  const SampledField t2 = -1.0 * (alpha_x * beta_y * conjugate_partial_sum(h_alpha, i, j, both));
  const SampledField t3 = alpha_x * beta_y * conjugate_partial_sum(h_beta, i, j, first);
  const SampledField t4 = alpha_x * alpha_y * conjugate_partial_sum(h_alpha, i, j, first);
  const SampledField t5 = -1.0 * (alpha_x * modified_partial_sum(h_spec, i, m + 1, false, true, first));
  report.i1_expansion = compare(i1_direct, t1 + t2 + t3 + t4 + t5);
  return report;
}

}  // namespace torusfs
