#pragma once

#include <optional>
#include <vector>

#include "torusfs/grid.hpp"
#include "torusfs/spectral.hpp"

namespace torusfs {

/// l_n = sum_{k=1}^{n+1} 1/k, the normalizer of logarithmic means.
struct LogWeights {
  int n = 0;
  double l = 1.0;
};

/// Compensated (Neumaier) summation of the first n+1 harmonic terms.
LogWeights harmonic_sum(int n);

enum class MeanFamily { NorlundLogLinear, NorlundLogStrong, RieszLogStrong, FejerStrong };

const char* family_name(MeanFamily family);

/// Which mean to take of the conjugate partial sums S^{ab}_{i,j}. With a
/// center c the summands become S^{ab}_{i,j} - c, which gives the error
/// means |S_{i,j} - f| when c = f.
struct MeanKind {
  MeanFamily family = MeanFamily::NorlundLogStrong;
  ConjugacyFlag flag{};
  std::optional<SampledField> center{};
};

/// Weight of the (i, j) summand in an (n, m) mean of the given family.
/// Nörlund: 1/((n-i+1)(m-j+1) l_n l_m), Riesz: 1/((i+1)(j+1) l_n l_m),
/// Fejér: 1/((n+1)(m+1)).
std::vector<double> axis_weights(MeanFamily family, int n);

/// Linear Nörlund logarithmic mean t_{n,m}(f), signed.
SampledField norlund_log_mean(const SpectralField& spec, int n, int m);

/// Weighted sum of (S^{ab}_{i,j} - center) over 0 <= i <= n, 0 <= j <= m.
/// Strong families take absolute values of the summands and return a
/// nonnegative real field; NorlundLogLinear keeps signs.
/// Accumulation order is i ascending outside, j ascending inside.
SampledField summability_mean(const SpectralField& spec, int n, int m, const MeanKind& kind);

/// summability_mean restricted to the three strong families; throws
/// DomainError for NorlundLogLinear.
SampledField strong_mean(const SpectralField& spec, int n, int m, const MeanKind& kind);

/// Single-variable means of S_i or the conjugate sums S~_i.
struct LineMeanKind {
  MeanFamily family = MeanFamily::NorlundLogStrong;
  bool conjugate = false;
  std::optional<LineField> center{};
};

LineField strong_mean_1d(const LineSpectrum& spec, int n, const LineMeanKind& kind);

struct ResidualReport {
  double sup = 0.0;
  double l2 = 0.0;
};

/// Both sides of the summation-by-parts identity
///   l_n l_m R^{ab}_{n,m} = sum_{i<n, j<m} sigma_{i,j} / ((i+2)(j+2))
///                        + sum_{j<m} sigma_{n,j} / (j+2)
///                        + sum_{i<n} sigma_{i,m} / (i+2) + sigma_{n,m}
/// where sigma is the strong Fejér mean of |S^{ab}|. Requires n, m >= 1.
ResidualReport hardy_identity_residual(const SpectralField& spec, int n, int m, ConjugacyFlag flag);

struct HardyResidual {
  int n = 0;
  int m = 0;
  ResidualReport residual;
};

/// The same identity for every 1 <= n <= n_max, 1 <= m <= m_max from a
/// single pass over the partial-sum tables.
std::vector<HardyResidual> hardy_identity_residuals(const SpectralField& spec, int n_max, int m_max,
                                                    ConjugacyFlag flag);

/// Checks, at every node,
///   S_{n-k}(f) = -alpha_n S~_k(f beta_n) + beta_n S~_k(f alpha_n)
///                - beta_n S_k(f beta_n) - alpha_n S_k(f alpha_n) + Sbar_{n+1}(f)
/// with alpha_n = sin((n+1) x), beta_n = cos((n+1) x). The products are
/// sampled on the spectrum's grid and re-analysed at its cutoff, so the
/// cutoff must exceed deg f + n. Throws TruncationError otherwise.
ResidualReport decomposition_residual_1d(const LineSpectrum& spec, int n, int k);

struct Decomposition2dReport {
  /// S_{n-i,m-j} against S_{n-i} applied in x to S_{m-j} applied in y.
  ResidualReport factorization;
  /// S_{n-i,m-j} against I_1 + I_2 + I_3 + I_4 + Sbar_{n+1}(S_{m-j}(f; y); x).
  ResidualReport expansion;
  /// I_1 = -alpha_n(x) S_{m-j}(S~_i(f beta_n; x); y) against its five-term
  /// expansion into S~^{11}, S~^{10} and the conjugate-x / modified-y operator.
  ResidualReport i1_expansion;
};

/// Requires deg_x f + n + 1 <= mx and deg_y f + m + 1 <= my.
Decomposition2dReport decomposition_residual_2d(const SpectralField& spec, int n, int m, int i, int j);

}  // namespace torusfs
