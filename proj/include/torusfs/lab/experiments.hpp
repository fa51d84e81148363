#pragma once

#include <string>
#include <vector>

#include "torusfs/lab/config.hpp"
#include "torusfs/lab/report.hpp"

namespace torusfs::lab {

/// Residual ceiling for every identity row.
inline constexpr double kIdentityTolerance = 1e-9;
/// Ceiling on max(|t_{n,m} - f| - strong error mean) in a convergence sweep.
inline constexpr double kDominationTolerance = 1e-12;

/// Hardy identity for all (n, m) up to the largest admissible schedule
/// degree and all four flags, the one-variable decomposition of the x-profile
/// f(x, 0) for all k <= n up to that degree, and the two-variable
/// factorization / expansion / I_1 checks at n = m = d for every admissible
/// schedule degree d and all (i, j). Degrees above grid/4 and cutoff
/// shortfalls become error rows.
///
/// Row keys: hardy_residual[ab=XY] (n, m); decomp_1d_residual (n, m = k);
/// factorization_residual[i=I;j=J], expansion_residual[i=I;j=J] and
/// i1_expansion_residual[i=I;j=J] (n, m). Values are sup-norm residuals.
SweepReport run_identity_suite(const LabConfig& config);

/// Strong Nörlund mean tau_{n,n}(f) for each schedule degree: its L_p
/// quasinorm, the ratio to llogl_modular(f) + 1, and the running max ratio.
SweepReport run_bound_sweep(const LabConfig& config);

/// Strong Nörlund error mean and |t_{n,n}(f) - f| for each schedule degree:
/// L_p quasinorms, exceedance measures, and the pointwise domination gap
/// max(|t - f| - strong error mean).
SweepReport run_convergence_sweep(const LabConfig& config);

/// Samples of the three kernels at each configured order over a symmetric
/// u-scan of [-pi, pi] with an odd point count, so u = 0 is included.
/// The conjugate kernel skips order 0.
std::vector<KernelSample> dump_kernels(const LabConfig& config);

struct CheckResult {
  bool passed = true;
  std::vector<std::string> failures;
};

/// Every row ok and at most kIdentityTolerance.
CheckResult check_identities(const SweepReport& report);

/// Per function and p: max ratio / min ratio <= 10 and last ratio <= 2 x median.
CheckResult check_bound_sweep(const SweepReport& report);

/// Every domination_gap row at most kDominationTolerance and no error rows.
CheckResult check_convergence(const SweepReport& report);

}  // namespace torusfs::lab
