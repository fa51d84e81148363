#include "torusfs/lab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "torusfs/error.hpp"
#include "torusfs/kernels.hpp"
#include "torusfs/lab/corpus.hpp"
#include "torusfs/means.hpp"
#include "torusfs/norms.hpp"
#include "torusfs/spectral.hpp"

namespace torusfs::lab {

namespace {

std::vector<TestFunction> functions_for(const LabConfig& config, const std::vector<std::string>& defaults) {
  const bool all = config.funcs.size() == 1 && config.funcs.front() == "all";
  return select(all ? defaults : config.funcs, config.seed);
}

struct Schedule {
  std::vector<int> admissible;
  std::vector<int> rejected;
  int max_degree = -1;
};

Schedule split_schedule(const LabConfig& config) {
  Schedule s;
  for (int d : config.degrees) {
    if (d <= config.grid / 4) {
      s.admissible.push_back(d);
      s.max_degree = std::max(s.max_degree, d);
    } else {
      s.rejected.push_back(d);
    }
  }
  return s;
}

void add_resolution_errors(SweepReport& report, const std::string& id, const Schedule& schedule, int grid) {
  for (int d : schedule.rejected) {
    SweepRow row{id, d, d, 0.0, "resolution", NAN, grid, grid};
    row.status = "error: degree " + std::to_string(d) + " exceeds grid/4 = " + std::to_string(grid / 4);
    report.rows.push_back(row);
  }
}

int next_power_of_two(int n) {
  int p = 4;
  while (p < n) p *= 2;
  return p;
}

std::string flag_tag(ConjugacyFlag f) { return std::to_string(f.a) + std::to_string(f.b); }

std::string ij_tag(int i, int j) { return "[i=" + std::to_string(i) + ";j=" + std::to_string(j) + "]"; }

double sup_abs(const SampledField& f) {
  double s = 0.0;
  for (const cplx& v : f.values()) s = std::max(s, std::abs(v));
  return s;
}

SampledField abs_field(const SampledField& f) {
  std::vector<cplx> v(f.size());
  for (int i = 0; i < f.size(); ++i) v[i] = std::abs(f[i]);
  return SampledField(f.grid(), std::move(v));
}

}  // namespace

SweepReport run_identity_suite(const LabConfig& config) {
  validate(config);
  SweepReport report{"identities", {}};
  const Schedule schedule = split_schedule(config);
  const TorusGrid grid(config.grid, config.grid);
  const int full_cutoff = config.grid / 2 - 1;

  for (const TestFunction& fn : functions_for(config, default_identity_ids())) {
    add_resolution_errors(report, fn.id, schedule, config.grid);
    if (schedule.max_degree < 1) continue;
    const int dmax = schedule.max_degree;
    const SampledField field = sample(fn.evaluator, grid);

    const SpectralField spec = coefficients(field, dmax, dmax);
    for (ConjugacyFlag flag : all_conjugacy_flags()) {
      const std::string metric = "hardy_residual[ab=" + flag_tag(flag) + "]";
      for (const HardyResidual& h : hardy_identity_residuals(spec, dmax, dmax, flag))
        report.rows.push_back({fn.id, h.n, h.m, 0.0, metric, h.residual.sup, config.grid, config.grid});
    }

    const LineField profile = sample_line([&](double x) { return fn.evaluator(x, 0.0); }, config.grid);
    const LineSpectrum line = line_coefficients(profile, full_cutoff);
    for (int n = 0; n <= dmax; ++n) {
      for (int k = 0; k <= n; ++k) {
        SweepRow row{fn.id, n, k, 0.0, "decomp_1d_residual", NAN, config.grid, 1};
        try {
          row.value = decomposition_residual_1d(line, n, k).sup;
        } catch (const Error& e) {
          row.status = std::string("error: ") + e.what();
        }
        report.rows.push_back(row);
      }
    }

    const SpectralField full = coefficients(field, full_cutoff, full_cutoff);
    const int deg = std::max(full.degree_x(), full.degree_y());
    for (int d : schedule.admissible) {
      const int size = std::min(config.grid, std::max(16, next_power_of_two(2 * (deg + d + 1) + 1)));
      const TorusGrid small(size, size);
      const SpectralField local = coefficients(sample(fn.evaluator, small), size / 2 - 1, size / 2 - 1);
      for (int i = 0; i <= d; ++i) {
        for (int j = 0; j <= d; ++j) {
          const std::string tag = ij_tag(i, j);
          SweepRow fac{fn.id, d, d, 0.0, "factorization_residual" + tag, NAN, size, size};
          SweepRow exp{fn.id, d, d, 0.0, "expansion_residual" + tag, NAN, size, size};
          SweepRow i1{fn.id, d, d, 0.0, "i1_expansion_residual" + tag, NAN, size, size};
          try {
            const Decomposition2dReport r = decomposition_residual_2d(local, d, d, i, j);
            fac.value = r.factorization.sup;
            exp.value = r.expansion.sup;
            i1.value = r.i1_expansion.sup;
          } catch (const Error& e) {
            fac.status = exp.status = i1.status = std::string("error: ") + e.what();
          }
          report.rows.push_back(fac);
          report.rows.push_back(exp);
          report.rows.push_back(i1);
        }
      }
    }
  }
  return report;
}

SweepReport run_bound_sweep(const LabConfig& config) {
  validate(config);
  SweepReport report{"bound-sweep", {}};
  const Schedule schedule = split_schedule(config);
  const TorusGrid grid(config.grid, config.grid);

  for (const TestFunction& fn : functions_for(config, default_sweep_ids())) {
    add_resolution_errors(report, fn.id, schedule, config.grid);
    const SampledField field = sample(fn.evaluator, grid);
    const double modular = llogl_modular(field);
    report.rows.push_back({fn.id, 0, 0, 0.0, "llogl_modular", modular, config.grid, config.grid});
    if (schedule.max_degree < 0) continue;

    const SpectralField spec = coefficients(field, schedule.max_degree, schedule.max_degree);
    std::map<double, double> running;
    for (int d : schedule.admissible) {
      const SampledField tau = strong_mean(spec, d, d, MeanKind{MeanFamily::NorlundLogStrong});
      for (double p : config.p_values) {
        const double q = lp_quasinorm(tau, p);
        const double ratio = q / (modular + 1.0);
        auto [it, inserted] = running.try_emplace(p, ratio);
        if (!inserted) it->second = std::max(it->second, ratio);
        report.rows.push_back({fn.id, d, d, p, "tau_lp_quasinorm", q, config.grid, config.grid});
        report.rows.push_back({fn.id, d, d, p, "ratio", ratio, config.grid, config.grid});
        report.rows.push_back({fn.id, d, d, p, "running_max_ratio", it->second, config.grid, config.grid});
      }
    }
  }
  return report;
}

SweepReport run_convergence_sweep(const LabConfig& config) {
  validate(config);
  SweepReport report{"converge-sweep", {}};
  const Schedule schedule = split_schedule(config);
  const TorusGrid grid(config.grid, config.grid);

  for (const TestFunction& fn : functions_for(config, default_sweep_ids())) {
    add_resolution_errors(report, fn.id, schedule, config.grid);
    if (schedule.max_degree < 0) continue;
    const SampledField field = sample(fn.evaluator, grid);
    const SpectralField spec = coefficients(field, schedule.max_degree, schedule.max_degree);

    for (int d : schedule.admissible) {
      const SampledField strong = strong_mean(spec, d, d, MeanKind{MeanFamily::NorlundLogStrong, {}, field});
      const SampledField linear =
          abs_field(summability_mean(spec, d, d, MeanKind{MeanFamily::NorlundLogLinear, {}, field}));
      for (double p : config.p_values) {
        report.rows.push_back({fn.id, d, d, p, "strong_error_lp", lp_quasinorm(strong, p), config.grid, config.grid});
        report.rows.push_back({fn.id, d, d, p, "linear_error_lp", lp_quasinorm(linear, p), config.grid, config.grid});
      }
      for (double eps : config.epsilons) {
        report.rows.push_back({fn.id, d, d, eps, "strong_error_exceedance", exceedance_measure(strong, eps).measure,
                               config.grid, config.grid});
        report.rows.push_back({fn.id, d, d, eps, "linear_error_exceedance", exceedance_measure(linear, eps).measure,
                               config.grid, config.grid});
      }
      double gap = -INFINITY;
      for (int i = 0; i < field.size(); ++i) gap = std::max(gap, linear[i].real() - strong[i].real());
      report.rows.push_back({fn.id, d, d, 0.0, "domination_gap", gap, config.grid, config.grid});
      report.rows.push_back({fn.id, d, d, 0.0, "strong_error_sup", sup_abs(strong), config.grid, config.grid});
    }
  }
  return report;
}

std::vector<KernelSample> dump_kernels(const LabConfig& config) {
  validate(config);
  const int half = config.kernel_samples / 2;
  std::vector<KernelSample> out;
  for (KernelTag tag : {KernelTag::Dirichlet, KernelTag::ConjugateDirichlet, KernelTag::ModifiedDirichlet}) {
    for (int order : config.kernel_orders) {
      if (tag == KernelTag::ConjugateDirichlet && order == 0) continue;
      for (int s = -half; s <= half; ++s) {
        const double u = kPi * s / half;
        out.push_back({kernel_name(tag), order, u, evaluate(KernelKind{tag, order}, u)});
      }
    }
  }
  return out;
}

CheckResult check_identities(const SweepReport& report) {
  CheckResult result;
  for (const auto& r : report.rows) {
    if (!r.ok()) {
      result.passed = false;
      result.failures.push_back(r.function_id + " " + r.metric + ": " + r.status);
    } else if (!(r.value <= kIdentityTolerance)) {
      result.passed = false;
      std::ostringstream os;
      os << r.function_id << " " << r.metric << " (n=" << r.n << ", m=" << r.m << ") residual " << r.value;
      result.failures.push_back(os.str());
    }
  }
  return result;
}

CheckResult check_bound_sweep(const SweepReport& report) {
  CheckResult result;
  std::map<std::pair<std::string, double>, std::vector<double>> ratios;
  for (const auto& r : report.rows) {
    if (!r.ok()) {
      result.passed = false;
      result.failures.push_back(r.function_id + " " + r.metric + ": " + r.status);
    }
    if (r.ok() && r.metric == "ratio") ratios[{r.function_id, r.param}].push_back(r.value);
  }
  for (const auto& [key, values] : ratios) {
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    std::vector<double> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t s = sorted.size();
    const double median = s % 2 ? sorted[s / 2] : 0.5 * (sorted[s / 2 - 1] + sorted[s / 2]);
    std::ostringstream os;
    if (!(*hi <= 10.0 * *lo)) {
      os << key.first << " p=" << key.second << ": max/min ratio " << *hi / *lo << " > 10";
      result.failures.push_back(os.str());
      result.passed = false;
    } else if (!(values.back() <= 2.0 * median)) {
      os << key.first << " p=" << key.second << ": last ratio " << values.back() << " > 2 x median " << median;
      result.failures.push_back(os.str());
      result.passed = false;
    }
  }
  return result;
}

CheckResult check_convergence(const SweepReport& report) {
  CheckResult result;
  for (const auto& r : report.rows) {
    if (!r.ok()) {
      result.passed = false;
      result.failures.push_back(r.function_id + " " + r.metric + ": " + r.status);
    } else if (r.metric == "domination_gap" && !(r.value <= kDominationTolerance)) {
      result.passed = false;
      std::ostringstream os;
      os << r.function_id << " n=" << r.n << ": |t - f| exceeds the strong error mean by " << r.value;
      result.failures.push_back(os.str());
    }
  }
  return result;
}

}  // namespace torusfs::lab
