#include "torusfs/spectral.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "torusfs/error.hpp"
#include "torusfs/kernels.hpp"
#include "torusfs/lab/corpus.hpp"

namespace torusfs {
namespace {

double sup_diff(const SampledField& a, const SampledField& b) {
  double worst = 0.0;
  for (int i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

double sup_diff(const SampledField& a, const Evaluator& f) {
  return sup_diff(a, sample(f, a.grid()));
}

SampledField sampled(const Evaluator& f, int n) { return sample(f, make_grid(n, n)); }

TEST(Coefficients, SingleExponential) {
  SpectralField s = coefficients(sampled([](double x, double y) { return std::polar(1.0, x + 2 * y); }, 8), 2, 2);
  for (int k = -2; k <= 2; ++k)
    for (int j = -2; j <= 2; ++j)
      EXPECT_LT(std::abs(s(j, k) - cplx(j == 1 && k == 2 ? 1.0 : 0.0)), 1e-12) << j << "," << k;
}

TEST(Coefficients, CosineAndConstant) {
  SpectralField c = coefficients(sampled([](double x, double) { return cplx(std::cos(x)); }, 8), 3, 3);
  EXPECT_LT(std::abs(c(1, 0) - 0.5), 1e-12);
  EXPECT_LT(std::abs(c(-1, 0) - 0.5), 1e-12);
  EXPECT_LT(std::abs(c(0, 0)), 1e-12);
  SpectralField one = coefficients(sampled([](double, double) { return cplx(1.0); }, 8), 3, 3);
  for (int k = -3; k <= 3; ++k)
    for (int j = -3; j <= 3; ++j) EXPECT_LT(std::abs(one(j, k) - cplx(j == 0 && k == 0 ? 1.0 : 0.0)), 1e-12);
  EXPECT_TRUE(one.real_source());
}

TEST(Coefficients, FftMatchesDirectQuadrature) {
  auto f = sample([](double x, double y) { return cplx(std::exp(std::cos(x) + 0.5 * std::sin(2 * y)), std::sin(x - y)); },
                  make_grid(32, 16));
  SpectralField s = coefficients(f, 15, 7);
  for (int k = -7; k <= 7; ++k)
    for (int j = -15; j <= 15; ++j) EXPECT_LT(std::abs(s(j, k) - direct_coefficient(f, j, k)), 1e-10) << j << "," << k;
}

TEST(Coefficients, AliasingRejected) {
  auto f = sampled([](double, double) { return cplx(1.0); }, 8);
  EXPECT_THROW(coefficients(f, 4, 3), AliasingError);
  EXPECT_THROW(coefficients(f, 3, 4), AliasingError);
  EXPECT_NO_THROW(coefficients(f, 3, 3));
}

TEST(Coefficients, DegreeDetection) {
  lab::RandomTrigPolynomial p(3, 2, 7);
  SpectralField s = coefficients(sampled([&](double x, double y) { return cplx(p(x, y)); }, 32), 15, 15);
  EXPECT_EQ(s.degree_x(), 3);
  EXPECT_EQ(s.degree_y(), 2);
}

TEST(PartialSum, Examples) {
  auto cc = [](double x, double y) { return cplx(std::cos(x) * std::cos(y)); };
  SpectralField s = coefficients(sampled(cc, 16), 7, 7);
  EXPECT_LT(sup_diff(partial_sum(s, 1, 1), cc), 1e-12);
  EXPECT_LT(sup_diff(partial_sum(s, 0, 0), SampledField::zeros(s.grid())), 1e-12);
  EXPECT_THROW(partial_sum(s, 8, 1), TruncationError);
}

TEST(PartialSum, ReproducesRandomPolynomial) {
  lab::RandomTrigPolynomial p(4, 4, 99);
  auto fn = [&](double x, double y) { return cplx(p(x, y)); };
  SpectralField s = coefficients(sampled(fn, 32), 15, 15);
  SampledField out = partial_sum(s, 4, 4);
  // compare against direct evaluation at the nodes and the closed form of its coefficients
  EXPECT_LT(sup_diff(out, fn), 1e-10);
  for (int k = -4; k <= 4; ++k)
    for (int j = -4; j <= 4; ++j) EXPECT_LT(std::abs(s(j, k) - p.coefficient(j, k)), 1e-12);
}

TEST(ConjugatePartialSum, Examples) {
  SpectralField c = coefficients(sampled([](double x, double) { return cplx(std::cos(x)); }, 16), 7, 7);
  EXPECT_LT(sup_diff(conjugate_partial_sum(c, 1, 0, {1, 0}), [](double x, double) { return cplx(std::sin(x)); }), 1e-12);
  SpectralField s = coefficients(sampled([](double, double y) { return cplx(std::sin(y)); }, 16), 7, 7);
  EXPECT_LT(sup_diff(conjugate_partial_sum(s, 0, 1, {0, 1}), [](double, double y) { return cplx(-std::cos(y)); }), 1e-12);
}

TEST(ConjugatePartialSum, FlagZeroIsPartialSumBitForBit) {
  lab::RandomTrigPolynomial p(5, 3, 3);
  SpectralField s = coefficients(sampled([&](double x, double y) { return cplx(p(x, y)); }, 32), 15, 15);
  SampledField a = conjugate_partial_sum(s, 4, 2, {});
  SampledField b = partial_sum(s, 4, 2);
  for (int i = 0; i < a.size(); ++i) EXPECT_EQ(a[i], b[i]);
}

TEST(ConjugacyFlag, Validation) {
  EXPECT_THROW(ConjugacyFlag(2, 0), DomainError);
  EXPECT_THROW(ConjugacyFlag(0, -1), DomainError);
  ASSERT_EQ(all_conjugacy_flags().size(), 4u);
  EXPECT_EQ(all_conjugacy_flags()[1], ConjugacyFlag(1, 0));
}

TEST(ModifiedPartialSum, EdgeModeIsHalved) {
  auto c2 = [](double x, double) { return cplx(std::cos(2 * x)); };
  SampledField f = sampled(c2, 32);
  SpectralField s = coefficients(f, 15, 15);
  SampledField out = modified_partial_sum(s, 2, 0, true, false, {});
  EXPECT_LT(sup_diff(out, [](double x, double) { return cplx(0.5 * std::cos(2 * x)); }), 1e-12);

  // same thing as a rectangle-rule convolution with the modified kernel in x
  const TorusGrid& g = f.grid();
  for (int jx = 0; jx < g.nx(); ++jx) {
    double conv = 0.0;
    for (int sx = 0; sx < g.nx(); ++sx) conv += std::cos(2 * g.x(sx)) * modified_dirichlet(2, g.x(jx) - g.x(sx));
    EXPECT_NEAR(conv * g.hx() / kPi, out.at(jx, 0).real(), 1e-12);
  }
}

TEST(ModifiedPartialSum, InteriorModesAndConstants) {
  auto cx = [](double x, double) { return cplx(std::cos(x)); };
  SpectralField s = coefficients(sampled(cx, 16), 7, 7);
  EXPECT_LT(sup_diff(modified_partial_sum(s, 2, 0, true, false, {}), cx), 1e-12);
  SpectralField one = coefficients(sampled([](double, double) { return cplx(1.0); }, 16), 7, 7);
  for (int n : {1, 3, 7})
    for (int m : {1, 5})
      EXPECT_LT(sup_diff(modified_partial_sum(one, n, m, true, true, {}), [](double, double) { return cplx(1.0); }), 1e-12);
  EXPECT_THROW(modified_partial_sum(one, 0, 1, true, false, {}), DomainError);
}

TEST(Oracle, Examples) {
  auto cc = [](double x, double y) { return cplx(std::cos(x) * std::cos(y)); };
  EXPECT_LT(sup_diff(oracle_partial_sum(sampled(cc, 32), 1, 1, {}, false, false), cc), 1e-9);
  auto cx = [](double x, double) { return cplx(std::cos(x)); };
  EXPECT_LT(sup_diff(oracle_partial_sum(sampled(cx, 32), 1, 0, {1, 0}, false, false),
                     [](double x, double) { return cplx(std::sin(x)); }),
            1e-9);
  auto one = sampled([](double, double) { return cplx(1.0); }, 32);
  for (int n : {1, 3, 7}) EXPECT_LT(sup_diff(oracle_partial_sum(one, n, 2, {1, 0}, false, false), SampledField::zeros(one.grid())), 1e-9);
}

TEST(Oracle, ResolutionGuard) {
  auto f = sampled([](double, double) { return cplx(1.0); }, 16);
  EXPECT_NO_THROW(oracle_partial_sum(f, 3, 3, {}, false, false));
  EXPECT_THROW(oracle_partial_sum(f, 4, 3, {}, false, false), ResolutionError);
}

// A sample of the acceptance sweep: three polynomials, a spread of degrees,
// every flag and modification pattern.
TEST(Oracle, AgreesWithSpectralPath) {
  const TorusGrid g = make_grid(64, 64);
  for (std::uint64_t seed : {11u, 12u, 13u}) {
    lab::RandomTrigPolynomial p(8, 8, seed);
    SampledField f = sample([&](double x, double y) { return cplx(p(x, y)); }, g);
    SpectralField s = coefficients(f, 31, 31);
    for (auto [n, m] : {std::pair{1, 1}, std::pair{3, 6}, std::pair{8, 8}, std::pair{0, 4}}) {
      for (const ConjugacyFlag& flag : all_conjugacy_flags()) {
        for (int mod = 0; mod < 4; ++mod) {
          const bool mx = mod & 1, my = mod & 2;
          if ((mx && n == 0) || (my && m == 0)) continue;
          double d = sup_diff(modified_partial_sum(s, n, m, mx, my, flag), oracle_partial_sum(f, n, m, flag, mx, my));
          EXPECT_LE(d, 1e-8) << "seed " << seed << " n=" << n << " m=" << m << " flag " << flag.a << flag.b << " mod "
                             << mod;
        }
      }
    }
  }
}

TEST(Properties, Linearity) {
  const TorusGrid g = make_grid(32, 32);
  lab::RandomTrigPolynomial p(6, 6, 1), q(7, 5, 2);
  SampledField f = sample([&](double x, double y) { return cplx(p(x, y)); }, g);
  SampledField h = sample([&](double x, double y) { return cplx(q(x, y), std::sin(3 * x + y)); }, g);
  const cplx alpha(1.5, -0.25), beta(-2.0, 0.0);
  SampledField combo = alpha * f + beta * h;
  for (auto [n, m] : {std::pair{0, 0}, std::pair{2, 5}, std::pair{7, 7}}) {
    SampledField lhs = partial_sum(coefficients(combo, 15, 15), n, m);
    SampledField rhs = alpha * partial_sum(coefficients(f, 15, 15), n, m) + beta * partial_sum(coefficients(h, 15, 15), n, m);
    EXPECT_LT(sup_diff(lhs, rhs), 1e-12);
  }
}

TEST(Properties, IdempotenceOnPolynomials) {
  lab::RandomTrigPolynomial p(5, 3, 21);
  auto fn = [&](double x, double y) { return cplx(p(x, y)); };
  SpectralField s = coefficients(sampled(fn, 32), 15, 15);
  for (int n = 5; n <= 15; n += 5)
    for (int m = 3; m <= 15; m += 4) EXPECT_LT(sup_diff(partial_sum(s, n, m), fn), 1e-10);
}

TEST(Properties, ConjugationTwiceNegates) {
  // zero mean in x: drop every k-only mode
  const TorusGrid g = make_grid(32, 32);
  lab::RandomTrigPolynomial p(6, 4, 5);
  auto fn = [&](double x, double y) {
    double v = 0.0;
    for (int k = -4; k <= 4; ++k) v += (p.coefficient(0, k) * std::polar(1.0, k * y)).real();
    return cplx(p(x, y) - v);
  };
  SampledField f = sample(fn, g);
  SampledField once = conjugate_partial_sum(coefficients(f, 15, 15), 6, 4, {1, 0});
  SampledField twice = conjugate_partial_sum(coefficients(once, 15, 15), 6, 4, {1, 0});
  EXPECT_LT(sup_diff(twice, -1.0 * f), 1e-12);
}

TEST(PartialSumTables, MatchSynthesis) {
  lab::RandomTrigPolynomial p(3, 4, 8);
  SpectralField s = coefficients(sampled([&](double x, double y) { return cplx(p(x, y)); }, 16), 7, 7);
  const int n = 5, m = 4;
  for (const ConjugacyFlag& flag : all_conjugacy_flags()) {
    std::vector<SampledField> expected;
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= m; ++j) expected.push_back(conjugate_partial_sum(s, i, j, flag));
    double worst = 0.0;
    for_each_partial_sum_table(s, n, m, flag, [&](int node, std::span<const cplx> table) {
      for (int t = 0; t < (n + 1) * (m + 1); ++t) worst = std::max(worst, std::abs(table[t] - expected[t][node]));
    });
    EXPECT_LT(worst, 1e-12) << flag.a << flag.b;
  }
}

TEST(Line, CoefficientsAndSynthesis) {
  LineField l = sample_line([](double x) { return cplx(std::cos(2 * x) + std::sin(x)); }, 16);
  LineSpectrum s = line_coefficients(l, 7);
  EXPECT_EQ(s.degree(), 2);
  EXPECT_LT(std::abs(s[2] - 0.5), 1e-12);
  EXPECT_LT(std::abs(s[1] - cplx(0, -0.5)), 1e-12);
  LineField conj = synthesize_line(s, AxisOperator{2, true, false});
  for (int j = 0; j < 16; ++j)
    EXPECT_NEAR(conj[j].real(), std::sin(2 * l.x(j)) - std::cos(l.x(j)), 1e-12);
  EXPECT_THROW(line_coefficients(l, 8), AliasingError);
}

}  // namespace
}  // namespace torusfs
