#include "torusfs/kernels.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "torusfs/error.hpp"
#include "torusfs/grid.hpp"

namespace torusfs {
namespace {

// Reference values straight from the trigonometric sums
//   D_n = 1/2 + sum_{j<=n} cos(ju),  conj = sum_{j<=m} sin(ju).
double dirichlet_sum(int n, double u) {
  double s = 0.5;
  for (int j = 1; j <= n; ++j) s += std::cos(j * u);
  return s;
}

double conjugate_sum(int m, double u) {
  double s = 0.0;
  for (int j = 1; j <= m; ++j) s += std::sin(j * u);
  return s;
}

std::vector<double> scan(int points) {
  std::vector<double> u(points);
  for (int i = 0; i < points; ++i) u[i] = -kPi + 2.0 * kPi * (i + 0.5) / points;
  return u;
}

TEST(Dirichlet, Examples) {
  EXPECT_NEAR(dirichlet(1, kPi / 2), 0.5, 1e-15);
  EXPECT_DOUBLE_EQ(dirichlet(5, 0.0), 5.5);
  for (double u : {-3.0, -0.5, 0.0, 1e-12, 2.0, kPi}) EXPECT_NEAR(dirichlet(0, u), 0.5, 1e-15);
}

TEST(Dirichlet, MatchesCosineSum) {
  for (int n : {0, 1, 2, 7, 33})
    for (double u : scan(997)) EXPECT_NEAR(dirichlet(n, u), dirichlet_sum(n, u), 1e-12) << n << " " << u;
}

TEST(Dirichlet, GuardBandIsContinuous) {
  for (int n : {1, 10, 64}) {
    const double inside = dirichlet(n, 1.9e-9);
    const double outside = dirichlet(n, 2.1e-9);
    EXPECT_NEAR(inside, n + 0.5, 1e-12);
    EXPECT_NEAR(outside, n + 0.5, 1e-6);
    EXPECT_DOUBLE_EQ(dirichlet(n, 2.0 * kPi), n + 0.5);
  }
}

TEST(ConjugateDirichlet, Examples) {
  EXPECT_EQ(conjugate_dirichlet(1, 0.0), 0.0);
  // sin(pi) = 0
  EXPECT_NEAR(conjugate_dirichlet(1, kPi), 0.0, 1e-15);
  // sin(pi/2) + sin(pi) = 1
  EXPECT_NEAR(conjugate_dirichlet(2, kPi / 2), 1.0, 1e-15);
}

TEST(ConjugateDirichlet, OrderZeroRejected) { EXPECT_THROW(conjugate_dirichlet(0, 1.0), DomainError); }

TEST(ConjugateDirichlet, MatchesSineSum) {
  for (int m : {1, 2, 5, 40})
    for (double u : scan(1001)) EXPECT_NEAR(conjugate_dirichlet(m, u), conjugate_sum(m, u), 1e-12) << m << " " << u;
}

// The printed closed form with cos((m+1)u) is not the kernel of the
// conjugate partial sum; the half-integer frequency is.
TEST(ConjugateDirichlet, IntegerFrequencyFormIsNotTheConjugateSum) {
  auto integer_form = [](int m, double u) {
    return 1.0 / (2.0 * std::tan(u / 2)) - std::cos((m + 1) * u) / (2.0 * std::sin(u / 2));
  };
  EXPECT_NEAR(integer_form(1, kPi), -0.5, 1e-15);
  EXPECT_NEAR(conjugate_sum(1, kPi), 0.0, 1e-15);
  EXPECT_GT(std::abs(integer_form(2, kPi / 2) - conjugate_sum(2, kPi / 2)), 0.4);
}

TEST(ConjugateDirichlet, Decomposition) {
  for (int m : {1, 3, 17, 64}) {
    for (double u : scan(10000)) {
      const double lhs = conjugate_dirichlet(m, u) + std::cos((m + 0.5) * u) / (2.0 * std::sin(u / 2));
      const double rhs = 1.0 / (2.0 * std::tan(u / 2));
      EXPECT_NEAR(lhs, rhs, 1e-12 * std::max(1.0, std::abs(rhs))) << m << " " << u;
    }
  }
}

TEST(ModifiedDirichlet, Examples) {
  EXPECT_DOUBLE_EQ(modified_dirichlet(3, 0.0), 3.0);
  for (double u : {-2.0, 0.0, 0.3, kPi}) EXPECT_EQ(modified_dirichlet(0, u), 0.0);
  EXPECT_NEAR(modified_dirichlet(2, kPi / 2), 0.0, 1e-15);
}

TEST(KernelIdentities, ModifiedIsAverageOfNeighbours) {
  const auto us = scan(10000);
  for (int n = 1; n <= 64; ++n) {
    double worst = 0.0;
    for (double u : us) worst = std::max(worst, std::abs(modified_dirichlet(n, u) - 0.5 * (dirichlet(n - 1, u) + dirichlet(n, u))));
    EXPECT_LE(worst, 1e-12) << "n = " << n;
  }
  for (int n : {1, 5, 64}) EXPECT_NEAR(modified_dirichlet(n, 0.0), 0.5 * (dirichlet(n - 1, 0.0) + dirichlet(n, 0.0)), 1e-12);
}

TEST(KernelIdentities, Parity) {
  const auto us = scan(10000);
  for (int n = 1; n <= 64; ++n) {
    double worst = 0.0;
    for (double u : us) {
      worst = std::max(worst, std::abs(dirichlet(n, u) - dirichlet(n, -u)));
      worst = std::max(worst, std::abs(modified_dirichlet(n, u) - modified_dirichlet(n, -u)));
      worst = std::max(worst, std::abs(conjugate_dirichlet(n, u) + conjugate_dirichlet(n, -u)));
    }
    EXPECT_LE(worst, 1e-12) << "n = " << n;
  }
}

TEST(KernelIdentities, DirichletMeanOverCircle) {
  // (1/pi) int_T D_n = 1 via the rectangle rule on a grid with nx > 2n+2
  for (int n : {0, 3, 15, 30}) {
    const int nx = 64;
    double sum = 0.0;
    for (int j = 0; j < nx; ++j) sum += dirichlet(n, -kPi + 2.0 * kPi * j / nx);
    EXPECT_NEAR(sum * (2.0 * kPi / nx) / kPi, 1.0, 1e-10);
  }
}

TEST(Kernels, EvaluateDispatch) {
  EXPECT_EQ(evaluate({KernelTag::Dirichlet, 5}, 0.0), 5.5);
  EXPECT_EQ(evaluate({KernelTag::ModifiedDirichlet, 3}, 0.0), 3.0);
  EXPECT_EQ(evaluate({KernelTag::ConjugateDirichlet, 1}, 0.0), 0.0);
  EXPECT_THROW(dirichlet(-1, 0.0), DomainError);
  EXPECT_THROW(dirichlet(kMaxKernelOrder + 1, 0.0), DomainError);
}

}  // namespace
}  // namespace torusfs
