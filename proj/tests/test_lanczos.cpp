#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "support.hpp"
#include "tempcom/lanczos.hpp"

using namespace tempcom;

namespace {

EigenPair top_of(const Eigen::MatrixXd& m, bool vec = false, LanczosOptions opts = {}) {
  auto apply = [&m](std::span<const double> x, std::span<double> y) {
    Eigen::Map<Eigen::VectorXd>(y.data(), y.size()) =
        m * Eigen::Map<const Eigen::VectorXd>(x.data(), static_cast<Eigen::Index>(x.size()));
  };
  return largest_eigenpair(static_cast<std::size_t>(m.rows()), apply, vec, opts);
}

}  // namespace

TEST(Lanczos, MatchesDenseSolverOnSmallGraphs) {
  for (unsigned seed = 0; seed < 40; ++seed) {
    const std::size_t n = 5 + seed;  // 5..44
    auto a = testing_support::dense(testing_support::random_graph(n, 0.3, seed));
    // centred and shifted so the top eigenvalue is not always the Perron root
    Eigen::MatrixXd m = a - 0.3 * (Eigen::MatrixXd::Ones(n, n) - Eigen::MatrixXd::Identity(n, n));
    const double ref = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m).eigenvalues().maxCoeff();
    const auto got = top_of(m);
    EXPECT_NEAR(got.value, ref, 1e-8 * std::max(1.0, std::abs(ref))) << "n " << n;
  }
}

TEST(Lanczos, RandomSymmetricWithNegativeSpectrum) {
  std::mt19937 gen(5);
  std::normal_distribution<double> z;
  for (int n : {1, 2, 3, 17, 50}) {
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= i; ++j) m(i, j) = m(j, i) = z(gen);
    m -= 100.0 * Eigen::MatrixXd::Identity(n, n);  // all eigenvalues negative
    const double ref = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m).eigenvalues().maxCoeff();
    EXPECT_NEAR(top_of(m).value, ref, 1e-8 * std::abs(ref)) << n;
  }
}

TEST(Lanczos, EigenvectorAndResidual) {
  auto a = testing_support::dense(testing_support::random_graph(300, 0.05, 2));
  const auto got = top_of(a, true);
  Eigen::Map<const Eigen::VectorXd> v(got.vector.data(), 300);
  EXPECT_NEAR(v.norm(), 1.0, 1e-12);
  EXPECT_LT((a * v - got.value * v).norm(), 1e-6 * got.value);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  EXPECT_NEAR(got.value, es.eigenvalues().maxCoeff(), 1e-8 * got.value);
  EXPECT_LT(got.iterations, 300u);
}

TEST(Lanczos, InvariantSubspaceBreakdown) {
  // identity: the first Krylov vector is already an eigenvector
  const auto got = top_of(Eigen::MatrixXd::Identity(20, 20));
  EXPECT_NEAR(got.value, 1.0, 1e-12);
  EXPECT_EQ(got.iterations, 1u);
  // repeated top eigenvalue
  Eigen::VectorXd d(6);
  d << 3, 3, 1, 0, -1, -2;
  EXPECT_NEAR(top_of(Eigen::MatrixXd(d.asDiagonal())).value, 3.0, 1e-10);
}

TEST(Lanczos, DeterministicForFixedSeed) {
  auto a = testing_support::dense(testing_support::random_graph(120, 0.1, 8));
  EXPECT_EQ(top_of(a).value, top_of(a).value);
  LanczosOptions other;
  other.seed = 99;
  EXPECT_NEAR(top_of(a, false, other).value, top_of(a).value, 1e-9 * top_of(a).value);
}

TEST(Lanczos, RejectsEmptyProblem) {
  EXPECT_THROW(top_of(Eigen::MatrixXd(0, 0)), std::invalid_argument);
}
