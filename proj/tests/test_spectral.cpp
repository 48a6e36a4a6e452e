#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <random>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/special_functions/airy.hpp>

#include "support.hpp"
#include "tempcom/spectral_test.hpp"

using namespace tempcom;

namespace {

// Oracle: F1(s) = det(I - K_s) with K_s(x, y) = Ai(x + y + s) on L2(0, inf),
// Nystrom discretisation with 2 x 30 Gauss-Legendre nodes on [0, L].
double tw1_cdf_oracle(double s) {
  using rule = boost::math::quadrature::gauss<double, 60>;
  const double L = std::max(14.0, 18.0 - s);
  std::vector<double> x, w;
  const auto& abs = rule::abscissa();
  const auto& wts = rule::weights();
  for (std::size_t i = 0; i < abs.size(); ++i) {
    for (double sign : {-1.0, 1.0}) {
      if (abs[i] == 0.0 && sign < 0) continue;
      x.push_back(0.5 * L * (1.0 + sign * abs[i]));
      w.push_back(0.5 * L * wts[i]);
    }
  }
  const auto m = static_cast<Eigen::Index>(x.size());
  Eigen::MatrixXd k(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j)
      k(i, j) = (i == j ? 1.0 : 0.0) - std::sqrt(w[i] * w[j]) * boost::math::airy_ai(x[i] + x[j] + s);
  return k.determinant();
}

double dense_standardized_top(const Snapshot& s) {
  const auto n = static_cast<Eigen::Index>(s.num_nodes());
  const double p = edge_density(s);
  Eigen::MatrixXd m = testing_support::dense(s) - p * (Eigen::MatrixXd::Ones(n, n) - Eigen::MatrixXd::Identity(n, n));
  m /= std::sqrt((n - 1.0) * p * (1.0 - p));
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m).eigenvalues().maxCoeff();
}

}  // namespace

TEST(Tw1Table, MatchesFredholmOracleOnGrid) {
  const auto& ref = Tw1Reference::builtin();
  for (double s : {-6.0, -4.0, -3.0, -2.0, -1.5, -1.0, 0.0, 0.5, 1.0, 2.0, 3.0, 4.0}) {
    const double oracle = tw1_cdf_oracle(s);
    EXPECT_NEAR(ref.cdf(s), oracle, 1e-9) << s;
    // relative check in the upper tail, where the p-values live
    EXPECT_NEAR(ref.survival(s), 1.0 - oracle, 1e-6 * (1.0 - oracle) + 1e-12) << s;
  }
}

TEST(Tw1Table, InterpolationBetweenNodes) {
  const auto& ref = Tw1Reference::builtin();
  for (double s : {-3.2345, -1.2345, -0.005, 0.4567, 1.7891, 3.3333}) EXPECT_NEAR(ref.cdf(s), tw1_cdf_oracle(s), 1e-7) << s;
}

TEST(Tw1Table, LiteratureMoments) {
  EXPECT_NEAR(kTw1Mean, -1.2065335745820, 1e-12);
  EXPECT_NEAR(kTw1Sd * kTw1Sd, 1.6077810345810, 1e-11);
}

TEST(Tw1Table, MomentsOfTabulatedDistribution) {
  // E X = int_0^inf (1 - F) - int_-inf^0 F; E X^2 = 2 int x (1 - F) + 2 int |x| F
  const auto& ref = Tw1Reference::builtin();
  const auto& x = ref.grid();
  double m1 = 0.0, m2 = 0.0;
  const int sub = 20;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double h = (x[i + 1] - x[i]) / sub;
    for (int k = 0; k < sub; ++k) {
      const double a = x[i] + k * h + 0.5 * h;  // midpoint rule on the interpolant
      const double f = ref.cdf(a);
      m1 += (a >= 0 ? 1.0 - f : -f) * h;
      m2 += (a >= 0 ? 2 * a * (1.0 - f) : -2 * a * f) * h;
    }
  }
  const double mean = m1, sd = std::sqrt(m2 - m1 * m1);
  EXPECT_NEAR(mean, ref.mean(), 1e-3);
  EXPECT_NEAR(sd, ref.sd(), 1e-3);
  EXPECT_NEAR(mean, kTw1Mean, 1e-5);
  EXPECT_NEAR(sd, kTw1Sd, 1e-5);
}

TEST(Tw1Table, MedianSurvivalIsHalf) {
  double lo = -2.0, hi = -0.5;
  for (int it = 0; it < 50; ++it) {
    const double mid = 0.5 * (lo + hi);
    (tw1_cdf_oracle(mid) < 0.5 ? lo : hi) = mid;
  }
  EXPECT_NEAR(tw1_survival(0.5 * (lo + hi)), 0.5, 1e-3);
  EXPECT_NEAR(tw1_survival(0.5 * (lo + hi)), 0.5, 1e-7);
}

TEST(Tw1Table, TailsAndMonotonicity) {
  EXPECT_EQ(tw1_survival(-10.5), 1.0);
  EXPECT_EQ(tw1_survival(-1e9), 1.0);
  const double top = tw1_survival(8.0);
  EXPECT_GT(top, 0.0);
  EXPECT_LT(top, 1e-7);
  EXPECT_EQ(tw1_survival(50.0), top);
  std::mt19937 gen(1);
  std::uniform_real_distribution<double> u(-12.0, 10.0);
  std::vector<double> xs(1000);
  for (auto& v : xs) v = u(gen);
  std::sort(xs.begin(), xs.end());
  for (std::size_t i = 1; i < xs.size(); ++i) {
    EXPECT_LE(tw1_survival(xs[i]), tw1_survival(xs[i - 1]));
    EXPECT_GE(tw1_survival(xs[i]), 0.0);
    EXPECT_LE(tw1_survival(xs[i]), 1.0);
  }
}

TEST(Tw1Table, BundledTextTableMatchesBuiltin) {
  const auto t = Tw1Reference::load(std::string(TEMPCOM_DATA_DIR) + "/tw1_cdf.txt");
  const auto& b = Tw1Reference::builtin();
  ASSERT_EQ(t.grid().size(), b.grid().size());
  for (std::size_t i = 0; i < t.grid().size(); ++i) {
    EXPECT_NEAR(t.grid()[i], b.grid()[i], 1e-12);
    EXPECT_NEAR(t.cdf_values()[i], b.cdf_values()[i], 1e-15);
  }
  EXPECT_NEAR(t.mean(), kTw1Mean, 1e-6);
  EXPECT_NEAR(t.sd(), kTw1Sd, 1e-6);
}

TEST(Tw1Table, RejectsBadTables) {
  EXPECT_THROW(Tw1Reference({0, 1}, {0.5, 0.4}, 0, 1), DataError);
  EXPECT_THROW(Tw1Reference({0, 0}, {0.1, 0.4}, 0, 1), DataError);
  EXPECT_THROW(Tw1Reference({0, 1}, {0.1, 1.4}, 0, 1), DataError);
  EXPECT_THROW(Tw1Reference::load("/nonexistent/table.txt"), DataError);
}

TEST(StandardizedTopEigenvalue, MatchesDenseSolve) {
  for (unsigned seed = 0; seed < 30; ++seed) {
    auto s = testing_support::random_graph(10 + seed, 0.25, seed);
    if (s.num_edges() == 0) continue;
    const double ref = dense_standardized_top(s);
    EXPECT_NEAR(standardized_top_eigenvalue(s), ref, 1e-8 * std::max(1.0, std::abs(ref))) << seed;
  }
}

TEST(StandardizedTopEigenvalue, MagnitudeSide) {
  // eigenvalue of largest modulus, sign kept
  auto s = testing_support::random_graph(40, 0.1, 3);
  const auto n = static_cast<Eigen::Index>(40);
  const double p = edge_density(s);
  Eigen::MatrixXd m = testing_support::dense(s) - p * (Eigen::MatrixXd::Ones(n, n) - Eigen::MatrixXd::Identity(n, n));
  m /= std::sqrt(39.0 * p * (1 - p));
  const auto ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m).eigenvalues();
  const double lo = ev.minCoeff(), hi = ev.maxCoeff();
  const double expect = std::abs(lo) > std::abs(hi) ? lo : hi;
  EXPECT_NEAR(standardized_top_eigenvalue(s, EigenSide::magnitude), expect, 1e-8);
}

TEST(StandardizedTopEigenvalue, DegenerateGraphs) {
  EXPECT_THROW(standardized_top_eigenvalue(Snapshot::from_edges(2, {{0, 1}})), DegenerateInput);
  EXPECT_THROW(standardized_top_eigenvalue(Snapshot(6)), DegenerateInput);
  EXPECT_THROW(standardized_top_eigenvalue(testing_support::complete_graph(6)), DegenerateInput);
}

TEST(StandardizedTopEigenvalue, ErBulkEdgeNearTwo) {
  double sum = 0.0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) sum += standardized_top_eigenvalue(sample_er(500, 0.05, seed));
  EXPECT_GE(sum / 50, 1.8);
  EXPECT_LE(sum / 50, 2.2);
}

TEST(StandardizedTopEigenvalue, PlantedBlocksSeparate) {
  const auto c = CommunityLabels::two_groups(200, 0.5);
  for (std::uint64_t seed = 0; seed < 5; ++seed)
    EXPECT_GT(standardized_top_eigenvalue(sample_sbm(c, BlockMatrix(2, {0.3, 0.05, 0.05, 0.3}), seed)), 3.0);
}

TEST(StandardizedTopEigenvalue, PermutationInvariant) {
  // Krylov iterations see a permuted start vector, so agreement is to
  // solver tolerance rather than bitwise
  for (unsigned seed = 0; seed < 10; ++seed) {
    auto s = sample_er(300, 0.03, seed);
    auto perm = testing_support::random_permutation(300, seed + 100);
    const double a = standardized_top_eigenvalue(s), b = standardized_top_eigenvalue(testing_support::permute(s, perm));
    EXPECT_NEAR(a, b, 1e-9 * std::abs(a)) << seed;
  }
}

TEST(BootstrapCorrection, MeanMapsToTwMean) {
  const auto& ref = Tw1Reference::builtin();
  EXPECT_EQ(bootstrap_corrected_statistic(1.7, 1.7, 0.3, ref), ref.mean());
  EXPECT_NEAR(bootstrap_corrected_statistic(2.0, 1.7, 0.3, ref), ref.mean() + ref.sd(), 1e-12);
}

TEST(TwTest, InputChecksAndDegenerateGraphs) {
  EXPECT_THROW(tw_pvalue_bootstrap(sample_er(9, 0.5, 1), 1), InvalidInput);
  auto r = tw_pvalue_bootstrap(Snapshot(20), 1);
  EXPECT_TRUE(r.degenerate);
  EXPECT_EQ(r.p_value, 1.0);
  EXPECT_TRUE(tw_pvalue_bootstrap(testing_support::complete_graph(12), 1).degenerate);
  TwTestOptions one;
  one.n_boot = 1;
  EXPECT_THROW(tw_pvalue_bootstrap(sample_er(30, 0.2, 1), 1, one), InvalidInput);
}

TEST(TwTest, ReportsConsistentFields) {
  auto s = sample_er(200, 0.05, 4);
  auto r = tw_pvalue_bootstrap(s, 77);
  EXPECT_FALSE(r.degenerate);
  EXPECT_EQ(r.n, 200u);
  EXPECT_DOUBLE_EQ(r.p_hat, edge_density(s));
  EXPECT_NEAR(r.statistic, standardized_top_eigenvalue(s), 1e-9);
  EXPECT_NEAR(r.corrected, bootstrap_corrected_statistic(r.statistic, r.boot_mean, r.boot_sd, Tw1Reference::builtin()),
              1e-12);
  EXPECT_DOUBLE_EQ(r.p_value, tw1_survival(r.corrected));
  EXPECT_GE(r.p_value, 0.0);
  EXPECT_LE(r.p_value, 1.0);
  // same seed, same answer; different seed, different bootstrap
  EXPECT_EQ(tw_pvalue_bootstrap(s, 77).p_value, r.p_value);
  EXPECT_NE(tw_pvalue_bootstrap(s, 78).boot_mean, r.boot_mean);
}

TEST(TwTest, BootstrapUsesObservedDensity) {
  // replicate b is ER(n, p_hat) drawn from the documented stream
  auto s = sample_er(60, 0.1, 2);
  TwTestOptions o;
  o.n_boot = 5;
  auto r = tw_pvalue_bootstrap(s, 9, o);
  const double p = edge_density(s), scale = std::sqrt(59.0 * p * (1 - p));
  std::vector<double> boot;
  for (std::size_t b = 0; b < 5; ++b) {
    Rng rng(derive_seed(9, {stream::bootstrap, b}));
    auto rep = sample_er(60, p, rng);
    const auto n = static_cast<Eigen::Index>(60);
    Eigen::MatrixXd m = testing_support::dense(rep) - p * (Eigen::MatrixXd::Ones(n, n) - Eigen::MatrixXd::Identity(n, n));
    boot.push_back(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m).eigenvalues().maxCoeff() / scale);
  }
  EXPECT_NEAR(r.boot_mean, testing_support::mean(boot), 1e-8);
  EXPECT_NEAR(r.boot_sd, testing_support::sample_sd(boot), 1e-8);
}

TEST(TwTest, AlternativeReferenceTable) {
  // a shifted reference moves the p-value the expected way
  const auto& b = Tw1Reference::builtin();
  std::vector<double> x = b.grid();
  for (auto& v : x) v += 1.0;
  Tw1Reference shifted(x, b.cdf_values(), b.mean() + 1.0, b.sd());
  TwTestOptions o;
  o.reference = &shifted;
  auto s = sample_er(100, 0.1, 3);
  EXPECT_NEAR(tw_pvalue_bootstrap(s, 5, o).p_value, tw_pvalue_bootstrap(s, 5).p_value, 1e-12);
}

TEST(TwTest, NullPValuesRoughlyUniform) {
  std::vector<double> p;
  for (std::uint64_t seed = 0; seed < 150; ++seed) p.push_back(tw_pvalue_bootstrap(sample_er(100, 0.05, seed), seed + 1).p_value);
  EXPECT_LT(testing_support::ks_uniform(p), 0.14);
}

TEST(TwTest, PowerAgainstPlantedBlocks) {
  const auto c = CommunityLabels::two_groups(1000, 0.8);
  int small = 0;
  const int seeds = 50;
  for (std::uint64_t seed = 0; seed < seeds; ++seed)
    small += tw_pvalue_bootstrap(sample_sbm(c, BlockMatrix::planted(2, 0.01, 0.01), seed), seed).p_value < 0.01;
  EXPECT_GE(small, 45);
}
