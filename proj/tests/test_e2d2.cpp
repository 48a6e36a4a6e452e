#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"
#include "tempcom/e2d2_test.hpp"

using namespace tempcom;

namespace {

Snapshot chung_lu_input(std::size_t n, double density, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> th(n);
  for (auto& t : th) t = rng.uniform(0.7, 1.3);
  double sum = 0, sq = 0;
  for (double t : th) {
    sum += t;
    sq += t * t;
  }
  // scale so the expected density is `density`
  const double scale = density * n * (n - 1.0) / (sum * sum - sq);
  return sample_chung_lu(th, scale, rng);
}

Snapshot planted(std::size_t n, double in, double out, std::uint64_t seed) {
  return sample_sbm(CommunityLabels::two_groups(n, 0.5), BlockMatrix(2, {in, out, out, in}), seed);
}

}  // namespace

TEST(Ase, SingleEdge) {
  auto w = ase_rank1(Snapshot::from_edges(2, {{0, 1}}));
  EXPECT_NEAR(w.eigenvalue, 1.0, 1e-10);
  EXPECT_NEAR(w.theta[0], std::sqrt(0.5), 1e-8);
  EXPECT_NEAR(w.theta[1], std::sqrt(0.5), 1e-8);
  EXPECT_NEAR(w.theta[0] * w.theta[1], 0.5, 1e-8);
}

TEST(Ase, CompleteGraph) {
  auto w = ase_rank1(testing_support::complete_graph(4));
  EXPECT_NEAR(w.eigenvalue, 3.0, 1e-10);
  for (double t : w.theta) EXPECT_NEAR(t, std::sqrt(3.0) / 2, 1e-8);
  EXPECT_NEAR(w.theta[0] * w.theta[3], 0.75, 1e-8);
}

TEST(Ase, MatchesDenseEigenpairAndNeverFloorsOnConnectedGraphs) {
  for (unsigned seed = 0; seed < 20; ++seed) {
    auto s = largest_connected_component(testing_support::random_graph(40, 0.1, seed)).graph;
    if (s.num_edges() == 0) continue;
    auto w = ase_rank1(s);
    EXPECT_EQ(w.floored, 0u);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(testing_support::dense(s));
    const auto last = es.eigenvalues().size() - 1;
    EXPECT_NEAR(w.eigenvalue, es.eigenvalues()[last], 1e-8 * w.eigenvalue);
    Eigen::VectorXd u = es.eigenvectors().col(last);
    if (u.sum() < 0) u = -u;
    for (Eigen::Index i = 0; i < u.size(); ++i) {
      EXPECT_GE(w.theta[i], 0.0);
      EXPECT_NEAR(w.theta[i], std::sqrt(w.eigenvalue) * u[i], 1e-6);
    }
  }
}

TEST(Ase, EdgelessThrows) { EXPECT_THROW(ase_rank1(Snapshot(5)), InvalidInput); }

TEST(KMax, FloorSqrtWithFloorOfTwo) {
  EXPECT_EQ(e2d2_k_max(10), 3u);
  EXPECT_EQ(e2d2_k_max(16), 4u);
  EXPECT_EQ(e2d2_k_max(3), 2u);
  EXPECT_EQ(e2d2_k_max(300), 17u);
}

TEST(E2d2Test, RequiresTenNodeComponent) {
  auto s = Snapshot::from_edges(20, {{0, 1}, {1, 2}, {2, 3}});
  EXPECT_THROW(e2d2_pvalue_bootstrap(s, 1), InvalidInput);
  E2d2TestOptions zero;
  zero.n_boot = 0;
  EXPECT_THROW(e2d2_pvalue_bootstrap(planted(60, 0.3, 0.05, 1), 1, zero), InvalidInput);
}

TEST(E2d2Test, PValueOnBootstrapLatticeAndDeterministic) {
  auto s = chung_lu_input(120, 0.06, 4);
  E2d2TestOptions o;
  o.n_boot = 50;
  auto r = e2d2_pvalue_bootstrap(s, 9, o);
  EXPECT_EQ(r.boot.size(), 50u);
  EXPECT_DOUBLE_EQ(r.p_value, r.hits / 50.0);
  std::size_t hits = 0;
  for (double u : r.boot) hits += u >= r.observed;
  EXPECT_EQ(hits, r.hits);
  EXPECT_EQ(r.n_lcc, largest_connected_component(s).graph.num_nodes());
  EXPECT_EQ(r.k_max, e2d2_k_max(r.n_lcc));
  EXPECT_GE(r.k, 2u);
  auto again = e2d2_pvalue_bootstrap(s, 9, o);
  EXPECT_EQ(again.boot, r.boot);
  o.add_one = true;
  EXPECT_DOUBLE_EQ(e2d2_pvalue_bootstrap(s, 9, o).p_value, (r.hits + 1) / 51.0);
}

TEST(E2d2Test, ObservedBelowEveryReplicateGivesOne) {
  // a star has no community structure: every resampled graph scores higher
  std::vector<Edge> e;
  for (NodeId i = 1; i < 30; ++i) e.push_back({0, i});
  E2d2TestOptions o;
  o.n_boot = 30;
  auto r = e2d2_pvalue_bootstrap(Snapshot::from_edges(30, e), 3, o);
  for (double u : r.boot)
    if (std::isfinite(u)) {
      EXPECT_GE(u, r.observed);
    }
  EXPECT_EQ(r.p_value, static_cast<double>(r.hits) / 30.0);
}

TEST(E2d2Test, UsesLargestComponentOnly) {
  // dense planted blocks plus an isolated triangle: the triangle is ignored
  auto base = planted(60, 0.4, 0.05, 2);
  auto e = base.edges();
  e.push_back({60, 61});
  e.push_back({61, 62});
  e.push_back({60, 62});
  auto s = Snapshot::from_edges(63, e);
  E2d2TestOptions o;
  o.n_boot = 20;
  auto with = e2d2_pvalue_bootstrap(s, 5, o);
  auto without = e2d2_pvalue_bootstrap(base, 5, o);
  EXPECT_EQ(with.n_lcc, without.n_lcc);
  EXPECT_EQ(with.observed, without.observed);
  EXPECT_EQ(with.boot, without.boot);
  EXPECT_EQ(with.nodes.size(), with.n_lcc);
}

TEST(E2d2Test, NullPValuesCentred) {
  std::vector<double> p;
  E2d2TestOptions o;
  o.n_boot = 100;
  for (std::uint64_t seed = 0; seed < 40; ++seed) p.push_back(e2d2_pvalue_bootstrap(chung_lu_input(200, 0.03, seed), seed, o).p_value);
  EXPECT_GT(testing_support::mean(p), 0.3);
  EXPECT_LT(testing_support::mean(p), 0.7);
}

TEST(E2d2Test, PowerAgainstStrongBlocks) {
  E2d2TestOptions o;
  o.n_boot = 100;
  for (std::uint64_t seed = 0; seed < 8; ++seed)
    EXPECT_EQ(e2d2_pvalue_bootstrap(planted(300, 0.08, 0.01, seed), seed, o).p_value, 0.0) << seed;
}
