#pragma once

// Helpers shared by the test binaries. Random graphs here come from
// std::mt19937 so oracles do not depend on the library's own samplers.

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "tempcom/graph.hpp"

namespace testing_support {

inline tempcom::Snapshot random_graph(std::size_t n, double p, unsigned seed) {
  std::mt19937 gen(seed);
  std::bernoulli_distribution coin(p);
  std::vector<tempcom::Edge> edges;
  for (tempcom::NodeId i = 0; i < n; ++i)
    for (tempcom::NodeId j = i + 1; j < n; ++j)
      if (coin(gen)) edges.push_back({i, j});
  return tempcom::Snapshot::from_edges(n, edges);
}

inline Eigen::MatrixXd dense(const tempcom::Snapshot& s) {
  const auto n = static_cast<Eigen::Index>(s.num_nodes());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : s.edges()) a(e.u, e.v) = a(e.v, e.u) = 1.0;
  return a;
}

inline tempcom::Snapshot complete_graph(std::size_t n) {
  std::vector<tempcom::Edge> edges;
  for (tempcom::NodeId i = 0; i < n; ++i)
    for (tempcom::NodeId j = i + 1; j < n; ++j) edges.push_back({i, j});
  return tempcom::Snapshot::from_edges(n, edges);
}

// Relabels node v as perm[v].
inline tempcom::Snapshot permute(const tempcom::Snapshot& s, const std::vector<tempcom::NodeId>& perm) {
  std::vector<tempcom::Edge> edges;
  for (const auto& e : s.edges()) edges.push_back({perm[e.u], perm[e.v]});
  return tempcom::Snapshot::from_edges(s.num_nodes(), edges);
}

inline std::vector<tempcom::NodeId> random_permutation(std::size_t n, unsigned seed) {
  std::vector<tempcom::NodeId> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<tempcom::NodeId>(i);
  std::mt19937 gen(seed);
  std::shuffle(p.begin(), p.end(), gen);
  return p;
}

// Kolmogorov-Smirnov distance of a sample to Uniform(0, 1).
inline double ks_uniform(std::vector<double> x) {
  std::sort(x.begin(), x.end());
  const double n = static_cast<double>(x.size());
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    d = std::max(d, (static_cast<double>(i) + 1.0) / n - x[i]);
    d = std::max(d, x[i] - static_cast<double>(i) / n);
  }
  return d;
}

inline double mean(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v;
  return s / static_cast<double>(x.size());
}

inline double sample_sd(const std::vector<double>& x) {
  const double m = mean(x);
  double s = 0.0;
  for (double v : x) s += (v - m) * (v - m);
  return std::sqrt(s / static_cast<double>(x.size() - 1));
}

}  // namespace testing_support
