#pragma once

// Random graph models: Erdos-Renyi and Chung-Lu nulls, the stochastic block
// model, and three temporal alternatives (correlated SBM, dynamic SBM with
// Markov label chains, dynamic degree-corrected SBM).
//
// Group labels are 0-based internally; exported files use 1..K.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tempcom/error.hpp"
#include "tempcom/graph.hpp"
#include "tempcom/rng.hpp"

namespace tempcom {

using GroupId = std::uint32_t;

// Symmetric K x K matrix of edge probabilities.
class BlockMatrix {
 public:
  BlockMatrix(std::size_t k, std::vector<double> values) : k_(k), p_(std::move(values)) {
    if (k_ == 0 || p_.size() != k_ * k_) throw InvalidInput("block matrix must be K x K with K >= 1");
    for (std::size_t a = 0; a < k_; ++a)
      for (std::size_t b = 0; b < k_; ++b) {
        const double v = (*this)(a, b);
        if (!(v >= 0.0 && v <= 1.0)) throw InvalidInput("block probabilities must lie in [0, 1]");
        if (v != (*this)(b, a)) throw InvalidInput("block matrix must be symmetric");
      }
  }

  // b + delta/2 on the diagonal, b - delta/2 elsewhere.
  static BlockMatrix planted(std::size_t k, double b, double delta) {
    std::vector<double> v(k * k, b - delta / 2.0);
    for (std::size_t a = 0; a < k; ++a) v[a * k + a] = b + delta / 2.0;
    return BlockMatrix(k, std::move(v));
  }

  static BlockMatrix constant(std::size_t k, double b) { return BlockMatrix(k, std::vector<double>(k * k, b)); }

  std::size_t size() const { return k_; }
  double operator()(std::size_t a, std::size_t b) const { return p_[a * k_ + b]; }
  double max() const { return *std::max_element(p_.begin(), p_.end()); }

 private:
  std::size_t k_;
  std::vector<double> p_;
};

// Static group assignment with declared group count; groups may be empty.
class CommunityLabels {
 public:
  CommunityLabels() = default;
  CommunityLabels(std::vector<GroupId> group, std::size_t k) : group_(std::move(group)), k_(k) {
    for (auto g : group_)
      if (g >= k_) throw InvalidInput("group label out of range");
  }

  // First ceil(fraction * n) nodes in group 0, the rest in group 1.
  static CommunityLabels two_groups(std::size_t n, double fraction) {
    if (!(fraction >= 0.0 && fraction <= 1.0)) throw InvalidInput("group fraction must lie in [0, 1]");
    const auto first = static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(n) - 1e-9));
    std::vector<GroupId> g(n, 1);
    for (std::size_t i = 0; i < first && i < n; ++i) g[i] = 0;
    return CommunityLabels(std::move(g), 2);
  }

  std::size_t size() const { return group_.size(); }
  std::size_t num_groups() const { return k_; }
  GroupId operator[](std::size_t i) const { return group_[i]; }
  const std::vector<GroupId>& groups() const { return group_; }

  friend bool operator==(const CommunityLabels&, const CommunityLabels&) = default;

 private:
  std::vector<GroupId> group_;
  std::size_t k_ = 0;
};

using DynamicLabels = std::vector<CommunityLabels>;

struct MarkovLabelChain {
  std::vector<double> transition;  // K x K row-stochastic, row-major
  std::vector<double> initial;     // length K

  std::size_t num_groups() const { return initial.size(); }
  double operator()(std::size_t from, std::size_t to) const { return transition[from * initial.size() + to]; }

  void validate() const {
    const std::size_t k = initial.size();
    if (k == 0 || transition.size() != k * k) throw InvalidInput("label chain must be K x K with K >= 1");
    auto check_row = [](auto first, auto last, const char* what) {
      double sum = 0.0;
      for (auto it = first; it != last; ++it) {
        if (!(*it >= 0.0)) throw InvalidInput(std::string(what) + " has a negative entry");
        sum += *it;
      }
      if (std::abs(sum - 1.0) > 1e-12) throw InvalidInput(std::string(what) + " does not sum to 1");
    };
    for (std::size_t a = 0; a < k; ++a)
      check_row(transition.begin() + a * k, transition.begin() + (a + 1) * k, "transition row");
    check_row(initial.begin(), initial.end(), "initial distribution");
  }
};

struct DegreeWeights {
  std::vector<double> theta;
  double epsilon = 0.0;
};

namespace detail {

// Index of the category selected by u in [0, 1) under probabilities w.
inline std::size_t pick(std::span<const double> w, double u) {
  double acc = 0.0;
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    acc += w[k];
    if (u < acc) return k;
  }
  return w.size() - 1;
}

// Independent edges with per-pair probability prob(i, j); pairs visited in
// lexicographic order, one uniform draw per pair.
template <class Prob>
Snapshot sample_pairs(std::size_t n, Rng& rng, Prob&& prob) {
  std::vector<Edge> edges;
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j)
      if (rng.uniform() < prob(i, j)) edges.push_back({i, j});
  return Snapshot::from_sorted_unique(n, edges);
}

}  // namespace detail

// G(n, p) by geometric skipping over the lexicographic pair order.
inline Snapshot sample_er(std::size_t n, double p, Rng& rng) {
  if (n < 2) throw InvalidInput("ER graph needs n >= 2");
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("edge probability must lie in [0, 1]");
  std::vector<Edge> edges;
  if (p == 0.0) return Snapshot(n);
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  if (p == 1.0) {
    edges.reserve(pairs);
    for (NodeId i = 0; i < n; ++i)
      for (NodeId j = i + 1; j < n; ++j) edges.push_back({i, j});
    return Snapshot::from_sorted_unique(n, edges);
  }
  const double log1m_p = std::log1p(-p);
  // walk pair index k, tracking (i, j) incrementally
  std::uint64_t k = 0;
  NodeId i = 0;
  std::uint64_t row_start = 0;  // pair index of (i, i+1)
  while (true) {
    const std::uint64_t skip = rng.geometric_skip(log1m_p);
    if (skip >= pairs - k) break;
    k += skip;
    while (k >= row_start + (n - 1 - i)) {
      row_start += n - 1 - i;
      ++i;
    }
    const auto j = static_cast<NodeId>(i + 1 + (k - row_start));
    edges.push_back({i, j});
    ++k;
    if (k >= pairs) break;
  }
  return Snapshot::from_sorted_unique(n, edges);
}

inline Snapshot sample_er(std::size_t n, double p, std::uint64_t seed) {
  Rng rng(seed);
  return sample_er(n, p, rng);
}

inline Snapshot sample_sbm(const CommunityLabels& c, const BlockMatrix& b, Rng& rng) {
  if (c.num_groups() != b.size()) throw InvalidInput("labels and block matrix disagree on K");
  return detail::sample_pairs(c.size(), rng, [&](NodeId i, NodeId j) { return b(c[i], c[j]); });
}

inline Snapshot sample_sbm(const CommunityLabels& c, const BlockMatrix& b, std::uint64_t seed) {
  Rng rng(seed);
  return sample_sbm(c, b, rng);
}

// Snapshot 1 is an SBM draw; afterwards each pair follows the two-state chain
// P(1 -> 1) = B + rho (1 - B), P(0 -> 1) = B (1 - rho), which keeps the
// Bernoulli(B) marginal and gives lag-1 correlation rho.
inline TemporalNetwork sample_correlated_sbm(const CommunityLabels& c, const BlockMatrix& b, double rho,
                                             std::size_t T, std::uint64_t seed) {
  if (!(rho >= 0.0 && rho <= 1.0)) throw InvalidInput("rho must lie in [0, 1]");
  if (T == 0) throw InvalidInput("T must be positive");
  if (c.num_groups() != b.size()) throw InvalidInput("labels and block matrix disagree on K");
  const std::size_t n = c.size();
  std::vector<std::uint8_t> state(n * (n - 1) / 2 + 1, 0);
  std::vector<Snapshot> snaps;
  snaps.reserve(T);
  for (std::size_t t = 0; t < T; ++t) {
    Rng rng(derive_seed(seed, {t}));
    std::vector<Edge> edges;
    std::size_t k = 0;
    for (NodeId i = 0; i < n; ++i)
      for (NodeId j = i + 1; j < n; ++j, ++k) {
        const double base = b(c[i], c[j]);
        const double p = t == 0 ? base : (state[k] ? base + rho * (1.0 - base) : base * (1.0 - rho));
        state[k] = rng.uniform() < p;
        if (state[k]) edges.push_back({i, j});
      }
    snaps.push_back(Snapshot::from_sorted_unique(n, edges));
  }
  return TemporalNetwork(std::move(snaps));
}

// Independent per-node label paths: initial draw from alpha, then transitions.
inline DynamicLabels sample_label_chain(const MarkovLabelChain& chain, std::size_t n, std::size_t T,
                                        std::uint64_t seed) {
  chain.validate();
  if (T == 0) throw InvalidInput("T must be positive");
  const std::size_t k = chain.num_groups();
  std::vector<std::vector<GroupId>> paths(T, std::vector<GroupId>(n));
  Rng rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    auto g = static_cast<GroupId>(detail::pick(chain.initial, rng.uniform()));
    paths[0][i] = g;
    for (std::size_t t = 1; t < T; ++t) {
      std::span<const double> row(chain.transition.data() + g * k, k);
      g = static_cast<GroupId>(detail::pick(row, rng.uniform()));
      paths[t][i] = g;
    }
  }
  DynamicLabels out;
  out.reserve(T);
  for (auto& p : paths) out.emplace_back(std::move(p), k);
  return out;
}

struct DynamicSbmDraw {
  TemporalNetwork network;
  DynamicLabels labels;
};

// Labels from the chain; given labels, snapshots are independent SBM draws.
inline DynamicSbmDraw sample_dynamic_sbm(const MarkovLabelChain& chain, const BlockMatrix& b, std::size_t n,
                                         std::size_t T, std::uint64_t seed) {
  if (chain.num_groups() != b.size()) throw InvalidInput("label chain and block matrix disagree on K");
  DynamicSbmDraw out;
  out.labels = sample_label_chain(chain, n, T, derive_seed(seed, {0}));
  std::vector<Snapshot> snaps;
  snaps.reserve(T);
  for (std::size_t t = 0; t < T; ++t) snaps.push_back(sample_sbm(out.labels[t], b, derive_seed(seed, {1, t})));
  out.network = TemporalNetwork(std::move(snaps));
  return out;
}

inline DegreeWeights sample_degree_weights(std::size_t n, double epsilon, Rng& rng) {
  if (!(epsilon >= 0.0 && epsilon < 2.0)) throw InvalidInput("epsilon must lie in [0, 2)");
  DegreeWeights w{std::vector<double>(n), epsilon};
  for (auto& th : w.theta) th = rng.uniform(1.0 - epsilon / 2.0, 1.0 + epsilon / 2.0);
  return w;
}

struct DynamicDcbmDraw {
  TemporalNetwork network;
  DynamicLabels labels;
  std::vector<DegreeWeights> weights;  // fresh per snapshot
};

// Dynamic SBM labels plus per-snapshot weights theta ~ U(1 - eps/2, 1 + eps/2);
// edge probability theta_i theta_j B. Probabilities above 1 are rejected.
inline DynamicDcbmDraw sample_dynamic_dcbm(const MarkovLabelChain& chain, const BlockMatrix& b, double epsilon,
                                           std::size_t n, std::size_t T, std::uint64_t seed) {
  if (chain.num_groups() != b.size()) throw InvalidInput("label chain and block matrix disagree on K");
  DynamicDcbmDraw out;
  out.labels = sample_label_chain(chain, n, T, derive_seed(seed, {0}));
  std::vector<Snapshot> snaps;
  snaps.reserve(T);
  for (std::size_t t = 0; t < T; ++t) {
    Rng rng(derive_seed(seed, {1, t}));
    auto w = sample_degree_weights(n, epsilon, rng);
    const auto& c = out.labels[t];
    for (NodeId i = 0; i < n; ++i)
      for (NodeId j = i + 1; j < n; ++j)
        if (w.theta[i] * w.theta[j] * b(c[i], c[j]) > 1.0)
          throw InvalidInput("degree-corrected edge probability exceeds 1");
    snaps.push_back(detail::sample_pairs(
        n, rng, [&](NodeId i, NodeId j) { return w.theta[i] * w.theta[j] * b(c[i], c[j]); }));
    out.weights.push_back(std::move(w));
  }
  out.network = TemporalNetwork(std::move(snaps));
  return out;
}

// Independent edges with probability scale * theta_i * theta_j.
inline Snapshot sample_chung_lu(std::span<const double> theta, double scale, Rng& rng) {
  for (double th : theta)
    if (!(th >= 0.0) || !std::isfinite(th)) throw InvalidInput("weights must be finite and non-negative");
  if (!(scale >= 0.0)) throw InvalidInput("scale must be non-negative");
  double top1 = 0.0, top2 = 0.0;
  for (double th : theta) {
    if (th > top1) {
      top2 = top1;
      top1 = th;
    } else if (th > top2) {
      top2 = th;
    }
  }
  if (scale * top1 * top2 > 1.0) throw InvalidInput("Chung-Lu edge probability exceeds 1");
  return detail::sample_pairs(theta.size(), rng, [&](NodeId i, NodeId j) { return scale * theta[i] * theta[j]; });
}

inline Snapshot sample_chung_lu(const DegreeWeights& w, double scale, std::uint64_t seed) {
  Rng rng(seed);
  return sample_chung_lu(w.theta, scale, rng);
}

// Chung-Lu draw with probabilities min(theta_i theta_j, 1); returns the number
// of capped pairs through `capped`.
inline Snapshot sample_chung_lu_capped(std::span<const double> theta, Rng& rng, std::size_t& capped) {
  capped = 0;
  return detail::sample_pairs(theta.size(), rng, [&](NodeId i, NodeId j) {
    const double p = theta[i] * theta[j];
    if (p > 1.0) {
      ++capped;
      return 1.0;
    }
    return p;
  });
}

}  // namespace tempcom
