#pragma once

// Community partitions: Newman-Girvan modularity, Clauset-Newman-Moore
// greedy agglomeration, and the expected edge density difference (E2D2)
// statistic with a greedy single-node hill climb.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <queue>
#include <span>
#include <vector>

#include "tempcom/error.hpp"
#include "tempcom/generators.hpp"
#include "tempcom/graph.hpp"

namespace tempcom {

// Labels 0..K-1 with every group non-empty.
class Partition {
 public:
  Partition() = default;

  // Renumbers groups in order of first appearance.
  explicit Partition(const std::vector<GroupId>& raw) : group_(raw.size()) {
    std::map<GroupId, GroupId> ids;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      auto [it, inserted] = ids.try_emplace(raw[i], static_cast<GroupId>(ids.size()));
      group_[i] = it->second;
    }
    k_ = ids.size();
    sizes_.assign(k_, 0);
    for (auto g : group_) ++sizes_[g];
  }

  static Partition single(std::size_t n) { return Partition(std::vector<GroupId>(n, 0)); }

  std::size_t size() const { return group_.size(); }
  std::size_t num_groups() const { return k_; }
  GroupId operator[](std::size_t i) const { return group_[i]; }
  const std::vector<GroupId>& groups() const { return group_; }
  const std::vector<std::size_t>& group_sizes() const { return sizes_; }

  CommunityLabels labels() const { return CommunityLabels(group_, k_); }

  friend bool operator==(const Partition& a, const Partition& b) { return a.group_ == b.group_; }

 private:
  std::vector<GroupId> group_;
  std::size_t k_ = 0;
  std::vector<std::size_t> sizes_;
};

// `node_id,group` lines with 1-based groups; `nodes` maps row i to an
// original node id (e.g. the component map of largest_connected_component).
inline void write_partition_csv(std::ostream& out, const Partition& part, std::span<const NodeId> nodes = {}) {
  if (!nodes.empty() && nodes.size() != part.size()) throw InvalidInput("node map size does not match partition");
  out << "node_id,group\n";
  for (std::size_t i = 0; i < part.size(); ++i) out << (nodes.empty() ? i : nodes[i]) << ',' << part[i] + 1 << '\n';
}

inline double modularity(const Snapshot& s, const Partition& part) {
  if (part.size() != s.num_nodes()) throw InvalidInput("partition size does not match graph");
  const double m = static_cast<double>(s.num_edges());
  if (m == 0) throw InvalidInput("modularity of an edgeless graph");
  std::vector<double> internal(part.num_groups(), 0.0), degree(part.num_groups(), 0.0);
  for (NodeId u = 0; u < s.num_nodes(); ++u) {
    degree[part[u]] += static_cast<double>(s.degree(u));
    for (NodeId v : s.neighbors(u))
      if (u < v && part[u] == part[v]) internal[part[u]] += 1.0;
  }
  double q = 0.0;
  for (std::size_t g = 0; g < part.num_groups(); ++g) q += internal[g] / m - std::pow(degree[g] / (2.0 * m), 2);
  return q;
}

// Merge history of the greedy modularity agglomeration.
class Dendrogram {
 public:
  struct Merge {
    NodeId absorbed;
    NodeId survivor;
  };

  Dendrogram(std::size_t n, std::vector<Merge> merges, std::vector<double> q)
      : n_(n), merges_(std::move(merges)), q_(std::move(q)) {}

  std::size_t num_nodes() const { return n_; }
  const std::vector<Merge>& merges() const { return merges_; }
  // modularity()[k] = Q after k merges (n - k communities)
  const std::vector<double>& modularity() const { return q_; }

  // Community count at the first level with maximal modularity.
  std::size_t best_k() const {
    const auto best = std::max_element(q_.begin(), q_.end()) - q_.begin();
    return n_ - static_cast<std::size_t>(best);
  }

  std::size_t min_k() const { return n_ - merges_.size(); }

  // Partition after replaying merges down to k communities.
  Partition cut(std::size_t k) const {
    if (k < min_k() || k > n_) throw InvalidInput("dendrogram has no level with that many communities");
    std::vector<NodeId> parent(n_);
    std::iota(parent.begin(), parent.end(), NodeId{0});
    auto find = [&](NodeId x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t i = 0; i < n_ - k; ++i) parent[find(merges_[i].absorbed)] = find(merges_[i].survivor);
    std::vector<GroupId> raw(n_);
    for (NodeId v = 0; v < n_; ++v) raw[v] = find(v);
    return Partition(raw);
  }

 private:
  std::size_t n_;
  std::vector<Merge> merges_;
  std::vector<double> q_;
};

// Clauset-Newman-Moore agglomeration run to the end. Merge gains are kept as
// exact integers (4m^2 dQ = 4m e_ij - 2 d_i d_j), so ties resolve
// deterministically: largest gain, then smallest (i, j).
inline Dendrogram greedy_modularity_dendrogram(const Snapshot& s) {
  const std::size_t n = s.num_nodes();
  const auto m = static_cast<std::int64_t>(s.num_edges());
  if (m == 0) throw InvalidInput("greedy modularity needs at least one edge");

  std::vector<std::map<NodeId, std::int64_t>> links(n);  // community -> edges to neighbour community
  std::vector<std::int64_t> deg(n);
  std::vector<std::uint32_t> version(n, 0);
  std::vector<bool> alive(n, true);
  std::int64_t q_num = 0;  // Q * 4m^2
  for (NodeId u = 0; u < n; ++u) {
    deg[u] = static_cast<std::int64_t>(s.degree(u));
    q_num -= deg[u] * deg[u];
    for (NodeId v : s.neighbors(u)) links[u][v] = 1;
  }

  struct Entry {
    std::int64_t gain;
    NodeId i, j;  // i < j
    std::uint32_t vi, vj;
    bool operator<(const Entry& o) const {
      if (gain != o.gain) return gain < o.gain;
      if (i != o.i) return i > o.i;
      return j > o.j;
    }
  };
  std::priority_queue<Entry> heap;
  auto push = [&](NodeId a, NodeId b, std::int64_t e) {
    if (a > b) std::swap(a, b);
    heap.push({4 * m * e - 2 * deg[a] * deg[b], a, b, version[a], version[b]});
  };
  for (NodeId u = 0; u < n; ++u)
    for (auto [v, e] : links[u])
      if (u < v) push(u, v, e);

  const double norm = 4.0 * static_cast<double>(m) * static_cast<double>(m);
  std::vector<Dendrogram::Merge> merges;
  std::vector<double> q{static_cast<double>(q_num) / norm};
  while (!heap.empty()) {
    const Entry top = heap.top();
    heap.pop();
    if (!alive[top.i] || !alive[top.j] || version[top.i] != top.vi || version[top.j] != top.vj) continue;
    // absorb the community with fewer links into the other
    NodeId keep = top.i, gone = top.j;
    if (links[keep].size() < links[gone].size()) std::swap(keep, gone);
    for (auto [c, e] : links[gone]) {
      if (c == keep) continue;
      links[keep][c] += e;
      auto& back = links[c];
      back.erase(gone);
      back[keep] += e;
    }
    links[keep].erase(gone);
    links[gone].clear();
    alive[gone] = false;
    deg[keep] += deg[gone];
    ++version[keep];
    q_num += top.gain;
    merges.push_back({gone, keep});
    q.push_back(static_cast<double>(q_num) / norm);
    for (auto [c, e] : links[keep]) push(keep, c, e);
  }
  return Dendrogram(n, std::move(merges), std::move(q));
}

// Greedy modularity communities: the dendrogram level with maximal
// modularity, merged further (best merges first) if that exceeds k_max.
inline Partition fast_greedy_k(const Snapshot& s, std::size_t k_max) {
  if (k_max == 0) throw InvalidInput("k_max must be positive");
  if (!is_connected(s)) throw InvalidInput("fast greedy expects a connected graph");
  if (s.num_nodes() == 1) return Partition::single(1);
  const Dendrogram d = greedy_modularity_dendrogram(s);
  return d.cut(std::min(d.best_k(), k_max));
}

// Sufficient statistics of E2D2 for a labelling.
struct E2d2Counts {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t k = 0;
  std::uint64_t edges_in = 0;  // intra-group edges
  std::uint64_t pairs_in = 0;  // sum_k C(n_k, 2)
};

// U = (1/K) (p_in - p_out) / p; nullopt where a denominator vanishes or K < 2.
inline std::optional<double> e2d2_value(const E2d2Counts& c) {
  const std::uint64_t pairs = static_cast<std::uint64_t>(c.n) * (c.n - 1) / 2;
  if (c.k < 2 || c.m == 0 || c.pairs_in == 0 || c.pairs_in >= pairs) return std::nullopt;
  const double p_in = static_cast<double>(c.edges_in) / static_cast<double>(c.pairs_in);
  const double p_out = static_cast<double>(c.m - c.edges_in) / static_cast<double>(pairs - c.pairs_in);
  const double p = static_cast<double>(c.m) / static_cast<double>(pairs);
  return (p_in - p_out) / p / static_cast<double>(c.k);
}

inline E2d2Counts e2d2_counts(const Snapshot& s, const Partition& part) {
  if (part.size() != s.num_nodes()) throw InvalidInput("partition size does not match graph");
  E2d2Counts c{s.num_nodes(), s.num_edges(), part.num_groups(), 0, 0};
  for (auto sz : part.group_sizes()) c.pairs_in += static_cast<std::uint64_t>(sz) * (sz - 1) / 2;
  for (NodeId u = 0; u < s.num_nodes(); ++u)
    for (NodeId v : s.neighbors(u))
      if (u < v && part[u] == part[v]) ++c.edges_in;
  return c;
}

// Expected edge density difference of `part` on `s`.
inline double e2d2(const Snapshot& s, const Partition& part) {
  if (part.num_groups() < 2) throw InvalidInput("E2D2 needs at least two groups");
  auto u = e2d2_value(e2d2_counts(s, part));
  if (!u) throw InvalidInput("E2D2 undefined: no intra-group pairs or no edges");
  return *u;
}

struct E2d2Max {
  Partition partition;
  double value = 0.0;
  double initial_value = 0.0;
  std::size_t sweeps = 0;
};

// Greedy approximation of max_c U(A, c).
//
// Start: greedy modularity communities capped at k_max (if that yields a
// single community, the two-community level of the same dendrogram). Then
// sweep nodes in index order; each node moves to the existing group giving
// the largest U (lowest group id on ties) when that strictly beats the
// current U. A move may empty a group but never leaves fewer than two.
// Stops after a sweep without moves.
inline E2d2Max greedy_e2d2_max(const Snapshot& s, std::size_t k_max) {
  if (k_max < 2) throw InvalidInput("E2D2 maximisation needs k_max >= 2");
  if (!is_connected(s)) throw InvalidInput("E2D2 maximisation expects a connected graph");
  if (s.num_nodes() < 3) throw InvalidInput("E2D2 maximisation needs at least 3 nodes");
  const Dendrogram d = greedy_modularity_dendrogram(s);
  std::size_t k0 = std::min(d.best_k(), k_max);
  if (k0 < 2) k0 = 2;
  Partition init = d.cut(k0);

  std::vector<GroupId> group = init.groups();
  std::vector<std::size_t> size = init.group_sizes();
  E2d2Counts c = e2d2_counts(s, init);
  auto current = e2d2_value(c);
  if (!current) throw InvalidInput("E2D2 undefined at the initial partition");

  E2d2Max out;
  out.initial_value = *current;
  const std::size_t groups = size.size();
  std::vector<std::uint64_t> nb(groups, 0);
  bool moved = true;
  while (moved) {
    moved = false;
    ++out.sweeps;
    for (NodeId v = 0; v < s.num_nodes(); ++v) {
      std::fill(nb.begin(), nb.end(), 0);
      for (NodeId w : s.neighbors(v)) ++nb[group[w]];
      const GroupId from = group[v];
      double best = *current;
      std::optional<GroupId> target;
      E2d2Counts best_counts{};
      for (GroupId to = 0; to < groups; ++to) {
        if (to == from || size[to] == 0) continue;
        E2d2Counts next = c;
        next.edges_in = c.edges_in - nb[from] + nb[to];
        next.pairs_in = c.pairs_in - (size[from] - 1) + size[to];
        next.k = c.k - (size[from] == 1 ? 1 : 0);
        if (next.k < 2) continue;
        auto u = e2d2_value(next);
        if (u && *u > best) {
          best = *u;
          target = to;
          best_counts = next;
        }
      }
      if (target) {
        --size[from];
        ++size[*target];
        group[v] = *target;
        c = best_counts;
        current = best;
        moved = true;
      }
    }
  }
  out.partition = Partition(group);
  out.value = *current;
  return out;
}

}  // namespace tempcom
