#pragma once

// Undirected simple graphs, temporal sequences of them, and ingestion of
// timestamped edge lists.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tempcom/error.hpp"

namespace tempcom {

using NodeId = std::uint32_t;

struct Edge {
  NodeId u;
  NodeId v;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Undirected simple graph on nodes [0, n) stored as sorted adjacency lists
// (CSR). Symmetric with zero diagonal by construction.
class Snapshot {
 public:
  Snapshot() : offsets_(1, 0) {}
  explicit Snapshot(std::size_t n) : n_(n), offsets_(n + 1, 0) {}

  // Self-loops are rejected; duplicate and reversed pairs collapse to one edge.
  static Snapshot from_edges(std::size_t n, std::vector<Edge> edges) {
    for (auto& e : edges) {
      if (e.u >= n || e.v >= n) throw InvalidInput("edge endpoint out of range");
      if (e.u == e.v) throw InvalidInput("self-loops are not allowed");
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return from_sorted_unique(n, edges);
  }

  // `edges` must be sorted lexicographically with u < v and no duplicates.
  static Snapshot from_sorted_unique(std::size_t n, std::span<const Edge> edges) {
    Snapshot s(n);
    for (const auto& e : edges) {
      ++s.offsets_[e.u + 1];
      ++s.offsets_[e.v + 1];
    }
    std::partial_sum(s.offsets_.begin(), s.offsets_.end(), s.offsets_.begin());
    s.adj_.resize(2 * edges.size());
    std::vector<std::size_t> cursor(s.offsets_.begin(), s.offsets_.end() - 1);
    // Lexicographic edge order yields sorted neighbour lists without a sort.
    for (const auto& e : edges) {
      s.adj_[cursor[e.u]++] = e.v;
      s.adj_[cursor[e.v]++] = e.u;
    }
    return s;
  }

  std::size_t num_nodes() const { return n_; }
  std::size_t num_edges() const { return adj_.size() / 2; }
  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {adj_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }

  bool has_edge(NodeId u, NodeId v) const {
    if (u >= n_ || v >= n_) return false;
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  // Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges());
    for (NodeId u = 0; u < n_; ++u)
      for (NodeId v : neighbors(u))
        if (u < v) out.push_back({u, v});
    return out;
  }

  // y = A x
  void multiply(std::span<const double> x, std::span<double> y) const {
    for (NodeId u = 0; u < n_; ++u) {
      double acc = 0.0;
      for (std::size_t k = offsets_[u]; k < offsets_[u + 1]; ++k) acc += x[adj_[k]];
      y[u] = acc;
    }
  }

  friend bool operator==(const Snapshot& a, const Snapshot& b) {
    return a.n_ == b.n_ && a.offsets_ == b.offsets_ && a.adj_ == b.adj_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> adj_;
};

class TemporalNetwork {
 public:
  TemporalNetwork() = default;
  explicit TemporalNetwork(std::vector<Snapshot> snapshots) : snapshots_(std::move(snapshots)) {
    if (snapshots_.empty()) throw InvalidInput("a temporal network needs at least one snapshot");
    for (const auto& s : snapshots_)
      if (s.num_nodes() != snapshots_.front().num_nodes())
        throw InvalidInput("all snapshots must share the node count");
  }

  std::size_t num_snapshots() const { return snapshots_.size(); }
  std::size_t num_nodes() const { return snapshots_.empty() ? 0 : snapshots_.front().num_nodes(); }
  const Snapshot& operator[](std::size_t t) const { return snapshots_[t]; }
  const std::vector<Snapshot>& snapshots() const { return snapshots_; }
  auto begin() const { return snapshots_.begin(); }
  auto end() const { return snapshots_.end(); }

  friend bool operator==(const TemporalNetwork&, const TemporalNetwork&) = default;

 private:
  std::vector<Snapshot> snapshots_;
};

struct EdgeEvent {
  NodeId i;
  NodeId j;
  double t;
};

// Fraction of ordered node pairs joined by an edge: 2m / (n(n-1)).
inline double edge_density(const Snapshot& s) {
  const double n = static_cast<double>(s.num_nodes());
  if (s.num_nodes() < 2) throw InvalidInput("edge density needs at least two nodes");
  return 2.0 * static_cast<double>(s.num_edges()) / (n * (n - 1.0));
}

// Component id per node (ids in order of smallest member) and the number of components.
inline std::pair<std::vector<std::uint32_t>, std::size_t> connected_components(const Snapshot& s) {
  constexpr auto unseen = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> comp(s.num_nodes(), unseen);
  std::vector<NodeId> stack;
  std::uint32_t count = 0;
  for (NodeId root = 0; root < s.num_nodes(); ++root) {
    if (comp[root] != unseen) continue;
    comp[root] = count;
    stack.push_back(root);
    while (!stack.empty()) {
      NodeId u = stack.back();
      stack.pop_back();
      for (NodeId v : s.neighbors(u))
        if (comp[v] == unseen) {
          comp[v] = count;
          stack.push_back(v);
        }
    }
    ++count;
  }
  return {std::move(comp), count};
}

inline bool is_connected(const Snapshot& s) {
  return s.num_nodes() > 0 && connected_components(s).second == 1;
}

// Subgraph induced by `nodes` (must be sorted, distinct); node k of the
// result is nodes[k] of the input.
inline Snapshot induced_subgraph(const Snapshot& s, std::span<const NodeId> nodes) {
  constexpr auto absent = std::numeric_limits<NodeId>::max();
  std::vector<NodeId> local(s.num_nodes(), absent);
  for (std::size_t k = 0; k < nodes.size(); ++k) local[nodes[k]] = static_cast<NodeId>(k);
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < nodes.size(); ++k)
    for (NodeId v : s.neighbors(nodes[k]))
      if (local[v] != absent && k < local[v]) edges.push_back({static_cast<NodeId>(k), local[v]});
  // nodes sorted and neighbour lists sorted => edges already lexicographic
  return Snapshot::from_sorted_unique(nodes.size(), edges);
}

struct Component {
  Snapshot graph;
  std::vector<NodeId> original;  // original[k] = input id of node k
};

// Largest connected component; ties go to the component holding the smallest node id.
inline Component largest_connected_component(const Snapshot& s) {
  if (s.num_nodes() == 0) throw InvalidInput("largest connected component of an empty graph");
  auto [comp, count] = connected_components(s);
  std::vector<std::size_t> size(count, 0);
  for (auto c : comp) ++size[c];
  // component ids are assigned in order of their smallest member, so the
  // first maximum is the tie-break winner
  const auto best = static_cast<std::uint32_t>(std::max_element(size.begin(), size.end()) - size.begin());
  std::vector<NodeId> nodes;
  nodes.reserve(size[best]);
  for (NodeId v = 0; v < s.num_nodes(); ++v)
    if (comp[v] == best) nodes.push_back(v);
  Snapshot g = nodes.size() == s.num_nodes() ? s : induced_subgraph(s, nodes);
  return {std::move(g), std::move(nodes)};
}

struct BinnedNetwork {
  TemporalNetwork network;
  std::vector<std::pair<double, double>> windows;  // [lo, hi) except the last, which is [lo, hi]
};

// Splits [t_min, t_max] into `bins` equal-width windows; an (i, j) pair with at
// least one event in a window is an edge of that window's snapshot. Self-loop
// events are dropped; every snapshot keeps all n nodes. When all events share
// one timestamp they land in the first window.
inline BinnedNetwork bin_events(std::span<const EdgeEvent> events, std::size_t bins, std::size_t n) {
  if (bins == 0) throw InvalidInput("number of bins must be positive");
  if (events.empty()) throw InvalidInput("no edge events");
  double t_min = std::numeric_limits<double>::infinity();
  double t_max = -t_min;
  std::size_t valid = 0;
  for (const auto& e : events) {
    if (e.i >= n || e.j >= n) throw InvalidInput("node id out of range");
    if (!std::isfinite(e.t)) throw InvalidInput("non-finite timestamp");
    if (e.i == e.j) continue;
    ++valid;
    t_min = std::min(t_min, e.t);
    t_max = std::max(t_max, e.t);
  }
  if (valid == 0) throw InvalidInput("no edge events between distinct nodes");

  const double width = (t_max - t_min) / static_cast<double>(bins);
  std::vector<std::vector<Edge>> per_bin(bins);
  for (const auto& e : events) {
    if (e.i == e.j) continue;
    std::size_t b = 0;
    if (width > 0.0) {
      const double pos = std::floor((e.t - t_min) / width);
      b = std::min(bins - 1, static_cast<std::size_t>(std::max(0.0, pos)));
    }
    per_bin[b].push_back({std::min(e.i, e.j), std::max(e.i, e.j)});
  }
  BinnedNetwork out;
  std::vector<Snapshot> snaps;
  snaps.reserve(bins);
  for (std::size_t b = 0; b < bins; ++b) {
    snaps.push_back(Snapshot::from_edges(n, std::move(per_bin[b])));
    const double lo = t_min + width * static_cast<double>(b);
    const double hi = b + 1 == bins ? t_max : t_min + width * static_cast<double>(b + 1);
    out.windows.emplace_back(lo, hi);
  }
  out.network = TemporalNetwork(std::move(snaps));
  return out;
}

struct EventList {
  std::vector<EdgeEvent> events;
  std::size_t num_nodes = 0;
  std::vector<std::string> labels;  // original ids when relabelled, indexed by dense id
};

// Parses `<src> <dst> <timestamp>` lines (whitespace or commas); `#` starts a
// comment line. Without relabelling, ids must be non-negative integers and
// n = max id + 1. With relabelling, arbitrary tokens are mapped to dense ids
// in order of first appearance.
inline EventList parse_events(std::istream& in, bool relabel = false, const std::string& source = "<input>") {
  EventList out;
  std::unordered_map<std::string, NodeId> dict;
  auto node_id = [&](const std::string& tok, std::size_t line) -> NodeId {
    if (relabel) {
      auto [it, inserted] = dict.try_emplace(tok, static_cast<NodeId>(out.labels.size()));
      if (inserted) out.labels.push_back(tok);
      return it->second;
    }
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      if (tok.empty() || tok[0] == '-') throw std::invalid_argument(tok);
      v = std::stoull(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || v >= std::numeric_limits<NodeId>::max())
      throw DataError(source + ":" + std::to_string(line) + ": invalid node id '" + tok + "'");
    return static_cast<NodeId>(v);
  };

  std::string text;
  std::size_t line = 0;
  std::size_t max_id = 0;
  bool any = false;
  while (std::getline(in, text)) {
    ++line;
    auto first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos || text[first] == '#') continue;
    std::replace(text.begin(), text.end(), ',', ' ');
    std::istringstream fields(text);
    std::string a, b, t, extra;
    if (!(fields >> a >> b >> t))
      throw DataError(source + ":" + std::to_string(line) + ": expected '<src> <dst> <timestamp>'");
    if (fields >> extra)
      throw DataError(source + ":" + std::to_string(line) + ": unexpected trailing field '" + extra + "'");
    double ts = 0.0;
    std::size_t used = 0;
    try {
      ts = std::stod(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != t.size() || !std::isfinite(ts))
      throw DataError(source + ":" + std::to_string(line) + ": invalid timestamp '" + t + "'");
    const NodeId i = node_id(a, line);
    const NodeId j = node_id(b, line);
    max_id = std::max<std::size_t>(max_id, std::max(i, j));
    any = true;
    out.events.push_back({i, j, ts});
  }
  out.num_nodes = relabel ? out.labels.size() : (any ? max_id + 1 : 0);
  return out;
}

inline EventList read_events(const std::string& path, bool relabel = false) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  return parse_events(in, relabel, path);
}

// `# n=<n> t=<index>[ window=[lo,hi)]` header followed by `u v` lines.
inline void write_snapshot(std::ostream& out, const Snapshot& s, std::size_t index,
                           std::optional<std::pair<double, double>> window = std::nullopt,
                           bool last_window = false) {
  out << "# n=" << s.num_nodes() << " t=" << index;
  if (window) {
    std::ostringstream w;
    w.precision(17);
    w << " window=[" << window->first << "," << window->second << (last_window ? "]" : ")");
    out << w.str();
  }
  out << '\n';
  for (const auto& e : s.edges()) out << e.u << ' ' << e.v << '\n';
}

// Reads the format written by write_snapshot.
inline Snapshot parse_snapshot(std::istream& in, const std::string& source = "<input>") {
  std::string text;
  std::size_t line = 0;
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  while (std::getline(in, text)) {
    ++line;
    if (text.empty()) continue;
    if (text[0] == '#') {
      auto pos = text.find("n=");
      if (!n && pos != std::string::npos) n = std::stoull(text.substr(pos + 2));
      continue;
    }
    std::istringstream fields(text);
    unsigned long long u = 0, v = 0;
    if (!(fields >> u >> v)) throw DataError(source + ":" + std::to_string(line) + ": expected '<u> <v>'");
    edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v)});
  }
  if (!n) throw DataError(source + ": missing '# n=' header");
  try {
    return Snapshot::from_edges(*n, std::move(edges));
  } catch (const InvalidInput& e) {
    throw DataError(source + ": " + e.what());
  }
}

}  // namespace tempcom
