#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "axiograph/clustering.hpp"
#include "axiograph/errors.hpp"
#include "axiograph/numeric.hpp"

namespace axiograph {

// Symmetric weighted graph with optional self loops and per-node mass.
//
// Convention used by every sum in this library: sums run over ORDERED node
// pairs, so an undirected edge {i,j} with i != j contributes its weight
// twice and a self loop contributes once. This is the only convention under
// which the registry counterexample values (1/6, 23/50, 24/50, ...) come out
// exactly.
//
// Storage is one sorted adjacency row per node; an undirected edge appears
// in both rows, a self loop appears once in its own row. Hence a row sum is
// already the ordered-pair degree of the node.
class Graph {
 public:
  struct Edge {
    int u, v;   // canonical: u <= v
    double w;   // > 0 (zero weights are simply absent)
  };

  int node_count() const { return n_; }
  const std::string& label(int i) const { return labels_[std::size_t(i)]; }
  const std::vector<std::string>& labels() const { return labels_; }

  // -1 if the label is unknown
  int id_of(const std::string& label) const {
    auto it = id_.find(label);
    return it == id_.end() ? -1 : it->second;
  }

  double node_mass(int i) const { return mass_[std::size_t(i)]; }
  double degree(int i) const { return degree_[std::size_t(i)]; }

  double weight(int i, int j) const {
    const auto& row = adj_[std::size_t(i)];
    auto it = std::lower_bound(
        row.begin(), row.end(), j,
        [](const std::pair<int, double>& e, int key) { return e.first < key; });
    return (it != row.end() && it->first == j) ? it->second : 0.0;
  }

  const std::vector<std::pair<int, double>>& row(int i) const {
    return adj_[std::size_t(i)];
  }

  // canonical (u <= v) edge list, sorted by (u, v)
  const std::vector<Edge>& edges() const { return edges_; }

  bool same_weights(const Graph& o) const {
    if (n_ != o.n_) return false;
    if (mass_ != o.mass_) return false;
    if (edges_.size() != o.edges_.size()) return false;
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      const Edge &a = edges_[k], &b = o.edges_[k];
      if (a.u != b.u || a.v != b.v || a.w != b.w) return false;
    }
    return true;
  }

 private:
  friend class GraphBuilder;
  int n_ = 0;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> id_;
  std::vector<double> mass_;
  std::vector<double> degree_;
  std::vector<std::vector<std::pair<int, double>>> adj_;
  std::vector<Edge> edges_;
};

class GraphBuilder {
 public:
  // Nodes may be declared up front or implicitly via labeled edges.
  int add_node(const std::string& label) {
    auto it = id_.find(label);
    if (it != id_.end()) return it->second;
    int i = int(labels_.size());
    id_.emplace(label, i);
    labels_.push_back(label);
    mass_.push_back(1.0);
    return i;
  }

  // n nodes labeled by their decimal ids
  void add_nodes(int n) {
    for (int i = 0; i < n; ++i) add_node(std::to_string(int(labels_.size())));
  }

  void set_mass(int i, double m) {
    check_id(i);
    if (!(m > 0.0) || !std::isfinite(m))
      throw InputError("graph: node mass must be finite and > 0");
    mass_[std::size_t(i)] = m;
  }

  // Weight 0 registers the endpoints but stores no edge. Declaring the same
  // unordered pair twice is an error: silent accumulation hides typos.
  void add_edge(int u, int v, double w) {
    check_id(u);
    check_id(v);
    if (!(w >= 0.0) || !std::isfinite(w))
      throw InputError("graph: edge weight must be finite and >= 0");
    if (u > v) std::swap(u, v);
    if (!seen_.emplace(std::uint64_t(u) << 32 | std::uint64_t(std::uint32_t(v)), true)
             .second)
      throw InputError("graph: duplicate edge " + labels_[std::size_t(u)] + " " +
                       labels_[std::size_t(v)]);
    if (w > 0.0) pending_.push_back({u, v, w});
  }

  void add_edge(const std::string& u, const std::string& v, double w) {
    int iu = add_node(u);
    int iv = add_node(v);
    add_edge(iu, iv, w);
  }

  Graph build() {
    Graph g;
    g.n_ = int(labels_.size());
    g.labels_ = std::move(labels_);
    g.id_ = std::move(id_);
    g.mass_ = std::move(mass_);
    std::sort(pending_.begin(), pending_.end(), [](const Graph::Edge& a,
                                                   const Graph::Edge& b) {
      return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    g.edges_ = std::move(pending_);
    g.adj_.assign(std::size_t(g.n_), {});
    for (const auto& e : g.edges_) {
      g.adj_[std::size_t(e.u)].emplace_back(e.v, e.w);
      if (e.u != e.v) g.adj_[std::size_t(e.v)].emplace_back(e.u, e.w);
    }
    for (auto& row : g.adj_)
      std::sort(row.begin(), row.end());
    g.degree_.assign(std::size_t(g.n_), 0.0);
    for (int i = 0; i < g.n_; ++i) {
      KahanSum s;
      for (const auto& [j, w] : g.adj_[std::size_t(i)]) s.add(w);
      g.degree_[std::size_t(i)] = s.value();
    }
    return g;
  }

 private:
  void check_id(int i) const {
    if (i < 0 || i >= int(labels_.size()))
      throw InputError("graph: unknown node id " + std::to_string(i));
  }
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> id_;
  std::vector<double> mass_;
  std::vector<Graph::Edge> pending_;
  std::unordered_map<std::uint64_t, bool> seen_;
};

// Per-cluster tallies; volume = within + between exactly up to accumulation.
struct ClusterStats {
  double within = 0.0;
  double volume = 0.0;
  double between = 0.0;
  double mass = 0.0;
  int size = 0;
};

namespace detail {
inline void check_node_set(const Graph& g, const std::vector<int>& s) {
  std::vector<char> seen(std::size_t(g.node_count()), 0);
  for (int i : s) {
    if (i < 0 || i >= g.node_count())
      throw InputError("node set: unknown node id " + std::to_string(i));
    if (seen[std::size_t(i)])
      throw InputError("node set: duplicate node id " + std::to_string(i));
    seen[std::size_t(i)] = 1;
  }
}
}  // namespace detail

// Sum of E(i,j) over ordered pairs with i in s (columns range over all of V).
inline double volume(const Graph& g, const std::vector<int>& s) {
  detail::check_node_set(g, s);
  KahanSum sum;
  for (int i : s) sum.add(g.degree(i));
  return sum.value();
}

inline double total_volume(const Graph& g) {
  KahanSum sum;
  for (int i = 0; i < g.node_count(); ++i) sum.add(g.degree(i));
  return sum.value();
}

// Sum of E(i,j) over ordered pairs with both endpoints in s.
inline double within_weight(const Graph& g, const std::vector<int>& s) {
  detail::check_node_set(g, s);
  std::vector<char> in(std::size_t(g.node_count()), 0);
  for (int i : s) in[std::size_t(i)] = 1;
  KahanSum sum;
  for (int i : s)
    for (const auto& [j, w] : g.row(i))
      if (in[std::size_t(j)]) sum.add(w);
  return sum.value();
}

// Tallies for all blocks at once given a membership vector with block ids in
// [0, k). The k-sized output vectors are caller-owned so the exhaustive
// optimizer can reuse them across millions of partitions.
inline void accumulate_stats(const Graph& g, const std::vector<int>& member,
                             int k, std::vector<KahanSum>& within,
                             std::vector<KahanSum>& vol,
                             std::vector<double>& mass,
                             std::vector<int>& size) {
  within.assign(std::size_t(k), KahanSum{});
  vol.assign(std::size_t(k), KahanSum{});
  mass.assign(std::size_t(k), 0.0);
  size.assign(std::size_t(k), 0);
  for (int i = 0; i < g.node_count(); ++i) {
    int b = member[std::size_t(i)];
    mass[std::size_t(b)] += g.node_mass(i);
    size[std::size_t(b)] += 1;
    vol[std::size_t(b)].add(g.degree(i));
    for (const auto& [j, w] : g.row(i))
      if (member[std::size_t(j)] == b) within[std::size_t(b)].add(w);
  }
}

inline std::vector<ClusterStats> cluster_stats(const Graph& g,
                                               const Clustering& c) {
  if (c.node_count() != g.node_count())
    throw InputError("cluster_stats: clustering does not match graph");
  std::vector<KahanSum> w, v;
  std::vector<double> m;
  std::vector<int> sz;
  accumulate_stats(g, c.membership(), c.block_count(), w, v, m, sz);
  std::vector<ClusterStats> out(std::size_t(c.block_count()));
  for (int b = 0; b < c.block_count(); ++b) {
    auto& s = out[std::size_t(b)];
    s.within = w[std::size_t(b)].value();
    s.volume = v[std::size_t(b)].value();
    s.between = s.volume - s.within;
    s.mass = m[std::size_t(b)];
    s.size = sz[std::size_t(b)];
  }
  return out;
}

inline Graph scale_graph(const Graph& g, double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw InputError("scale_graph: alpha must be finite and > 0");
  GraphBuilder b;
  for (int i = 0; i < g.node_count(); ++i) {
    b.add_node(g.label(i));
    b.set_mass(i, g.node_mass(i));
  }
  for (const auto& e : g.edges()) b.add_edge(e.u, e.v, alpha * e.w);
  return b.build();
}

// Weights, masses and labels all travel with the node: the image graph has
// E'(f(i), f(j)) = E(i, j).
inline Graph permute_graph(const Graph& g, const std::vector<int>& f) {
  if (int(f.size()) != g.node_count())
    throw InputError("permute_graph: map size mismatch");
  std::vector<int> inv(f.size(), -1);
  for (int i = 0; i < int(f.size()); ++i) {
    int y = f[std::size_t(i)];
    if (y < 0 || y >= int(f.size()) || inv[std::size_t(y)] != -1)
      throw InputError("permute_graph: not a bijection");
    inv[std::size_t(y)] = i;
  }
  GraphBuilder b;
  for (int y = 0; y < int(f.size()); ++y)
    b.add_node(g.label(inv[std::size_t(y)]));
  for (int y = 0; y < int(f.size()); ++y)
    b.set_mass(y, g.node_mass(inv[std::size_t(y)]));
  for (const auto& e : g.edges())
    b.add_edge(f[std::size_t(e.u)], f[std::size_t(e.v)], e.w);
  return b.build();
}

// Subgraph on the given node ids (sorted copy taken internally). Labels and
// masses travel; edges survive only when both endpoints stay.
inline Graph induced_subgraph(const Graph& g, std::vector<int> ids) {
  std::sort(ids.begin(), ids.end());
  std::vector<int> map(std::size_t(g.node_count()), -1);
  GraphBuilder b;
  for (int id : ids) {
    if (id < 0 || id >= g.node_count() || map[std::size_t(id)] != -1)
      throw InputError("induced_subgraph: bad node set");
    int nid = b.add_node(g.label(id));
    b.set_mass(nid, g.node_mass(id));
    map[std::size_t(id)] = nid;
  }
  for (const auto& e : g.edges())
    if (map[std::size_t(e.u)] >= 0 && map[std::size_t(e.v)] >= 0)
      b.add_edge(map[std::size_t(e.u)], map[std::size_t(e.v)], e.w);
  return b.build();
}

// Maximal sets connected through positive-weight edges; isolated nodes come
// out as singletons (a self loop does not connect a node to anything else).
inline Clustering connected_components(const Graph& g) {
  int n = g.node_count();
  std::vector<int> comp(std::size_t(n), -1);
  std::vector<int> stack;
  int next = 0;
  for (int start = 0; start < n; ++start) {
    if (comp[std::size_t(start)] != -1) continue;
    comp[std::size_t(start)] = next;
    stack.push_back(start);
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (const auto& [j, w] : g.row(i)) {
        (void)w;
        if (comp[std::size_t(j)] == -1) {
          comp[std::size_t(j)] = next;
          stack.push_back(j);
        }
      }
    }
    ++next;
  }
  return Clustering::from_membership(comp);
}

// E(i,j) = k whenever i and j share a block, including i = j, else 0.
inline Graph clique_graph(const Clustering& c, double k) {
  if (!(k > 0.0) || !std::isfinite(k))
    throw InputError("clique_graph: k must be finite and > 0");
  GraphBuilder b;
  b.add_nodes(c.node_count());
  for (const auto& block : c.blocks())
    for (std::size_t x = 0; x < block.size(); ++x)
      for (std::size_t y = x; y < block.size(); ++y)
        b.add_edge(block[x], block[y], k);
  return b.build();
}

// One node per block: self loop = block's within weight, cross edge = summed
// cross weight, mass = summed mass. Volumes are preserved, which is what
// makes sum-form qualities invariant under aggregation.
inline Graph aggregate_graph(const Graph& g, const Clustering& c) {
  if (c.node_count() != g.node_count())
    throw InputError("aggregate_graph: clustering does not match graph");
  int k = c.block_count();
  std::vector<int> member = c.membership();
  std::vector<KahanSum> acc(std::size_t(k) * std::size_t(k));
  for (const auto& e : g.edges()) {
    int bu = member[std::size_t(e.u)];
    int bv = member[std::size_t(e.v)];
    if (bu == bv) {
      // ordered-pair within weight: off-diagonal edges count twice
      acc[std::size_t(bu) * std::size_t(k) + std::size_t(bu)].add(
          e.u == e.v ? e.w : 2.0 * e.w);
    } else {
      int lo = std::min(bu, bv), hi = std::max(bu, bv);
      acc[std::size_t(lo) * std::size_t(k) + std::size_t(hi)].add(e.w);
    }
  }
  GraphBuilder b;
  b.add_nodes(k);
  for (int x = 0; x < k; ++x) {
    KahanSum m;
    for (int i : c.block(x)) m.add(g.node_mass(i));
    b.set_mass(x, m.value());
  }
  for (int x = 0; x < k; ++x)
    for (int y = x; y < k; ++y) {
      double w = acc[std::size_t(x) * std::size_t(k) + std::size_t(y)].value();
      if (w > 0.0) b.add_edge(x, y, w);
    }
  return b.build();
}

}  // namespace axiograph
