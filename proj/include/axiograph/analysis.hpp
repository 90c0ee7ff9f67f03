#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "axiograph/clustering.hpp"
#include "axiograph/errors.hpp"
#include "axiograph/graph.hpp"
#include "axiograph/numeric.hpp"
#include "axiograph/optimize.hpp"
#include "axiograph/quality.hpp"

// Parameter studies on two small families: the four-node two-community graph
// (how the optimal grouping shifts as the within mass w, the between mass b
// and the scale parameters move) and the ring of cliques (how merging sets in
// as the ring grows).

namespace axiograph {

// Four nodes x1,x2,y1,y2. Each pair {x1,x2} / {y1,y2} carries self loops of
// w/4 and a mutual edge of w/4, so its within weight (ordered pairs) totals
// w; the four cross pairs carry b/4 each, 2b in ordered total. Total volume
// is 2w + 2b.
inline Graph two_clique_graph(double w, double b) {
  if (!(w > 0.0) || !std::isfinite(w))
    throw InputError("two_clique_graph: w must be finite and > 0");
  if (!(b >= 0.0) || !std::isfinite(b))
    throw InputError("two_clique_graph: b must be finite and >= 0");
  GraphBuilder bld;
  bld.add_node("x1");
  bld.add_node("x2");
  bld.add_node("y1");
  bld.add_node("y2");
  bld.add_edge("x1", "x1", w / 4.0);
  bld.add_edge("x2", "x2", w / 4.0);
  bld.add_edge("x1", "x2", w / 4.0);
  bld.add_edge("y1", "y1", w / 4.0);
  bld.add_edge("y2", "y2", w / 4.0);
  bld.add_edge("y1", "y2", w / 4.0);
  if (b > 0.0) {
    bld.add_edge("x1", "y1", b / 4.0);
    bld.add_edge("x1", "y2", b / 4.0);
    bld.add_edge("x2", "y1", b / 4.0);
    bld.add_edge("x2", "y2", b / 4.0);
  }
  return bld.build();
}

// One evaluated grid point. q1/q2/q3 are the qualities of the one-cluster,
// two-clique and four-singleton groupings; outcome classifies the true
// argmax over all 15 partitions (1 = one cluster, 2 = the clique pair,
// 3 = anything else). m and gamma echo an adaptive-scale spec and are NaN
// for other spec kinds (the CSV sweep only ever uses adaptive specs).
struct SweepCell {
  double m = 0.0, gamma = 0.0;
  double w = 0.0, b = 0.0;
  double q1 = 0.0, q2 = 0.0, q3 = 0.0;
  int outcome = 0;
  bool tie = false;  // optima from more than one outcome class
};

inline SweepCell classify_outcome(const QualitySpec& spec, double w,
                                  double b) {
  Graph g = two_clique_graph(w, b);
  Clustering whole = Clustering::whole(4);
  Clustering cliques = Clustering::from_blocks(4, {{0, 1}, {2, 3}});
  Clustering singles = Clustering::singletons(4);

  SweepCell cell;
  if (spec.kind == QualityKind::adaptive_scale) {
    cell.m = spec.m;
    cell.gamma = spec.gamma;
  } else {
    cell.m = cell.gamma = std::numeric_limits<double>::quiet_NaN();
  }
  cell.w = w;
  cell.b = b;
  cell.q1 = evaluate(spec, g, whole);
  cell.q2 = evaluate(spec, g, cliques);
  cell.q3 = evaluate(spec, g, singles);

  OptimizeResult res = optimize_exact(spec, g);
  int best_class = 4;
  int worst_class = 0;
  for (const Clustering& opt : res.optima) {
    int cls = opt == whole ? 1 : opt == cliques ? 2 : 3;
    best_class = std::min(best_class, cls);
    worst_class = std::max(worst_class, cls);
  }
  cell.outcome = best_class;
  cell.tie = best_class != worst_class;
  return cell;
}

// Cells in deterministic row order: spec-grid order, then w, then b. Each
// (M, gamma) pair names an adaptive-scale spec; an invalid pair (both zero)
// is rejected the way any bad spec is.
inline std::vector<SweepCell> sweep(
    const std::vector<std::pair<double, double>>& spec_grid,
    const std::vector<double>& w_grid, const std::vector<double>& b_grid) {
  if (spec_grid.empty() || w_grid.empty() || b_grid.empty())
    throw InputError("sweep: grids must be nonempty");
  std::vector<SweepCell> cells;
  cells.reserve(spec_grid.size() * w_grid.size() * b_grid.size());
  for (const auto& [m, gamma] : spec_grid) {
    QualitySpec spec = QualitySpec::adaptive(m, gamma);
    for (double w : w_grid)
      for (double b : b_grid) cells.push_back(classify_outcome(spec, w, b));
  }
  return cells;
}

inline void write_sweep_csv(const std::vector<SweepCell>& cells,
                            std::ostream& out) {
  out << "M,gamma,w,b,q1,q2,q3,outcome,tie\n";
  for (const auto& c : cells) {
    out << format_value(c.m) << ',' << format_value(c.gamma) << ','
        << format_value(c.w) << ',' << format_value(c.b) << ','
        << format_value(c.q1) << ',' << format_value(c.q2) << ','
        << format_value(c.q3) << ',' << c.outcome << ',' << (c.tie ? 1 : 0)
        << '\n';
  }
}

// n cliques of s nodes, unit weights, no self loops; node 0 of clique t is
// tied to node 0 of clique t+1 (mod n) with weight 1. Node t*s+i is member i
// of clique t.
inline Graph ring_of_cliques(int n, int s) {
  if (n < 3) throw InputError("ring_of_cliques: n must be >= 3");
  if (s < 2) throw InputError("ring_of_cliques: s must be >= 2");
  GraphBuilder b;
  b.add_nodes(n * s);
  for (int t = 0; t < n; ++t)
    for (int i = 0; i < s; ++i)
      for (int j = i + 1; j < s; ++j) b.add_edge(t * s + i, t * s + j, 1.0);
  for (int t = 0; t < n; ++t) b.add_edge(t * s, ((t + 1) % n) * s, 1.0);
  return b.build();
}

struct RingResult {
  Clustering blocking;                   // over all n*s nodes
  std::vector<int> cliques_per_cluster;  // aligned with blocking's blocks
  int max_cliques_per_cluster = 0;
  double quality = 0.0;
  bool tie = false;           // another arc structure ties the best score
  std::uint32_t best_mask = 0;  // which ring edges the best structure cuts
};

// Exact argmax over clusterings that keep cliques whole and group them into
// contiguous arcs of the ring. A bitmask picks which ring edges to cut; a
// single cut still leaves one arc, so those masks alias mask 0 and are
// skipped to keep every candidate clustering distinct. Mask order breaks
// ties deterministically.
inline RingResult ring_resolution_demo(const QualitySpec& spec, int n, int s) {
  if (n < 3) throw InputError("ring_resolution_demo: n must be >= 3");
  if (s < 2) throw InputError("ring_resolution_demo: s must be >= 2");
  if (n > 20)
    throw InfeasibleError(
        "ring_resolution_demo: n capped at 20 (2^n arc structures)");
  Graph g = ring_of_cliques(n, s);
  Evaluator ev(spec, g);

  std::vector<int> clique_arc(std::size_t(n), 0);
  std::vector<int> member(std::size_t(n) * std::size_t(s));
  double best_q = -std::numeric_limits<double>::infinity();
  std::uint32_t best_mask = 0;
  bool tie = false;
  bool have_best = false;

  for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask) {
    int cuts = 0;
    for (int t = 0; t < n; ++t) cuts += int(mask >> t & 1u);
    if (cuts == 1) continue;  // one cut is still a single arc: same as mask 0
    int arcs;
    if (cuts == 0) {
      std::fill(clique_arc.begin(), clique_arc.end(), 0);
      arcs = 1;
    } else {
      int a = 0;
      for (int t = 0; t < n; ++t) {
        clique_arc[std::size_t(t)] = a;
        if (mask >> t & 1u) ++a;
      }
      // no cut behind clique 0: the tail wraps around into the first arc
      if (!(mask >> (n - 1) & 1u)) {
        for (int t = 0; t < n; ++t)
          if (clique_arc[std::size_t(t)] == cuts) clique_arc[std::size_t(t)] = 0;
      }
      arcs = cuts;
    }
    for (int t = 0; t < n; ++t)
      for (int i = 0; i < s; ++i)
        member[std::size_t(t * s + i)] = clique_arc[std::size_t(t)];
    double q = ev.quality(member, arcs);
    if (!have_best || q > best_q + tol::tie) {
      best_q = q;
      best_mask = mask;
      tie = false;
      have_best = true;
    } else if (q >= best_q - tol::tie) {
      tie = true;
    }
  }

  // rebuild the winning clustering
  {
    int cuts = 0;
    for (int t = 0; t < n; ++t) cuts += int(best_mask >> t & 1u);
    if (cuts == 0) {
      std::fill(clique_arc.begin(), clique_arc.end(), 0);
    } else {
      int a = 0;
      for (int t = 0; t < n; ++t) {
        clique_arc[std::size_t(t)] = a;
        if (best_mask >> t & 1u) ++a;
      }
      if (!(best_mask >> (n - 1) & 1u)) {
        for (int t = 0; t < n; ++t)
          if (clique_arc[std::size_t(t)] == cuts) clique_arc[std::size_t(t)] = 0;
      }
    }
    for (int t = 0; t < n; ++t)
      for (int i = 0; i < s; ++i)
        member[std::size_t(t * s + i)] = clique_arc[std::size_t(t)];
  }
  RingResult out{Clustering::from_membership(member), {}, 0, best_q, tie,
                 best_mask};
  for (int b = 0; b < out.blocking.block_count(); ++b) {
    int cliques = int(out.blocking.block(b).size()) / s;
    out.cliques_per_cluster.push_back(cliques);
    out.max_cliques_per_cluster = std::max(out.max_cliques_per_cluster,
                                           cliques);
  }
  return out;
}

}  // namespace axiograph
