#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <thread>
#include <vector>

#include "axiograph/graph.hpp"
#include "axiograph/partitions.hpp"
#include "axiograph/quality.hpp"
#include "axiograph/rng.hpp"

namespace axiograph {

struct OptimizeResult {
  double best_quality = 0.0;
  // every stored clustering evaluates to best_quality within tol::tie;
  // storage is capped, tie_count is always the exact number of ties
  std::vector<Clustering> optima;
  std::uint64_t tie_count = 0;
  bool unique = false;  // tie_count == 1
  std::uint64_t partitions_examined = 0;
  bool optima_truncated = false;
};

inline constexpr std::size_t kMaxStoredOptima = 64;

namespace detail {

inline int optimize_threads() {
  if (const char* env = std::getenv("AXIOGRAPH_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1 && v <= 256) return int(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return int(hw == 0 ? 1 : std::min(hw, 8u));
}

struct ShardScan {
  double best = 0.0;
  bool any = false;
  std::uint64_t examined = 0;
  std::uint64_t ties = 0;
  std::vector<Clustering> optima;
};

// pass 1: shard maximum; pass 2 (with a global threshold): tie collection
template <bool kCollect>
inline void scan_shard(const QualitySpec& spec, const Graph& g,
                       const std::vector<int>& prefix, int cap,
                       double threshold, ShardScan& out) {
  Evaluator ev(spec, g);
  PartitionEnumerator e(g.node_count(), prefix, cap);
  do {
    double q = ev.quality(e.rgs(), e.block_count());
    ++out.examined;
    if (!out.any || q > out.best) {
      out.best = q;
      out.any = true;
    }
    if (kCollect && q >= threshold) {
      ++out.ties;
      if (out.optima.size() < kMaxStoredOptima)
        out.optima.push_back(Clustering::from_membership(e.rgs()));
    }
  } while (e.advance());
}

}  // namespace detail

// Global argmax over every partition of the node set. Two passes: the first
// finds the maximum, the second counts and collects everything within
// tol::tie of it, so tie counts are exact even when the stored list is
// capped. Shards (fixed RGS prefixes) are merged in lexicographic order,
// making the result identical whatever AXIOGRAPH_THREADS says.
inline OptimizeResult optimize_exact(const QualitySpec& spec, const Graph& g,
                                     int cap = kEnumerationCap) {
  int n = g.node_count();
  if (n > cap)
    throw InfeasibleError("optimize_exact: " + std::to_string(n) +
                          " nodes exceeds the enumeration cap " +
                          std::to_string(cap));

  int threads = detail::optimize_threads();
  std::vector<std::vector<int>> prefixes;
  if (threads > 1 && n >= 10)
    prefixes = rgs_prefixes(n, 5);  // Bell(5) = 52 shards
  else
    prefixes = {{}};

  auto run_pass = [&](bool collect, double threshold,
                      std::vector<detail::ShardScan>& scans) {
    scans.assign(prefixes.size(), {});
    if (prefixes.size() == 1) {
      if (collect)
        detail::scan_shard<true>(spec, g, prefixes[0], cap, threshold, scans[0]);
      else
        detail::scan_shard<false>(spec, g, prefixes[0], cap, threshold, scans[0]);
      return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        std::size_t s = next.fetch_add(1);
        if (s >= prefixes.size()) return;
        if (collect)
          detail::scan_shard<true>(spec, g, prefixes[s], cap, threshold,
                                   scans[s]);
        else
          detail::scan_shard<false>(spec, g, prefixes[s], cap, threshold,
                                    scans[s]);
      }
    };
    std::vector<std::thread> pool;
    int nthreads = std::min<int>(threads, int(prefixes.size()));
    pool.reserve(std::size_t(nthreads));
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  };

  std::vector<detail::ShardScan> scans;
  run_pass(false, 0.0, scans);

  OptimizeResult res;
  bool any = false;
  for (const auto& s : scans) {
    res.partitions_examined += s.examined;
    if (s.any && (!any || s.best > res.best_quality)) {
      res.best_quality = s.best;
      any = true;
    }
  }
  if (!any) throw InternalError("optimize_exact: empty partition stream");

  run_pass(true, res.best_quality - tol::tie, scans);
  for (const auto& s : scans) {
    res.tie_count += s.ties;
    for (const auto& c : s.optima) {
      if (res.optima.size() < kMaxStoredOptima)
        res.optima.push_back(c);
      else
        res.optima_truncated = true;
    }
  }
  if (res.tie_count > res.optima.size()) res.optima_truncated = true;
  res.unique = res.tie_count == 1;
  return res;
}

namespace detail {

// One local-move sweep state over a working graph. Cluster contributions are
// any function of (within, volume, mass), so move gains are evaluated by
// recomputing the two touched clusters' terms.
class LocalMover {
 public:
  LocalMover(const QualitySpec& spec, const Graph& g)
      : g_(&g), term_{spec, 0.0} {
    if (needs_total_volume(spec.kind)) term_.vv = total_volume(g);
    int n = g.node_count();
    member_.resize(std::size_t(n));
    w_.assign(std::size_t(n), 0.0);
    v_.assign(std::size_t(n), 0.0);
    mass_.assign(std::size_t(n), 0.0);
    count_.assign(std::size_t(n), 0);
    for (int i = 0; i < n; ++i) {
      member_[std::size_t(i)] = i;
      w_[std::size_t(i)] = g.weight(i, i);
      v_[std::size_t(i)] = g.degree(i);
      mass_[std::size_t(i)] = g.node_mass(i);
      count_[std::size_t(i)] = 1;
    }
  }

  // true if any move was accepted during the sweep
  bool sweep(Rng& rng) {
    int n = g_->node_count();
    std::vector<int> order(std::size_t(n), 0);
    for (int i = 0; i < n; ++i) order[std::size_t(i)] = i;
    rng.shuffle(order);
    bool moved = false;
    for (int i : order) moved |= try_move(i);
    return moved;
  }

  const std::vector<int>& membership() const { return member_; }

 private:
  double term(double w, double v, double m) const {
    return v <= 0.0 && w <= 0.0 && m <= 0.0 ? 0.0 : term_(w, v, m);
  }

  bool try_move(int i) {
    int a = member_[std::size_t(i)];
    double self = g_->weight(i, i);
    double deg = g_->degree(i);
    double mi = g_->node_mass(i);

    // links from i to each adjacent cluster (excluding the self loop)
    links_.clear();
    double link_a = 0.0;
    for (const auto& [j, w] : g_->row(i)) {
      if (j == i) continue;
      int b = member_[std::size_t(j)];
      if (b == a) {
        link_a += w;
        continue;
      }
      bool found = false;
      for (auto& [cl, lw] : links_)
        if (cl == b) {
          lw += w;
          found = true;
          break;
        }
      if (!found) links_.emplace_back(b, w);
    }
    std::sort(links_.begin(), links_.end());

    double base_a = term(w_[std::size_t(a)], v_[std::size_t(a)], mass_[std::size_t(a)]);
    double wa2 = w_[std::size_t(a)] - 2.0 * link_a - self;
    double va2 = v_[std::size_t(a)] - deg;
    double ma2 = mass_[std::size_t(a)] - mi;
    double after_a =
        count_[std::size_t(a)] == 1 ? 0.0 : term(wa2, va2, ma2);
    double leave = after_a - base_a;

    double best_gain = 0.0;
    int best_cluster = -1;
    auto consider = [&](int b, double link_b) {
      double base_b = term(w_[std::size_t(b)], v_[std::size_t(b)], mass_[std::size_t(b)]);
      double after_b = term(w_[std::size_t(b)] + 2.0 * link_b + self,
                            v_[std::size_t(b)] + deg, mass_[std::size_t(b)] + mi);
      double gain = leave + after_b - base_b;
      if (gain > best_gain) {
        best_gain = gain;
        best_cluster = b;
      }
    };
    for (const auto& [b, lw] : links_) consider(b, lw);
    // detaching into a fresh singleton can undo an early bad merge
    if (count_[std::size_t(a)] > 1 && !free_.empty()) {
      int b = free_.back();
      double base_b = 0.0;
      double after_b = term(self, deg, mi);
      double gain = leave + after_b - base_b;
      if (gain > best_gain) {
        best_gain = gain;
        best_cluster = b;
      }
    }

    if (best_cluster < 0 || best_gain <= tol::greedy_gain) return false;

    int b = best_cluster;
    if (!count_[std::size_t(b)]) {
      if (free_.empty() || free_.back() != b)
        throw InternalError("greedy: free-list out of sync");
      free_.pop_back();
    }
    double link_b = 0.0;
    for (const auto& [cl, lw] : links_)
      if (cl == b) link_b = lw;
    w_[std::size_t(a)] = wa2;
    v_[std::size_t(a)] = va2;
    mass_[std::size_t(a)] = ma2;
    count_[std::size_t(a)] -= 1;
    if (count_[std::size_t(a)] == 0) free_.push_back(a);
    w_[std::size_t(b)] += 2.0 * link_b + self;
    v_[std::size_t(b)] += deg;
    mass_[std::size_t(b)] += mi;
    count_[std::size_t(b)] += 1;
    member_[std::size_t(i)] = b;
    return true;
  }

  const Graph* g_;
  ClusterTerm term_;
  std::vector<int> member_;
  std::vector<double> w_, v_, mass_;
  std::vector<int> count_;
  std::vector<int> free_;
  std::vector<std::pair<int, double>> links_;
};

}  // namespace detail

// Seeded greedy heuristic: local moves from singletons until no gain above
// tol::greedy_gain, then aggregate clusters into nodes and repeat on the
// contracted graph. Deterministic for a fixed seed. For coco the components
// are the optimum by definition, so they are returned directly.
inline Clustering optimize_greedy(const QualitySpec& spec, const Graph& g,
                                  std::uint64_t seed) {
  if (spec.kind == QualityKind::coco) return connected_components(g);

  std::vector<int> assign(std::size_t(g.node_count()));
  for (int i = 0; i < g.node_count(); ++i) assign[std::size_t(i)] = i;
  Graph level_graph = g;

  for (int level = 0; level < 64; ++level) {
    detail::LocalMover mover(spec, level_graph);
    Rng rng = Rng::keyed(seed, std::uint64_t(level));
    bool moved = false;
    for (int round = 0; round < 256; ++round) {
      if (!mover.sweep(rng)) break;
      moved = true;
    }
    if (!moved) break;
    Clustering local = Clustering::from_membership(mover.membership());
    if (local.block_count() == level_graph.node_count()) break;
    std::vector<int> lm = local.membership();
    for (auto& a : assign) a = lm[std::size_t(a)];
    if (local.block_count() == 1) break;
    level_graph = aggregate_graph(level_graph, local);
  }
  return Clustering::from_membership(assign);
}

}  // namespace axiograph
