#pragma once

#include <string>
#include <vector>

#include "axiograph/graph.hpp"

namespace axiograph {

// Node identity ACROSS two graphs is by label: two graphs share a node iff
// they both carry its label. Ids are per-graph and may collide numerically
// between a node of g1 and an unrelated node of g2.

enum class AgreementMode { plain, with_neighborhood };

namespace detail {
inline std::vector<int> map_labels(const Graph& from, const Graph& to,
                                   const std::vector<int>& ids,
                                   const char* what) {
  std::vector<int> out;
  out.reserve(ids.size());
  for (int i : ids) {
    if (i < 0 || i >= from.node_count())
      throw InputError(std::string(what) + ": unknown node id");
    int j = to.id_of(from.label(i));
    if (j < 0)
      throw InputError(std::string(what) + ": node '" + from.label(i) +
                       "' missing from the other graph");
    out.push_back(j);
  }
  return out;
}
}  // namespace detail

// Do g1 and g2 agree on va (given as g1 ids)?
//   plain:             E1(i,j) = E2(i,j) for all i,j in va
//   with_neighborhood: additionally, for i in va: E1(i,j) = E2(i,j) for all
//                      shared j, E1(i,j) = 0 for j only in g1, and
//                      E2(i,j) = 0 for j only in g2.
inline bool check_agreement(const Graph& g1, const Graph& g2,
                            const std::vector<int>& va, AgreementMode mode) {
  detail::check_node_set(g1, va);
  std::vector<int> va2 = detail::map_labels(g1, g2, va, "check_agreement");

  if (mode == AgreementMode::plain) {
    for (std::size_t a = 0; a < va.size(); ++a)
      for (std::size_t b = a; b < va.size(); ++b)
        if (g1.weight(va[a], va[b]) != g2.weight(va2[a], va2[b])) return false;
    return true;
  }

  std::vector<char> in_va1(std::size_t(g1.node_count()), 0);
  for (int i : va) in_va1[std::size_t(i)] = 1;
  for (std::size_t a = 0; a < va.size(); ++a) {
    int i1 = va[a], i2 = va2[a];
    for (int j1 = 0; j1 < g1.node_count(); ++j1) {
      int j2 = g2.id_of(g1.label(j1));
      if (j2 >= 0) {
        if (g1.weight(i1, j1) != g2.weight(i2, j2)) return false;
      } else {
        if (g1.weight(i1, j1) != 0.0) return false;
      }
    }
    for (int j2 = 0; j2 < g2.node_count(); ++j2)
      if (g1.id_of(g2.label(j2)) < 0 && g2.weight(i2, j2) != 0.0) return false;
  }
  return true;
}

// Is g2 a c-consistent improvement of g? Within-block weights may only rise,
// cross-block weights may only fall; node sets must match (by label).
inline bool is_consistent_improvement(const Graph& g, const Graph& g2,
                                      const Clustering& c) {
  if (c.node_count() != g.node_count())
    throw InputError("is_consistent_improvement: clustering does not match graph");
  if (g.node_count() != g2.node_count())
    throw InputError("is_consistent_improvement: node sets differ");
  std::vector<int> ids(std::size_t(g.node_count()));
  for (int i = 0; i < g.node_count(); ++i) ids[std::size_t(i)] = i;
  std::vector<int> to2 = detail::map_labels(g, g2, ids, "is_consistent_improvement");

  std::vector<int> member = c.membership();
  auto ok_pair = [&](int i, int j) {
    double w1 = g.weight(i, j);
    double w2 = g2.weight(to2[std::size_t(i)], to2[std::size_t(j)]);
    bool within = member[std::size_t(i)] == member[std::size_t(j)];
    return within ? w2 >= w1 : w2 <= w1;
  };
  // every pair carrying weight in either graph must satisfy its inequality;
  // pairs at 0 in both trivially do
  for (const auto& e : g.edges())
    if (!ok_pair(e.u, e.v)) return false;
  std::vector<int> inv(std::size_t(g2.node_count()));
  for (int i = 0; i < g.node_count(); ++i) inv[std::size_t(to2[std::size_t(i)])] = i;
  for (const auto& e : g2.edges())
    if (!ok_pair(inv[std::size_t(e.u)], inv[std::size_t(e.v)])) return false;
  return true;
}

// Everything the locality axiom quantifies over: two graphs that agree on a
// shared core va (with its neighborhood), two rival clusterings of the core,
// and clusterings of each graph's private remainder. Stored as label blocks
// so one scenario applies to both graphs.
struct AgreementScenario {
  Graph g1, g2;
  std::vector<std::string> va;
  std::vector<std::vector<std::string>> ca, da;  // partitions of va
  std::vector<std::vector<std::string>> c1;      // partition of V1 \ va
  std::vector<std::vector<std::string>> c2;      // partition of V2 \ va

  std::vector<int> va_ids_in(const Graph& g) const {
    std::vector<int> out;
    out.reserve(va.size());
    for (const auto& l : va) {
      int i = g.id_of(l);
      if (i < 0) throw InputError("scenario: core label missing: " + l);
      out.push_back(i);
    }
    return out;
  }

  // full clustering of g from core blocks + remainder blocks
  static Clustering materialize(const Graph& g,
                                const std::vector<std::vector<std::string>>& core,
                                const std::vector<std::vector<std::string>>& rest) {
    std::vector<std::vector<int>> blocks;
    auto push = [&](const std::vector<std::vector<std::string>>& part) {
      for (const auto& blk : part) {
        std::vector<int> ids;
        ids.reserve(blk.size());
        for (const auto& l : blk) {
          int i = g.id_of(l);
          if (i < 0) throw InputError("scenario: label missing: " + l);
          ids.push_back(i);
        }
        blocks.push_back(std::move(ids));
      }
    };
    push(core);
    push(rest);
    return Clustering::from_blocks(g.node_count(), std::move(blocks));
  }

  Clustering first_on_g1() const { return materialize(g1, ca, c1); }
  Clustering second_on_g1() const { return materialize(g1, da, c1); }
  Clustering first_on_g2() const { return materialize(g2, ca, c2); }
  Clustering second_on_g2() const { return materialize(g2, da, c2); }
};

}  // namespace axiograph
