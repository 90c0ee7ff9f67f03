#pragma once

#include <string>
#include <utility>
#include <vector>

#include "axiograph/graph.hpp"
#include "axiograph/scenario.hpp"

namespace axiograph {

// Registry of the small graphs on which modularity's axiom failures can be
// exhibited with exact fractions. Each scenario is named for the move it
// demonstrates; the axiom harness reuses these as deterministic seeds so the
// same witnesses always surface before any randomized search.
//
// Scenario "pair-loops" / "pair-loops-extended": two heavy self-loop nodes
// joined by a light edge; extending the graph with an unrelated loop node
// flips which clustering of the pair wins (locality failure).
// Scenario "edge-cut": deleting a between-cluster edge (a consistent
// improvement) lowers the quality (monotonicity failure).
// Scenario "within-boost": raising a within-cluster edge flips the order of
// two clusterings (relative-monotonicity failure).

namespace registry {

inline Graph pair_loops() {
  GraphBuilder b;
  b.add_edge("a", "a", 2);
  b.add_edge("b", "b", 2);
  b.add_edge("a", "b", 1);
  return b.build();
}

inline Graph pair_loops_extended() {
  GraphBuilder b;
  b.add_edge("a", "a", 2);
  b.add_edge("b", "b", 2);
  b.add_edge("a", "b", 1);
  b.add_edge("c", "c", 4);
  return b.build();
}

inline Graph edge_cut_before() {
  GraphBuilder b;
  b.add_edge("a", "b", 1);
  b.add_edge("c", "c", 2);
  return b.build();
}

inline Graph edge_cut_after() {
  GraphBuilder b;
  b.add_edge("a", "b", 0);  // nodes stay, edge is gone
  b.add_edge("c", "c", 2);
  return b.build();
}

inline Graph within_boost_base() {
  GraphBuilder b;
  b.add_edge("a", "b", 1);
  b.add_edge("c", "c", 8);
  b.add_edge("d", "d", 1);
  return b.build();
}

inline Graph within_boost_boosted() {
  GraphBuilder b;
  b.add_edge("a", "b", 2);
  b.add_edge("c", "c", 8);
  b.add_edge("d", "d", 1);
  return b.build();
}

}  // namespace registry

struct CounterexampleValue {
  std::string graph;       // graph name within the scenario
  std::string clustering;  // clustering name within the scenario
  long long num = 0, den = 1;  // expected modularity, exact
  std::string note;
};

struct Counterexample {
  std::string name;
  std::vector<std::pair<std::string, Graph>> graphs;
  // clusterings as label blocks so they apply to every graph of the scenario
  std::vector<std::pair<std::string, std::vector<std::vector<std::string>>>>
      clusterings;
  std::vector<CounterexampleValue> values;

  const Graph& graph(const std::string& n) const {
    for (const auto& [name, g] : graphs)
      if (name == n) return g;
    throw InternalError("counterexample: no graph " + n);
  }
  Clustering clustering_on(const std::string& n, const Graph& g) const {
    for (const auto& [name, blocks] : clusterings)
      if (name == n) return AgreementScenario::materialize(g, blocks, {});
    throw InternalError("counterexample: no clustering " + n);
  }
};

inline std::vector<Counterexample> counterexample_suite() {
  std::vector<Counterexample> suite;

  {
    Counterexample c;
    c.name = "pair-loops";
    c.graphs.emplace_back("graph", registry::pair_loops());
    c.clusterings.emplace_back(
        "split", std::vector<std::vector<std::string>>{{"a"}, {"b"}});
    c.clusterings.emplace_back(
        "merged", std::vector<std::vector<std::string>>{{"a", "b"}});
    c.values.push_back({"graph", "split", 1, 6, ""});
    c.values.push_back({"graph", "merged", 0, 1, ""});
    suite.push_back(std::move(c));
  }
  {
    Counterexample c;
    c.name = "pair-loops-extended";
    c.graphs.emplace_back("graph", registry::pair_loops_extended());
    c.clusterings.emplace_back(
        "split", std::vector<std::vector<std::string>>{{"a"}, {"b"}, {"c"}});
    c.clusterings.emplace_back(
        "merged", std::vector<std::vector<std::string>>{{"a", "b"}, {"c"}});
    c.values.push_back({"graph", "split", 23, 50, ""});
    c.values.push_back({"graph", "merged", 24, 50, ""});
    suite.push_back(std::move(c));
  }
  {
    Counterexample c;
    c.name = "edge-cut";
    c.graphs.emplace_back("before", registry::edge_cut_before());
    c.graphs.emplace_back("after", registry::edge_cut_after());
    c.clusterings.emplace_back(
        "singletons",
        std::vector<std::vector<std::string>>{{"a"}, {"b"}, {"c"}});
    c.values.push_back({"before", "singletons", 1, 8, ""});
    c.values.push_back({"after", "singletons", 0, 1, ""});
    suite.push_back(std::move(c));
  }
  {
    Counterexample c;
    c.name = "within-boost";
    c.graphs.emplace_back("base", registry::within_boost_base());
    c.graphs.emplace_back("boosted", registry::within_boost_boosted());
    c.clusterings.emplace_back(
        "coarse", std::vector<std::vector<std::string>>{{"a", "b", "c"}, {"d"}});
    c.clusterings.emplace_back(
        "fine", std::vector<std::vector<std::string>>{{"a"}, {"b"}, {"c", "d"}});
    c.values.push_back({"base", "coarse", 20, 121, ""});
    c.values.push_back({"base", "fine", 16, 121, ""});
    c.values.push_back({"boosted", "coarse", 24, 169, ""});
    c.values.push_back(
        {"boosted", "fine", 28, 169,
         "often quoted as 28/121; recomputation gives 28/169, and the "
         "comparison against 24/169 is unchanged"});
    suite.push_back(std::move(c));
  }

  return suite;
}

}  // namespace axiograph
