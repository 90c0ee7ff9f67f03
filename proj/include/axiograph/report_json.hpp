#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "axiograph/axioms.hpp"

// JSON views of axiom reports. ordered_json keeps insertion order, so the
// output is byte-stable across runs.

namespace axiograph {

inline nlohmann::ordered_json graph_to_json(const Graph& g) {
  nlohmann::ordered_json nodes = nlohmann::ordered_json::array();
  for (int i = 0; i < g.node_count(); ++i) {
    nlohmann::ordered_json node;
    node["label"] = g.label(i);
    node["mass"] = g.node_mass(i);
    nodes.push_back(std::move(node));
  }
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const auto& e : g.edges())
    edges.push_back({g.label(e.u), g.label(e.v), e.w});
  nlohmann::ordered_json j;
  j["nodes"] = std::move(nodes);
  j["edges"] = std::move(edges);
  return j;
}

inline nlohmann::ordered_json blocks_to_json(const Clustering& c,
                                             const Graph& g) {
  nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
  for (int b = 0; b < c.block_count(); ++b) {
    nlohmann::ordered_json blk = nlohmann::ordered_json::array();
    for (int i : c.block(b)) blk.push_back(g.label(i));
    blocks.push_back(std::move(blk));
  }
  return blocks;
}

inline nlohmann::ordered_json witness_to_json(const Witness& w) {
  nlohmann::ordered_json j;
  j["description"] = w.description;
  nlohmann::ordered_json values;
  for (const auto& [name, v] : w.values) values[name] = v;
  j["values"] = std::move(values);
  if (!w.label_sets.empty()) {
    nlohmann::ordered_json sets;
    for (const auto& [name, ls] : w.label_sets) sets[name] = ls;
    j["sets"] = std::move(sets);
  }
  nlohmann::ordered_json clusterings = nlohmann::ordered_json::array();
  for (const auto& bc : w.clusterings) {
    nlohmann::ordered_json c;
    c["name"] = bc.name;
    c["graph"] = bc.graph;
    c["blocks"] = blocks_to_json(bc.clustering, w.graph(bc.graph));
    clusterings.push_back(std::move(c));
  }
  j["clusterings"] = std::move(clusterings);
  nlohmann::ordered_json graphs = nlohmann::ordered_json::array();
  for (const auto& [name, g] : w.graphs) {
    nlohmann::ordered_json gj = graph_to_json(g);
    nlohmann::ordered_json named;
    named["name"] = name;
    named["nodes"] = std::move(gj["nodes"]);
    named["edges"] = std::move(gj["edges"]);
    graphs.push_back(std::move(named));
  }
  j["graphs"] = std::move(graphs);
  return j;
}

inline nlohmann::ordered_json report_to_json(const AxiomReport& r) {
  nlohmann::ordered_json j;
  j["axiom"] = axiom_name(r.axiom);
  j["spec"] = r.spec.to_string();
  j["verdict"] = verdict_name(r.verdict);
  j["seed"] = r.seed;
  j["trials_run"] = r.trials_run;
  j["trials_requested"] = r.trials_requested;
  j["max_nodes"] = r.max_nodes;
  if (!r.source.empty()) j["source"] = r.source;
  if (r.case_index >= 0) j["case"] = r.case_index;
  if (!r.detail.empty()) j["detail"] = r.detail;
  if (r.witness) j["witness"] = witness_to_json(*r.witness);
  return j;
}

inline nlohmann::ordered_json reports_to_json(
    const std::vector<AxiomReport>& rs) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rs) arr.push_back(report_to_json(r));
  return arr;
}

}  // namespace axiograph
