#pragma once

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "axiograph/graph.hpp"

namespace axiograph {

// Graph file: one edge per line, "<label> <label> <weight>", whitespace
// separated; "u u w" is a self loop; "#" starts a comment line; a weight of
// 0 declares its endpoints without adding an edge (the only way to put an
// isolated node in a file). Clustering file: "<node-label> <cluster-label>"
// per line, every graph node exactly once.

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline double parse_weight(const std::string& tok, const std::string& file,
                           int line) {
  const char* s = tok.c_str();
  char* end = nullptr;
  double w = std::strtod(s, &end);
  if (end == s || *end != '\0' || !std::isfinite(w))
    throw ParseError(file, line, "bad weight '" + tok + "'");
  if (w < 0.0) throw ParseError(file, line, "negative weight '" + tok + "'");
  return w;
}

}  // namespace detail

inline Graph parse_graph(const std::string& text,
                         const std::string& file = "<graph>") {
  GraphBuilder b;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto toks = detail::split_ws(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    if (toks.size() != 3)
      throw ParseError(file, lineno, "expected '<label> <label> <weight>'");
    double w = detail::parse_weight(toks[2], file, lineno);
    try {
      b.add_edge(toks[0], toks[1], w);
    } catch (const InputError& e) {
      throw ParseError(file, lineno, e.what());
    }
  }
  return b.build();
}

inline std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  std::vector<char> touched(std::size_t(g.node_count()), 0);
  for (const auto& e : g.edges()) {
    touched[std::size_t(e.u)] = 1;
    touched[std::size_t(e.v)] = 1;
    out << g.label(e.u) << ' ' << g.label(e.v) << ' ' << format_exact(e.w)
        << '\n';
  }
  for (int i = 0; i < g.node_count(); ++i)
    if (!touched[std::size_t(i)])
      out << g.label(i) << ' ' << g.label(i) << " 0\n";
  return out.str();
}

inline Clustering parse_clustering(const std::string& text, const Graph& g,
                                   const std::string& file = "<clustering>") {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::vector<int> member(std::size_t(g.node_count()), -1);
  std::vector<std::string> block_names;
  auto block_id = [&](const std::string& name) {
    for (std::size_t k = 0; k < block_names.size(); ++k)
      if (block_names[k] == name) return int(k);
    block_names.push_back(name);
    return int(block_names.size()) - 1;
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto toks = detail::split_ws(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    if (toks.size() != 2)
      throw ParseError(file, lineno, "expected '<node-label> <cluster-label>'");
    int i = g.id_of(toks[0]);
    if (i < 0) throw ParseError(file, lineno, "unknown node '" + toks[0] + "'");
    if (member[std::size_t(i)] != -1)
      throw ParseError(file, lineno, "node '" + toks[0] + "' listed twice");
    member[std::size_t(i)] = block_id(toks[1]);
  }
  for (int i = 0; i < g.node_count(); ++i)
    if (member[std::size_t(i)] == -1)
      throw ParseError(file, lineno, "node '" + g.label(i) + "' missing");
  return Clustering::from_membership(member);
}

inline std::string serialize_clustering(const Clustering& c, const Graph& g) {
  std::vector<int> member = c.membership();
  std::ostringstream out;
  for (int i = 0; i < g.node_count(); ++i)
    out << g.label(i) << ' ' << member[std::size_t(i)] << '\n';
  return out.str();
}

// display form used by the CLI: {{a,b},{c}}
inline std::string render_blocks(const Clustering& c, const Graph& g) {
  std::ostringstream out;
  out << '{';
  for (int b = 0; b < c.block_count(); ++b) {
    if (b) out << ',';
    out << '{';
    const auto& blk = c.block(b);
    for (std::size_t x = 0; x < blk.size(); ++x) {
      if (x) out << ',';
      out << g.label(blk[x]);
    }
    out << '}';
  }
  out << '}';
  return out.str();
}

// label-keyed equality: same labels, same masses, same weights; node order
// free. This is the codec round-trip notion of graph equality.
inline bool equal_by_labels(const Graph& a, const Graph& b) {
  if (a.node_count() != b.node_count()) return false;
  for (int i = 0; i < a.node_count(); ++i) {
    int j = b.id_of(a.label(i));
    if (j < 0 || a.node_mass(i) != b.node_mass(j)) return false;
  }
  if (a.edges().size() != b.edges().size()) return false;
  for (const auto& e : a.edges()) {
    int u = b.id_of(a.label(e.u));
    int v = b.id_of(a.label(e.v));
    if (b.weight(u, v) != e.w) return false;
  }
  return true;
}

}  // namespace axiograph
