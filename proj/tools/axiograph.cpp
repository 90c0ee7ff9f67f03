// Command-line front end: evaluate quality functions, search for optimal
// clusterings, run the axiom harness, replay the counterexample registry,
// and sweep the two-community parameter plane.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "axiograph/analysis.hpp"
#include "axiograph/axioms.hpp"
#include "axiograph/codec.hpp"
#include "axiograph/counterexamples.hpp"
#include "axiograph/errors.hpp"
#include "axiograph/numeric.hpp"
#include "axiograph/optimize.hpp"
#include "axiograph/quality.hpp"
#include "axiograph/report_json.hpp"

namespace {

using namespace axiograph;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write file: " + path);
  out << text;
  if (!out) throw InputError("write failed: " + path);
}

double to_double(const std::string& tok, const std::string& what) {
  const char* s = tok.c_str();
  char* end = nullptr;
  double x = std::strtod(s, &end);
  if (end == s || *end != '\0' || !std::isfinite(x))
    throw InputError(what + ": bad number '" + tok + "'");
  return x;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    auto next = text.find(sep, pos);
    out.push_back(text.substr(pos, next - pos));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

// Either "LO:HI:N" (N log-spaced points from LO to HI inclusive, LO > 0) or
// a comma-separated list of literal values.
std::vector<double> parse_axis(const std::string& tok, const std::string& what) {
  auto parts = split(tok, ':');
  if (parts.size() == 3) {
    double lo = to_double(parts[0], what);
    double hi = to_double(parts[1], what);
    double nd = to_double(parts[2], what);
    int n = int(nd);
    if (double(n) != nd || n < 1)
      throw InputError(what + ": point count must be a positive integer");
    if (!(lo > 0.0) || !(hi >= lo))
      throw InputError(what + ": log-spaced range needs 0 < LO <= HI");
    std::vector<double> axis;
    if (n == 1) {
      axis.push_back(lo);
      return axis;
    }
    double ratio = hi / lo;
    for (int i = 0; i < n; ++i)
      axis.push_back(lo * std::pow(ratio, double(i) / double(n - 1)));
    axis.back() = hi;  // pin the endpoint against pow() drift
    return axis;
  }
  if (parts.size() != 1)
    throw InputError(what + ": expected LO:HI:N or a comma-separated list");
  std::vector<double> axis;
  for (const auto& p : split(tok, ',')) axis.push_back(to_double(p, what));
  if (axis.empty()) throw InputError(what + ": empty axis");
  return axis;
}

// "M:GAMMA,M:GAMMA,..." adaptive-scale parameter pairs.
std::vector<std::pair<double, double>> parse_spec_grid(const std::string& tok) {
  std::vector<std::pair<double, double>> grid;
  for (const auto& pair_tok : split(tok, ',')) {
    auto mg = split(pair_tok, ':');
    if (mg.size() != 2)
      throw InputError("--q-grid: expected M:GAMMA pairs, got '" + pair_tok +
                       "'");
    grid.emplace_back(to_double(mg[0], "--q-grid"),
                      to_double(mg[1], "--q-grid"));
  }
  if (grid.empty()) throw InputError("--q-grid: empty grid");
  return grid;
}

std::vector<std::pair<double, double>> default_spec_grid() {
  std::vector<std::pair<double, double>> grid;
  for (double m : {0.0, 10.0, 100.0})
    for (double g : {0.0, 0.5, 1.0, 2.0}) {
      if (m == 0.0 && g == 0.0) continue;  // not a valid adaptive spec
      grid.emplace_back(m, g);
    }
  return grid;
}

int run_quality(const std::string& graph_path, const std::string& clus_path,
                const std::string& spec_text) {
  QualitySpec spec = QualitySpec::parse(spec_text);
  Graph g = parse_graph(read_file(graph_path), graph_path);
  Clustering c = parse_clustering(read_file(clus_path), g, clus_path);
  std::cout << format_value(evaluate(spec, g, c)) << "\n";
  return 0;
}

int run_optimize(const std::string& graph_path, const std::string& spec_text,
                 const std::string& method, std::uint64_t seed,
                 int max_exact_n, const std::string& out_path) {
  QualitySpec spec = QualitySpec::parse(spec_text);
  Graph g = parse_graph(read_file(graph_path), graph_path);
  Clustering best = Clustering::singletons(0);
  if (method == "exact") {
    OptimizeResult res = optimize_exact(spec, g, max_exact_n);
    best = res.optima.front();
    std::cout << render_blocks(best, g) << "\n";
    std::cout << "quality = " << format_value(res.best_quality) << "\n";
    std::cout << "ties = " << res.tie_count
              << (res.unique ? " (unique)" : "") << "\n";
    std::cout << "examined = " << res.partitions_examined << "\n";
  } else if (method == "greedy") {
    best = optimize_greedy(spec, g, seed);
    std::cout << render_blocks(best, g) << "\n";
    std::cout << "quality = " << format_value(evaluate(spec, g, best)) << "\n";
    std::cout << "seed = " << seed << "\n";
  } else {
    throw InputError("--method must be exact or greedy");
  }
  if (!out_path.empty()) write_file(out_path, serialize_clustering(best, g));
  return 0;
}

int run_axioms(const std::string& spec_text, const std::string& axiom_text,
               int trials, std::uint64_t seed, int max_nodes, bool json) {
  QualitySpec spec = QualitySpec::parse(spec_text);
  AxiomCheckOptions opts;
  opts.trials = trials;
  opts.seed = seed;
  opts.max_nodes = max_nodes;

  std::vector<AxiomReport> reports;
  if (axiom_text == "all") {
    reports = check_all_axioms(spec, opts);
  } else {
    reports.push_back(check_axiom(parse_axiom(axiom_text), spec, opts));
  }

  bool all_ok = true;
  if (json) {
    std::cout << reports_to_json(reports).dump(2) << "\n";
    for (const auto& r : reports) all_ok = all_ok && reverify_witness(r);
  } else {
    for (const auto& r : reports) {
      std::cout << report_to_text(r);
      bool ok = reverify_witness(r);
      all_ok = all_ok && ok;
      std::cout << "  reverify = " << (ok ? "pass" : "FAIL") << "\n";
    }
  }
  if (!all_ok)
    throw InternalError("axioms: a witness failed its independent recheck");
  return 0;
}

int run_counterexamples() {
  QualitySpec mod = QualitySpec::modularity();
  int rows = 0, mismatches = 0;
  for (const auto& ce : counterexample_suite()) {
    for (const auto& val : ce.values) {
      const Graph& g = ce.graph(val.graph);
      Clustering c = ce.clustering_on(val.clustering, g);
      double got = evaluate(mod, g, c);
      double expected = double(val.num) / double(val.den);
      bool ok = std::fabs(got - expected) <= 1e-12;
      ++rows;
      if (!ok) ++mismatches;
      std::cout << ce.name << " " << val.graph << "/" << val.clustering
                << ": computed=" << format_value(got) << " expected="
                << val.num << "/" << val.den << " ("
                << format_value(expected) << ") " << (ok ? "ok" : "MISMATCH")
                << "\n";
      if (!val.note.empty()) std::cout << "  note: " << val.note << "\n";
    }
  }
  std::cout << (mismatches == 0 ? "all " : "MISMATCHES in ") << rows
            << " values" << (mismatches == 0 ? " match" : "") << "\n";
  if (mismatches != 0)
    throw InternalError("counterexamples: registry values do not reproduce");
  return 0;
}

int run_sweep(const std::string& q_grid_tok, const std::string& w_grid_tok,
              const std::string& b_grid_tok, const std::string& out_path) {
  auto spec_grid = q_grid_tok.empty() ? default_spec_grid()
                                      : parse_spec_grid(q_grid_tok);
  auto w_grid = parse_axis(w_grid_tok, "--w-grid");
  auto b_grid = parse_axis(b_grid_tok, "--b-grid");
  auto cells = sweep(spec_grid, w_grid, b_grid);
  std::ostringstream csv;
  write_sweep_csv(cells, csv);
  write_file(out_path, csv.str());
  std::cout << "wrote " << cells.size() << " cells to " << out_path << "\n";
  return 0;
}

int run_ring(int n, int s, const std::string& spec_text) {
  QualitySpec spec = QualitySpec::parse(spec_text);
  RingResult res = ring_resolution_demo(spec, n, s);
  Graph g = ring_of_cliques(n, s);
  std::cout << "quality = " << format_value(res.quality) << "\n";
  std::cout << "clusters = " << res.blocking.block_count() << "\n";
  std::cout << "cliques-per-cluster =";
  for (int k : res.cliques_per_cluster) std::cout << " " << k;
  std::cout << " (max " << res.max_cliques_per_cluster << ")\n";
  std::cout << "tie = " << (res.tie ? 1 : 0) << "\n";
  std::cout << "blocking = " << render_blocks(res.blocking, g) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph clustering quality functions, optimizers and axiom checks",
               "axiograph"};
  app.require_subcommand(1);

  std::string graph_path, clus_path, spec_text = "modularity";
  std::string method = "exact", out_path;
  std::string axiom_text = "all";
  std::string q_grid_tok, w_grid_tok = "0.1:10000:25", b_grid_tok = "0.1:10000:25";
  std::uint64_t seed = 42;
  int trials = 1000, max_nodes = 8, max_exact_n = axiograph::kEnumerationCap;
  int ring_n = 4, ring_s = 3;
  bool json = false;

  auto* q = app.add_subcommand("quality", "evaluate a clustering's quality");
  q->add_option("graph", graph_path, "graph file")->required();
  q->add_option("clustering", clus_path, "clustering file")->required();
  q->add_option("--q", spec_text, "quality spec");

  auto* o = app.add_subcommand("optimize", "search for an optimal clustering");
  o->add_option("graph", graph_path, "graph file")->required();
  o->add_option("--q", spec_text, "quality spec");
  o->add_option("--method", method, "exact or greedy");
  o->add_option("--seed", seed, "greedy seed");
  o->add_option("--max-exact-n", max_exact_n, "exact enumeration node cap");
  o->add_option("-o,--out", out_path, "write the clustering to a file");

  auto* a = app.add_subcommand("axioms", "run the axiom property checks");
  a->add_option("--q", spec_text, "quality spec");
  a->add_option("--axiom", axiom_text, "axiom id or 'all'");
  a->add_option("--trials", trials, "random trials per axiom");
  a->add_option("--seed", seed, "trial seed");
  a->add_option("--max-nodes", max_nodes, "generated graph size cap");
  a->add_flag("--json", json, "structured JSON report");

  app.add_subcommand("counterexamples",
                     "replay the stored counterexample registry");

  auto* s = app.add_subcommand("sweep", "classify the two-community plane");
  s->add_option("--q-grid", q_grid_tok, "M:GAMMA pairs (adaptive scale)");
  s->add_option("--w-grid", w_grid_tok, "within-mass axis (LO:HI:N or list)");
  s->add_option("--b-grid", b_grid_tok, "between-mass axis (LO:HI:N or list)");
  s->add_option("-o,--out", out_path, "CSV output file")->required();

  auto* r = app.add_subcommand("ring", "ring-of-cliques resolution demo");
  r->add_option("--n", ring_n, "number of cliques (>= 3)");
  r->add_option("--s", ring_s, "clique size (>= 2)");
  r->add_option("--q", spec_text, "quality spec");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand("quality"))
      return run_quality(graph_path, clus_path, spec_text);
    if (app.got_subcommand("optimize"))
      return run_optimize(graph_path, spec_text, method, seed, max_exact_n,
                          out_path);
    if (app.got_subcommand("axioms"))
      return run_axioms(spec_text, axiom_text, trials, seed, max_nodes, json);
    if (app.got_subcommand("counterexamples")) return run_counterexamples();
    if (app.got_subcommand("sweep"))
      return run_sweep(q_grid_tok, w_grid_tok, b_grid_tok, out_path);
    if (app.got_subcommand("ring")) return run_ring(ring_n, ring_s, spec_text);
    throw axiograph::InternalError("no subcommand dispatched");
  } catch (const axiograph::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const axiograph::InfeasibleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const axiograph::InternalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const axiograph::UnsupportedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const axiograph::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
