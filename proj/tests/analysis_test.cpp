#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "axiograph/analysis.hpp"
#include "axiograph/optimize.hpp"

using namespace axiograph;

TEST(TwoClique, GraphShape) {
  Graph g = two_clique_graph(100.0, 20.0);
  EXPECT_EQ(g.node_count(), 4);
  // each clique holds weight w split over two loops and one mutual edge,
  // the cross weight is split over the four mixed pairs
  Clustering cliques = Clustering::from_blocks(4, {{0, 1}, {2, 3}});
  auto stats = cluster_stats(g, cliques);
  // ordered-pair totals: loops once, mutual edge twice -> 25+25+2*25 = w
  EXPECT_NEAR(stats[0].within, 100.0, 1e-12);
  EXPECT_NEAR(stats[1].within, 100.0, 1e-12);
  EXPECT_NEAR(total_volume(g), 2.0 * 100.0 + 2.0 * 20.0, 1e-12);

  Graph iso = two_clique_graph(10.0, 0.0);
  EXPECT_EQ(iso.node_count(), 4);
  EXPECT_EQ(connected_components(iso).block_count(), 2);

  EXPECT_THROW(two_clique_graph(0.0, 1.0), InputError);
  EXPECT_THROW(two_clique_graph(-1.0, 1.0), InputError);
  EXPECT_THROW(two_clique_graph(1.0, -1.0), InputError);
  EXPECT_THROW(two_clique_graph(1.0, std::nan("")), InputError);
}

TEST(TwoClique, ClassifyKnownOutcomes) {
  QualitySpec big = QualitySpec::adaptive(100.0, 0.0);
  SweepCell a = classify_outcome(big, 80.0, 20.0);
  EXPECT_EQ(a.outcome, 3);
  EXPECT_NEAR(a.q1, -2.0, 1e-12);
  EXPECT_NEAR(a.q2, -0.4, 1e-12);
  EXPECT_NEAR(a.q3, -0.2, 1e-12);

  SweepCell b = classify_outcome(big, 40.0, 5.0);
  EXPECT_EQ(b.outcome, 2);
  EXPECT_NEAR(b.q2, 0.395, 1e-12);

  QualitySpec ratio = QualitySpec::adaptive(0.0, 2.0);
  EXPECT_EQ(classify_outcome(ratio, 90.0, 10.0).outcome, 2);
  EXPECT_EQ(classify_outcome(ratio, 10.0, 90.0).outcome, 1);
}

TEST(TwoClique, CellValuesMatchDirectEvaluation) {
  QualitySpec spec = QualitySpec::adaptive(10.0, 0.5);
  SweepCell cell = classify_outcome(spec, 7.0, 3.0);
  Graph g = two_clique_graph(7.0, 3.0);
  EXPECT_NEAR(cell.q1, evaluate(spec, g, Clustering::whole(4)), 1e-12);
  EXPECT_NEAR(cell.q2,
              evaluate(spec, g, Clustering::from_blocks(4, {{0, 1}, {2, 3}})),
              1e-12);
  EXPECT_NEAR(cell.q3, evaluate(spec, g, Clustering::singletons(4)), 1e-12);
  EXPECT_EQ(cell.m, 10.0);
  EXPECT_EQ(cell.gamma, 0.5);
}

TEST(TwoClique, RowMagnificationLeavesOutcomesAlone) {
  // with M = 0 the score is scale free, so magnifying (w, b) by a common
  // factor must reproduce the same outcome
  QualitySpec spec = QualitySpec::adaptive(0.0, 2.0);
  for (double w : {0.5, 2.0, 30.0})
    for (double b : {0.1, 1.0, 8.0}) {
      SweepCell base = classify_outcome(spec, w, b);
      SweepCell mag = classify_outcome(spec, 10.0 * w, 10.0 * b);
      EXPECT_EQ(base.outcome, mag.outcome) << w << "," << b;
      EXPECT_EQ(base.tie, mag.tie) << w << "," << b;
    }
}

TEST(Sweep, GridShapeAndOrder) {
  std::vector<SweepCell> cells =
      sweep({{0.0, 2.0}, {100.0, 0.0}}, {40.0, 80.0}, {5.0, 20.0});
  ASSERT_EQ(cells.size(), 8u);
  // row-major over (spec, w, b)
  EXPECT_EQ(cells[0].m, 0.0);
  EXPECT_EQ(cells[0].gamma, 2.0);
  EXPECT_EQ(cells[0].w, 40.0);
  EXPECT_EQ(cells[0].b, 5.0);
  EXPECT_EQ(cells[1].b, 20.0);
  EXPECT_EQ(cells[2].w, 80.0);
  EXPECT_EQ(cells[4].m, 100.0);
  // known cells from the classification tests
  for (const auto& c : cells) {
    if (c.m == 100.0 && c.w == 80.0 && c.b == 20.0) EXPECT_EQ(c.outcome, 3);
    if (c.m == 100.0 && c.w == 40.0 && c.b == 5.0) EXPECT_EQ(c.outcome, 2);
  }

  EXPECT_THROW(sweep({}, {1.0}, {1.0}), InputError);
  EXPECT_THROW(sweep({{0.0, 2.0}}, {}, {1.0}), InputError);
  EXPECT_THROW(sweep({{0.0, 0.0}}, {1.0}, {1.0}), InputError);
}

TEST(Sweep, CsvRendering) {
  std::ostringstream out;
  write_sweep_csv(sweep({{100.0, 0.0}}, {80.0}, {20.0}), out);
  std::istringstream in(out.str());
  std::string header, row, extra;
  ASSERT_TRUE(std::getline(in, header));
  EXPECT_EQ(header, "M,gamma,w,b,q1,q2,q3,outcome,tie");
  ASSERT_TRUE(std::getline(in, row));
  EXPECT_EQ(row, "100,0,80,20,-2,-0.4,-0.2,3,0");
  EXPECT_FALSE(std::getline(in, extra));
}

TEST(Ring, GraphShape) {
  Graph g = ring_of_cliques(4, 3);
  EXPECT_EQ(g.node_count(), 12);
  EXPECT_EQ(int(g.edges().size()), 4 * 3 + 4);  // clique triangles + ring links
  EXPECT_EQ(connected_components(g).block_count(), 1);
  EXPECT_NEAR(total_volume(g), 32.0, 1e-12);

  EXPECT_THROW(ring_of_cliques(2, 3), InputError);
  EXPECT_THROW(ring_of_cliques(3, 1), InputError);
}

TEST(Ring, SmallRingMatchesExhaustiveSearch) {
  // the contiguous-arc demo must agree with unrestricted search over all
  // Bell(12) partitions
  QualitySpec spec = QualitySpec::modularity();
  RingResult demo = ring_resolution_demo(spec, 4, 3);
  Graph g = ring_of_cliques(4, 3);
  OptimizeResult full = optimize_exact(spec, g);
  EXPECT_NEAR(demo.quality, full.best_quality, 1e-12);
  EXPECT_EQ(demo.blocking, full.optima.front());
  EXPECT_EQ(demo.max_cliques_per_cluster, 1);
}

TEST(Ring, ModularityMergesCliquesOnLargeRings) {
  RingResult r = ring_resolution_demo(QualitySpec::modularity(), 12, 3);
  EXPECT_EQ(r.max_cliques_per_cluster, 2);
  EXPECT_TRUE(r.tie);  // rotating the pairing gives distinct equal optima
  EXPECT_NEAR(r.quality, 0.7083333333333334, 1e-10);
  int total = 0;
  for (int k : r.cliques_per_cluster) total += k;
  EXPECT_EQ(total, 12);
}

TEST(Ring, EvenSplitTiesExactly) {
  // at n = 8, s = 3 the one-per-cluster and two-per-cluster arrangements
  // score exactly 0.625; both arise during the mask walk
  RingResult r = ring_resolution_demo(QualitySpec::modularity(), 8, 3);
  EXPECT_TRUE(r.tie);
  EXPECT_DOUBLE_EQ(r.quality, 0.625);
  EXPECT_EQ(r.max_cliques_per_cluster, 2);
  EXPECT_EQ(r.best_mask, 85u);  // 0b01010101: every clique cut off
}

TEST(Ring, AdaptiveScaleKeepsCliquesSeparate) {
  QualitySpec spec = QualitySpec::adaptive(1.0, 2.0);
  for (int n : {6, 12, 16}) {
    RingResult r = ring_resolution_demo(spec, n, 3);
    EXPECT_EQ(r.max_cliques_per_cluster, 1) << n;
    EXPECT_EQ(int(r.cliques_per_cluster.size()), n) << n;
  }
}

TEST(Ring, DemoValidation) {
  EXPECT_THROW(ring_resolution_demo(QualitySpec::modularity(), 21, 3),
               InfeasibleError);
  EXPECT_THROW(ring_resolution_demo(QualitySpec::modularity(), 2, 3),
               InputError);
}
