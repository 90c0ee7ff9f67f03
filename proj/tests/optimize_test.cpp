#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "axiograph/codec.hpp"
#include "axiograph/optimize.hpp"
#include "axiograph/rng.hpp"
#include "axiograph/scenario.hpp"

using namespace axiograph;

namespace {

Graph pair_loops() {
  return parse_graph("a a 2\nb b 2\na b 1\n");
}

Graph pair_loops_extended() {
  return parse_graph("a a 2\nb b 2\na b 1\nc c 4\n");
}

Graph random_graph(Rng& rng, int n) {
  GraphBuilder b;
  b.add_nodes(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      if (rng.chance(0.5)) b.add_edge(i, j, rng.next_pos_unit());
  return b.build();
}

}  // namespace

TEST(OptimizeExact, PairLoopsModularity) {
  OptimizeResult res = optimize_exact(QualitySpec::modularity(), pair_loops());
  EXPECT_NEAR(res.best_quality, 1.0 / 6.0, 1e-15);
  ASSERT_EQ(res.optima.size(), 1u);
  EXPECT_EQ(res.optima.front(), Clustering::singletons(2));
  EXPECT_TRUE(res.unique);
  EXPECT_EQ(res.tie_count, 1u);
  EXPECT_EQ(res.partitions_examined, bell_number(2));
}

TEST(OptimizeExact, ExtendedPairLoopsPrefersMerging) {
  OptimizeResult res =
      optimize_exact(QualitySpec::modularity(), pair_loops_extended());
  EXPECT_NEAR(res.best_quality, 24.0 / 50.0, 1e-15);
  ASSERT_EQ(res.optima.size(), 1u);
  EXPECT_EQ(res.optima.front(), Clustering::from_blocks(3, {{0, 1}, {2}}));
  EXPECT_EQ(res.partitions_examined, bell_number(3));
}

TEST(OptimizeExact, TiesAreCountedAndStored) {
  // no edges: every quality-0 partition ties under withinsum
  GraphBuilder b;
  b.add_nodes(3);
  OptimizeResult res = optimize_exact(QualitySpec::within_sum(), b.build());
  EXPECT_DOUBLE_EQ(res.best_quality, 0.0);
  EXPECT_EQ(res.tie_count, bell_number(3));
  EXPECT_EQ(res.optima.size(), std::size_t(bell_number(3)));
  EXPECT_FALSE(res.unique);
  EXPECT_FALSE(res.optima_truncated);
  // stored optima are all distinct
  auto sorted = res.optima;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_TRUE(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
}

TEST(OptimizeExact, TruncationFlagsLargeTieSets) {
  // 9 isolated nodes: Bell(9) = 21147 ties, far beyond the storage cap
  GraphBuilder b;
  b.add_nodes(9);
  OptimizeResult res = optimize_exact(QualitySpec::within_sum(), b.build());
  EXPECT_EQ(res.tie_count, bell_number(9));
  EXPECT_EQ(res.optima.size(), kMaxStoredOptima);
  EXPECT_TRUE(res.optima_truncated);
}

TEST(OptimizeExact, CapAndEdgeCases) {
  GraphBuilder b;
  b.add_nodes(13);
  EXPECT_THROW(optimize_exact(QualitySpec::modularity(), b.build()),
               InfeasibleError);

  GraphBuilder one;
  one.add_edge("a", "a", 1.0);
  OptimizeResult res = optimize_exact(QualitySpec::modularity(), one.build());
  EXPECT_EQ(res.optima.front(), Clustering::whole(1));
  EXPECT_EQ(res.partitions_examined, 1u);
}

TEST(OptimizeExact, ShardedPathAgreesWithPlainEnumeration) {
  // 10 nodes triggers the prefix-sharded parallel scan; a two-clique block
  // structure has a known unique optimum
  Clustering blocks = Clustering::from_blocks(10, {{0, 1, 2, 3, 4},
                                                   {5, 6, 7, 8, 9}});
  Graph g = clique_graph(blocks, 1.0);
  OptimizeResult res = optimize_exact(QualitySpec::modularity(), g);
  EXPECT_EQ(res.partitions_examined, bell_number(10));
  ASSERT_FALSE(res.optima.empty());
  EXPECT_EQ(res.optima.front(), blocks);
  EXPECT_TRUE(res.unique);
  EXPECT_NEAR(res.best_quality, 0.5, 1e-12);
}

TEST(OptimizeGreedy, FindsSmallOptima) {
  Clustering best =
      optimize_greedy(QualitySpec::modularity(), pair_loops(), 42);
  EXPECT_EQ(best, Clustering::singletons(2));
  Clustering best2 =
      optimize_greedy(QualitySpec::modularity(), pair_loops_extended(), 42);
  EXPECT_EQ(best2, Clustering::from_blocks(3, {{0, 1}, {2}}));
}

TEST(OptimizeGreedy, DeterministicPerSeed) {
  Rng rng(99);
  Graph g = random_graph(rng, 8);
  Clustering a = optimize_greedy(QualitySpec::modularity(), g, 7);
  Clustering b = optimize_greedy(QualitySpec::modularity(), g, 7);
  EXPECT_EQ(a, b);
}

TEST(OptimizeGreedy, NeverBeatsExact) {
  Rng rng(123);
  for (int t = 0; t < 40; ++t) {
    Graph g = random_graph(rng, rng.next_int(2, 7));
    for (const char* s : {"modularity", "adaptive:1,2"}) {
      QualitySpec spec = QualitySpec::parse(s);
      OptimizeResult exact = optimize_exact(spec, g);
      Clustering greedy = optimize_greedy(spec, g, std::uint64_t(t));
      double gq = evaluate(spec, g, greedy);
      EXPECT_LE(gq, exact.best_quality + tol::tie) << s;
    }
  }
}

TEST(OptimizeGreedy, CocoReturnsComponents) {
  Graph g = parse_graph("a b 1\nc d 1\ne e 2\n");
  EXPECT_EQ(optimize_greedy(QualitySpec::coco(), g, 1),
            connected_components(g));
}

TEST(Scenario, AgreementByLabel) {
  Graph g1 = pair_loops();
  Graph g2 = pair_loops_extended();
  std::vector<int> core{g1.id_of("a"), g1.id_of("b")};
  // c is not adjacent to the core, so even the neighborhood view agrees
  EXPECT_TRUE(check_agreement(g1, g2, core, AgreementMode::plain));
  EXPECT_TRUE(check_agreement(g1, g2, core, AgreementMode::with_neighborhood));

  Graph g3 = parse_graph("a a 2\nb b 2\na b 1\nc c 4\na c 1\n");
  std::vector<int> core3{g1.id_of("a"), g1.id_of("b")};
  EXPECT_TRUE(check_agreement(g1, g3, core3, AgreementMode::plain));
  // ...but a–c carries weight in g3 only, so the neighborhood view differs
  EXPECT_FALSE(check_agreement(g1, g3, core3, AgreementMode::with_neighborhood));

  Graph g4 = parse_graph("a a 2\nb b 2\na b 0.5\n");
  EXPECT_FALSE(check_agreement(g1, g4, core, AgreementMode::plain));

  EXPECT_THROW(check_agreement(g1, g2, {5}, AgreementMode::plain), InputError);
}

TEST(Scenario, ConsistentImprovement) {
  Graph g = parse_graph("a b 1\nc c 2\n");
  Graph cut = parse_graph("a b 0\nc c 2\n");
  Clustering singles = Clustering::singletons(3);
  // dropping a between-edge is a consistent improvement for singletons
  EXPECT_TRUE(is_consistent_improvement(g, cut, singles));
  // the reverse direction adds between weight: not an improvement
  EXPECT_FALSE(is_consistent_improvement(cut, g, singles));
  // raising a within edge
  Graph boosted = parse_graph("a b 2\nc c 2\n");
  Clustering merged = Clustering::from_blocks(3, {{0, 1}, {2}});
  EXPECT_TRUE(is_consistent_improvement(g, boosted, merged));
  EXPECT_FALSE(is_consistent_improvement(g, boosted, singles));
}

TEST(Scenario, MaterializeByLabels) {
  Graph g = pair_loops_extended();
  AgreementScenario s;
  s.g1 = pair_loops();
  s.g2 = g;
  s.va = {"a", "b"};
  s.ca = {{"a"}, {"b"}};
  s.da = {{"a", "b"}};
  s.c1 = {};
  s.c2 = {{"c"}};
  EXPECT_EQ(s.first_on_g1(), Clustering::singletons(2));
  EXPECT_EQ(s.second_on_g1(), Clustering::whole(2));
  EXPECT_EQ(s.first_on_g2(), Clustering::singletons(3));
  EXPECT_EQ(s.second_on_g2(), Clustering::from_blocks(3, {{0, 1}, {2}}));
  EXPECT_EQ(s.va_ids_in(s.g2), (std::vector<int>{0, 1}));

  AgreementScenario bad = s;
  bad.ca = {{"a"}, {"z"}};
  EXPECT_THROW(bad.first_on_g1(), InputError);
}
