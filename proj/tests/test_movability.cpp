#include <gtest/gtest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "flexrig/census.hpp"
#include "flexrig/movability/classify.hpp"
#include "flexrig/movability/tree_decomposable.hpp"
#include "flexrig/movability/witness.hpp"
#include "oracles.hpp"

using namespace flexrig;

namespace {

const Catalog& catalog() {
  static const Catalog cat = load_catalog();
  return cat;
}

// Repeated Henneberg I steps from a single edge, attachment chosen at random.
Graph random_h1(std::mt19937_64& rng, int n) {
  std::vector<Edge> es = {Edge(0, 1)};
  for (int k = 2; k < n; ++k) {
    std::uniform_int_distribution<int> pick(0, k - 1);
    const int a = pick(rng);
    int b = pick(rng);
    while (b == a) b = pick(rng);
    es.emplace_back(a, k);
    es.emplace_back(b, k);
  }
  return Graph(n, es);
}

}  // namespace

TEST(TreeDecomposable, SmallCases) {
  EXPECT_TRUE(is_tree_decomposable(path_graph(2)));
  EXPECT_TRUE(is_tree_decomposable(complete_graph(3)));
  EXPECT_FALSE(is_tree_decomposable(cycle_graph(4)));
  EXPECT_FALSE(is_tree_decomposable(complete_graph(4)));
  EXPECT_FALSE(is_tree_decomposable(complete_bipartite(3, 3)));
  EXPECT_THROW(is_tree_decomposable(path_graph(11)), PreconditionError);
}

TEST(TreeDecomposable, HOneGraphsHaveCompleteClosure) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_h1(rng, 3 + trial % 6);
    ASSERT_TRUE(is_tree_decomposable(g)) << encode_graph6(g);
    EXPECT_TRUE(is_complete(constant_distance_closure(g).closure)) << encode_graph6(g);
  }
}

TEST(TreeDecomposable, DecomposableLamanGraphsHaveCompleteClosure) {
  for (int n = 3; n <= 7; ++n) {
    for (const Graph& g : laman_graphs(n)) {
      if (!is_tree_decomposable(g)) continue;
      EXPECT_TRUE(is_complete(constant_distance_closure(g).closure)) << encode_graph6(g);
    }
  }
}

TEST(TreeDecomposable, ThreeTrianglesAroundATriangle) {
  // Triangles 0-1-3, 1-2-4, 0-2-5 glued on the corners 0, 1, 2.
  const Graph g(6, {Edge(0, 1), Edge(0, 3), Edge(1, 3), Edge(1, 2), Edge(1, 4), Edge(2, 4), Edge(0, 2), Edge(0, 5),
                    Edge(2, 5)});
  EXPECT_TRUE(is_tree_decomposable(g));
  // The triangular prism is Laman but has no such split.
  const Graph prism(6, {Edge(0, 1), Edge(1, 2), Edge(0, 2), Edge(3, 4), Edge(4, 5), Edge(3, 5), Edge(0, 3), Edge(1, 4),
                        Edge(2, 5)});
  EXPECT_FALSE(is_tree_decomposable(prism));
}

TEST(Witness, G25IsCertified) {
  const Graph g = g25_graph();
  EXPECT_EQ(g.n(), 25);
  EXPECT_EQ(g.num_edges(), 125U);
  const auto w = star_witnesses(g);
  EXPECT_EQ(w.size(), 25U);
  for (const auto& c : w) EXPECT_TRUE(is_nac(g, c));
  EXPECT_TRUE(certify_no_unicolor_pairs(g, w));
  EXPECT_EQ(min_degree(g), 10);
}

TEST(Witness, CompleteClosureFullSetFails) {
  const Graph g = fixtures::complete_closure_seven();
  EXPECT_FALSE(certify_no_unicolor_pairs(g, enumerate_nac(g)));
}

TEST(Witness, EmptyListFails) { EXPECT_FALSE(certify_no_unicolor_pairs(path_graph(3), {})); }

TEST(Witness, RejectsNonNacWitness) {
  const Graph g = complete_graph(3);
  EXPECT_THROW(certify_no_unicolor_pairs(g, star_witnesses(g)), PreconditionError);
}

static bool has_triangle(const Graph& g) {
  for (const Edge& e : g.edges())
    if ((g.neighbor_mask(e.u) & g.neighbor_mask(e.v)) != 0) return true;
  return false;
}

TEST(Witness, FullSetAgreesWithUnicolorPairsWithoutTriangles) {
  std::mt19937_64 rng(17);
  int checked = 0;
  while (checked < 150) {
    const Graph g = oracle::random_connected_graph(rng, 4 + static_cast<int>(rng() % 5), 0.45);
    if (g.num_edges() > 14 || has_triangle(g)) continue;
    EXPECT_EQ(certify_no_unicolor_pairs(g, enumerate_nac(g)), oracle::unicolor_pairs(g, oracle::all_nac(g)).empty())
        << encode_graph6(g);
    ++checked;
  }
}

TEST(Witness, TrueImpliesNoUnicolorPairs) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = oracle::random_connected_graph(rng, 4 + static_cast<int>(rng() % 4), 0.55);
    if (g.num_edges() > 14) continue;
    const auto all = oracle::all_nac(g);
    if (!certify_no_unicolor_pairs(g, all)) continue;
    EXPECT_TRUE(oracle::unicolor_pairs(g, all).empty()) << encode_graph6(g);
  }
  // Two triangle edges never separate, yet their ends are adjacent.
  EXPECT_FALSE(certify_no_unicolor_pairs(complete_graph(4), {}));
  EXPECT_TRUE(oracle::unicolor_pairs(complete_graph(4), {}).empty());
}

TEST(Classify, SevenVertexTrio) {
  EXPECT_EQ(classify(fixtures::no_nac_seven()).kind, VerdictKind::not_movable_no_nac);
  EXPECT_EQ(classify(fixtures::complete_closure_seven()).kind, VerdictKind::not_movable_cdc_complete);
  const Verdict right = classify(fixtures::movable_seven());
  ASSERT_EQ(right.kind, VerdictKind::movable);
  ASSERT_TRUE(right.certificate.has_value());
  EXPECT_EQ(right.certificate->construction, "two-nac");
  EXPECT_TRUE(verify_certificate(*right.certificate));
}

TEST(Classify, OtherOutcomes) {
  EXPECT_EQ(classify(cycle_graph(5)).kind, VerdictKind::generically_movable);
  EXPECT_EQ(classify(complete_graph(4)).kind, VerdictKind::not_movable_no_nac);
  const Verdict k33 = classify(complete_bipartite(3, 3));
  ASSERT_EQ(k33.kind, VerdictKind::movable);
  EXPECT_EQ(k33.certificate->construction, "dixon1");
  const Verdict g25 = classify(g25_graph());
  EXPECT_EQ(g25.kind, VerdictKind::undecided);
  EXPECT_NE(g25.reason.find("certify_no_unicolor_pairs"), std::string::npos);
  EXPECT_THROW(classify(Graph(3, {Edge(0, 1)})), PreconditionError);
}

TEST(Classify, DegreeTwoVerticesAreReduced) {
  // K3,3 with a pendant triangle on vertex 0.
  std::vector<Edge> es = complete_bipartite(3, 3).edges();
  es.emplace_back(0, 6);
  es.emplace_back(1, 6);
  const Verdict v = classify(Graph(7, es));
  ASSERT_EQ(v.kind, VerdictKind::movable);
  EXPECT_EQ(v.reduction.removed, std::vector<int>{6});
  EXPECT_EQ(v.reduction.graph.n(), 6);
}

TEST(Classify, CatalogEntriesAreMovable) {
  for (const auto& e : catalog().entries) {
    SCOPED_TRACE(e.name);
    const Verdict v = classify(e.graph);
    ASSERT_EQ(v.kind, VerdictKind::movable);
    EXPECT_TRUE(verify_certificate(*v.certificate));
  }
}

TEST(Classify, CrossConsistencyUpToSeven) {
  const auto& known = detail::default_known_constructions();
  for (const Graph& g : census_stream(7)) {
    const Graph r = reduce_degree_two(g).graph;
    const auto reps = enumerate_nac(r, true);
    if (reps.empty()) continue;
    const bool complete = is_complete(constant_distance_closure(r).closure);
    const auto cert = try_constructions(r, reps, known);
    EXPECT_FALSE(complete && cert.has_value()) << encode_graph6(g);
    if (cert) {
      EXPECT_TRUE(verify_certificate(*cert)) << encode_graph6(g);
    }
  }
}

TEST(Census, EmptyStream) {
  const CensusReport r = census({}, catalog(), 8);
  EXPECT_EQ(r.inputs, 0U);
  EXPECT_TRUE(r.survivors.empty());
  EXPECT_TRUE(r.maximal.empty());
}

TEST(Census, SixVerticesAreSubgraphsOfCatalog) {
  const CensusReport r = census(census_stream(6), catalog(), 6);
  ASSERT_FALSE(r.survivors.empty());
  for (const auto& c : r.survivors) {
    bool inside = false;
    for (const auto& e : catalog().entries) inside = inside || spanning_embedding(c.closure, e.graph).has_value();
    EXPECT_TRUE(inside) << encode_graph6(c.closure);
  }
}

TEST(Census, SevenVertices) {
  const CensusReport r = census(census_stream(7), catalog(), 7);
  std::set<std::string> names;
  for (const auto& c : r.maximal) names.insert(c.catalog_name);
  EXPECT_EQ(names, (std::set<std::string>{"K33", "K34", "L1", "L2", "Q1"}));
  EXPECT_TRUE(r.matches_catalog());
}

TEST(Census, LamanCounts) {
  const std::size_t expected[] = {1, 1, 3, 13, 70};
  for (int n = 3; n <= 7; ++n) EXPECT_EQ(laman_graphs(n).size(), expected[n - 3]) << n;
}

TEST(Census, RejectsLargeBound) { EXPECT_THROW(census({}, catalog(), 9), PreconditionError); }

TEST(Catalog, EntriesAreOwnClosures) {
  ASSERT_EQ(catalog().entries.size(), 21U);
  for (const auto& e : catalog().entries) {
    SCOPED_TRACE(e.name);
    EXPECT_EQ(constant_distance_closure(e.graph).closure, e.graph);
    EXPECT_FALSE(has_degree_two_vertex(e.graph));
  }
  EXPECT_EQ(catalog().find("L1")->graph.num_edges(), 9U);
  EXPECT_EQ(catalog().find("Q1")->graph.num_edges(), 11U);
  EXPECT_EQ(catalog().find("S5")->graph.num_edges(), 13U);
}
