#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "flexrig/closure.hpp"
#include "flexrig/graph_io.hpp"
#include "flexrig/nac.hpp"
#include "oracles.hpp"

using namespace flexrig;

namespace {

std::set<Coloring> as_set(const std::vector<Coloring>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(IsNac, Examples) {
  const Graph q = fixtures::deltoid();
  const auto d1 = coloring_with_red(q, fixtures::one_based_edges({{3, 4}, {1, 4}}));
  EXPECT_TRUE(is_nac(q, d1));
  const Graph k3 = complete_graph(3);
  EXPECT_FALSE(is_nac(k3, {Color::red, Color::blue, Color::blue}));
  EXPECT_FALSE(is_nac(k3, {Color::blue, Color::blue, Color::blue}));
  EXPECT_FALSE(is_nac(cycle_graph(4), {Color::red, Color::blue, Color::blue, Color::blue}));
  EXPECT_THROW(is_nac(k3, {Color::red}), PreconditionError);
}

TEST(IsNac, AgreesWithCycleOracle) {
  std::mt19937_64 rng(23);
  int checked = 0;
  while (checked < 500) {
    const int n = std::uniform_int_distribution<int>(3, 7)(rng);
    const Graph g = oracle::random_graph(rng, n, 0.5);
    if (g.num_edges() == 0 || g.num_edges() > 12) continue;
    const auto cycles = oracle::simple_cycles(g);
    for (int k = 0; k < 4; ++k) {
      Coloring c(g.num_edges());
      for (auto& x : c) x = std::bernoulli_distribution(0.5)(rng) ? Color::red : Color::blue;
      EXPECT_EQ(is_nac(g, c), oracle::is_nac(cycles, c)) << encode_graph6(g);
    }
    ++checked;
  }
}

TEST(Enumerate, FourCycle) {
  const Graph q = cycle_graph(4);
  EXPECT_EQ(enumerate_nac(q).size(), 6u);
  EXPECT_EQ(enumerate_nac(q, true).size(), 3u);
}

TEST(Enumerate, NoNacSevenHasNone) {
  const Graph g = fixtures::no_nac_seven();
  EXPECT_EQ(g.num_edges(), 12u);
  EXPECT_TRUE(enumerate_nac(g).empty());
}

TEST(Enumerate, CompleteClosureColourings) {
  const Graph g = fixtures::complete_closure_seven();
  std::set<Coloring> expected;
  for (const auto& red : fixtures::complete_closure_red_sets()) expected.insert(normalized(coloring_with_red(g, red)));
  EXPECT_EQ(as_set(enumerate_nac(g, true)), expected);
}

TEST(Enumerate, MatchesExhaustiveFilter) {
  std::mt19937_64 rng(29);
  int checked = 0;
  while (checked < 120) {
    const int n = std::uniform_int_distribution<int>(3, 8)(rng);
    const Graph g = oracle::random_connected_graph(rng, n, 0.3);
    if (g.num_edges() > 14) continue;
    const auto fast = enumerate_nac(g);
    const auto slow = oracle::all_nac(g);
    EXPECT_EQ(as_set(fast), as_set(slow)) << encode_graph6(g);
    EXPECT_EQ(fast.size(), as_set(fast).size());
    for (const auto& c : fast) EXPECT_TRUE(is_nac(g, c));
    ++checked;
  }
}

TEST(Enumerate, ConjugationClosedAndHalved) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = oracle::random_connected_graph(rng, 7, 0.3);
    const auto all = as_set(enumerate_nac(g));
    for (const auto& c : all) EXPECT_TRUE(all.count(conjugate(c)));
    EXPECT_EQ(enumerate_nac(g, true).size() * 2, all.size());
  }
}

TEST(Enumerate, CapIsEnforced) {
  EXPECT_THROW(enumerate_nac(complete_graph(10)), EnumerationCapExceeded);
  EXPECT_NO_THROW(enumerate_nac(complete_graph(10), false, 45));
  EXPECT_THROW(enumerate_nac(cycle_graph(8), false, 7), EnumerationCapExceeded);
}

TEST(Conjugate, Involution) {
  const Graph q = fixtures::deltoid();
  for (const auto& c : enumerate_nac(q)) {
    EXPECT_EQ(conjugate(conjugate(c)), c);
    EXPECT_TRUE(is_nac(q, conjugate(c)));
  }
}

TEST(Unicolor, Examples) {
  const Graph g = fixtures::complete_closure_seven();
  const auto u = unicolor_pairs(g);
  EXPECT_NE(std::find(u.begin(), u.end(), Edge(0, 3)), u.end());
  EXPECT_NE(std::find(u.begin(), u.end(), Edge(1, 4)), u.end());
  EXPECT_TRUE(unicolor_pairs(fixtures::deltoid()).empty());
  // No colourings: every non-adjacent pair qualifies.
  const Graph left = fixtures::no_nac_seven();
  EXPECT_EQ(unicolor_pairs(left), left.non_edges());
}

TEST(Unicolor, AgreesWithPathOracle) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = std::uniform_int_distribution<int>(3, 7)(rng);
    const Graph g = oracle::random_connected_graph(rng, n, 0.35);
    EXPECT_EQ(unicolor_pairs(g), oracle::unicolor_pairs(g, enumerate_nac(g))) << encode_graph6(g);
  }
}

TEST(Closure, CompleteClosureSeven) {
  const auto report = constant_distance_closure(fixtures::complete_closure_seven());
  EXPECT_TRUE(is_complete(report.closure));
  ASSERT_EQ(report.iterations(), 2u);
  // Round one holds every pair joined through the two triangles, including
  // {1,4} and {2,5}.
  EXPECT_EQ(report.added[0], (std::vector<Edge>{{0, 3}, {0, 4}, {1, 3}, {1, 4}}));
  EXPECT_TRUE(report.nac.empty());
}

TEST(Closure, SmallCases) {
  const auto k2 = constant_distance_closure(complete_graph(2));
  EXPECT_EQ(k2.closure, complete_graph(2));
  EXPECT_EQ(k2.iterations(), 0u);
  const auto q1 = constant_distance_closure(fixtures::q1_labels());
  EXPECT_EQ(q1.closure, fixtures::q1_labels());
  EXPECT_EQ(q1.iterations(), 0u);
}

TEST(Closure, IncrementalNacMatchesFreshEnumeration) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = std::uniform_int_distribution<int>(4, 8)(rng);
    const Graph g = oracle::random_connected_graph(rng, n, 0.3);
    const auto report = constant_distance_closure(g);
    EXPECT_EQ(as_set(report.nac), as_set(enumerate_nac(report.closure, true))) << encode_graph6(g);
    EXPECT_TRUE(unicolor_pairs(report.closure).empty());
  }
}

TEST(Closure, MonotoneAndIdempotent) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(4, 8)(rng);
    const Graph g = oracle::random_connected_graph(rng, n, 0.35);
    // Random connected spanning subgraph: drop edges while connectivity holds.
    Graph h = g;
    for (const Edge& e : g.edges()) {
      if (std::bernoulli_distribution(0.3)(rng)) {
        Graph smaller = h.without_edge(e);
        if (is_connected(smaller)) h = smaller;
      }
    }
    const Graph cg = constant_distance_closure(g).closure;
    const Graph ch = constant_distance_closure(h).closure;
    for (const Edge& e : ch.edges()) EXPECT_TRUE(cg.has_edge(e.u, e.v)) << encode_graph6(g) << " " << encode_graph6(h);
    EXPECT_EQ(constant_distance_closure(cg).iterations(), 0u);
  }
}
