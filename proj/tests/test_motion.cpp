#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "flexrig/constructions/deltoid.hpp"
#include "flexrig/motion.hpp"
#include "flexrig/motion_io.hpp"

using namespace flexrig;

namespace {

RationalFunction rf(const Poly& num, const Poly& den) { return {num, den}; }

Gaussian gi(long re, long im) { return {Rational(re), Rational(im)}; }

// Product of (t - r) over the given roots, times c.
Poly roots_poly(Gaussian c, std::initializer_list<Gaussian> roots) {
  Poly p(c);
  for (const auto& r : roots) p = p * Poly::linear(r);
  return p;
}

}  // namespace

TEST(Deltoid, StartPositions) {
  const auto q = deltoid_motion();
  const auto x2 = q.motion.x[2](Gaussian(0));
  const auto x3 = q.motion.x[3](Gaussian(0));
  ASSERT_TRUE(x2 && x3);
  EXPECT_EQ(*x2, Gaussian(-2));
  EXPECT_EQ(*x3, Gaussian(1));
  EXPECT_EQ(q.norms_sq[0], 1);
  EXPECT_EQ(q.norms_sq[1], 9);
  EXPECT_EQ(q.norms_sq[2], 9);
  EXPECT_EQ(q.norms_sq[3], 1);
  EXPECT_THROW(deltoid_motion(0), PreconditionError);
}

TEST(Deltoid, WFunctionsMatchClosedForms) {
  const auto& m = deltoid_motion().motion;
  // Vertices 0..3 carry labels 1..4.
  EXPECT_EQ(w_function(m, 0, 1), RationalFunction(1));
  EXPECT_EQ(w_function(m, 1, 2), rf(roots_poly(3, {gi(0, -2)}), roots_poly(1, {gi(0, 2)})));
  EXPECT_EQ(w_function(m, 2, 3), rf(roots_poly(-3, {gi(0, -1)}), roots_poly(1, {gi(0, 1)})));
  EXPECT_EQ(w_function(m, 3, 0),
            rf(roots_poly(-1, {gi(0, -1), gi(0, -2)}), roots_poly(1, {gi(0, 1), gi(0, 2)})));
  for (int u = 0; u < 4; ++u)
    for (int v = 0; v < 4; ++v)
      if (u != v) {
        EXPECT_TRUE((w_function(m, u, v) + w_function(m, v, u)).is_zero());
      }
  EXPECT_THROW(w_function(m, 1, 1), PreconditionError);
}

TEST(Deltoid, ValuationTable) {
  const auto& m = deltoid_motion().motion;
  const Graph& g = m.graph;
  const std::vector<Place> places{Place::at(gi(0, -1)), Place::at(gi(0, 1)), Place::at(gi(0, -2)), Place::at(gi(0, 2))};
  // Rows {1,2}, {2,3}, {3,4}, {1,4}.
  const std::vector<std::pair<Edge, std::vector<int>>> rows{
      {{0, 1}, {0, 0, 0, 0}}, {{1, 2}, {0, 0, 1, -1}}, {{2, 3}, {1, -1, 0, 0}}, {{0, 3}, {1, -1, 1, -1}}};
  for (std::size_t k = 0; k < places.size(); ++k) {
    const auto table = valuation_table(m, places[k]);
    for (const auto& [e, expected] : rows) EXPECT_EQ(table.nu[g.edge_index(e.u, e.v)], expected[k]);
  }
  EXPECT_EQ(places[0].to_string(), "t+i");
  EXPECT_EQ(places[3].to_string(), "t-2i");
  EXPECT_EQ(valuation(RationalFunction(5), Place::at(gi(3, 1))), 0);
  EXPECT_THROW(valuation(RationalFunction(), Place::at_infinity()), PreconditionError);
}

TEST(Deltoid, CandidatePlacesAndActiveColourings) {
  const auto& m = deltoid_motion().motion;
  const auto ps = candidate_places(m);
  EXPECT_TRUE(ps.unresolved.empty());
  ASSERT_EQ(ps.places.size(), 5u);
  EXPECT_TRUE(ps.places.back().infinity);
  for (const auto& p : {gi(0, 1), gi(0, -1), gi(0, 2), gi(0, -2)}) {
    EXPECT_NE(std::find(ps.places.begin(), ps.places.end(), Place::at(p)), ps.places.end());
  }
  const Graph& g = m.graph;
  const Coloring d1 = coloring_with_red(g, fixtures::one_based_edges({{3, 4}, {1, 4}}));
  const Coloring d2 = coloring_with_red(g, fixtures::one_based_edges({{2, 3}, {1, 4}}));
  const std::set<Coloring> expected{d1, conjugate(d1), d2, conjugate(d2)};
  const auto active = active_nac_colorings(m);
  EXPECT_FALSE(active.lower_bound);
  EXPECT_EQ(std::set<Coloring>(active.colorings.begin(), active.colorings.end()), expected);
  EXPECT_EQ(active.colorings.size(), 4u);
  EXPECT_EQ(enumerate_nac(g).size(), 6u);
}

TEST(Deltoid, Compatibility) {
  const auto& m = deltoid_motion().motion;
  const auto rep = verify_compatibility(m);
  EXPECT_TRUE(rep.flexible);
  EXPECT_EQ(rep.labeling.at(0, 1), 1);
  EXPECT_EQ(rep.labeling.at(1, 2), 9);
  EXPECT_EQ(rep.labeling.at(2, 3), 9);
  EXPECT_EQ(rep.labeling.at(0, 3), 1);
  ParametrizedMotion bad = m;
  bad.x[2] = bad.x[2] + RationalFunction::t();
  EXPECT_THROW(verify_compatibility(bad), MotionError);
}

TEST(Deltoid, InjectivityAndIdentities) {
  const auto& m = deltoid_motion().motion;
  const auto inj = verify_injectivity(m);
  EXPECT_TRUE(inj.proper);
  EXPECT_TRUE(inj.coinciding.empty());
  const auto lab = verify_compatibility(m).labeling;
  for (std::size_t i = 0; i < m.graph.num_edges(); ++i) {
    const Edge& e = m.graph.edge(i);
    EXPECT_EQ(w_function(m, e.u, e.v) * z_function(m, e.u, e.v), RationalFunction(Gaussian(lab.lambda_sq[i])));
  }
  const RationalFunction cycle = w_function(m, 0, 1) + w_function(m, 1, 2) + w_function(m, 2, 3) + w_function(m, 3, 0);
  EXPECT_TRUE(cycle.is_zero());
}

TEST(Deltoid, CollapsedMotionIsReported) {
  ParametrizedMotion m = deltoid_motion().motion;
  m.graph = Graph::from_pairs(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  m.x[3] = m.x[1];
  m.y[3] = m.y[1];
  const auto inj = verify_injectivity(m);
  EXPECT_FALSE(inj.proper);
  ASSERT_EQ(inj.coinciding.size(), 1u);
  EXPECT_EQ(inj.coinciding[0], Edge(1, 3));
}

TEST(Refix, DeltoidToSecondEdge) {
  const auto& m = deltoid_motion().motion;
  const auto r = refix_edge(m, 1, 2);
  EXPECT_TRUE(r.x[1].is_zero());
  EXPECT_TRUE(r.y[1].is_zero());
  EXPECT_EQ(r.x[2], RationalFunction(3));
  EXPECT_TRUE(r.y[2].is_zero());
  EXPECT_EQ(verify_compatibility(r).labeling.lambda_sq, verify_compatibility(m).labeling.lambda_sq);
  const auto a = active_nac_colorings(m).colorings;
  const auto b = active_nac_colorings(r).colorings;
  EXPECT_EQ(std::set<Coloring>(a.begin(), a.end()), std::set<Coloring>(b.begin(), b.end()));
  const auto same = refix_edge(m, 0, 1);
  EXPECT_EQ(same.x, m.x);
  EXPECT_EQ(same.y, m.y);
}

TEST(Refix, RequiresRationalLength) {
  ParametrizedMotion m;
  m.graph = Graph::from_pairs(3, {{0, 1}, {1, 2}});
  m.x = {RationalFunction(0), RationalFunction(1), RationalFunction(2)};
  m.y = {RationalFunction(0), RationalFunction(0), RationalFunction(1)};
  EXPECT_THROW(refix_edge(m, 1, 2), MotionError);
}

TEST(MotionJson, RoundTrip) {
  const auto& m = deltoid_motion(Rational(3, 2)).motion;
  const auto back = motion_from_json(nlohmann::json::parse(motion_to_json(m).dump()));
  EXPECT_EQ(back.graph, m.graph);
  EXPECT_EQ(back.x, m.x);
  EXPECT_EQ(back.y, m.y);
  EXPECT_EQ(back.fixed_u, m.fixed_u);
  const auto lab = verify_compatibility(m).labeling;
  const auto lab2 = labeling_from_json(labeling_to_json(lab));
  EXPECT_EQ(lab2.lambda_sq, lab.lambda_sq);
  EXPECT_THROW(motion_from_json(nlohmann::json::parse(R"({"vertices": {"0": {}}})")), ParseError);
}
