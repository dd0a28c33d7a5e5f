// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "fixtures.hpp"
#include "flexrig/catalog.hpp"
#include "flexrig/census.hpp"
#include "flexrig/closure.hpp"
#include "flexrig/constructions/deltoid.hpp"
#include "flexrig/constructions/glue.hpp"
#include "flexrig/constructions/s5.hpp"
#include "flexrig/constructions/two_nac.hpp"
#include "flexrig/motion_io.hpp"
#include "flexrig/movability/classify.hpp"
#include "flexrig/movability/witness.hpp"
#include "oracles.hpp"

using namespace flexrig;
using nlohmann::json;

namespace {

struct Check {
  bool ok = true;
  std::vector<std::string> notes;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
};

std::string data(const std::string& rel) { return std::string(FLEXRIG_DATA_DIR) + "/" + rel; }

std::string run_cli(const std::string& args, int* code) {
  const std::string cmd = std::string(FLEXRIG_CLI) + " " + args + " 2>/dev/null";
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    *code = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  *code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

std::set<Coloring> as_set(const std::vector<Coloring>& cs) { return {cs.begin(), cs.end()}; }

Coloring with_red(const Graph& g, std::initializer_list<std::pair<int, int>> red) {
  Coloring c(g.num_edges(), Color::blue);
  for (auto [u, v] : red) c[g.edge_index(u, v)] = Color::red;
  return c;
}

// Deltoid table, edges {1,2},{2,3},{3,4},{1,4}, places t+i, t-i, t+2i, t-2i.
const std::map<std::pair<int, int>, std::array<int, 4>> kDeltoidTable = {
    {{1, 2}, {0, 0, 0, 0}}, {{2, 3}, {0, 0, 1, -1}}, {{3, 4}, {1, -1, 0, 0}}, {{1, 4}, {1, -1, 1, -1}}};

Check deltoid_table() {
  Check c;
  int code = 0;
  const std::string out = run_cli("motion valuations " + data("motions/deltoid.json") + " --one-based", &code);
  c.expect(code == 0, "motion valuations exit " + std::to_string(code));
  if (code != 0) return c;
  const json j = json::parse(out);
  const std::vector<std::string> places{"t+i", "t-i", "t+2i", "t-2i"};
  c.expect(j.at("places").size() == 4, "expected exactly four non-trivial places");
  int compared = 0;
  for (std::size_t p = 0; p < places.size() && p < j.at("places").size(); ++p) {
    const auto& col = j.at("places")[p];
    c.expect(col.at("place") == places[p], "place " + std::to_string(p) + " is " + col.at("place").dump());
    for (std::size_t k = 0; k < j.at("edges").size(); ++k) {
      const int u = j.at("edges")[k][0];
      const int v = j.at("edges")[k][1];
      const auto it = kDeltoidTable.find({std::min(u, v), std::max(u, v)});
      c.expect(it != kDeltoidTable.end(), "unexpected edge");
      if (it == kDeltoidTable.end()) continue;
      c.expect(col.at("nu")[k].get<int>() == it->second[p], "valuation mismatch at " + places[p]);
      ++compared;
    }
  }
  c.expect(compared == 16, "compared " + std::to_string(compared) + " valuations");

  const ParametrizedMotion m = deltoid_motion().motion;
  const Graph& g = m.graph;
  const Coloring d1 = with_red(g, {{2, 3}, {0, 3}});
  const Coloring d2 = with_red(g, {{1, 2}, {0, 3}});
  const std::set<Coloring> expected{d1, conjugate(d1), d2, conjugate(d2)};
  const std::string active = run_cli("motion active-nac " + data("motions/deltoid.json"), &code);
  c.expect(code == 0, "motion active-nac exit " + std::to_string(code));
  const json parsed = json::parse(active);
  std::set<Coloring> got;
  for (const auto& cj : parsed.at("colorings")) got.insert(coloring_from_json(g, cj));
  c.expect(got == expected, "active NAC set differs from the four table colourings");
  c.expect(enumerate_nac(cycle_graph(4)).size() == 6, "|NAC(C4)| != 6");
  return c;
}

Check seven_vertex_trio() {
  Check c;
  c.expect(enumerate_nac(fixtures::no_nac_seven()).empty(), "left graph has NAC-colourings");

  const Graph mid = fixtures::complete_closure_seven();
  const auto reps = enumerate_nac(mid, true);
  c.expect(reps.size() == 3, "middle graph: " + std::to_string(reps.size()) + " non-conjugated colourings");
  std::set<Coloring> drawn;
  for (const auto& red : fixtures::complete_closure_red_sets()) drawn.insert(normalized(coloring_with_red(mid, red)));
  std::set<Coloring> found;
  for (const auto& r : reps) found.insert(normalized(r));
  c.expect(drawn == found, "middle graph colourings differ from the drawn ones");
  const ClosureReport cl = constant_distance_closure(mid);
  c.expect(cl.closure == complete_graph(7), "middle graph closure is not K7");
  const auto& first = cl.added.empty() ? std::vector<Edge>{} : cl.added.front();
  for (const Edge e : {Edge(0, 3), Edge(1, 4)})
    c.expect(std::find(first.begin(), first.end(), e) != first.end(), "pair missing from iteration 1");

  const Verdict right = classify(fixtures::movable_seven());
  c.expect(right.kind == VerdictKind::movable, "right graph verdict " + to_string(right.kind));
  c.expect(right.certificate && right.certificate->construction == "two-nac", "right graph certificate is not two-nac");
  c.expect(right.certificate && verify_certificate(*right.certificate), "right graph certificate fails");
  return c;
}

Check census_of_21() {
  Check c;
  const Catalog cat = load_catalog();
  const unsigned jobs = std::max(1U, std::thread::hardware_concurrency());
  const CensusReport r = census(census_stream(8), cat, 8, jobs);
  std::set<std::string> names;
  for (const auto& m : r.maximal) names.insert(m.catalog_name);
  std::set<std::string> want;
  for (const auto& e : cat.entries) want.insert(e.name);
  c.expect(want.size() == 21, "catalog has " + std::to_string(want.size()) + " entries");
  c.expect(r.maximal.size() == 21, std::to_string(r.maximal.size()) + " maximal classes");
  c.expect(names == want, "maximal classes differ from the catalog");
  c.expect(r.matches_catalog(), "census report does not match the catalog");
  return c;
}

Check q1_embedding() {
  Check c;
  const Graph g = fixtures::q1_labels();
  const Coloring d1 = coloring_with_red(g, fixtures::q1_delta1_red());
  const Coloring d2 = coloring_with_red(g, fixtures::q1_delta2_red());
  const TwoNacSystem sys = two_nac_solution_space(g, d1, d2);
  c.expect(sys.basis.size() == 1, "solution space has dimension " + std::to_string(sys.basis.size()));
  if (sys.basis.size() != 1) return c;
  const int expected[7][3] = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {1, 1, 1}, {0, 1, 0}, {0, 1, 1}, {-1, 0, 0}};
  // Proportionality: every coordinate is the same multiple of the expected one.
  std::optional<Rational> scale;
  bool proportional = true;
  for (int v = 0; v < 7; ++v) {
    for (int k = 0; k < 3; ++k) {
      const Rational& got = sys.basis[0][v][k];
      if (expected[v][k] == 0) {
        proportional = proportional && sgn(got) == 0;
        continue;
      }
      const Rational s = got / expected[v][k];
      if (!scale) scale = s;
      proportional = proportional && s == *scale;
    }
  }
  c.expect(proportional && scale && sgn(*scale) != 0, "basis vector is not a multiple of the expected embedding");
  const TwoNacConstruction tc = two_nac_construction(g, d1, d2);
  const CompatibilityReport comp = verify_compatibility(tc.motion);
  c.expect(comp.flexible, "induced motion is not flexible");
  const InjectivityReport inj = verify_injectivity(tc.motion);
  c.expect(inj.proper, "induced motion is not injective");
  const std::array<int, 3> triple{0, 1, 6};
  c.expect(std::find(inj.degenerate_triangles.begin(), inj.degenerate_triangles.end(), triple) !=
               inj.degenerate_triangles.end(),
           "collinear triple (1,2,7) not reported");
  return c;
}

Check s5_values() {
  Check c;
  const S5Construction s = s5_motion(2);
  const Labeling& l = s.labeling;
  // Labels 1..8 as 0..7.
  const Rational l15 = l.at(0, 4);
  const Rational l45 = l.at(3, 4);
  const Rational l14 = l.at(0, 3);
  c.expect(l15 == Rational(9, 25), "lambda^2_{1,5} = " + to_fraction_string(l15));
  c.expect(l45 == Rational(64, 25), "lambda^2_{4,5} = " + to_fraction_string(l45));
  const auto r15 = rational_sqrt(l15);
  const auto r45 = rational_sqrt(l45);
  const auto r14 = rational_sqrt(l14);
  c.expect(r15 && r45 && r14 && *r45 == *r15 + *r14, "lambda_{4,5} != lambda_{1,5} + lambda_{1,4}");
  for (std::size_t k = 0; k < l.graph.num_edges(); ++k) {
    const Edge& e = l.graph.edge(k);
    const auto d = squared_distance(s.motion, e.u, e.v).constant();
    c.expect(d && d->re == l.lambda_sq[k] && sgn(d->im) == 0,
             "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is not constant");
  }
  c.expect(s.injectivity.proper, "S5 motion is not proper");
  return c;
}

Check g25() {
  Check c;
  const Graph g = g25_graph();
  const auto w = star_witnesses(g);
  c.expect(w.size() == 25, "witness count");
  for (const auto& d : w) c.expect(is_nac(g, d), "a witness is not NAC");
  c.expect(certify_no_unicolor_pairs(g, w), "certification failed");
  return c;
}

// Edges of a simple cycle (edge indices in path order) as an oriented walk.
std::vector<std::pair<int, int>> oriented(const Graph& g, const std::vector<int>& cycle) {
  const Edge& e0 = g.edge(cycle[0]);
  const Edge& e1 = g.edge(cycle[1]);
  int at = e1.incident(e0.u) ? e0.v : e0.u;
  std::vector<std::pair<int, int>> out;
  for (int idx : cycle) {
    const int next = g.edge(idx).other(at);
    out.emplace_back(at, next);
    at = next;
  }
  return out;
}

Check property_suites() {
  Check c;
  std::mt19937_64 rng(20261016);

  // (a) is_nac against the cycle oracle.
  int a = 0;
  while (a < 500) {
    const int n = std::uniform_int_distribution<int>(3, 7)(rng);
    const Graph g = oracle::random_graph(rng, n, 0.5);
    if (g.num_edges() == 0 || g.num_edges() > 12) continue;
    const auto cycles = oracle::simple_cycles(g);
    Coloring col(g.num_edges());
    for (auto& x : col) x = std::bernoulli_distribution(0.5)(rng) ? Color::red : Color::blue;
    c.expect(is_nac(g, col) == oracle::is_nac(cycles, col), "(a) is_nac disagrees on " + encode_graph6(g));
    ++a;
  }

  // (b) enumeration count against the exhaustive filter.
  int b = 0;
  while (b < 150) {
    const int n = std::uniform_int_distribution<int>(3, 8)(rng);
    const Graph g = oracle::random_connected_graph(rng, n, 0.3);
    if (g.num_edges() > 14) continue;
    c.expect(enumerate_nac(g).size() == oracle::all_nac(g).size(), "(b) count differs on " + encode_graph6(g));
    ++b;
  }

  // (c) closure monotone under connected spanning subgraphs and idempotent.
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(4, 8)(rng);
    const Graph g = oracle::random_connected_graph(rng, n, 0.35);
    Graph h = g;
    for (const Edge& e : g.edges()) {
      if (!std::bernoulli_distribution(0.3)(rng)) continue;
      const Graph smaller = h.without_edge(e);
      if (is_connected(smaller)) h = smaller;
    }
    const Graph cg = constant_distance_closure(g).closure;
    const Graph ch = constant_distance_closure(h).closure;
    for (const Edge& e : ch.edges()) c.expect(cg.has_edge(e.u, e.v), "(c) not monotone on " + encode_graph6(g));
    c.expect(constant_distance_closure(cg).iterations() == 0, "(c) not idempotent on " + encode_graph6(g));
  }

  // (d) W * Z = lambda^2 and zero cycle sums on every bundled motion.
  std::vector<std::pair<std::string, ParametrizedMotion>> motions;
  {
    std::ifstream in(data("motions/deltoid.json"));
    motions.emplace_back("deltoid", motion_from_json(json::parse(in)));
  }
  for (const auto& k : detail::default_known_constructions())
    if (k.certificate.motion) motions.emplace_back(k.name, *k.certificate.motion);
  for (const auto& [name, m] : motions) {
    const Labeling lab = verify_compatibility(m).labeling;
    for (std::size_t i = 0; i < m.graph.num_edges(); ++i) {
      const Edge& e = m.graph.edge(i);
      c.expect(w_function(m, e.u, e.v) * z_function(m, e.u, e.v) == RationalFunction(Gaussian(lab.lambda_sq[i])),
               "(d) W*Z != lambda^2 on " + name);
    }
    for (const auto& cycle : oracle::simple_cycles(m.graph)) {
      RationalFunction sum;
      for (auto [u, v] : oriented(m.graph, cycle)) sum = sum + w_function(m, u, v);
      c.expect(sum.is_zero(), "(d) cycle sum is not zero on " + name);
    }
  }

  // (e) refixing keeps the labeling and the active NAC set.
  {
    const Graph q = fixtures::q1_labels();
    const ParametrizedMotion q1 = two_nac_construction(q, coloring_with_red(q, fixtures::q1_delta1_red()),
                                                       coloring_with_red(q, fixtures::q1_delta2_red()))
                                      .motion;
    int refixed = 0;
    for (const ParametrizedMotion& m : {deltoid_motion().motion, q1}) {
      const auto lab = verify_compatibility(m).labeling.lambda_sq;
      const auto act = as_set(active_nac_colorings(m).colorings);
      for (const Edge& e : m.graph.edges()) {
        if (!rational_sqrt(verify_compatibility(m).labeling.at(e.u, e.v))) continue;
        const ParametrizedMotion r = refix_edge(m, e.u, e.v);
        c.expect(verify_compatibility(r).labeling.lambda_sq == lab, "(e) labeling changed");
        c.expect(as_set(active_nac_colorings(r).colorings) == act, "(e) active NAC set changed");
        ++refixed;
      }
    }
    c.expect(refixed >= 6, "(e) only " + std::to_string(refixed) + " edges could be refixed");
  }

  // (f) tracked deltoid against the closed-form curve.
  {
    const QuadMotion q = deltoid_motion();
    const Labeling lab = verify_compatibility(q.motion).labeling;
    TrackerOptions opt;
    opt.steps = 150;
    opt.step_size = 0.02;
    double worst = 0;
    for (int dir : {1, -1}) {
      opt.direction = dir;
      const TrackResult r = track_motion(lab, realization_at(q.motion, 1), Edge(0, 1), opt);
      for (const auto& s : r.samples) {
        const double t = 2 * s.points[2].y / (4 - s.points[2].x);
        const double d = t * t * t * t + 5 * t * t + 4;
        const double ex = (t * t * t * t - 13 * t * t + 4) / d;
        const double ey = (6 * t * t * t - 12 * t) / d;
        worst = std::max(worst, std::hypot(s.points[3].x - ex, s.points[3].y - ey));
      }
    }
    c.expect(worst <= 1e-8, "(f) tracker deviates by " + std::to_string(worst));
  }

  // (g) glued labelings of S1-S3.
  for (const std::string name : {"S1", "S2", "S3"}) {
    try {
      const GlueConstruction gc = glue_from_file(data("constructions/" + name + ".json"));
      c.expect(gc.path.samples.size() >= 100, "(g) " + name + " has too few samples");
      c.expect(gc.path.min_margin() > 0, "(g) " + name + " is not injective");
      c.expect(gc.evidence.max_nonedge_variation > 1e-3, "(g) " + name + " watched distance is constant");
      c.expect(std::max(gc.evidence.residual_part1, gc.evidence.residual_part2) <= 1e-8,
               "(g) " + name + " leaves the labeling");
    } catch (const Error& e) {
      c.expect(false, "(g) " + name + ": " + e.what());
    }
  }
  return c;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    double budget_s;
    std::function<Check()> body;
  };
  const std::vector<Criterion> criteria = {
      {1, "deltoid valuation table", 1, deltoid_table},
      {2, "three seven-vertex graphs", 3, seven_vertex_trio},
      {3, "census of 21 maximal closures", 7200, census_of_21},
      {4, "Q1 embedding", 1, q1_embedding},
      {5, "S5 labeling at a = 2", 1, s5_values},
      {6, "G25 certification", 10, g25},
      {7, "property suites (a)-(g)", 600, property_suites},
  };
  bool all = true;
  for (const auto& cr : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Check result;
    try {
      result = cr.body();
    } catch (const std::exception& e) {
      result.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    result.expect(secs <= cr.budget_s, "over the time budget");
    all = all && result.ok;
    std::ostringstream line;
    line << "criterion " << cr.id << ": " << (result.ok ? "PASS" : "FAIL") << "  " << cr.name << " ("
         << std::fixed << std::setprecision(2) << secs << " s)";
    std::cout << line.str() << "\n";
    for (std::size_t k = 0; k < result.notes.size() && k < 5; ++k) std::cout << "    " << result.notes[k] << "\n";
  }
  return all ? 0 : 1;
}
