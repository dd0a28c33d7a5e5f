#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "flexrig/catalog.hpp"
#include "flexrig/census.hpp"
#include "flexrig/closure.hpp"
#include "flexrig/constructions/dixon.hpp"
#include "flexrig/constructions/glue.hpp"
#include "flexrig/constructions/grid.hpp"
#include "flexrig/constructions/s5.hpp"
#include "flexrig/constructions/two_nac.hpp"
#include "flexrig/graph_io.hpp"
#include "flexrig/motion_io.hpp"
#include "flexrig/movability/certificate_io.hpp"
#include "flexrig/movability/classify.hpp"
#include "flexrig/movability/witness.hpp"
#include "flexrig/nac.hpp"
#include "flexrig/tracker.hpp"

using namespace flexrig;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitCap = 3;
constexpr int kExitCensusMismatch = 4;
constexpr int kExitInapplicable = 5;

// "-" or empty reads stdin, an existing file is read whole, anything else is
// the input itself.
std::string read_source(const std::string& src) {
  std::stringstream ss;
  if (src.empty() || src == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  if (fs::is_regular_file(src)) {
    std::ifstream in(src);
    if (!in) throw ParseError("cannot open " + src);
    ss << in.rdbuf();
    return ss.str();
  }
  return src;
}

Graph read_graph(const std::string& src) {
  std::istringstream in(read_source(src));
  std::string kept;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] == '#') continue;
    kept += line + "\n";
  }
  return parse_graph_text(kept);
}

json read_json(const std::string& src) {
  try {
    return json::parse(read_source(src));
  } catch (const json::exception& e) {
    throw ParseError(src + ": " + e.what());
  }
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  if (!out) throw ParseError("cannot write " + p.string());
  out << text;
}

std::string edge_name(const Edge& e, int offset) {
  return "{" + std::to_string(e.u + offset) + "," + std::to_string(e.v + offset) + "}";
}

std::string lambda_string(const Rational& sq) {
  if (auto r = rational_sqrt(sq)) return to_fraction_string(*r);
  return "sqrt(" + to_fraction_string(sq) + ")";
}

json lambda_json(const Labeling& l) {
  json out = json::array();
  for (const Rational& q : l.lambda_sq) out.push_back(lambda_string(q));
  return out;
}

std::string red_edges(const Graph& g, const Coloring& c, int offset = 0) {
  std::string s;
  for (std::size_t k = 0; k < g.num_edges(); ++k) {
    if (c[k] != Color::red) continue;
    if (!s.empty()) s += ' ';
    s += edge_name(g.edge(k), offset);
  }
  return s;
}

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s + " " : s + std::string(w - s.size(), ' '); }

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---- nac ---------------------------------------------------------------

struct NacArgs {
  std::string graph;
  std::string coloring;
  bool non_conjugated = false;
  std::string format = "json";
  std::size_t cap = kDefaultEnumerationCap;
};

int cmd_nac_enum(const NacArgs& a) {
  const Graph g = read_graph(a.graph);
  const auto cs = enumerate_nac(g, a.non_conjugated, a.cap);
  if (a.format == "table") {
    std::cout << cs.size() << (a.non_conjugated ? " non-conjugated" : "") << " NAC-colourings\n";
    for (std::size_t i = 0; i < cs.size(); ++i) std::cout << i << "  red: " << red_edges(g, cs[i]) << "\n";
    return kExitOk;
  }
  json list = json::array();
  for (const auto& c : cs) list.push_back(coloring_to_json(g, c));
  print_json({{"graph", encode_graph6(g)}, {"non_conjugated", a.non_conjugated}, {"count", cs.size()}, {"colorings", list}});
  return kExitOk;
}

int cmd_nac_check(const NacArgs& a) {
  const Graph g = read_graph(a.graph);
  const Coloring c = coloring_from_json(g, read_json(a.coloring));
  const bool ok = is_nac(g, c);
  if (a.format == "table") {
    std::cout << (ok ? "NAC" : "not NAC") << "\n";
  } else {
    print_json({{"graph", encode_graph6(g)}, {"nac", ok}});
  }
  return kExitOk;
}

// ---- cdc / classify ----------------------------------------------------

struct GraphArgs {
  std::string graph;
  std::string format = "json";
  std::size_t cap = kDefaultEnumerationCap;
  std::string certificate;
};

int cmd_cdc(const GraphArgs& a) {
  const Graph g = read_graph(a.graph);
  const ClosureReport r = constant_distance_closure(g, a.cap);
  if (a.format == "table") {
    std::cout << encode_graph6(r.closure) << "\n";
    for (std::size_t i = 0; i < r.added.size(); ++i) {
      std::cout << "iteration " << i + 1 << ":";
      for (const Edge& e : r.added[i]) std::cout << ' ' << e.u << '-' << e.v;
      std::cout << "\n";
    }
    std::cout << "iterations: " << r.added.size() << "\n";
    std::cout << "complete: " << (is_complete(r.closure) ? "yes" : "no") << "\n";
    return kExitOk;
  }
  json added = json::array();
  for (const auto& round : r.added) {
    json es = json::array();
    for (const Edge& e : round) es.push_back({e.u, e.v});
    added.push_back(es);
  }
  print_json({{"graph", encode_graph6(g)},
              {"closure", encode_graph6(r.closure)},
              {"iterations", r.added.size()},
              {"added", added},
              {"complete", is_complete(r.closure)}});
  return kExitOk;
}

int cmd_classify(const GraphArgs& a) {
  const Graph g = read_graph(a.graph);
  const Verdict v = classify(g, a.cap);
  json out = {{"graph", encode_graph6(g)},
              {"verdict", to_string(v.kind)},
              {"reason", v.reason},
              {"nac_count", v.nac_count},
              {"certificate", nullptr}};
  if (v.kind != VerdictKind::generically_movable) {
    out["reduced_graph"] = encode_graph6(v.reduction.graph);
    out["removed"] = v.reduction.removed;
    out["kept"] = v.reduction.kept;
  }
  if (v.closure) out["closure"] = encode_graph6(*v.closure);
  if (v.certificate) {
    out["construction"] = v.certificate->construction;
    if (a.certificate.empty()) {
      out["certificate"] = certificate_to_json(*v.certificate);
    } else {
      write_file(a.certificate, certificate_to_json(*v.certificate).dump(2) + "\n");
      out["certificate"] = a.certificate;
    }
  }
  print_json(out);
  return kExitOk;
}

// ---- census ------------------------------------------------------------

struct CensusArgs {
  int max_n = 8;
  std::string catalog = default_catalog_dir();
  std::string graphs;
  unsigned jobs = 1;
  std::string out;
  bool verbose = false;
};

int cmd_census(const CensusArgs& a) {
  const Catalog cat = load_catalog(a.catalog);
  std::vector<Graph> stream;
  if (a.graphs.empty()) {
    stream = census_stream(a.max_n);
  } else if (a.graphs == "-") {
    stream = read_graph6_stream(std::cin);
  } else {
    std::ifstream in(a.graphs);
    if (!in) throw ParseError("cannot open " + a.graphs);
    stream = read_graph6_stream(in);
  }
  std::function<void(const std::string&)> progress;
  if (a.verbose) progress = [](const std::string& s) { std::cerr << s << "\n"; };
  const CensusReport r = census(stream, cat, a.max_n, a.jobs, progress);
  json maximal = json::array();
  for (const auto& c : r.maximal) {
    maximal.push_back({{"graph6", encode_graph6(c.closure)},
                       {"n", c.closure.n()},
                       {"edges", c.closure.num_edges()},
                       {"sources", c.sources},
                       {"catalog", c.catalog_name.empty() ? json(nullptr) : json(c.catalog_name)}});
  }
  json unexpected = json::array();
  for (std::size_t i : r.unexpected) unexpected.push_back(encode_graph6(r.maximal[i].closure));
  const json out = {{"max_n", r.max_n},
                    {"inputs", r.inputs},
                    {"distinct_inputs", r.distinct_inputs},
                    {"spanning", r.spanning},
                    {"complete_closures", r.complete},
                    {"degree_two_closures", r.degree_two},
                    {"survivors", r.survivors.size()},
                    {"maximal_count", r.maximal.size()},
                    {"maximal", maximal},
                    {"missing", r.missing},
                    {"unexpected", unexpected},
                    {"matches_catalog", r.matches_catalog()}};
  if (a.out.empty()) {
    print_json(out);
  } else {
    write_file(a.out, out.dump(2) + "\n");
    std::cout << r.maximal.size() << " maximal classes, " << (r.matches_catalog() ? "matches" : "differs from")
              << " catalog\n";
  }
  return r.matches_catalog() ? kExitOk : kExitCensusMismatch;
}

// ---- construct ---------------------------------------------------------

struct TrackArgs {
  int steps = TrackerOptions{}.steps;
  double step_size = TrackerOptions{}.step_size;
  double tol = TrackerOptions{}.tol;
  double rank_tol = TrackerOptions{}.rank_tol;
  double min_margin = TrackerOptions{}.min_margin;

  TrackerOptions options() const {
    TrackerOptions o;
    o.steps = steps;
    o.step_size = step_size;
    o.tol = tol;
    o.rank_tol = rank_tol;
    o.min_margin = min_margin;
    return o;
  }

  void add_to(CLI::App* app) {
    app->add_option("--steps", steps, "Tracker steps per direction")->capture_default_str();
    app->add_option("--step-size", step_size, "Tracker arc-length step")->capture_default_str();
    app->add_option("--tol", tol, "Corrector residual tolerance")->capture_default_str();
    app->add_option("--rank-tol", rank_tol, "Relative singular value threshold")->capture_default_str();
    app->add_option("--min-margin", min_margin, "Smallest allowed vertex distance")->capture_default_str();
  }
};

struct ConstructArgs {
  std::string input;
  std::vector<std::string> colorings;
  std::uint64_t seed = 1;
  std::string a = "2";
  std::string out;
  std::string format = "json";
  TrackArgs track;
};

std::vector<Coloring> read_colorings(const Graph& g, const std::vector<std::string>& files) {
  std::vector<Coloring> out;
  for (const auto& f : files) {
    const Coloring c = coloring_from_json(g, read_json(f));
    if (!is_nac(g, c)) throw ConstructionInapplicable("colouring in " + f + " is not a NAC-colouring");
    out.push_back(c);
  }
  return out;
}

Certificate construct_dixon(const ConstructArgs& a) {
  const Graph g = read_graph(a.input);
  const DixonOne d = dixon_one(g);
  const SampleCheck s = check_samples(d);
  Certificate c{"dixon1", d.labeling, std::nullopt, d, std::nullopt, {}};
  c.details = {{"max_residual", s.max_residual},
               {"min_pair_distance", s.min_pair_distance},
               {"watched_variation", s.watched_variation}};
  return c;
}

Certificate construct_grid(const ConstructArgs& a) {
  const Graph g = read_graph(a.input);
  std::vector<Coloring> cands = read_colorings(g, a.colorings);
  if (cands.empty()) cands = enumerate_nac(g, true);
  if (cands.empty()) throw ConstructionInapplicable("grid: graph has no NAC-colouring");
  std::string first_error;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    try {
      const GridConstruction gc = grid_construction(g, cands[i]);
      Certificate c{"grid", gc.labeling, gc.motion, std::nullopt, std::nullopt, {}};
      c.details = {{"coloring", coloring_to_json(g, cands[i])}, {"i", gc.embedding.i}, {"j", gc.embedding.j}};
      return c;
    } catch (const ConstructionInapplicable& e) {
      if (first_error.empty()) first_error = e.what();
    }
  }
  throw ConstructionInapplicable(first_error);
}

Certificate construct_two_nac(const ConstructArgs& a) {
  const Graph g = read_graph(a.input);
  std::vector<Coloring> given = read_colorings(g, a.colorings);
  std::vector<std::pair<Coloring, Coloring>> pairs;
  if (!given.empty()) {
    if (given.size() != 2) throw PreconditionError("two-nac: give exactly two colourings");
    pairs.emplace_back(given[0], given[1]);
  } else {
    const auto reps = enumerate_nac(g, true);
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = i + 1; j < reps.size(); ++j) pairs.emplace_back(reps[i], reps[j]);
    if (pairs.empty()) throw ConstructionInapplicable("two-nac: graph needs two non-conjugated NAC-colourings");
  }
  std::string first_error;
  for (const auto& [d1, d2] : pairs) {
    try {
      const TwoNacConstruction tc = two_nac_construction(g, d1, d2, a.seed);
      const InjectivityReport inj = verify_injectivity(tc.motion);
      if (!inj.proper) throw ConstructionInapplicable("two-nac: induced motion is not injective");
      const TwoNacSystem sys = two_nac_solution_space(g, d1, d2);
      json degenerate = json::array();
      for (const auto& t : inj.degenerate_triangles) degenerate.push_back(t);
      Certificate c{"two-nac", tc.labeling, tc.motion, std::nullopt, std::nullopt, {}};
      c.details = {{"colorings", {coloring_to_json(g, d1), coloring_to_json(g, d2)}},
                   {"solution_dimension", sys.basis.size()},
                   {"embedding", embedding_to_json(tc.embedding)},
                   {"degenerate_triangles", degenerate},
                   {"seed", a.seed}};
      return c;
    } catch (const ConstructionInapplicable& e) {
      if (first_error.empty()) first_error = e.what();
    } catch (const MotionError& e) {
      if (first_error.empty()) first_error = e.what();
    }
  }
  throw ConstructionInapplicable(first_error);
}

Certificate construct_s5(const ConstructArgs& a) {
  const S5Construction s = s5_motion(parse_fraction(a.a));
  Certificate c{"s5", s.labeling, s.motion, std::nullopt, std::nullopt, {}};
  c.details = {{"a", to_fraction_string(s.a)}, {"proper", s.injectivity.proper}};
  return c;
}

Certificate construct_glue(const ConstructArgs& a, GlueConstruction* keep) {
  GlueOptions opt;
  opt.tracker = a.track.options();
  GlueConstruction gc = glue_from_json(read_json(a.input), opt);
  json implied = json::array();
  for (const Edge& e : gc.implied) implied.push_back({e.u, e.v});
  Certificate c{"glue", gc.labeling, std::nullopt, std::nullopt, gc.path, {}};
  c.details = {{"name", gc.name},
               {"parts", {gc.part1, gc.part2}},
               {"implied", implied},
               {"samples", gc.path.samples.size()},
               {"min_margin", gc.path.min_margin()},
               {"cross_margin", gc.evidence.cross_margin},
               {"residual_part1", gc.evidence.residual_part1},
               {"residual_part2", gc.evidence.residual_part2},
               {"max_nonedge_variation", gc.evidence.max_nonedge_variation},
               {"varying_pair", {gc.evidence.varying_pair.u, gc.evidence.varying_pair.v}}};
  if (keep) *keep = std::move(gc);
  return c;
}

int emit_construction(const ConstructArgs& a, const Certificate& c, const TrackResult* path) {
  if (!verify_certificate(c)) throw MotionError(c.construction + ": certificate does not verify");
  if (a.format == "table") {
    std::cout << c.construction << "\n";
    for (std::size_t k = 0; k < c.labeling.graph.num_edges(); ++k) {
      std::cout << pad(edge_name(c.labeling.graph.edge(k), 0), 10) << pad(to_fraction_string(c.labeling.lambda_sq[k]), 14)
                << lambda_string(c.labeling.lambda_sq[k]) << "\n";
    }
  }
  if (a.out.empty()) {
    if (a.format != "table") {
      json j = certificate_to_json(c);
      j["lambda"] = lambda_json(c.labeling);
      print_json(j);
    }
    return kExitOk;
  }
  const fs::path dir(a.out);
  fs::create_directories(dir);
  json files = json::array();
  write_file(dir / "labeling.json", labeling_to_json(c.labeling).dump(2) + "\n");
  files.push_back((dir / "labeling.json").string());
  write_file(dir / "certificate.json", certificate_to_json(c).dump(2) + "\n");
  files.push_back((dir / "certificate.json").string());
  if (c.motion) {
    write_file(dir / "motion.json", motion_to_json(*c.motion).dump(2) + "\n");
    files.push_back((dir / "motion.json").string());
  }
  if (path) {
    std::ostringstream csv;
    write_track_csv(csv, *path);
    write_file(dir / "path.csv", csv.str());
    files.push_back((dir / "path.csv").string());
  }
  if (a.format != "table") {
    print_json({{"construction", c.construction},
                {"labeling", labeling_to_json(c.labeling)},
                {"lambda", lambda_json(c.labeling)},
                {"details", c.details},
                {"files", files}});
  }
  return kExitOk;
}

int cmd_construct(const std::string& which, const ConstructArgs& a) {
  try {
    if (which == "dixon1") return emit_construction(a, construct_dixon(a), nullptr);
    if (which == "grid") return emit_construction(a, construct_grid(a), nullptr);
    if (which == "two-nac") return emit_construction(a, construct_two_nac(a), nullptr);
    if (which == "s5") return emit_construction(a, construct_s5(a), nullptr);
    GlueConstruction gc;
    const Certificate c = construct_glue(a, &gc);
    return emit_construction(a, c, &gc.path);
  } catch (const PreconditionError& e) {
    throw ConstructionInapplicable(e.what());
  }
}

// ---- motion ------------------------------------------------------------

struct MotionArgs {
  std::string input;
  std::string format = "json";
  bool one_based = false;
  bool all_places = false;
  std::string t0 = "0";
  std::vector<int> edge;
  int direction = 1;
  std::string out;
  TrackArgs track;
};

int cmd_motion_verify(const MotionArgs& a) {
  const json j = read_json(a.input);
  if (j.contains("vertices")) {
    const ParametrizedMotion m = motion_from_json(j);
    const CompatibilityReport comp = verify_compatibility(m);
    const InjectivityReport inj = verify_injectivity(m);
    json coinciding = json::array();
    for (const Edge& e : inj.coinciding) coinciding.push_back({e.u, e.v});
    json degenerate = json::array();
    for (const auto& t : inj.degenerate_triangles) degenerate.push_back(t);
    print_json({{"compatible", true},
                {"flexible", comp.flexible},
                {"proper", inj.proper},
                {"labeling", labeling_to_json(comp.labeling)},
                {"coinciding", coinciding},
                {"degenerate_triangles", degenerate}});
    return inj.proper ? kExitOk : kExitFailed;
  }
  const Certificate c = certificate_from_json(j);
  const bool ok = verify_certificate(c);
  print_json({{"construction", c.construction}, {"verified", ok}});
  return ok ? kExitOk : kExitFailed;
}

int cmd_motion_valuations(const MotionArgs& a) {
  const ParametrizedMotion m = motion_from_json(read_json(a.input));
  const CompatibilityReport comp = verify_compatibility(m);
  const PlaceSet ps = candidate_places(m);
  std::vector<ValuationTable> tables;
  for (const Place& p : ps.places) {
    ValuationTable t = valuation_table(m, p);
    const bool trivial = std::all_of(t.nu.begin(), t.nu.end(), [&](int x) { return x == t.nu.front(); });
    if (a.all_places || !trivial) tables.push_back(std::move(t));
  }
  const int off = a.one_based ? 1 : 0;
  const Graph& g = m.graph;
  if (a.format == "table") {
    std::cout << pad("edge", 10) << pad("lambda", 10);
    for (const auto& t : tables) {
      std::cout << pad("nu[" + t.place.to_string() + "]", 12);
      for (const auto& [alpha, c] : threshold_colorings(t)) std::cout << pad("alpha=" + std::to_string(alpha), 10);
    }
    std::cout << "\n";
    for (std::size_t k = 0; k < g.num_edges(); ++k) {
      std::cout << pad(edge_name(g.edge(k), off), 10) << pad(lambda_string(comp.labeling.lambda_sq[k]), 10);
      for (const auto& t : tables) {
        std::cout << pad(std::to_string(t.nu[k]), 12);
        for (const auto& [alpha, c] : threshold_colorings(t)) std::cout << pad(c[k] == Color::red ? "red" : "blue", 10);
      }
      std::cout << "\n";
    }
    for (const Poly& p : ps.unresolved) std::cout << "unresolved factor: " << poly_to_json(p).dump() << "\n";
    return kExitOk;
  }
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u + off, e.v + off});
  json places = json::array();
  for (const auto& t : tables) {
    json cs = json::array();
    for (const auto& [alpha, c] : threshold_colorings(t)) {
      json colors = json::array();
      for (Color x : c) colors.push_back(x == Color::red ? "red" : "blue");
      cs.push_back({{"alpha", alpha}, {"colors", colors}, {"nac", is_nac(g, c)}});
    }
    places.push_back({{"place", t.place.to_string()}, {"nu", t.nu}, {"colorings", cs}});
  }
  json unresolved = json::array();
  for (const Poly& p : ps.unresolved) unresolved.push_back(poly_to_json(p));
  print_json({{"edges", edges}, {"lambda", lambda_json(comp.labeling)}, {"places", places}, {"unresolved", unresolved}});
  return kExitOk;
}

int cmd_motion_active_nac(const MotionArgs& a) {
  const ParametrizedMotion m = motion_from_json(read_json(a.input));
  const ActiveNacReport r = active_nac_colorings(m);
  const int off = a.one_based ? 1 : 0;
  if (a.format == "table") {
    std::cout << r.colorings.size() << " active NAC-colourings" << (r.lower_bound ? " (lower bound)" : "") << "\n";
    for (std::size_t i = 0; i < r.colorings.size(); ++i)
      std::cout << i << "  red: " << red_edges(m.graph, r.colorings[i], off) << "\n";
    return kExitOk;
  }
  json list = json::array();
  for (const auto& c : r.colorings) list.push_back(coloring_to_json(m.graph, c));
  print_json({{"count", r.colorings.size()}, {"lower_bound", r.lower_bound}, {"colorings", list}});
  return kExitOk;
}

int cmd_motion_track(const MotionArgs& a) {
  const json j = read_json(a.input);
  Labeling lab;
  Realization start;
  Edge fixed(0, 1);
  if (j.contains("vertices")) {
    const ParametrizedMotion m = motion_from_json(j);
    lab = verify_compatibility(m).labeling;
    start = realization_at(m, parse_fraction(a.t0));
    fixed = Edge(m.fixed_u, m.fixed_v);
  } else {
    // {"labeling": {...}, "start": {"v": [x, y]}}
    try {
      lab = labeling_from_json(j.at("labeling"));
      for (int v = 0; v < lab.graph.n(); ++v) {
        const auto& p = j.at("start").at(std::to_string(v));
        start.push_back({parse_fraction(p.at(0).get<std::string>()).get_d(),
                         parse_fraction(p.at(1).get<std::string>()).get_d()});
      }
    } catch (const json::exception& e) {
      throw ParseError(std::string("track input: ") + e.what());
    }
    fixed = lab.graph.edge(0);
  }
  if (!a.edge.empty()) fixed = Edge(a.edge.at(0), a.edge.at(1));
  TrackerOptions opt = a.track.options();
  opt.direction = a.direction;
  const TrackResult r = track_motion(lab, start, fixed, opt);
  std::ostringstream csv;
  write_track_csv(csv, r);
  if (a.out.empty()) {
    std::cout << csv.str();
  } else {
    write_file(a.out, csv.str());
  }
  std::cerr << "kernel dimension " << r.kernel_dimension << ", " << r.samples.size() << " samples, max residual "
            << r.max_residual() << ", min margin " << r.min_margin() << "\n";
  return kExitOk;
}

int cmd_motion_refix(const MotionArgs& a) {
  const ParametrizedMotion m = motion_from_json(read_json(a.input));
  if (a.edge.size() != 2) throw PreconditionError("refix: --edge needs two vertices");
  print_json(motion_to_json(refix_edge(m, a.edge[0], a.edge[1])));
  return kExitOk;
}

// ---- generate ----------------------------------------------------------

int cmd_generate(const std::string& what, int n) {
  std::vector<Graph> gs;
  if (what == "laman") {
    gs = laman_graphs(n);
  } else if (what == "spanning-laman") {
    gs = spanning_laman_graphs(n);
  } else if (what == "census") {
    gs = census_stream(n);
  } else {
    gs = {g25_graph()};
  }
  for (const Graph& g : gs) std::cout << encode_graph6(g) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flexibility and rigidity of graphs via NAC-colourings"};
  app.require_subcommand(1);
  std::function<int()> run;
  const std::vector<std::string> formats{"json", "table"};

  NacArgs nac;
  auto* nac_cmd = app.add_subcommand("nac", "NAC-colourings of a graph");
  nac_cmd->require_subcommand(1);
  auto* nac_enum = nac_cmd->add_subcommand("enum", "Enumerate NAC-colourings");
  auto* nac_check = nac_cmd->add_subcommand("check", "Check a colouring");
  for (auto* sub : {nac_enum, nac_check}) {
    sub->add_option("graph", nac.graph, "graph6 text, JSON, file or - for stdin")->required();
    sub->add_option("--format", nac.format)->check(CLI::IsMember(formats))->capture_default_str();
  }
  nac_enum->add_flag("--non-conjugated", nac.non_conjugated, "One colouring per conjugate pair");
  nac_enum->add_option("--cap", nac.cap, "Largest edge count to enumerate")->capture_default_str();
  nac_check->add_option("--coloring", nac.coloring, "Colouring JSON file")->required();
  nac_enum->callback([&] { run = [&] { return cmd_nac_enum(nac); }; });
  nac_check->callback([&] { run = [&] { return cmd_nac_check(nac); }; });

  GraphArgs ga;
  auto* cdc_cmd = app.add_subcommand("cdc", "Constant distance closure");
  auto* classify_cmd = app.add_subcommand("classify", "Decide movability");
  for (auto* sub : {cdc_cmd, classify_cmd}) {
    sub->add_option("graph", ga.graph, "graph6 text, JSON, file or - for stdin")->required();
    sub->add_option("--cap", ga.cap, "Largest edge count to enumerate")->capture_default_str();
  }
  cdc_cmd->add_option("--format", ga.format)->check(CLI::IsMember(formats))->capture_default_str();
  classify_cmd->add_option("--certificate", ga.certificate, "Write the certificate to this file");
  cdc_cmd->callback([&] { run = [&] { return cmd_cdc(ga); }; });
  classify_cmd->callback([&] { run = [&] { return cmd_classify(ga); }; });

  CensusArgs ca;
  auto* census_cmd = app.add_subcommand("census", "Maximal closures compared with the catalog");
  census_cmd->add_option("--max-n", ca.max_n)->check(CLI::Range(2, 8))->capture_default_str();
  census_cmd->add_option("--catalog", ca.catalog, "Catalog directory")->capture_default_str();
  census_cmd->add_option("--graphs", ca.graphs, "graph6 stream (file or -) instead of the built-in generator");
  census_cmd->add_option("--jobs", ca.jobs)->check(CLI::PositiveNumber)->capture_default_str();
  census_cmd->add_option("--out", ca.out, "Write the report here");
  census_cmd->add_flag("--verbose", ca.verbose);
  census_cmd->callback([&] { run = [&] { return cmd_census(ca); }; });

  ConstructArgs cons;
  auto* construct_cmd = app.add_subcommand("construct", "Build a flexible labeling");
  construct_cmd->require_subcommand(1);
  const std::vector<std::string> kinds{"dixon1", "grid", "two-nac", "s5", "glue"};
  for (const auto& kind : kinds) {
    auto* sub = construct_cmd->add_subcommand(kind);
    if (kind == "glue") {
      sub->add_option("data", cons.input, "Glue data JSON")->required();
      cons.track.add_to(sub);
    } else if (kind == "s5") {
      sub->add_option("--a", cons.a, "Parameter a > 1")->capture_default_str();
    } else {
      sub->add_option("graph", cons.input, "graph6 text, JSON, file or - for stdin")->required();
    }
    if (kind == "grid" || kind == "two-nac") sub->add_option("--coloring", cons.colorings, "Colouring JSON file");
    if (kind == "two-nac") sub->add_option("--seed", cons.seed)->capture_default_str();
    sub->add_option("--out", cons.out, "Write labeling and certificate files to this directory");
    sub->add_option("--format", cons.format)->check(CLI::IsMember(formats))->capture_default_str();
    sub->callback([&, kind] { run = [&, kind] { return cmd_construct(kind, cons); }; });
  }

  MotionArgs ma;
  auto* motion_cmd = app.add_subcommand("motion", "Parametrized motions");
  motion_cmd->require_subcommand(1);
  auto* m_verify = motion_cmd->add_subcommand("verify", "Check a motion or a certificate");
  auto* m_val = motion_cmd->add_subcommand("valuations", "Valuations of the W-functions");
  auto* m_active = motion_cmd->add_subcommand("active-nac", "Active NAC-colourings");
  auto* m_track = motion_cmd->add_subcommand("track", "Numeric continuation, CSV output");
  auto* m_refix = motion_cmd->add_subcommand("refix", "Pin another edge");
  for (auto* sub : {m_verify, m_val, m_active, m_track, m_refix})
    sub->add_option("input", ma.input, "JSON file or - for stdin")->required();
  for (auto* sub : {m_val, m_active}) {
    sub->add_option("--format", ma.format)->check(CLI::IsMember(formats))->capture_default_str();
    sub->add_flag("--one-based", ma.one_based, "Print vertex labels from 1");
  }
  m_val->add_flag("--all-places", ma.all_places, "Include places where every valuation agrees");
  m_track->add_option("--t0", ma.t0, "Start parameter of a motion")->capture_default_str();
  m_track->add_option("--direction", ma.direction)->check(CLI::IsMember({-1, 1}))->capture_default_str();
  m_track->add_option("--fixed", ma.edge, "Pinned edge u v")->expected(2);
  m_track->add_option("--out", ma.out, "CSV file");
  ma.track.add_to(m_track);
  m_refix->add_option("--edge", ma.edge, "New fixed edge u v")->expected(2)->required();
  m_verify->callback([&] { run = [&] { return cmd_motion_verify(ma); }; });
  m_val->callback([&] { run = [&] { return cmd_motion_valuations(ma); }; });
  m_active->callback([&] { run = [&] { return cmd_motion_active_nac(ma); }; });
  m_track->callback([&] { run = [&] { return cmd_motion_track(ma); }; });
  m_refix->callback([&] { run = [&] { return cmd_motion_refix(ma); }; });

  std::string gen_what;
  int gen_n = 6;
  auto* gen_cmd = app.add_subcommand("generate", "Write graph6 lines");
  gen_cmd->add_option("what", gen_what)->check(CLI::IsMember({"laman", "spanning-laman", "census", "g25"}))->required();
  gen_cmd->add_option("-n,--n", gen_n, "Vertex count (maximum for census)")->check(CLI::Range(2, 8))
      ->capture_default_str();
  gen_cmd->callback([&] { run = [&] { return cmd_generate(gen_what, gen_n); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    return run();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const EnumerationCapExceeded& e) {
    std::cerr << "enumeration cap: " << e.what() << "\n";
    return kExitCap;
  } catch (const ConstructionInapplicable& e) {
    std::cerr << "inapplicable: " << e.what() << "\n";
    return kExitInapplicable;
  } catch (const PreconditionError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitParse;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailed;
  }
}
