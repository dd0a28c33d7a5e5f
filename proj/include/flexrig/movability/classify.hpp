#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "flexrig/catalog.hpp"
#include "flexrig/closure.hpp"
#include "flexrig/constructions/dixon.hpp"
#include "flexrig/constructions/glue.hpp"
#include "flexrig/constructions/grid.hpp"
#include "flexrig/constructions/s5.hpp"
#include "flexrig/constructions/two_nac.hpp"
#include "flexrig/pebble.hpp"
#include "flexrig/reduction.hpp"

namespace flexrig {

enum class VerdictKind { not_movable_no_nac, not_movable_cdc_complete, movable, generically_movable, undecided };

inline std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::not_movable_no_nac: return "NOT_MOVABLE_NO_NAC";
    case VerdictKind::not_movable_cdc_complete: return "NOT_MOVABLE_CDC_COMPLETE";
    case VerdictKind::movable: return "MOVABLE";
    case VerdictKind::generically_movable: return "GENERICALLY_MOVABLE";
    case VerdictKind::undecided: return "UNDECIDED";
  }
  return "?";
}

// A proper flexible labeling of the reduced graph and the evidence for it:
// an exact motion, a Dixon I sampler or a tracked path.
struct Certificate {
  std::string construction;
  Labeling labeling;
  std::optional<ParametrizedMotion> motion;
  std::optional<DixonOne> dixon;
  std::optional<TrackResult> path;
  nlohmann::json details = nlohmann::json::object();
};

struct Verdict {
  VerdictKind kind = VerdictKind::undecided;
  std::string reason;
  DegreeTwoReduction reduction;
  std::optional<Graph> closure;
  std::size_t nac_count = 0;
  std::optional<Certificate> certificate;
};

// Path residual, injectivity margin and a moving non-edge distance.
inline bool path_certifies(const Labeling& lab, const TrackResult& path, double tol = 1e-8, double margin = 1e-4) {
  if (path.samples.size() < 2) return false;
  const std::vector<Edge> non = lab.graph.non_edges();
  std::vector<double> lo(non.size(), std::numeric_limits<double>::infinity());
  std::vector<double> hi(non.size(), -std::numeric_limits<double>::infinity());
  for (const auto& s : path.samples) {
    const Realization& p = s.points;
    if (detail::min_pair_distance(p) < margin) return false;
    for (std::size_t i = 0; i < lab.graph.num_edges(); ++i) {
      const Edge& e = lab.graph.edge(i);
      const double dx = p[e.u].x - p[e.v].x;
      const double dy = p[e.u].y - p[e.v].y;
      if (std::abs(dx * dx + dy * dy - lab.lambda_sq[i].get_d()) > tol) return false;
    }
    for (std::size_t k = 0; k < non.size(); ++k) {
      const double d = std::hypot(p[non[k].u].x - p[non[k].v].x, p[non[k].u].y - p[non[k].v].y);
      lo[k] = std::min(lo[k], d);
      hi[k] = std::max(hi[k], d);
    }
  }
  for (std::size_t k = 0; k < non.size(); ++k)
    if (hi[k] - lo[k] > 1e-3) return true;
  return false;
}

inline bool verify_certificate(const Certificate& c) {
  if (c.motion) {
    const auto compat = verify_compatibility(*c.motion);
    if (!compat.flexible || compat.labeling.lambda_sq != c.labeling.lambda_sq) return false;
    if (!(compat.labeling.graph == c.labeling.graph)) return false;
    return verify_injectivity(*c.motion).proper;
  }
  if (c.dixon) {
    if (c.dixon->labeling.lambda_sq != c.labeling.lambda_sq) return false;
    const SampleCheck s = check_samples(*c.dixon);
    return s.max_residual < 1e-9 && s.min_pair_distance > 1e-6 && s.watched_variation > 1e-6;
  }
  if (c.path) return path_certifies(c.labeling, *c.path);
  return false;
}

// A graph on the catalog's vertex count with a certified proper flexible labeling.
struct KnownConstruction {
  std::string name;
  Certificate certificate;
};

inline std::vector<KnownConstruction> load_known_constructions(const std::filesystem::path& dir =
                                                                   default_data_dir() + "/constructions") {
  std::vector<KnownConstruction> out;
  auto read = [&](const std::string& name) {
    std::ifstream in(dir / (name + ".json"));
    if (!in) throw ParseError("missing construction data " + (dir / (name + ".json")).string());
    try {
      return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(name + ".json: " + e.what());
    }
  };
  auto colorings = [](const Graph& g, const nlohmann::json& j) {
    std::vector<Coloring> cs;
    for (const auto& c : j.at("colorings")) cs.push_back(coloring_from_json(g, c));
    return cs;
  };
  for (const std::string name : {"L1", "L2", "L3", "L4", "L5", "L6"}) {
    const auto j = read(name);
    const Graph g = graph_from_json(j.at("graph"));
    const auto c = grid_construction(g, colorings(g, j).at(0));
    out.push_back({name, {"grid", c.labeling, c.motion, std::nullopt, std::nullopt, {}}});
  }
  for (const std::string name : {"Q1", "Q2", "Q3", "Q4", "Q5", "Q6"}) {
    const auto j = read(name);
    const Graph g = graph_from_json(j.at("graph"));
    const auto cs = colorings(g, j);
    const auto c = two_nac_construction(g, cs.at(0), cs.at(1));
    out.push_back({name, {"two-nac", c.labeling, c.motion, std::nullopt, std::nullopt, {}}});
  }
  for (const std::string name : {"S1", "S2", "S3", "S4"}) {
    GlueOptions opt;
    opt.tracker.steps = 60;
    const auto c = glue_from_json(read(name), opt);
    out.push_back({name, {"glue", c.labeling, std::nullopt, std::nullopt, c.path, {}}});
  }
  const auto s5 = s5_motion(2);
  out.push_back({"S5", {"s5", s5.labeling, s5.motion, std::nullopt, std::nullopt, {}}});
  return out;
}

namespace detail {

inline const std::vector<KnownConstruction>& default_known_constructions() {
  static const std::vector<KnownConstruction> known = load_known_constructions();
  return known;
}

// Pulls a certificate of g back along the spanning embedding phi: h -> g.
inline std::optional<Certificate> restrict_certificate(const Graph& h, const std::vector<int>& phi,
                                                       const Certificate& src) {
  Certificate out;
  out.labeling.graph = h;
  for (const Edge& e : h.edges())
    out.labeling.lambda_sq.push_back(src.labeling.lambda_sq[src.labeling.graph.edge_index(phi[e.u], phi[e.v])]);
  if (src.motion) {
    std::vector<RationalFunction> x;
    std::vector<RationalFunction> y;
    for (int v = 0; v < h.n(); ++v) {
      x.push_back(src.motion->x[phi[v]]);
      y.push_back(src.motion->y[phi[v]]);
    }
    for (const Edge& e : h.edges()) {
      try {
        out.motion = pinned_motion(h, x, y, e.u, e.v);
        break;
      } catch (const MotionError&) {
      }
    }
    if (!out.motion) return std::nullopt;
  } else if (src.path) {
    TrackResult p = *src.path;
    for (auto& s : p.samples) {
      Realization r(static_cast<std::size_t>(h.n()));
      for (int v = 0; v < h.n(); ++v) r[v] = s.points[phi[v]];
      s.points = std::move(r);
    }
    out.path = std::move(p);
  } else {
    return std::nullopt;
  }
  return out;
}

}  // namespace detail

// Constructions in dispatch order on a graph whose non-conjugated
// NAC-colourings are `reps`.
inline std::optional<Certificate> try_constructions(const Graph& g, const std::vector<Coloring>& reps,
                                                    const std::vector<KnownConstruction>& known,
                                                    std::uint64_t seed = 1) {
  if (g.n() >= 3 && bipartition(g)) {
    const DixonOne d = dixon_one(g);
    Certificate c{"dixon1", d.labeling, std::nullopt, d, std::nullopt, {}};
    if (verify_certificate(c)) return c;
  }
  for (std::size_t i = 0; i < reps.size(); ++i) {
    try {
      const auto gc = grid_construction(g, reps[i]);
      Certificate c{"grid", gc.labeling, gc.motion, std::nullopt, std::nullopt, {{"coloring", i}}};
      if (verify_certificate(c)) return c;
    } catch (const ConstructionInapplicable&) {
    }
  }
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      try {
        const auto tc = two_nac_construction(g, reps[i], reps[j], seed);
        Certificate c{"two-nac", tc.labeling, tc.motion, std::nullopt, std::nullopt, {{"colorings", {i, j}}}};
        c.details["embedding"] = embedding_to_json(tc.embedding)["v"];
        if (verify_certificate(c)) return c;
      } catch (const ConstructionInapplicable&) {
      } catch (const MotionError&) {
      }
    }
  }
  for (const auto& k : known) {
    const auto phi = spanning_embedding(g, k.certificate.labeling.graph);
    if (!phi) continue;
    auto c = detail::restrict_certificate(g, *phi, k.certificate);
    if (!c) continue;
    c->construction = "catalog";
    c->details = {{"entry", k.name}, {"source", k.certificate.construction}, {"embedding", *phi}};
    if (verify_certificate(*c)) return c;
  }
  return std::nullopt;
}

inline Verdict classify(const Graph& g, const std::vector<KnownConstruction>& known,
                        std::size_t cap = kDefaultEnumerationCap) {
  if (g.num_edges() < 1 || !is_connected(g)) throw PreconditionError("classify: graph must be connected with an edge");
  Verdict out;
  if (spanning_laman_rank(g) < 2 * g.n() - 3) {
    out.kind = VerdictKind::generically_movable;
    out.reason = "no spanning Laman subgraph";
    return out;
  }
  out.reduction = reduce_degree_two(g);
  const Graph& r = out.reduction.graph;
  std::vector<Coloring> reps;
  try {
    reps = enumerate_nac(r, true, cap);
  } catch (const EnumerationCapExceeded&) {
    out.kind = VerdictKind::undecided;
    out.reason = "too large; use certify_no_unicolor_pairs";
    return out;
  }
  out.nac_count = 2 * reps.size();
  if (reps.empty()) {
    out.kind = VerdictKind::not_movable_no_nac;
    out.reason = "no NAC-colouring";
    return out;
  }
  out.closure = constant_distance_closure(r, cap).closure;
  if (is_complete(*out.closure)) {
    out.kind = VerdictKind::not_movable_cdc_complete;
    out.reason = "constant distance closure is complete";
    return out;
  }
  out.certificate = try_constructions(r, reps, known);
  if (out.certificate) {
    out.kind = VerdictKind::movable;
    out.reason = out.certificate->construction;
  } else {
    out.kind = VerdictKind::undecided;
    out.reason = "no construction applies";
  }
  return out;
}

inline Verdict classify(const Graph& g, std::size_t cap = kDefaultEnumerationCap) {
  return classify(g, detail::default_known_constructions(), cap);
}

}  // namespace flexrig
