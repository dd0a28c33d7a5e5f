#pragma once

#include <string>

#include "json.hpp"

#include "flexrig/graph_io.hpp"
#include "flexrig/motion.hpp"

namespace flexrig {

inline nlohmann::json poly_to_json(const Poly& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : p.coeffs()) out.push_back({to_fraction_string(c.re), to_fraction_string(c.im)});
  return out;
}

inline Poly poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be an array of [re, im] pairs");
  std::vector<Gaussian> coeffs;
  for (const auto& c : j) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string()) {
      throw ParseError("polynomial coefficient must be a pair of fraction strings");
    }
    coeffs.emplace_back(parse_fraction(c[0].get<std::string>()), parse_fraction(c[1].get<std::string>()));
  }
  return Poly(std::move(coeffs));
}

inline nlohmann::json rational_function_to_json(const RationalFunction& f) {
  return {{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}};
}

inline RationalFunction rational_function_from_json(const nlohmann::json& j) {
  const Poly den = poly_from_json(j.at("den"));
  if (den.is_zero()) throw ParseError("rational function with zero denominator");
  return {poly_from_json(j.at("num")), den};
}

inline nlohmann::json motion_to_json(const ParametrizedMotion& m) {
  nlohmann::json vertices = nlohmann::json::object();
  for (int v = 0; v < m.graph.n(); ++v) {
    vertices[std::to_string(v)] = {{"x", rational_function_to_json(m.x[v])},
                                   {"y", rational_function_to_json(m.y[v])}};
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : m.graph.edges()) edges.push_back({e.u, e.v});
  return {{"fixed_edge", {m.fixed_u, m.fixed_v}}, {"edges", edges}, {"vertices", vertices}};
}

inline ParametrizedMotion motion_from_json(const nlohmann::json& j) {
  try {
    ParametrizedMotion m;
    const auto& vertices = j.at("vertices");
    if (!vertices.is_object()) throw ParseError("motion JSON: vertices must be an object");
    const int n = static_cast<int>(vertices.size());
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("motion JSON: edge must be a pair");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    m.graph = Graph(n, std::move(edges));
    for (int v = 0; v < n; ++v) {
      const auto it = vertices.find(std::to_string(v));
      if (it == vertices.end()) throw ParseError("motion JSON: vertex keys must be 0..n-1");
      m.x.push_back(rational_function_from_json(it->at("x")));
      m.y.push_back(rational_function_from_json(it->at("y")));
    }
    const auto& fixed = j.at("fixed_edge");
    if (!fixed.is_array() || fixed.size() != 2) throw ParseError("motion JSON: fixed_edge must be a pair");
    m.fixed_u = fixed[0].get<int>();
    m.fixed_v = fixed[1].get<int>();
    if (m.fixed_u < 0 || m.fixed_u >= n || m.fixed_v < 0 || m.fixed_v >= n) {
      throw ParseError("motion JSON: fixed_edge vertex out of range");
    }
    return m;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("motion JSON: ") + ex.what());
  } catch (const PreconditionError& ex) {
    throw ParseError(std::string("motion JSON: ") + ex.what());
  }
}

inline nlohmann::json labeling_to_json(const Labeling& l) {
  nlohmann::json edges = nlohmann::json::array();
  nlohmann::json values = nlohmann::json::array();
  for (std::size_t i = 0; i < l.graph.num_edges(); ++i) {
    edges.push_back({l.graph.edge(i).u, l.graph.edge(i).v});
    values.push_back(to_fraction_string(l.lambda_sq[i]));
  }
  return {{"n", l.graph.n()}, {"edges", edges}, {"lambda_sq", values}};
}

inline Labeling labeling_from_json(const nlohmann::json& j) {
  try {
    const auto& edges = j.at("edges");
    const auto& values = j.at("lambda_sq");
    if (edges.size() != values.size()) throw ParseError("labeling JSON: edges and lambda_sq differ in length");
    int n = j.contains("n") ? j.at("n").get<int>() : 0;
    std::vector<Edge> es;
    for (const auto& e : edges) {
      es.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
      n = std::max(n, es.back().v + 1);
    }
    Labeling l;
    l.graph = Graph(n, es);
    l.lambda_sq.resize(es.size());
    for (std::size_t k = 0; k < es.size(); ++k) {
      const Rational q = parse_fraction(values[k].get<std::string>());
      if (sgn(q) <= 0) throw ParseError("labeling JSON: squared lengths must be positive");
      l.lambda_sq[l.graph.edge_index(es[k].u, es[k].v)] = q;
    }
    return l;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("labeling JSON: ") + ex.what());
  } catch (const PreconditionError& ex) {
    throw ParseError(std::string("labeling JSON: ") + ex.what());
  }
}

}  // namespace flexrig
