#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "flexrig/graph.hpp"

namespace flexrig {

constexpr int kGraph6MaxVertices = 62;

// graph6 short form: byte 63+n, then the upper triangle of the adjacency
// matrix in column order (0,1),(0,2),(1,2),(0,3),... packed six bits per
// byte, most significant bit first, zero padded, each group offset by 63.
inline std::string encode_graph6(const Graph& g) {
  if (g.n() > kGraph6MaxVertices) {
    throw PreconditionError("graph6 short form supports at most 62 vertices");
  }
  std::string out(1, static_cast<char>(63 + g.n()));
  int acc = 0;
  int bits = 0;
  for (int j = 1; j < g.n(); ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
  return out;
}

inline Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw ParseError("graph6: empty input");
  const int header = static_cast<unsigned char>(text[0]);
  if (header < 63 || header > 126) throw ParseError("graph6: malformed header byte");
  if (header == 126) throw ParseError("graph6: long form (n > 62) is not supported");
  const int n = header - 63;
  const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (text.size() - 1 < nbytes) throw ParseError("graph6: truncated bit stream");
  if (text.size() - 1 > nbytes) throw ParseError("graph6: trailing bytes after bit stream");

  std::vector<int> groups(nbytes);
  for (std::size_t k = 0; k < nbytes; ++k) {
    const int c = static_cast<unsigned char>(text[k + 1]);
    if (c < 63 || c > 126) throw ParseError("graph6: byte outside 63..126");
    groups[k] = c - 63;
  }
  auto bit = [&](std::size_t idx) { return (groups[idx / 6] >> (5 - idx % 6)) & 1; };
  for (std::size_t idx = nbits; idx < nbytes * 6; ++idx) {
    if (bit(idx) != 0) throw ParseError("graph6: non-zero padding bits");
  }
  std::vector<Edge> edges;
  std::size_t idx = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++idx) {
      if (bit(idx) != 0) edges.emplace_back(i, j);
    }
  }
  return Graph(n, std::move(edges));
}

inline nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.n()}, {"edges", edges}};
}

inline Graph graph_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("graph JSON: edge must be a pair");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph(n, std::move(edges));
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("graph JSON: ") + ex.what());
  } catch (const PreconditionError& ex) {
    throw ParseError(std::string("graph JSON: ") + ex.what());
  }
}

// Accepts either a graph6 line or an adjacency JSON document.
inline Graph parse_graph_text(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw ParseError("empty graph input");
  text.remove_prefix(first);
  if (text.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
      throw ParseError(std::string("graph JSON: ") + ex.what());
    }
    return graph_from_json(j);
  }
  std::size_t end = text.find_first_of(" \t\r\n");
  return parse_graph6(text.substr(0, end));
}

}  // namespace flexrig
