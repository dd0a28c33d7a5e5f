#pragma once

#include <bit>
#include <unordered_map>
#include <vector>

#include "flexrig/errors.hpp"
#include "flexrig/graph.hpp"

namespace flexrig {

constexpr int kTreeDecomposableMaxVertices = 10;

namespace detail {

// The three pieces of a split are induced: an edge inside V_i cannot lie in
// another piece, which meets V_i in one vertex. Every piece also has 2k-3 edges.
class TreeDecomposition {
 public:
  explicit TreeDecomposition(const Graph& g) : g_(g) {}

  bool run(VertexMask mask) {
    const int k = std::popcount(mask);
    if (k == 2) {
      const int a = std::countr_zero(mask);
      return g_.has_edge(a, std::countr_zero(mask & (mask - 1)));
    }
    if (k < 2 || edges_within(mask) != 2 * k - 3) return false;
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    const bool result = search(mask);
    memo_.emplace(mask, result);
    return result;
  }

 private:
  int edges_within(VertexMask mask) const {
    int twice = 0;
    for (VertexMask m = mask; m != 0; m &= m - 1) twice += std::popcount(g_.neighbor_mask(std::countr_zero(m)) & mask);
    return twice / 2;
  }

  bool search(VertexMask mask) {
    std::vector<int> vs;
    for (VertexMask m = mask; m != 0; m &= m - 1) vs.push_back(std::countr_zero(m));
    for (std::size_t a = 0; a < vs.size(); ++a)
      for (std::size_t b = a + 1; b < vs.size(); ++b)
        for (std::size_t c = b + 1; c < vs.size(); ++c)
          if (split_at(mask, vs[a], vs[b], vs[c])) return true;
    return false;
  }

  // Pieces P0 ∋ u,w; P1 ∋ u,v; P2 ∋ v,w. Components of the rest go whole into
  // one piece whose corners contain all their corner neighbours.
  bool split_at(VertexMask mask, int u, int v, int w) {
    const VertexMask corners = bit(u) | bit(v) | bit(w);
    const VertexMask rest = mask & ~corners;
    std::vector<VertexMask> comps;
    std::vector<int> allowed;
    const VertexMask piece_corners[3] = {bit(u) | bit(w), bit(u) | bit(v), bit(v) | bit(w)};
    for (VertexMask left = rest; left != 0;) {
      const VertexMask c = component_within(std::countr_zero(left), rest);
      left &= ~c;
      VertexMask touch = 0;
      for (VertexMask m = c; m != 0; m &= m - 1) touch |= g_.neighbor_mask(std::countr_zero(m)) & corners;
      int ok = 0;
      for (int p = 0; p < 3; ++p)
        if ((touch & ~piece_corners[p]) == 0) ok |= 1 << p;
      if (ok == 0) return false;
      comps.push_back(c);
      allowed.push_back(ok);
    }
    std::vector<VertexMask> pieces(piece_corners, piece_corners + 3);
    return assign(comps, allowed, 0, pieces);
  }

  bool assign(const std::vector<VertexMask>& comps, const std::vector<int>& allowed, std::size_t k,
              std::vector<VertexMask>& pieces) {
    if (k == comps.size()) return run(pieces[0]) && run(pieces[1]) && run(pieces[2]);
    for (int p = 0; p < 3; ++p) {
      if (!((allowed[k] >> p) & 1)) continue;
      pieces[p] |= comps[k];
      const bool found = assign(comps, allowed, k + 1, pieces);
      pieces[p] &= ~comps[k];
      if (found) return true;
    }
    return false;
  }

  VertexMask component_within(int start, VertexMask within) const { return component_of(g_, start, within); }

  static VertexMask bit(int v) { return VertexMask{1} << v; }

  const Graph& g_;
  std::unordered_map<VertexMask, bool> memo_;
};

}  // namespace detail

inline bool is_tree_decomposable(const Graph& g) {
  if (g.n() > kTreeDecomposableMaxVertices) {
    throw PreconditionError("is_tree_decomposable: at most " + std::to_string(kTreeDecomposableMaxVertices) +
                            " vertices");
  }
  if (!is_connected(g)) throw PreconditionError("is_tree_decomposable: graph must be connected");
  return detail::TreeDecomposition(g).run(g.all_vertices());
}

}  // namespace flexrig
