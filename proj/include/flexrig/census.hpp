#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "flexrig/canonical.hpp"
#include "flexrig/catalog.hpp"
#include "flexrig/closure.hpp"
#include "flexrig/pebble.hpp"
#include "flexrig/reduction.hpp"

namespace flexrig {

namespace detail {

inline void insert_class(std::map<CanonicalForm, Graph>& into, const Graph& g) {
  CanonicalForm f = canonical_form(g);
  if (!into.contains(f)) into.emplace(std::move(f), canonical_graph(g));
}

inline std::vector<Graph> values_of(const std::map<CanonicalForm, Graph>& m) {
  std::vector<Graph> out;
  out.reserve(m.size());
  for (const auto& [form, g] : m) out.push_back(g);
  return out;
}

// Runs body(i) for i in [0, count) on up to `jobs` threads.
inline void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body) {
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_lock;
  for (unsigned j = 0; j < jobs; ++j) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_lock);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace detail

// Laman graphs on n vertices up to isomorphism, by Henneberg I and II steps.
inline std::vector<Graph> laman_graphs(int n) {
  if (n < 2) throw PreconditionError("laman_graphs: need n >= 2");
  if (n > kCanonicalMaxVertices) throw PreconditionError("laman_graphs: n above canonical-form bound");
  std::vector<Graph> level{complete_graph(2)};
  for (int k = 2; k < n; ++k) {
    std::map<CanonicalForm, Graph> next;
    for (const Graph& g : level) {
      for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) {
          std::vector<Edge> es = g.edges();
          es.emplace_back(a, k);
          es.emplace_back(b, k);
          detail::insert_class(next, Graph(k + 1, es));
        }
      }
      for (const Edge& e : g.edges()) {
        for (int w = 0; w < k; ++w) {
          if (e.incident(w)) continue;
          std::vector<Edge> es = g.without_edge(e).edges();
          es.emplace_back(e.u, k);
          es.emplace_back(e.v, k);
          es.emplace_back(w, k);
          detail::insert_class(next, Graph(k + 1, es));
        }
      }
    }
    level = detail::values_of(next);
  }
  return level;
}

// Graphs on n vertices with a spanning Laman subgraph, up to isomorphism.
inline std::vector<Graph> spanning_laman_graphs(int n) {
  std::map<CanonicalForm, Graph> all;
  std::vector<Graph> frontier = laman_graphs(n);
  for (const Graph& g : frontier) detail::insert_class(all, g);
  while (!frontier.empty()) {
    std::map<CanonicalForm, Graph> next;
    for (const Graph& g : frontier) {
      for (const Edge& e : g.non_edges()) {
        const Edge extra[] = {e};
        Graph h = g.with_edges(extra);
        CanonicalForm f = canonical_form(h);
        if (all.contains(f) || next.contains(f)) continue;
        next.emplace(std::move(f), canonical_graph(h));
      }
    }
    frontier = detail::values_of(next);
    for (const Graph& g : frontier) detail::insert_class(all, g);
  }
  return detail::values_of(all);
}

// Graph stream for the census: every graph with a spanning Laman subgraph on
// 2..max_n vertices.
inline std::vector<Graph> census_stream(int max_n) {
  std::vector<Graph> out;
  for (int n = 2; n <= max_n; ++n) {
    auto level = spanning_laman_graphs(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

struct CensusClass {
  Graph closure;
  CanonicalForm form;
  std::size_t sources = 0;
  std::string catalog_name;
};

struct CensusReport {
  int max_n = 0;
  std::size_t inputs = 0;
  std::size_t distinct_inputs = 0;
  std::size_t spanning = 0;
  std::size_t complete = 0;
  std::size_t degree_two = 0;
  std::vector<CensusClass> survivors;
  std::vector<CensusClass> maximal;
  // Catalog entries on at most max_n vertices with no maximal class.
  std::vector<std::string> missing;
  // Maximal classes not in the catalog.
  std::vector<std::size_t> unexpected;

  bool matches_catalog() const { return missing.empty() && unexpected.empty(); }
};

// Closures of a stream of graphs, reduced to the classes maximal under spanning
// subgraphs and compared with the catalog entries on at most max_n vertices.
inline CensusReport census(const std::vector<Graph>& stream, const Catalog& catalog, int max_n, unsigned jobs = 1,
                           const std::function<void(const std::string&)>& progress = {}) {
  if (max_n > 8) throw PreconditionError("census: max_n must be at most 8");
  CensusReport rep;
  rep.max_n = max_n;
  rep.inputs = stream.size();

  std::map<CanonicalForm, Graph> distinct;
  for (const Graph& g : stream) {
    if (g.n() > max_n || g.n() < 2) continue;
    if (!is_connected(g) || !has_spanning_laman_subgraph(g)) continue;
    detail::insert_class(distinct, g);
  }
  const std::vector<Graph> inputs = detail::values_of(distinct);
  rep.distinct_inputs = inputs.size();
  rep.spanning = inputs.size();
  if (progress) progress("census: " + std::to_string(inputs.size()) + " graphs with a spanning Laman subgraph");

  std::vector<Graph> closures(inputs.size());
  std::atomic<std::size_t> done{0};
  detail::parallel_for(inputs.size(), jobs, [&](std::size_t i) {
    closures[i] = constant_distance_closure(inputs[i]).closure;
    const std::size_t k = ++done;
    if (progress && k % 1000 == 0) progress("census: " + std::to_string(k) + " closures");
  });

  std::map<CanonicalForm, CensusClass> classes;
  for (const Graph& c : closures) {
    if (is_complete(c)) {
      ++rep.complete;
      continue;
    }
    if (has_degree_two_vertex(c)) {
      ++rep.degree_two;
      continue;
    }
    CanonicalForm f = canonical_form(c);
    auto it = classes.find(f);
    if (it == classes.end()) it = classes.emplace(f, CensusClass{canonical_graph(c), f, 0, ""}).first;
    ++it->second.sources;
  }
  for (auto& [form, cls] : classes) {
    if (const CatalogEntry* e = catalog.match(form)) cls.catalog_name = e->name;
    rep.survivors.push_back(cls);
  }

  for (const CensusClass& c : rep.survivors) {
    bool dominated = false;
    for (const CensusClass& d : rep.survivors) {
      if (&c == &d || d.closure.n() != c.closure.n() || d.closure.num_edges() <= c.closure.num_edges()) continue;
      if (spanning_embedding(c.closure, d.closure)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) rep.maximal.push_back(c);
  }

  for (const CatalogEntry& e : catalog.entries) {
    if (e.graph.n() > max_n) continue;
    const bool found = std::any_of(rep.maximal.begin(), rep.maximal.end(),
                                   [&](const CensusClass& c) { return c.form == e.form; });
    if (!found) rep.missing.push_back(e.name);
  }
  for (std::size_t i = 0; i < rep.maximal.size(); ++i) {
    if (rep.maximal[i].catalog_name.empty()) rep.unexpected.push_back(i);
  }
  return rep;
}

}  // namespace flexrig
