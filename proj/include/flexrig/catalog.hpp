#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flexrig/canonical.hpp"
#include "flexrig/graph_io.hpp"

#ifndef FLEXRIG_DATA_DIR
#define FLEXRIG_DATA_DIR "data"
#endif

namespace flexrig {

struct CatalogEntry {
  std::string name;
  Graph graph;
  CanonicalForm form;
};

struct Catalog {
  std::vector<CatalogEntry> entries;

  const CatalogEntry* find(const std::string& name) const {
    for (const auto& e : entries)
      if (e.name == name) return &e;
    return nullptr;
  }

  const CatalogEntry* match(const CanonicalForm& form) const {
    for (const auto& e : entries)
      if (e.form == form) return &e;
    return nullptr;
  }

  const CatalogEntry* match(const Graph& g) const { return match(canonical_form(g)); }

  const Graph& at(const std::string& name) const {
    const CatalogEntry* e = find(name);
    if (e == nullptr) throw PreconditionError("catalog has no graph named " + name);
    return e->graph;
  }
};

inline std::string default_data_dir() { return FLEXRIG_DATA_DIR; }

inline std::string default_catalog_dir() { return default_data_dir() + "/catalog"; }

// First non-comment, non-blank line of a .g6 file.
inline Graph read_graph6_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    return parse_graph6(line);
  }
  throw ParseError(path.string() + " holds no graph6 line");
}

// All graph6 lines of a stream, comments and blank lines skipped.
inline std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

inline Catalog load_catalog(const std::filesystem::path& dir = default_catalog_dir()) {
  if (!std::filesystem::is_directory(dir)) throw ParseError("catalog directory not found: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".g6") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  Catalog cat;
  for (const auto& f : files) {
    Graph g = read_graph6_file(f);
    cat.entries.push_back({f.stem().string(), g, canonical_form(g)});
  }
  return cat;
}

}  // namespace flexrig
