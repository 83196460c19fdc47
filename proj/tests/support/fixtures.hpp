#pragma once

#include <string>
#include <vector>

#include "lexplace/digraph.hpp"
#include "lexplace/graph_io.hpp"

namespace fixtures {

inline std::string data_path(const std::string& name) { return std::string(LEXPLACE_DATA_DIR) + "/" + name; }

inline lexplace::Digraph load(const std::string& name) { return lexplace::read_graph_file(data_path(name)); }

inline lexplace::VertexSet ids(const lexplace::Digraph& g, const std::vector<std::string>& names) {
  lexplace::VertexSet s(g.size());
  for (const auto& n : names) s.insert(g.vertex(n));
  return s;
}

inline std::vector<std::string> names(const lexplace::Digraph& g, const lexplace::VertexSet& s) {
  std::vector<std::string> out;
  for (auto v : s.members()) out.push_back(g.id(v));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fixtures
