#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lexplace/vertex_set.hpp"

namespace lexplace {

// Directed graph over opaque string ids. Vertices are numbered in first-seen
// order; every ordering derived from a graph (children, local roots,
// signatures) follows that numbering.
class Digraph {
 public:
  Digraph() = default;

  // Returns the existing vertex when the id is already present.
  Vertex add_vertex(std::string_view id);
  // Throws InputError on self-loops and duplicate edges.
  void add_edge(Vertex u, Vertex v);
  void add_edge(std::string_view u, std::string_view v);
  // Removes the most recently added edge u->v. Used for rollback.
  void remove_edge(Vertex u, Vertex v);

  std::size_t size() const { return ids_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  const std::string& id(Vertex v) const { return ids_[v]; }
  std::optional<Vertex> find(std::string_view id) const;
  // Throws InputError for unknown ids.
  Vertex vertex(std::string_view id) const;

  std::span<const Vertex> out(Vertex v) const { return out_[v]; }
  std::span<const Vertex> in(Vertex v) const { return in_[v]; }
  std::size_t out_degree(Vertex v) const { return out_[v].size(); }
  std::size_t in_degree(Vertex v) const { return in_[v].size(); }
  bool has_edge(Vertex u, Vertex v) const;
  bool is_leaf(Vertex v) const { return out_[v].empty(); }
  bool is_root(Vertex v) const { return in_[v].empty(); }

  // Edges in insertion order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  VertexSet empty_set() const { return VertexSet(size()); }
  VertexSet all_vertices() const;

  std::vector<std::string> ids_of(std::span<const Vertex> vs) const;

 private:
  std::vector<std::string> ids_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::vector<std::pair<Vertex, Vertex>> edge_list_;
  std::size_t edge_count_ = 0;
};

// Subgraph of g induced by `keep`, with vertices in g's order.
Digraph induced_subgraph(const Digraph& g, const VertexSet& keep);

}  // namespace lexplace
