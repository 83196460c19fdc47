#include "lexplace/digraph.hpp"

#include <algorithm>

#include "lexplace/errors.hpp"

namespace lexplace {

Vertex Digraph::add_vertex(std::string_view id) {
  std::string key(id);
  if (auto it = index_.find(key); it != index_.end()) return it->second;
  auto v = static_cast<Vertex>(ids_.size());
  ids_.push_back(key);
  index_.emplace(std::move(key), v);
  out_.emplace_back();
  in_.emplace_back();
  return v;
}

void Digraph::add_edge(Vertex u, Vertex v) {
  if (u == v) throw InputError("self-loop on vertex '" + ids_[u] + "'");
  if (has_edge(u, v))
    throw InputError("duplicate edge '" + ids_[u] + "' -> '" + ids_[v] + "'");
  out_[u].push_back(v);
  in_[v].push_back(u);
  edge_list_.emplace_back(u, v);
  ++edge_count_;
}

void Digraph::add_edge(std::string_view u, std::string_view v) {
  Vertex a = add_vertex(u);
  Vertex b = add_vertex(v);
  add_edge(a, b);
}

void Digraph::remove_edge(Vertex u, Vertex v) {
  auto drop = [](std::vector<Vertex>& xs, Vertex x) {
    auto it = std::find(xs.begin(), xs.end(), x);
    if (it != xs.end()) xs.erase(it);
  };
  drop(out_[u], v);
  drop(in_[v], u);
  auto it = std::find(edge_list_.rbegin(), edge_list_.rend(), std::pair{u, v});
  if (it != edge_list_.rend()) {
    edge_list_.erase(std::next(it).base());
    --edge_count_;
  }
}

std::optional<Vertex> Digraph::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vertex Digraph::vertex(std::string_view id) const {
  if (auto v = find(id)) return *v;
  throw InputError("unknown vertex '" + std::string(id) + "'");
}

bool Digraph::has_edge(Vertex u, Vertex v) const {
  const auto& xs = out_[u];
  return std::find(xs.begin(), xs.end(), v) != xs.end();
}

std::vector<std::pair<Vertex, Vertex>> Digraph::edges() const { return edge_list_; }

VertexSet Digraph::all_vertices() const {
  VertexSet s(size());
  for (Vertex v = 0; v < size(); ++v) s.insert(v);
  return s;
}

std::vector<std::string> Digraph::ids_of(std::span<const Vertex> vs) const {
  std::vector<std::string> out;
  out.reserve(vs.size());
  for (Vertex v : vs) out.push_back(ids_[v]);
  return out;
}

Digraph induced_subgraph(const Digraph& g, const VertexSet& keep) {
  Digraph h;
  for (Vertex v : keep.members()) h.add_vertex(g.id(v));
  for (auto [u, v] : g.edges())
    if (keep.contains(u) && keep.contains(v)) h.add_edge(g.id(u), g.id(v));
  return h;
}

}  // namespace lexplace
