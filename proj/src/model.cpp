#include "lexplace/model.hpp"

#include <algorithm>
#include <deque>

#include "lexplace/errors.hpp"

namespace lexplace {

namespace {

VertexSet bfs(const Digraph& g, Vertex u) {
  VertexSet seen(g.size());
  std::vector<Vertex> stack{u};
  seen.insert(u);
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : g.out(x))
      if (!seen.contains(y)) {
        seen.insert(y);
        stack.push_back(y);
      }
  }
  return seen;
}

std::optional<std::vector<Vertex>> find_cycle(const Digraph& g) {
  enum Color : unsigned char { White, Grey, Black };
  std::vector<Color> color(g.size(), White);
  std::vector<Vertex> parent(g.size(), 0);
  for (Vertex s = 0; s < g.size(); ++s) {
    if (color[s] != White) continue;
    // Iterative DFS keeping (vertex, next out-edge index).
    std::vector<std::pair<Vertex, std::size_t>> stack{{s, 0}};
    color[s] = Grey;
    while (!stack.empty()) {
      auto& [x, next] = stack.back();
      if (next < g.out_degree(x)) {
        Vertex y = g.out(x)[next++];
        if (color[y] == Grey) {
          std::vector<Vertex> cycle{y};
          for (Vertex z = x; z != y; z = parent[z]) cycle.push_back(z);
          std::reverse(cycle.begin() + 1, cycle.end());
          return cycle;
        }
        if (color[y] == White) {
          color[y] = Grey;
          parent[y] = x;
          stack.emplace_back(y, 0);
        }
      } else {
        color[x] = Black;
        stack.pop_back();
      }
    }
  }
  return std::nullopt;
}

// Vertex after `from` on some path from -> to; requires from ~> to, from != to.
Vertex first_step(const Digraph& g, Vertex from, Vertex to) {
  std::vector<Vertex> parent(g.size(), from);
  VertexSet seen(g.size());
  std::deque<Vertex> queue{from};
  seen.insert(from);
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.out(x)) {
      if (seen.contains(y)) continue;
      seen.insert(y);
      parent[y] = x;
      if (y == to) {
        Vertex z = to;
        while (parent[z] != from) z = parent[z];
        return z;
      }
      queue.push_back(y);
    }
  }
  throw InvariantViolation("first_step called on unreachable pair");
}

}  // namespace

ReachabilityIndex::ReachabilityIndex(const Digraph& g) {
  closure_.reserve(g.size());
  for (Vertex u = 0; u < g.size(); ++u) closure_.push_back(bfs(g, u));
}

VertexSet reachable(const Digraph& g, Vertex u) {
  if (u >= g.size()) throw InputError("vertex index out of range");
  return bfs(g, u);
}

VertexSet reachable(const Digraph& g, std::string_view id) { return bfs(g, g.vertex(id)); }

RootsAndLeaves roots_and_leaves(const Digraph& g) {
  RootsAndLeaves out{VertexSet(g.size()), VertexSet(g.size())};
  for (Vertex v = 0; v < g.size(); ++v) {
    if (g.is_root(v)) out.roots.insert(v);
    if (g.is_leaf(v)) out.leaves.insert(v);
  }
  return out;
}

CheckResult is_dag(const Digraph& g) {
  if (auto cycle = find_cycle(g)) return CheckResult::fail({"cycle", *cycle});
  return CheckResult::pass();
}

CheckResult is_multitree(const Digraph& g) {
  if (auto dag = is_dag(g); !dag) return dag;
  for (Vertex u = 0; u < g.size(); ++u) {
    VertexSet below = bfs(g, u);
    for (Vertex v : below.members()) {
      if (v == u) continue;
      std::vector<Vertex> parents;
      for (Vertex p : g.in(v))
        if (below.contains(p)) parents.push_back(p);
      if (parents.size() < 2) continue;
      Vertex p1 = parents[0];
      Vertex p2 = parents[1];
      VertexSet from_p1 = bfs(g, p1);
      VertexSet from_p2 = bfs(g, p2);
      if (from_p1.contains(p2)) return CheckResult::fail({"diamond_path", {p1, first_step(g, p1, p2), v}});
      if (from_p2.contains(p1)) return CheckResult::fail({"diamond_path", {p2, first_step(g, p2, p1), v}});
      return CheckResult::fail({"diamond_four", {u, p1, p2, v}});
    }
  }
  return CheckResult::pass();
}

VertexSet connectors(const Digraph& g) {
  VertexSet out(g.size());
  for (Vertex v = 0; v < g.size(); ++v)
    if (g.in_degree(v) >= 2) out.insert(v);
  return out;
}

VertexSet connector_shadow(const Digraph& g, Vertex u) { return connectors(g) & reachable(g, u); }

ShadowFamily child_shadows(const Digraph& g, Vertex u) {
  VertexSet conn = connectors(g);
  ShadowFamily family;
  for (Vertex c : g.out(u)) family.push_back(conn & bfs(g, c));
  return family;
}

bool laminar_pair(const ShadowFamily& f1, const ShadowFamily& f2) {
  for (const auto& a : f1)
    for (const auto& b : f2)
      if (a.intersects(b) && !a.is_subset_of(b) && !b.is_subset_of(a)) return false;
  return true;
}

CheckResult is_untangled(const Digraph& g) {
  ReachabilityIndex reach(g);
  VertexSet conn = connectors(g);
  std::vector<ShadowFamily> families(g.size());
  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex c : g.out(u)) families[u].push_back(conn & reach.from(c));
  for (Vertex u = 0; u < g.size(); ++u) {
    if (families[u].empty()) continue;
    for (Vertex v = u + 1; v < g.size(); ++v) {
      if (families[v].empty() || reach.comparable(u, v)) continue;
      if (!laminar_pair(families[u], families[v])) return CheckResult::fail({"tangle", {u, v}});
    }
  }
  return CheckResult::pass();
}

Digraph canonicalize(const Digraph& g) {
  ReachabilityIndex reach(g);
  Digraph h;
  for (Vertex v = 0; v < g.size(); ++v) h.add_vertex(g.id(v));
  for (Vertex u = 0; u < g.size(); ++u) {
    if (g.is_leaf(u)) continue;
    for (Vertex v : reach.from(u).members())
      if (g.is_leaf(v)) h.add_edge(u, v);
  }
  return h;
}

Placement::Placement(const Digraph& g, std::vector<Vertex> leaves)
    : members_(std::move(leaves)), set_(g.size()) {
  std::sort(members_.begin(), members_.end());
  for (std::size_t i = 0; i < members_.size(); ++i) {
    Vertex v = members_[i];
    if (v >= g.size()) throw InputError("placement vertex out of range");
    if (!g.is_leaf(v)) throw InputError("placement vertex '" + g.id(v) + "' is not a leaf");
    if (i > 0 && members_[i - 1] == v) throw InputError("placement repeats vertex '" + g.id(v) + "'");
    set_.insert(v);
  }
}

Placement Placement::from_ids(const Digraph& g, const std::vector<std::string>& ids) {
  std::vector<Vertex> vs;
  for (const auto& id : ids) vs.push_back(g.vertex(id));
  return Placement(g, std::move(vs));
}

std::size_t failure_number(const Digraph& g, Vertex u, const Placement& p) {
  return reachable(g, u).intersection_size(p.leaves());
}

FailAgg failure_aggregate(const ReachabilityIndex& reach, std::size_t vertex_count, const VertexSet& placed,
                          std::size_t rho) {
  FailAgg agg = FailAgg::zeros(rho);
  for (Vertex u = 0; u < vertex_count; ++u) agg.add_unit(reach.from(u).intersection_size(placed));
  return agg;
}

FailAgg failure_aggregate(const Digraph& g, const Placement& p) {
  ReachabilityIndex reach(g);
  return failure_aggregate(reach, g.size(), p.leaves(), p.rho());
}

}  // namespace lexplace
