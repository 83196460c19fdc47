#pragma once
// Slow, independent reference implementations. They only use Digraph for
// storage and never call into the library's algorithms.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lexplace/digraph.hpp"

namespace naive {

using lexplace::Digraph;
using lexplace::Vertex;
using IdSet = std::set<std::string>;

inline std::set<Vertex> reach(const Digraph& g, Vertex u) {
  std::set<Vertex> seen{u};
  std::vector<Vertex> stack{u};
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.out(v))
      if (seen.insert(w).second) stack.push_back(w);
  }
  return seen;
}

inline IdSet ids(const Digraph& g, const std::set<Vertex>& s) {
  IdSet out;
  for (Vertex v : s) out.insert(g.id(v));
  return out;
}

inline bool acyclic(const Digraph& g) {
  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex w : g.out(u))
      if (reach(g, w).count(u)) return false;
  return true;
}

// Number of distinct directed paths u -> v, by memoised recursion. Requires a DAG.
inline bool has_two_paths(const Digraph& g) {
  for (Vertex u = 0; u < g.size(); ++u) {
    std::map<Vertex, std::uint64_t> memo;
    std::function<std::uint64_t(Vertex, Vertex)> paths = [&](Vertex a, Vertex target) -> std::uint64_t {
      if (a == target) return 1;
      auto it = memo.find(a);
      if (it != memo.end()) return it->second;
      std::uint64_t n = 0;
      for (Vertex w : g.out(a)) n += paths(w, target);
      return memo[a] = n;
    };
    for (Vertex v = 0; v < g.size(); ++v) {
      memo.clear();
      if (u != v && paths(u, v) > 1) return true;
    }
  }
  return false;
}

inline bool multitree(const Digraph& g) { return acyclic(g) && !has_two_paths(g); }

inline std::set<Vertex> connectors(const Digraph& g) {
  std::set<Vertex> out;
  for (Vertex v = 0; v < g.size(); ++v)
    if (g.in(v).size() >= 2) out.insert(v);
  return out;
}

inline std::set<Vertex> shadow(const Digraph& g, Vertex u) {
  auto c = naive::connectors(g);
  std::set<Vertex> out;
  for (Vertex v : reach(g, u))
    if (c.count(v)) out.insert(v);
  return out;
}

inline bool laminar(const std::vector<std::set<Vertex>>& f1, const std::vector<std::set<Vertex>>& f2) {
  for (const auto& a : f1)
    for (const auto& b : f2) {
      bool ab = std::includes(b.begin(), b.end(), a.begin(), a.end());
      bool ba = std::includes(a.begin(), a.end(), b.begin(), b.end());
      std::vector<Vertex> both;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
      if (!ab && !ba && !both.empty()) return false;
    }
  return true;
}

inline bool untangled(const Digraph& g) {
  std::vector<std::vector<std::set<Vertex>>> fam(g.size());
  std::vector<std::set<Vertex>> r(g.size());
  for (Vertex u = 0; u < g.size(); ++u) {
    r[u] = naive::reach(g, u);
    for (Vertex c : g.out(u)) fam[u].push_back(naive::shadow(g, c));
  }
  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex v = u + 1; v < g.size(); ++v)
      if (!r[u].count(v) && !r[v].count(u) && !naive::laminar(fam[u], fam[v])) return false;
  return true;
}

inline std::vector<Vertex> leaves(const Digraph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.size(); ++v)
    if (g.out(v).empty()) out.push_back(v);
  return out;
}

// <p_0, ..., p_rho> as plain integers.
inline std::vector<std::int64_t> aggregate(const Digraph& g, const std::set<Vertex>& placed, std::size_t rho) {
  std::vector<std::int64_t> p(rho + 1, 0);
  for (Vertex u = 0; u < g.size(); ++u) {
    std::size_t f = 0;
    for (Vertex x : reach(g, u)) f += placed.count(x);
    p.at(rho - f) += 1;
  }
  return p;
}

struct Best {
  std::vector<std::int64_t> aggregate;
  std::vector<std::set<Vertex>> argmins;
};

// Include/exclude recursion over the leaves; std::vector's operator< is the
// lexicographic order.
inline Best lex_min(const Digraph& g, std::size_t rho) {
  auto ls = leaves(g);
  Best best;
  std::set<Vertex> cur;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (cur.size() == rho) {
      auto a = aggregate(g, cur, rho);
      if (best.argmins.empty() || a < best.aggregate) {
        best.aggregate = a;
        best.argmins = {cur};
      } else if (a == best.aggregate) {
        best.argmins.push_back(cur);
      }
      return;
    }
    if (i == ls.size() || ls.size() - i < rho - cur.size()) return;
    cur.insert(ls[i]);
    go(i + 1);
    cur.erase(ls[i]);
    go(i + 1);
  };
  go(0);
  std::sort(best.argmins.begin(), best.argmins.end());
  return best;
}

inline std::set<std::pair<std::string, std::string>> canonical_edges(const Digraph& g) {
  std::set<std::pair<std::string, std::string>> out;
  for (Vertex u = 0; u < g.size(); ++u) {
    if (g.out(u).empty()) continue;
    for (Vertex v : reach(g, u))
      if (g.out(v).empty() && v != u) out.emplace(g.id(u), g.id(v));
  }
  return out;
}

inline std::set<std::pair<std::string, std::string>> edge_ids(const Digraph& g) {
  std::set<std::pair<std::string, std::string>> out;
  for (auto [u, v] : g.edges()) out.emplace(g.id(u), g.id(v));
  return out;
}

// G(n, p) over ordered pairs; cycles allowed when `dag` is false.
inline Digraph random_digraph(std::size_t n, double p, bool dag, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  Digraph g;
  for (std::size_t i = 0; i < n; ++i) g.add_vertex("n" + std::to_string(i));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) {
      if (u == v || (dag && v < u)) continue;
      if (coin(rng)) g.add_edge(u, v);
    }
  return g;
}

}  // namespace naive
