#include "lexplace/generator.hpp"

#include <cstdio>
#include <random>
#include <vector>

#include "lexplace/errors.hpp"
#include "lexplace/model.hpp"

namespace lexplace {

Digraph random_untangled_multitree(const GeneratorConfig& config) {
  const std::size_t k = config.roots;
  const std::size_t n = config.vertices;
  if (k == 0) throw InputError("generator: need at least one root");
  if (n < 2 * k) throw InputError("generator: need at least two vertices per root");
  std::mt19937_64 rng(config.seed);
  auto pick = [&](std::size_t bound) { return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng); };

  Digraph g;
  for (std::size_t i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));

  // Tree sizes: two each, the rest spread at random.
  std::vector<std::size_t> sizes(k, 2);
  for (std::size_t i = 2 * k; i < n; ++i) ++sizes[pick(k)];
  Vertex next = 0;
  for (std::size_t t = 0; t < k; ++t) {
    Vertex first = next;
    for (std::size_t i = 1; i < sizes[t]; ++i) g.add_edge(static_cast<Vertex>(first + pick(i)), first + static_cast<Vertex>(i));
    next = static_cast<Vertex>(first + sizes[t]);
  }

  std::size_t attempts = config.extra_edges == 0 ? n : config.extra_edges;
  for (std::size_t a = 0; a < attempts; ++a) {
    auto u = static_cast<Vertex>(pick(n));
    auto w = static_cast<Vertex>(pick(n));
    if (g.is_leaf(u) || g.is_root(w) || u == w || g.has_edge(u, w)) continue;
    ReachabilityIndex reach(g);
    if (reach.comparable(u, w)) continue;
    g.add_edge(u, w);
    if (!is_multitree(g) || !is_untangled(g)) g.remove_edge(u, w);
  }
  return g;
}

std::uint64_t instance_hash(const Digraph& g) {
  std::uint64_t h = 14695981039346656037ull;
  auto feed = [&](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
    h ^= 0xff;
    h *= 1099511628211ull;
  };
  for (auto [u, v] : g.edges()) {
    feed(g.id(u));
    feed(g.id(v));
  }
  for (Vertex v = 0; v < g.size(); ++v)
    if (g.is_leaf(v) && g.is_root(v)) feed(g.id(v));
  return h;
}

std::string hash_hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace lexplace
