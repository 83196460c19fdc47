#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lexplace/digraph.hpp"
#include "lexplace/lexvec.hpp"

namespace lexplace {

inline constexpr std::uint64_t kDefaultOracleCap = 2'000'000;

struct OracleResult {
  FailAgg aggregate;
  std::vector<std::vector<Vertex>> argmins;  // each sorted, list sorted
  std::uint64_t evaluated = 0;
};

// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Every size-rho subset of the leaves, in colex order. Throws InputError when
// rho > |L| or when the subset count exceeds `cap`.
OracleResult brute_force_lsp(const Digraph& g, std::size_t rho, std::uint64_t cap = kDefaultOracleCap);

// Simple undirected graph over string ids; vertices numbered in first-seen
// order, edges kept in insertion order.
class UndirectedGraph {
 public:
  std::size_t add_vertex(const std::string& id);
  // Throws InputError on self-loops and parallel edges.
  std::size_t add_edge(const std::string& u, const std::string& v);

  std::size_t size() const { return ids_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::string& id(std::size_t v) const { return ids_[v]; }
  std::size_t vertex(const std::string& id) const;
  bool has_vertex(const std::string& id) const;
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  // Edge indexes incident to v.
  const std::vector<std::size_t>& incident(std::size_t v) const { return incident_[v]; }
  std::size_t degree(std::size_t v) const { return incident_[v].size(); }
  bool adjacent(std::size_t u, std::size_t v) const;

 private:
  std::vector<std::string> ids_;
  std::vector<std::vector<std::size_t>> incident_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

// True iff some k-subset of vertices is pairwise non-adjacent.
bool brute_force_independent_set(const UndirectedGraph& g, std::size_t k, std::uint64_t cap = kDefaultOracleCap);

}  // namespace lexplace
