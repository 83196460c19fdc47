#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lexplace/digraph.hpp"
#include "lexplace/lexvec.hpp"
#include "lexplace/oracle.hpp"

namespace lexplace {

// Colour in {1, 2, 3} per edge index of an UndirectedGraph.
struct EdgeColoring {
  std::vector<int> colors;
};

// Lines "u v" declare edges; blank and '#' lines are skipped.
UndirectedGraph read_undirected(std::istream& in);
UndirectedGraph read_undirected_file(const std::string& path);

// Lines "u v c". Every edge of g must be coloured exactly once.
EdgeColoring read_coloring(std::istream& in, const UndirectedGraph& g);
EdgeColoring read_coloring_file(const std::string& path, const UndirectedGraph& g);
void write_coloring(std::ostream& out, const UndirectedGraph& g, const EdgeColoring& c);

// Throws InputError naming the offending vertex.
void require_cubic(const UndirectedGraph& g);
void require_proper(const UndirectedGraph& g, const EdgeColoring& c);

// Vertex ids of the reduction: roots "alpha", "beta", "gamma" for colours
// 1, 2, 3, "e_<i>" for the i-th edge (from 1) and "v_<id>" for each vertex.
std::string root_id(int color);
std::string edge_node_id(std::size_t edge_index);
std::string vertex_node_id(const std::string& vertex);

// Throws InputError for non-cubic input or an improper colouring, and
// InvariantViolation if the result is not a multitree.
Digraph build_reduction(const UndirectedGraph& g, const EdgeColoring& coloring);

// Backtracking search; requires a cubic graph with at most 24 edges.
std::optional<EdgeColoring> brute_force_coloring(const UndirectedGraph& g);

// Integer prefix followed by `wildcards` don't-care positions.
struct BoundVector {
  std::vector<std::int64_t> prefix;
  std::size_t wildcards = 0;

  std::size_t length() const { return prefix.size() + wildcards; }
  // f <= bound: lexicographic on the prefix, wildcard positions ignored.
  bool admits(const FailAgg& f) const;
  std::string to_string() const;
};

// <3, 0, ..., 0, inf, inf> of length rho + 1. The last min(2, rho + 1)
// positions are wildcards.
BoundVector reduction_bound(std::size_t rho);

struct ReductionCheck {
  std::size_t k = 0;
  bool placement_side = false;    // some P in H(V), |P| = k, with f(P) <= bound
  bool independent_side = false;  // some independent set of size k
  FailAgg optimum;                // lex-min aggregate of H at rho = k
  bool agree() const { return placement_side == independent_side; }
};

ReductionCheck reduction_sides(const UndirectedGraph& g, const EdgeColoring& coloring, std::size_t k);
// Colours g by brute force first. Throws InputError if g has no proper
// 3-edge-colouring.
ReductionCheck reduction_sides(const UndirectedGraph& g, std::size_t k);
bool check_reduction_equivalence(const UndirectedGraph& g, std::size_t k);

// Uniform pairing model with rejection of loops and parallel edges. Vertex
// ids are "0".."n-1". n must be even and at least 4.
UndirectedGraph random_cubic_graph(std::size_t n, std::uint64_t seed);

UndirectedGraph complete_graph_k4();

}  // namespace lexplace
