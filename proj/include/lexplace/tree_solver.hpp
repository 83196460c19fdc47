#pragma once

#include <cstddef>
#include <vector>

#include "lexplace/digraph.hpp"
#include "lexplace/lexvec.hpp"

namespace lexplace {

struct TreeEntry {
  FailAgg aggregate;           // infinity when x exceeds the leaf count
  std::vector<Vertex> leaves;  // sorted by vertex id string
};

// Lex-minimum aggregate of the arborescence below `root` for every replica
// count 0..x_max. Aggregates count every tree vertex and have global length
// rho + 1.
struct TreeTable {
  Vertex root = 0;
  std::size_t vertex_count = 0;
  std::size_t leaf_count = 0;
  std::vector<TreeEntry> entries;  // indexed by replica count

  const TreeEntry& at(std::size_t x) const { return entries.at(x); }
};

// Post-order lex-min knapsack over the arborescence induced by the vertices
// reachable from `root` in g. Ties go to the leaf set that is smallest by id.
// Throws InputError if the reachable part is not an arborescence or
// x_max > rho.
TreeTable solve_subtree(const Digraph& g, Vertex root, std::size_t x_max, std::size_t rho);

// Whole-graph form: t must be a multitree with exactly one root.
TreeTable solve_tree(const Digraph& t, std::size_t x_max, std::size_t rho);

}  // namespace lexplace
