#include "lexplace/tree_solver.hpp"

#include <algorithm>
#include <unordered_map>

#include "lexplace/errors.hpp"
#include "lexplace/model.hpp"

namespace lexplace {

namespace {

struct IdOrder {
  const Digraph* g;
  bool operator()(Vertex a, Vertex b) const { return g->id(a) < g->id(b); }
};

// For equal-size sets sorted by id, sequence order equals "the smallest
// element of the symmetric difference belongs to the left set", which is
// preserved under disjoint union.
bool set_less(const std::vector<Vertex>& a, const std::vector<Vertex>& b, IdOrder order) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), order);
}

std::vector<Vertex> merged(const std::vector<Vertex>& a, const std::vector<Vertex>& b, IdOrder order) {
  std::vector<Vertex> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), order);
  return out;
}

}  // namespace

TreeTable solve_subtree(const Digraph& g, Vertex root, std::size_t x_max, std::size_t rho) {
  if (x_max > rho) throw InputError("solve_tree: x_max exceeds rho");
  IdOrder order{&g};

  // Preorder; a second visit means the reachable part is not a tree.
  std::vector<Vertex> preorder;
  std::unordered_map<Vertex, std::size_t> slot;
  std::vector<Vertex> stack{root};
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    if (slot.contains(v))
      throw InputError("solve_tree: vertex '" + g.id(v) + "' reached twice below '" + g.id(root) + "'");
    slot.emplace(v, preorder.size());
    preorder.push_back(v);
    for (Vertex c : g.out(v)) stack.push_back(c);
  }

  std::vector<std::vector<TreeEntry>> tables(preorder.size());
  std::size_t leaf_count = 0;
  TreeEntry candidate;
  for (auto it = preorder.rbegin(); it != preorder.rend(); ++it) {
    Vertex v = *it;
    std::vector<TreeEntry> acc;
    if (g.is_leaf(v)) {
      ++leaf_count;
      acc.push_back({FailAgg::zeros(rho), {}});
      if (x_max >= 1) acc.push_back({FailAgg::zeros(rho), {v}});
    } else {
      acc.push_back({FailAgg::zeros(rho), {}});
      for (Vertex c : g.out(v)) {
        auto& child = tables[slot.at(c)];
        std::size_t width = std::min(acc.size() - 1 + child.size() - 1, x_max) + 1;
        std::vector<TreeEntry> next(width, TreeEntry{FailAgg::infinity(), {}});
        for (std::size_t a = 0; a < acc.size(); ++a) {
          for (std::size_t b = 0; b < child.size() && a + b < width; ++b) {
            candidate.aggregate.assign_sum(acc[a].aggregate, child[b].aggregate);
            auto& best = next[a + b];
            auto ord = candidate.aggregate <=> best.aggregate;
            if (ord > 0) continue;
            auto leaves = merged(acc[a].leaves, child[b].leaves, order);
            if (ord < 0 || set_less(leaves, best.leaves, order)) {
              best.aggregate = candidate.aggregate;
              best.leaves = std::move(leaves);
            }
          }
        }
        child.clear();
        child.shrink_to_fit();
        acc = std::move(next);
      }
    }
    for (std::size_t x = 0; x < acc.size(); ++x) acc[x].aggregate.add_unit(x);
    tables[slot.at(v)] = std::move(acc);
  }

  TreeTable out;
  out.root = root;
  out.vertex_count = preorder.size();
  out.leaf_count = leaf_count;
  out.entries = std::move(tables[0]);
  out.entries.resize(x_max + 1, TreeEntry{FailAgg::infinity(), {}});
  return out;
}

TreeTable solve_tree(const Digraph& t, std::size_t x_max, std::size_t rho) {
  if (auto mt = is_multitree(t); !mt) throw InputError("solve_tree: input is not a multitree");
  auto rl = roots_and_leaves(t);
  if (rl.roots.size() != 1) throw InputError("solve_tree: input must have exactly one root");
  return solve_subtree(t, rl.roots.members().front(), x_max, rho);
}

}  // namespace lexplace
