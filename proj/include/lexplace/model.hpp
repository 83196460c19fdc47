#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lexplace/digraph.hpp"
#include "lexplace/errors.hpp"
#include "lexplace/lexvec.hpp"
#include "lexplace/vertex_set.hpp"

namespace lexplace {

// Counterexample attached to a failed structural check.
//   cycle:          vertices along a directed cycle, first vertex not repeated
//   diamond_path:   (a, b, c) with a->b ~> c and a ~> c avoiding the edge (a, b)
//   diamond_four:   (a, b, c, d) with a ~> b ~> d, a ~> c ~> d, b and c incomparable
//   tangle:         (u, v) incomparable whose child shadows are not a laminar pair
struct Witness {
  std::string kind;
  std::vector<Vertex> vertices;
};

// Input rejected by a named structural check.
class ValidationError : public InputError {
 public:
  ValidationError(std::string check, Witness witness, const std::string& message)
      : InputError(message), check_(std::move(check)), witness_(std::move(witness)) {}
  const std::string& check() const { return check_; }
  const Witness& witness() const { return witness_; }

 private:
  std::string check_;
  Witness witness_;
};

struct CheckResult {
  bool ok = true;
  std::optional<Witness> witness;

  explicit operator bool() const { return ok; }
  static CheckResult pass() { return {}; }
  static CheckResult fail(Witness w) { return {false, std::move(w)}; }
};

// Reflexive transitive closure of every vertex, as bitsets.
class ReachabilityIndex {
 public:
  explicit ReachabilityIndex(const Digraph& g);
  const VertexSet& from(Vertex u) const { return closure_[u]; }
  bool reaches(Vertex u, Vertex v) const { return closure_[u].contains(v); }
  bool comparable(Vertex u, Vertex v) const { return reaches(u, v) || reaches(v, u); }

 private:
  std::vector<VertexSet> closure_;
};

// {x : u ~> x}, including u itself.
VertexSet reachable(const Digraph& g, Vertex u);
VertexSet reachable(const Digraph& g, std::string_view id);

struct RootsAndLeaves {
  VertexSet roots;   // in-degree 0
  VertexSet leaves;  // out-degree 0
};
RootsAndLeaves roots_and_leaves(const Digraph& g);

CheckResult is_dag(const Digraph& g);
// Acyclic, and every vertex reachable from u other than u has exactly one
// in-neighbour inside reachable(u).
CheckResult is_multitree(const Digraph& g);

// Vertices with in-degree >= 2.
VertexSet connectors(const Digraph& g);
// Connectors reachable from u (u itself included when it is a connector).
VertexSet connector_shadow(const Digraph& g, Vertex u);

// One shadow per out-neighbour of u, in out-neighbour order. Empty shadows
// are kept.
using ShadowFamily = std::vector<VertexSet>;
ShadowFamily child_shadows(const Digraph& g, Vertex u);

// Every cross pair is nested or disjoint.
bool laminar_pair(const ShadowFamily& f1, const ShadowFamily& f2);

// Requires a multitree. Checks every incomparable pair.
CheckResult is_untangled(const Digraph& g);

// Depth-2 model with an edge from every non-leaf to every leaf it reaches.
// Accepts any digraph, cyclic ones included.
Digraph canonicalize(const Digraph& g);

// Set of leaves carrying one replica each.
class Placement {
 public:
  // Throws InputError unless every member is a distinct leaf of g.
  Placement(const Digraph& g, std::vector<Vertex> leaves);
  static Placement from_ids(const Digraph& g, const std::vector<std::string>& ids);

  const VertexSet& leaves() const { return set_; }
  // Members in increasing vertex order.
  const std::vector<Vertex>& members() const { return members_; }
  std::size_t rho() const { return members_.size(); }

 private:
  std::vector<Vertex> members_;
  VertexSet set_;
};

std::size_t failure_number(const Digraph& g, Vertex u, const Placement& p);

// <p_0, ..., p_rho> over all vertices of g, leaves included.
FailAgg failure_aggregate(const Digraph& g, const Placement& p);
FailAgg failure_aggregate(const ReachabilityIndex& reach, std::size_t vertex_count, const VertexSet& placed,
                          std::size_t rho);

}  // namespace lexplace
