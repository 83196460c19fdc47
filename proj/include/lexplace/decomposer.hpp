#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lexplace/digraph.hpp"
#include "lexplace/model.hpp"
#include "lexplace/vertex_set.hpp"

namespace lexplace {

enum class SubproblemKind { Internal, Trivial, BaseTree, BaseJMultitree, BaseDiscrete };
enum class CaseTag { None, Up, Out, Include, Merge };

std::string to_string(SubproblemKind kind);
std::string to_string(CaseTag tag);

// Vertex subset of the model together with the roots of the subgraph it
// induces. Local roots are kept in increasing vertex order; ancestry
// signatures are indexed in that order.
struct Subproblem {
  VertexSet vertices;
  std::vector<Vertex> local_roots;
  SubproblemKind kind = SubproblemKind::Internal;

  std::size_t root_index(Vertex v) const;  // throws if v is not a local root
};

Subproblem make_subproblem(const Digraph& g, VertexSet vertices);

struct AdmissibilityCheck {
  bool ok = true;
  std::string failure;  // "child_descendant" or "connector"
  std::optional<Vertex> witness;
  explicit operator bool() const { return ok; }
};

// How an internal node was split. Root indexes refer to the node's own
// local-root order.
struct CaseDecision {
  CaseTag tag = CaseTag::None;
  std::size_t root_index = 0;              // UP, OUT
  Vertex child = 0;                        // UP: single child; OUT: branch; INCLUDE: shared child
  std::vector<std::size_t> include_roots;  // INCLUDE: Q
};

// Result of one split. `left` continues the decomposition (or is the first
// merge part); `right` is the piece split off. Alignment vectors are indexed
// by the parent's local roots and give the matching local-root index in the
// child, or -1 when that root is absent from it.
struct Split {
  Subproblem left;
  Subproblem right;
  std::vector<int> left_align;
  std::vector<int> right_align;
};

struct Hyperedge {
  VertexSet members;
  Vertex root = 0;
  Vertex child = 0;
};

// Connectors of the induced subgraph, with one hyperedge per (local root,
// child) pair whose shadow is non-empty.
struct ShadowHypergraph {
  VertexSet vertices;
  std::vector<Hyperedge> edges;
};

struct HyperComponent {
  VertexSet vertices;
  std::vector<std::size_t> edges;  // indexes into ShadowHypergraph::edges
};

struct DecompNode {
  std::size_t id = 0;
  Subproblem sub;
  CaseDecision decision;
  int left = -1;
  int right = -1;
  std::vector<int> left_align;
  std::vector<int> right_align;

  bool is_leaf() const { return left < 0; }
};

// Full binary tree; children always have larger ids than their parent.
struct DecompTree {
  std::vector<DecompNode> nodes;
  std::size_t root_count = 0;  // roots of the whole model

  const DecompNode& root() const { return nodes.front(); }
  std::size_t count(CaseTag tag) const;
  std::size_t count(SubproblemKind kind) const;
};

// Caches reachability for repeated subproblem queries on one model.
class Decomposer {
 public:
  explicit Decomposer(const Digraph& g);

  const Digraph& graph() const { return g_; }
  const ReachabilityIndex& reach() const { return reach_; }

  Subproblem subproblem(VertexSet vertices) const;
  std::vector<Vertex> children(const Subproblem& s, Vertex v) const;
  std::size_t in_degree_within(const Subproblem& s, Vertex v) const;
  VertexSet connectors_within(const Subproblem& s) const;
  bool has_leaf(const Subproblem& s) const;

  AdmissibilityCheck verify_admissible(const Subproblem& s) const;
  CaseDecision classify(const Subproblem& s) const;

  Split apply_up(const Subproblem& s, std::size_t root_index) const;
  Split apply_out(const Subproblem& s, std::size_t root_index, Vertex child) const;
  Split apply_include(const Subproblem& s, const std::vector<std::size_t>& include_roots, Vertex child) const;
  ShadowHypergraph build_hypergraph(const Subproblem& s) const;
  Split apply_merge(const Subproblem& s) const;

  DecompTree decompose() const;

 private:
  Split finish(const Subproblem& parent, VertexSet left, VertexSet right) const;
  void check_admissible(const Subproblem& s, const char* where) const;

  const Digraph& g_;
  ReachabilityIndex reach_;
};

// Free-function forms; each builds its own reachability cache.
AdmissibilityCheck verify_admissible(const Digraph& g, const Subproblem& s);
CaseDecision classify(const Digraph& g, const Subproblem& s);
Split apply_up(const Digraph& g, const Subproblem& s, std::size_t root_index);
Split apply_out(const Digraph& g, const Subproblem& s, std::size_t root_index, Vertex child);
Split apply_include(const Digraph& g, const Subproblem& s, const std::vector<std::size_t>& include_roots,
                    Vertex child);
ShadowHypergraph build_hypergraph(const Digraph& g, const Subproblem& s);
Split apply_merge(const Digraph& g, const Subproblem& s);

// Maximal components under "hyperedges sharing a vertex", ordered by their
// smallest vertex id string. Throws InvariantViolation when a component is
// not covered by one of its hyperedges or two components share a vertex.
std::vector<HyperComponent> hypergraph_components(const Digraph& g, const ShadowHypergraph& h);

// Validates (multitree, untangled) and builds the decomposition tree. Throws
// ValidationError for rejected inputs and InvariantViolation when no case
// applies to an admissible subproblem.
DecompTree decompose(const Digraph& g);

}  // namespace lexplace
