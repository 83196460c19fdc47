#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "lexplace/decomposer.hpp"
#include "lexplace/digraph.hpp"
#include "lexplace/lexvec.hpp"
#include "lexplace/model.hpp"
#include "lexplace/tree_solver.hpp"

namespace lexplace {

using Signature = std::vector<std::uint32_t>;

// Packs (r, alpha) into one integer, base rho + 1 with r most significant, so
// numeric order is lexicographic order on (r, alpha_1, ..., alpha_k).
class SignatureCodec {
 public:
  SignatureCodec() = default;
  // Throws InputError when (rho + 1)^(k + 1) does not fit in 62 bits.
  SignatureCodec(std::size_t roots, std::size_t rho);

  std::size_t roots() const { return roots_; }
  std::size_t rho() const { return rho_; }
  // Number of distinct keys, (rho + 1)^(k + 1).
  std::uint64_t capacity() const { return capacity_; }

  std::uint64_t encode(std::size_t r, std::span<const std::uint32_t> alpha) const;
  std::size_t replicas(std::uint64_t key) const;
  void decode(std::uint64_t key, std::size_t& r, Signature& alpha) const;
  Signature signature(std::uint64_t key) const;

 private:
  std::size_t roots_ = 0;
  std::size_t rho_ = 0;
  std::uint64_t base_ = 1;
  std::uint64_t capacity_ = 1;
};

// Keys of the child cells a parent cell was built from. `right_key` is unused
// by UP and INCLUDE; for OUT it is the tree cell key.
struct Choice {
  std::uint64_t left_key = 0;
  std::uint64_t right_key = 0;
};

struct DpCell {
  std::uint64_t key = 0;
  FailAgg aggregate;
  Choice choice;
};

// Sparse table; absent keys stand for infinity. Cells are sorted by key.
class DpTable {
 public:
  DpTable() = default;
  explicit DpTable(SignatureCodec codec) : codec_(codec) {}

  const SignatureCodec& codec() const { return codec_; }
  const std::vector<DpCell>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }

  const DpCell* find(std::uint64_t key) const;
  const DpCell* find(std::size_t r, std::span<const std::uint32_t> alpha) const;
  // Aggregate of a cell, infinity when absent.
  FailAgg value(std::size_t r, std::span<const std::uint32_t> alpha) const;

  // Keeps the first of equal-key inserts unless a later one is strictly smaller.
  void offer(std::uint64_t key, const FailAgg& aggregate, Choice choice);
  // Sorts cells by key; call once after the last offer.
  void seal();

 private:
  SignatureCodec codec_;
  std::vector<DpCell> cells_;
  std::vector<std::int64_t> slot_;  // dense key -> cell index, -1 when absent
  std::unordered_map<std::uint64_t, std::size_t> sparse_;  // used when the key space is large
};

// Tables for tau-leaves.
DpTable table_base_tree(const TreeTable& tree, std::size_t rho);
// Every local root of `s` is an isolated vertex. Placing on one sets its own
// failure number and signature entry to 1.
DpTable table_base_discrete(const Digraph& g, const Subproblem& s, std::size_t rho);

// Recurrences. Alignment vectors are indexed by the parent's local roots and
// give the child's local-root index or -1 (see Split).
DpTable recur_up(const DpTable& child, const std::vector<int>& align, std::size_t root_index);
DpTable recur_out(const DpTable& child, const DpTable& tree, const std::vector<int>& align, std::size_t root_index);
// A root present on both sides gets the sum of both entries, and the
// correction unit(a) - unit(a') - unit(a'').
DpTable recur_merge(const DpTable& left, const DpTable& right, const std::vector<int>& left_align,
                    const std::vector<int>& right_align);
// Only signatures in the image of the alignment map are produced. Every root
// in Q maps to the shared child's index.
DpTable recur_include(const DpTable& child, const std::vector<int>& align, const std::vector<std::size_t>& include_roots);

// alpha_i = beta_{align[i]}.
Signature include_map(std::span<const std::uint32_t> beta, const std::vector<int>& align);
// Order-preserving alignment for k parent roots where the roots in Q collapse
// onto child index ell and the remaining roots fill the other child indexes
// in order.
std::vector<int> include_alignment(std::size_t k, const std::vector<std::size_t>& include_roots, std::size_t ell);

struct SolveStats {
  std::size_t tau_nodes = 0;
  std::size_t tables = 0;
  std::size_t cells = 0;
  std::size_t max_cells = 0;
  double wall_ms = 0.0;
};

struct Solution {
  Placement placement;
  FailAgg aggregate;
  SolveStats stats;
};

// All tables of one bottom-up pass, kept for backtracking and inspection.
struct DpRun {
  const Digraph* graph = nullptr;
  const DecompTree* tree = nullptr;
  std::size_t rho = 0;
  std::vector<std::optional<DpTable>> tables;  // empty for trivial nodes
  std::vector<std::optional<TreeTable>> trees;  // base-tree nodes only
  SolveStats stats;
};

DpRun evaluate(const Digraph& g, const DecompTree& tree, std::size_t rho);
// Leaves of the partial placement behind one cell, in increasing vertex order.
std::vector<Vertex> backtrack(const DpRun& run, std::size_t node, std::uint64_t key);

// Aggregate over the vertices of `s` for a partial placement inside it, and
// the matching ancestry signature.
FailAgg subproblem_aggregate(const ReachabilityIndex& reach, const Subproblem& s, const VertexSet& placed,
                             std::size_t rho);
Signature subproblem_signature(const ReachabilityIndex& reach, const Subproblem& s, const VertexSet& placed);

// Requires 1 <= rho < |L|. The answer is re-evaluated directly before it is
// returned; a mismatch throws InvariantViolation.
Solution solve(const Digraph& g, const DecompTree& tree, std::size_t rho);
// Decomposes first.
Solution solve(const Digraph& g, std::size_t rho);

}  // namespace lexplace
