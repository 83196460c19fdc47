#include "lexplace/dp_solver.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_map>

#include "lexplace/errors.hpp"

namespace lexplace {

namespace {

constexpr std::uint64_t kKeyLimit = std::uint64_t{1} << 62;
constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 22;

}  // namespace

SignatureCodec::SignatureCodec(std::size_t roots, std::size_t rho) : roots_(roots), rho_(rho), base_(rho + 1) {
  capacity_ = 1;
  for (std::size_t i = 0; i <= roots; ++i) {
    if (capacity_ > kKeyLimit / base_)
      throw InputError("signature space (rho+1)^(k+1) too large for rho=" + std::to_string(rho) +
                       ", k=" + std::to_string(roots));
    capacity_ *= base_;
  }
}

std::uint64_t SignatureCodec::encode(std::size_t r, std::span<const std::uint32_t> alpha) const {
  if (alpha.size() != roots_) throw InputError("signature length does not match the local-root count");
  std::uint64_t key = r;
  for (auto a : alpha) key = key * base_ + a;
  return key;
}

std::size_t SignatureCodec::replicas(std::uint64_t key) const {
  for (std::size_t i = 0; i < roots_; ++i) key /= base_;
  return static_cast<std::size_t>(key);
}

void SignatureCodec::decode(std::uint64_t key, std::size_t& r, Signature& alpha) const {
  alpha.resize(roots_);
  for (std::size_t i = roots_; i-- > 0;) {
    alpha[i] = static_cast<std::uint32_t>(key % base_);
    key /= base_;
  }
  r = static_cast<std::size_t>(key);
}

Signature SignatureCodec::signature(std::uint64_t key) const {
  std::size_t r = 0;
  Signature alpha;
  decode(key, r, alpha);
  return alpha;
}

const DpCell* DpTable::find(std::uint64_t key) const {
  auto it = std::lower_bound(cells_.begin(), cells_.end(), key,
                             [](const DpCell& c, std::uint64_t k) { return c.key < k; });
  return it != cells_.end() && it->key == key ? &*it : nullptr;
}

const DpCell* DpTable::find(std::size_t r, std::span<const std::uint32_t> alpha) const {
  if (r > codec_.rho()) return nullptr;
  for (auto a : alpha)
    if (a > codec_.rho()) return nullptr;
  return find(codec_.encode(r, alpha));
}

FailAgg DpTable::value(std::size_t r, std::span<const std::uint32_t> alpha) const {
  const DpCell* c = find(r, alpha);
  return c ? c->aggregate : FailAgg::infinity();
}

void DpTable::offer(std::uint64_t key, const FailAgg& aggregate, Choice choice) {
  if (aggregate.is_infinite()) return;
  std::size_t index = cells_.size();
  if (codec_.capacity() <= kDenseLimit) {
    if (slot_.empty()) slot_.assign(codec_.capacity(), -1);
    if (slot_[key] >= 0) index = static_cast<std::size_t>(slot_[key]);
    else slot_[key] = static_cast<std::int64_t>(index);
  } else {
    index = sparse_.try_emplace(key, index).first->second;
  }
  if (index == cells_.size()) {
    cells_.push_back({key, aggregate, choice});
    return;
  }
  DpCell& cell = cells_[index];
  if (aggregate < cell.aggregate) {
    cell.aggregate = aggregate;
    cell.choice = choice;
  }
}

void DpTable::seal() {
  std::sort(cells_.begin(), cells_.end(), [](const DpCell& a, const DpCell& b) { return a.key < b.key; });
  slot_.clear();
  slot_.shrink_to_fit();
  sparse_.clear();
  if (cells_.size() > codec_.capacity())
    throw InvariantViolation("table holds more cells than (rho+1)^(k+1)");
}

DpTable table_base_tree(const TreeTable& tree, std::size_t rho) {
  DpTable t(SignatureCodec(1, rho));
  for (std::size_t x = 0; x < tree.entries.size() && x <= rho; ++x) {
    std::uint32_t a = static_cast<std::uint32_t>(x);
    t.offer(t.codec().encode(x, std::span(&a, 1)), tree.entries[x].aggregate, {});
  }
  t.seal();
  return t;
}

DpTable table_base_discrete(const Digraph& g, const Subproblem& s, std::size_t rho) {
  const std::size_t k = s.local_roots.size();
  DpTable t(SignatureCodec(k, rho));
  if (k > 30) throw InputError("base-discrete subproblem with more than 30 vertices");
  Signature alpha(k, 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    auto r = static_cast<std::size_t>(std::popcount(mask));
    if (r > rho) continue;
    bool ok = true;
    for (std::size_t i = 0; i < k; ++i) {
      alpha[i] = (mask >> i) & 1u;
      if (alpha[i] && !g.is_leaf(s.local_roots[i])) ok = false;
    }
    if (!ok) continue;
    FailAgg agg = FailAgg::zeros(rho);
    agg.add_unit(1, static_cast<std::int64_t>(r));
    agg.add_unit(0, static_cast<std::int64_t>(k - r));
    t.offer(t.codec().encode(r, alpha), agg, {});
  }
  t.seal();
  return t;
}

DpTable recur_up(const DpTable& child, const std::vector<int>& align, std::size_t root_index) {
  const std::size_t k = align.size();
  const std::size_t rho = child.codec().rho();
  if (root_index >= k) throw InputError("recur_up: root index out of range");
  DpTable t(SignatureCodec(k, rho));
  Signature beta;
  Signature alpha(k);
  std::size_t r = 0;
  FailAgg agg;
  for (const auto& cell : child.cells()) {
    child.codec().decode(cell.key, r, beta);
    for (std::size_t j = 0; j < k; ++j) alpha[j] = beta.at(static_cast<std::size_t>(align[j]));
    agg = cell.aggregate;
    agg.add_unit(alpha[root_index]);
    t.offer(t.codec().encode(r, alpha), agg, {cell.key, 0});
  }
  t.seal();
  return t;
}

DpTable recur_out(const DpTable& child, const DpTable& tree, const std::vector<int>& align, std::size_t root_index) {
  const std::size_t k = align.size();
  const std::size_t rho = child.codec().rho();
  if (root_index >= k) throw InputError("recur_out: root index out of range");
  DpTable t(SignatureCodec(k, rho));
  Signature beta;
  Signature alpha(k);
  Signature x_sig(1);
  std::size_t r = 0;
  std::size_t x = 0;
  FailAgg agg;
  for (const auto& cell : child.cells()) {
    child.codec().decode(cell.key, r, beta);
    for (std::size_t j = 0; j < k; ++j) alpha[j] = beta.at(static_cast<std::size_t>(align[j]));
    const std::uint32_t base = alpha[root_index];
    for (const auto& tc : tree.cells()) {
      tree.codec().decode(tc.key, x, x_sig);
      if (r + x > rho || base + x > rho) break;
      alpha[root_index] = base + static_cast<std::uint32_t>(x);
      agg.assign_sum(cell.aggregate, tc.aggregate);
      agg.add_unit(alpha[root_index]);
      agg.add_unit(base, -1);
      t.offer(t.codec().encode(r + x, alpha), agg, {cell.key, tc.key});
    }
  }
  t.seal();
  return t;
}

DpTable recur_merge(const DpTable& left, const DpTable& right, const std::vector<int>& left_align,
                    const std::vector<int>& right_align) {
  const std::size_t k = left_align.size();
  const std::size_t rho = left.codec().rho();
  if (right_align.size() != k) throw InputError("recur_merge: alignment length mismatch");
  DpTable t(SignatureCodec(k, rho));
  Signature a1;
  Signature a2;
  Signature alpha(k);
  std::size_t r1 = 0;
  std::size_t r2 = 0;
  FailAgg agg;
  for (const auto& c1 : left.cells()) {
    left.codec().decode(c1.key, r1, a1);
    for (const auto& c2 : right.cells()) {
      right.codec().decode(c2.key, r2, a2);
      if (r1 + r2 > rho) break;  // right cells are sorted with r most significant
      bool ok = true;
      agg.assign_sum(c1.aggregate, c2.aggregate);
      for (std::size_t i = 0; i < k && ok; ++i) {
        int li = left_align[i];
        int ri = right_align[i];
        if (li >= 0 && ri >= 0) {
          std::uint32_t x = a1[static_cast<std::size_t>(li)];
          std::uint32_t y = a2[static_cast<std::size_t>(ri)];
          alpha[i] = x + y;
          if (alpha[i] > rho) ok = false;
          else {
            agg.add_unit(alpha[i]);
            agg.add_unit(x, -1);
            agg.add_unit(y, -1);
          }
        } else if (li >= 0) {
          alpha[i] = a1[static_cast<std::size_t>(li)];
        } else if (ri >= 0) {
          alpha[i] = a2[static_cast<std::size_t>(ri)];
        } else {
          throw InvariantViolation("recur_merge: local root missing from both parts");
        }
      }
      if (ok) t.offer(t.codec().encode(r1 + r2, alpha), agg, {c1.key, c2.key});
    }
  }
  t.seal();
  return t;
}

Signature include_map(std::span<const std::uint32_t> beta, const std::vector<int>& align) {
  Signature alpha(align.size());
  for (std::size_t i = 0; i < align.size(); ++i) {
    if (align[i] < 0 || static_cast<std::size_t>(align[i]) >= beta.size())
      throw InputError("include_map: alignment entry out of range");
    alpha[i] = beta[static_cast<std::size_t>(align[i])];
  }
  return alpha;
}

std::vector<int> include_alignment(std::size_t k, const std::vector<std::size_t>& include_roots, std::size_t ell) {
  std::vector<bool> in_q(k, false);
  for (auto q : include_roots) {
    if (q >= k) throw InputError("include_alignment: root index out of range");
    in_q[q] = true;
  }
  std::size_t j = k - include_roots.size() + 1;
  if (ell >= j) throw InputError("include_alignment: ell out of range");
  std::vector<int> align(k);
  std::size_t next = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (in_q[i]) {
      align[i] = static_cast<int>(ell);
      continue;
    }
    if (next == ell) ++next;
    align[i] = static_cast<int>(next++);
  }
  return align;
}

DpTable recur_include(const DpTable& child, const std::vector<int>& align,
                      const std::vector<std::size_t>& include_roots) {
  const std::size_t k = align.size();
  const std::size_t rho = child.codec().rho();
  if (include_roots.empty()) throw InputError("recur_include: empty Q");
  const int ell = align.at(include_roots.front());
  for (auto q : include_roots)
    if (align.at(q) != ell) throw InputError("recur_include: roots in Q map to different child roots");
  DpTable t(SignatureCodec(k, rho));
  Signature beta;
  std::size_t r = 0;
  FailAgg agg;
  for (const auto& cell : child.cells()) {
    child.codec().decode(cell.key, r, beta);
    Signature alpha = include_map(beta, align);
    agg = cell.aggregate;
    agg.add_unit(beta[static_cast<std::size_t>(ell)], static_cast<std::int64_t>(include_roots.size()));
    t.offer(t.codec().encode(r, alpha), agg, {cell.key, 0});
  }
  t.seal();
  return t;
}

FailAgg subproblem_aggregate(const ReachabilityIndex& reach, const Subproblem& s, const VertexSet& placed,
                             std::size_t rho) {
  FailAgg agg = FailAgg::zeros(rho);
  for (Vertex v : s.vertices.members()) {
    std::size_t f = reach.from(v).intersection_size(placed);
    if (f > rho) throw InvariantViolation("partial placement larger than rho");
    agg.add_unit(f);
  }
  return agg;
}

Signature subproblem_signature(const ReachabilityIndex& reach, const Subproblem& s, const VertexSet& placed) {
  Signature alpha;
  for (Vertex q : s.local_roots) alpha.push_back(static_cast<std::uint32_t>(reach.from(q).intersection_size(placed)));
  return alpha;
}

DpRun evaluate(const Digraph& g, const DecompTree& tree, std::size_t rho) {
  auto start = std::chrono::steady_clock::now();
  DpRun run;
  run.graph = &g;
  run.tree = &tree;
  run.rho = rho;
  run.tables.resize(tree.nodes.size());
  run.trees.resize(tree.nodes.size());
  run.stats.tau_nodes = tree.nodes.size();

  for (std::size_t id = tree.nodes.size(); id-- > 0;) {
    const DecompNode& node = tree.nodes[id];
    const Subproblem& s = node.sub;
    if (s.kind == SubproblemKind::Trivial) continue;
    auto child = [&](int c) -> const DpTable& {
      const auto& t = run.tables.at(static_cast<std::size_t>(c));
      if (!t) throw InvariantViolation("recurrence reads a child without a table");
      return *t;
    };
    DpTable table;
    if (node.is_leaf()) {
      if (s.kind == SubproblemKind::BaseTree) {
        run.trees[id] = solve_subtree(g, s.local_roots.front(), rho, rho);
        table = table_base_tree(*run.trees[id], rho);
      } else if (s.kind == SubproblemKind::BaseDiscrete) {
        table = table_base_discrete(g, s, rho);
      } else {
        throw InvariantViolation("decomposition leaf of kind " + to_string(s.kind));
      }
    } else {
      const CaseDecision& d = node.decision;
      switch (d.tag) {
        case CaseTag::Up: table = recur_up(child(node.left), node.left_align, d.root_index); break;
        case CaseTag::Out:
          table = recur_out(child(node.left), child(node.right), node.left_align, d.root_index);
          break;
        case CaseTag::Include: table = recur_include(child(node.left), node.left_align, d.include_roots); break;
        case CaseTag::Merge:
          table = recur_merge(child(node.left), child(node.right), node.left_align, node.right_align);
          break;
        case CaseTag::None: throw InvariantViolation("internal node without a case");
      }
    }
    run.stats.tables += 1;
    run.stats.cells += table.size();
    run.stats.max_cells = std::max(run.stats.max_cells, table.size());
    run.tables[id] = std::move(table);
  }
  run.stats.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return run;
}

namespace {

void collect(const DpRun& run, std::size_t id, std::uint64_t key, std::vector<Vertex>& out) {
  const DecompNode& node = run.tree->nodes.at(id);
  const auto& table = run.tables.at(id);
  if (!table) throw InvariantViolation("backtracking into a node without a table");
  const DpCell* cell = table->find(key);
  if (!cell) throw InvariantViolation("backtracking into an absent cell");
  if (node.is_leaf()) {
    if (node.sub.kind == SubproblemKind::BaseTree) {
      const auto& entry = run.trees[id]->at(table->codec().replicas(key));
      out.insert(out.end(), entry.leaves.begin(), entry.leaves.end());
    } else {
      auto alpha = table->codec().signature(key);
      for (std::size_t i = 0; i < alpha.size(); ++i)
        if (alpha[i]) out.push_back(node.sub.local_roots[i]);
    }
    return;
  }
  collect(run, static_cast<std::size_t>(node.left), cell->choice.left_key, out);
  if (node.decision.tag == CaseTag::Out || node.decision.tag == CaseTag::Merge)
    collect(run, static_cast<std::size_t>(node.right), cell->choice.right_key, out);
}

}  // namespace

std::vector<Vertex> backtrack(const DpRun& run, std::size_t node, std::uint64_t key) {
  std::vector<Vertex> out;
  collect(run, node, key, out);
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw InvariantViolation("backtracked placement repeats a leaf");
  return out;
}

Solution solve(const Digraph& g, const DecompTree& tree, std::size_t rho) {
  auto start = std::chrono::steady_clock::now();
  std::size_t leaves = roots_and_leaves(g).leaves.size();
  if (rho == 0 || rho >= leaves)
    throw InputError("rho must satisfy 1 <= rho < |L| (rho=" + std::to_string(rho) +
                     ", |L|=" + std::to_string(leaves) + ")");
  DpRun run = evaluate(g, tree, rho);
  const auto& root = run.tables.at(0);
  if (!root) throw InvariantViolation("root subproblem has no table");

  const DpCell* best = nullptr;
  for (const auto& cell : root->cells()) {
    if (root->codec().replicas(cell.key) != rho) continue;
    if (!best || cell.aggregate < best->aggregate) best = &cell;
  }
  if (!best) throw InvariantViolation("no finite cell with r = rho at the root");

  Placement placement(g, backtrack(run, 0, best->key));
  if (placement.rho() != rho) throw InvariantViolation("backtracked placement has the wrong size");
  FailAgg direct = failure_aggregate(g, placement);
  if (direct != best->aggregate)
    throw InvariantViolation("table value " + best->aggregate.to_string() + " differs from re-evaluated " +
                             direct.to_string());
  Solution sol{std::move(placement), direct, run.stats};
  sol.stats.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return sol;
}

Solution solve(const Digraph& g, std::size_t rho) {
  std::size_t leaves = roots_and_leaves(g).leaves.size();
  if (rho == 0 || rho >= leaves)
    throw InputError("rho must satisfy 1 <= rho < |L| (rho=" + std::to_string(rho) +
                     ", |L|=" + std::to_string(leaves) + ")");
  DecompTree tree = decompose(g);
  return solve(g, tree, rho);
}

}  // namespace lexplace
