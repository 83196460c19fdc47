#include "lexplace/oracle.hpp"

#include <algorithm>
#include <limits>

#include "lexplace/errors.hpp"
#include "lexplace/model.hpp"

namespace lexplace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(acc);
}

namespace {

// Advances idx (strictly increasing, values < n) to the next k-subset in
// colex order. Returns false after the last one.
bool next_colex(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t limit = i + 1 < k ? idx[i + 1] : n;
    if (idx[i] + 1 < limit) {
      ++idx[i];
      for (std::size_t j = 0; j < i; ++j) idx[j] = j;
      return true;
    }
  }
  return false;
}

}  // namespace

OracleResult brute_force_lsp(const Digraph& g, std::size_t rho, std::uint64_t cap) {
  auto leaves = roots_and_leaves(g).leaves.members();
  if (rho > leaves.size())
    throw InputError("oracle: rho=" + std::to_string(rho) + " exceeds leaf count " + std::to_string(leaves.size()));
  std::uint64_t count = binomial(leaves.size(), rho);
  if (count > cap)
    throw InputError("oracle: " + std::to_string(count) + " placements exceed the cap of " + std::to_string(cap));

  ReachabilityIndex reach(g);
  OracleResult out;
  out.aggregate = FailAgg::infinity();
  std::vector<std::size_t> idx(rho);
  for (std::size_t i = 0; i < rho; ++i) idx[i] = i;
  VertexSet placed(g.size());
  do {
    placed = VertexSet(g.size());
    for (auto i : idx) placed.insert(leaves[i]);
    FailAgg agg = failure_aggregate(reach, g.size(), placed, rho);
    ++out.evaluated;
    auto ord = agg <=> out.aggregate;
    if (ord > 0) continue;
    if (ord < 0) {
      out.aggregate = agg;
      out.argmins.clear();
    }
    out.argmins.push_back(placed.members());
  } while (next_colex(idx, leaves.size()));
  std::sort(out.argmins.begin(), out.argmins.end());
  return out;
}

std::size_t UndirectedGraph::add_vertex(const std::string& id) {
  auto it = std::find(ids_.begin(), ids_.end(), id);
  if (it != ids_.end()) return static_cast<std::size_t>(it - ids_.begin());
  ids_.push_back(id);
  incident_.emplace_back();
  return ids_.size() - 1;
}

std::size_t UndirectedGraph::add_edge(const std::string& u, const std::string& v) {
  if (u == v) throw InputError("self-loop on '" + u + "'");
  std::size_t a = add_vertex(u);
  std::size_t b = add_vertex(v);
  if (adjacent(a, b)) throw InputError("parallel edge '" + u + "' - '" + v + "'");
  edges_.emplace_back(a, b);
  incident_[a].push_back(edges_.size() - 1);
  incident_[b].push_back(edges_.size() - 1);
  return edges_.size() - 1;
}

std::size_t UndirectedGraph::vertex(const std::string& id) const {
  auto it = std::find(ids_.begin(), ids_.end(), id);
  if (it == ids_.end()) throw InputError("unknown vertex '" + id + "'");
  return static_cast<std::size_t>(it - ids_.begin());
}

bool UndirectedGraph::has_vertex(const std::string& id) const {
  return std::find(ids_.begin(), ids_.end(), id) != ids_.end();
}

bool UndirectedGraph::adjacent(std::size_t u, std::size_t v) const {
  for (auto e : incident_[u]) {
    auto [a, b] = edges_[e];
    if ((a == u && b == v) || (a == v && b == u)) return true;
  }
  return false;
}

bool brute_force_independent_set(const UndirectedGraph& g, std::size_t k, std::uint64_t cap) {
  const std::size_t n = g.size();
  if (k > n) return false;
  std::uint64_t count = binomial(n, k);
  if (count > cap)
    throw InputError("independent-set oracle: " + std::to_string(count) + " subsets exceed the cap");
  if (k == 0) return true;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  do {
    bool independent = true;
    for (std::size_t i = 0; i < k && independent; ++i)
      for (std::size_t j = i + 1; j < k && independent; ++j)
        if (g.adjacent(idx[i], idx[j])) independent = false;
    if (independent) return true;
  } while (next_colex(idx, n));
  return false;
}

}  // namespace lexplace
