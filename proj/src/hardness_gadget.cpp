#include "lexplace/hardness_gadget.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "lexplace/errors.hpp"
#include "lexplace/graph_io.hpp"
#include "lexplace/model.hpp"

namespace lexplace {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string t; ss >> t;) out.push_back(t);
  return out;
}

bool skip_line(const std::vector<std::string>& toks) { return toks.empty() || toks.front().starts_with('#'); }

std::optional<std::size_t> find_edge(const UndirectedGraph& g, std::size_t u, std::size_t v) {
  for (auto e : g.incident(u)) {
    auto [a, b] = g.edges()[e];
    if ((a == u && b == v) || (a == v && b == u)) return e;
  }
  return std::nullopt;
}

}  // namespace

UndirectedGraph read_undirected(std::istream& in) {
  UndirectedGraph g;
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    auto toks = tokens_of(line);
    if (skip_line(toks)) continue;
    auto fail = [&](const std::string& msg) { throw InputError("line " + std::to_string(no) + ": " + msg); };
    for (const auto& t : toks)
      if (!is_valid_token(t)) fail("invalid vertex id '" + t + "'");
    try {
      if (toks.size() == 1) g.add_vertex(toks[0]);
      else if (toks.size() == 2) g.add_edge(toks[0], toks[1]);
      else fail("expected one or two tokens, got " + std::to_string(toks.size()));
    } catch (const InputError& e) {
      if (std::string(e.what()).starts_with("line ")) throw;
      fail(e.what());
    }
  }
  return g;
}

UndirectedGraph read_undirected_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return read_undirected(in);
}

EdgeColoring read_coloring(std::istream& in, const UndirectedGraph& g) {
  EdgeColoring c{std::vector<int>(g.edge_count(), 0)};
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    auto toks = tokens_of(line);
    if (skip_line(toks)) continue;
    auto fail = [&](const std::string& msg) { throw InputError("coloring line " + std::to_string(no) + ": " + msg); };
    if (toks.size() != 3) fail("expected 'u v c'");
    if (!g.has_vertex(toks[0]) || !g.has_vertex(toks[1])) fail("unknown vertex");
    auto e = find_edge(g, g.vertex(toks[0]), g.vertex(toks[1]));
    if (!e) fail("no edge '" + toks[0] + "' - '" + toks[1] + "'");
    if (toks[2] != "1" && toks[2] != "2" && toks[2] != "3") fail("colour must be 1, 2 or 3");
    if (c.colors[*e] != 0) fail("edge coloured twice");
    c.colors[*e] = toks[2][0] - '0';
  }
  for (std::size_t e = 0; e < c.colors.size(); ++e)
    if (c.colors[e] == 0)
      throw InputError("edge '" + g.id(g.edges()[e].first) + "' - '" + g.id(g.edges()[e].second) + "' has no colour");
  return c;
}

EdgeColoring read_coloring_file(const std::string& path, const UndirectedGraph& g) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return read_coloring(in, g);
}

void write_coloring(std::ostream& out, const UndirectedGraph& g, const EdgeColoring& c) {
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    out << g.id(g.edges()[e].first) << ' ' << g.id(g.edges()[e].second) << ' ' << c.colors.at(e) << '\n';
}

void require_cubic(const UndirectedGraph& g) {
  for (std::size_t v = 0; v < g.size(); ++v)
    if (g.degree(v) != 3)
      throw InputError("graph is not cubic: vertex '" + g.id(v) + "' has degree " + std::to_string(g.degree(v)));
}

void require_proper(const UndirectedGraph& g, const EdgeColoring& c) {
  if (c.colors.size() != g.edge_count()) throw InputError("colouring does not cover every edge");
  for (std::size_t v = 0; v < g.size(); ++v) {
    int seen[4] = {0, 0, 0, 0};
    for (auto e : g.incident(v)) {
      int col = c.colors[e];
      if (col < 1 || col > 3) throw InputError("colour out of range on an edge at '" + g.id(v) + "'");
      if (seen[col]++) throw InputError("improper colouring: two edges of colour " + std::to_string(col) +
                                        " meet at '" + g.id(v) + "'");
    }
  }
}

std::string root_id(int color) {
  static const char* names[] = {"alpha", "beta", "gamma"};
  if (color < 1 || color > 3) throw InputError("colour out of range");
  return names[color - 1];
}
std::string edge_node_id(std::size_t edge_index) { return "e_" + std::to_string(edge_index + 1); }
std::string vertex_node_id(const std::string& vertex) { return "v_" + vertex; }

Digraph build_reduction(const UndirectedGraph& g, const EdgeColoring& coloring) {
  require_cubic(g);
  require_proper(g, coloring);
  Digraph h;
  for (int c = 1; c <= 3; ++c) h.add_vertex(root_id(c));
  for (std::size_t e = 0; e < g.edge_count(); ++e) h.add_vertex(edge_node_id(e));
  for (std::size_t v = 0; v < g.size(); ++v) h.add_vertex(vertex_node_id(g.id(v)));
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edges()[e];
    h.add_edge(root_id(coloring.colors[e]), edge_node_id(e));
    h.add_edge(edge_node_id(e), vertex_node_id(g.id(u)));
    h.add_edge(edge_node_id(e), vertex_node_id(g.id(v)));
  }
  if (!is_multitree(h)) throw InvariantViolation("reduction produced a graph that is not a multitree");
  return h;
}

std::optional<EdgeColoring> brute_force_coloring(const UndirectedGraph& g) {
  require_cubic(g);
  if (g.edge_count() > 24) throw InputError("brute_force_coloring: more than 24 edges");
  EdgeColoring c{std::vector<int>(g.edge_count(), 0)};
  auto free_at = [&](std::size_t e, int col) {
    auto [u, v] = g.edges()[e];
    for (auto x : {u, v})
      for (auto f : g.incident(x))
        if (f != e && c.colors[f] == col) return false;
    return true;
  };
  // Iterative backtracking over edges in index order.
  std::size_t e = 0;
  while (true) {
    if (e == g.edge_count()) return c;
    int col = c.colors[e] + 1;
    while (col <= 3 && !free_at(e, col)) ++col;
    if (col <= 3) {
      c.colors[e] = col;
      ++e;
      continue;
    }
    c.colors[e] = 0;
    if (e == 0) return std::nullopt;
    --e;
  }
}

bool BoundVector::admits(const FailAgg& f) const {
  if (f.is_infinite()) return false;
  if (f.length() != length()) throw InputError("bound length does not match the aggregate");
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (f[i] < prefix[i]) return true;
    if (f[i] > prefix[i]) return false;
  }
  return true;
}

std::string BoundVector::to_string() const {
  std::string s = "<";
  for (std::size_t i = 0; i < length(); ++i) {
    if (i) s += ",";
    s += i < prefix.size() ? std::to_string(prefix[i]) : "inf";
  }
  return s + ">";
}

BoundVector reduction_bound(std::size_t rho) {
  BoundVector b;
  std::size_t len = rho + 1;
  b.wildcards = std::min<std::size_t>(2, len);
  b.prefix.assign(len - b.wildcards, 0);
  if (!b.prefix.empty()) b.prefix[0] = 3;
  return b;
}

ReductionCheck reduction_sides(const UndirectedGraph& g, const EdgeColoring& coloring, std::size_t k) {
  Digraph h = build_reduction(g, coloring);
  ReductionCheck out;
  out.k = k;
  out.optimum = brute_force_lsp(h, k).aggregate;
  out.placement_side = reduction_bound(k).admits(out.optimum);
  out.independent_side = brute_force_independent_set(g, k);
  return out;
}

ReductionCheck reduction_sides(const UndirectedGraph& g, std::size_t k) {
  auto c = brute_force_coloring(g);
  if (!c) throw InputError("graph has no proper 3-edge-colouring");
  return reduction_sides(g, *c, k);
}

bool check_reduction_equivalence(const UndirectedGraph& g, std::size_t k) { return reduction_sides(g, k).agree(); }

UndirectedGraph random_cubic_graph(std::size_t n, std::uint64_t seed) {
  if (n < 4 || n % 2 != 0) throw InputError("random cubic graph needs an even n >= 4");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<std::size_t> points;
    for (std::size_t v = 0; v < n; ++v) points.insert(points.end(), 3, v);
    std::shuffle(points.begin(), points.end(), rng);
    bool ok = true;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < points.size() && ok; i += 2) {
      auto a = std::min(points[i], points[i + 1]);
      auto b = std::max(points[i], points[i + 1]);
      if (a == b || std::find(pairs.begin(), pairs.end(), std::pair{a, b}) != pairs.end()) ok = false;
      pairs.emplace_back(a, b);
    }
    if (!ok) continue;
    UndirectedGraph g;
    for (std::size_t v = 0; v < n; ++v) g.add_vertex(std::to_string(v));
    for (auto [a, b] : pairs) g.add_edge(std::to_string(a), std::to_string(b));
    return g;
  }
  throw InvariantViolation("random cubic graph: too many rejected pairings");
}

UndirectedGraph complete_graph_k4() {
  UndirectedGraph g;
  for (const char* v : {"0", "1", "2", "3"}) g.add_vertex(v);
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) g.add_edge(std::to_string(a), std::to_string(b));
  return g;
}

}  // namespace lexplace
