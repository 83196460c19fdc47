// Acceptance runner. Prints one PASS/FAIL line per criterion. Exit status is 0
// when every criterion's outcome matches what was expected (see --expect-fail).

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lexplace/decomposer.hpp"
#include "lexplace/dp_solver.hpp"
#include "lexplace/generator.hpp"
#include "lexplace/graph_io.hpp"
#include "lexplace/hardness_gadget.hpp"
#include "lexplace/lexvec.hpp"
#include "lexplace/model.hpp"
#include "lexplace/oracle.hpp"
#include "support/audit.hpp"
#include "support/naive.hpp"

using namespace lexplace;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string data(const std::string& name) { return std::string(LEXPLACE_DATA_DIR) + "/" + name; }

std::vector<std::string> sorted_ids(const Digraph& g, const VertexSet& s) {
  auto v = g.ids_of(s.members());
  std::sort(v.begin(), v.end());
  return v;
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

// Shared corpus for the equivalence, hypergraph and decomposition checks.
struct Corpus {
  std::vector<Digraph> graphs;
  std::vector<DecompTree> trees;
};

Corpus build_corpus(std::size_t count) {
  Corpus c;
  for (std::uint64_t seed = 1; c.graphs.size() < count; ++seed) {
    GeneratorConfig cfg;
    cfg.roots = 1 + seed % 4;
    cfg.vertices = std::max<std::size_t>(2 * cfg.roots, 6 + seed % 9);
    cfg.extra_edges = 3 * cfg.vertices;
    cfg.seed = seed;
    Digraph g = random_untangled_multitree(cfg);
    if (roots_and_leaves(g).leaves.size() < 2) continue;
    c.trees.push_back(decompose(g));
    c.graphs.push_back(std::move(g));
  }
  return c;
}

Outcome oracle_equivalence(const Corpus& c) {
  std::size_t pairs = 0, mismatches = 0, bad_placements = 0;
  std::set<std::size_t> ks;
  auto t0 = Clock::now();
  for (std::size_t i = 0; i < c.graphs.size(); ++i) {
    const Digraph& g = c.graphs[i];
    std::size_t leaves = roots_and_leaves(g).leaves.size();
    ks.insert(c.trees[i].root_count);
    for (std::size_t rho = 1; rho <= 4 && rho < leaves; ++rho) {
      ++pairs;
      auto dp = solve(g, c.trees[i], rho);
      auto brute = brute_force_lsp(g, rho);
      if (!(dp.aggregate == brute.aggregate)) ++mismatches;
      if (!(failure_aggregate(g, dp.placement) == dp.aggregate)) ++bad_placements;
    }
  }
  double ms = ms_since(t0);
  Outcome o;
  o.pass = c.graphs.size() >= 500 && mismatches == 0 && bad_placements == 0 && ks.size() == 4 && ms < 120000;
  o.detail = std::to_string(c.graphs.size()) + " instances, " + std::to_string(pairs) + " (instance, rho) pairs, " +
             std::to_string(mismatches) + " mismatches, " + std::to_string(bad_placements) +
             " bad placements, root counts seen " + std::to_string(ks.size()) + "/4, " + std::to_string(ms / 1000) +
             " s";
  return o;
}

Outcome canonical_model() {
  Digraph g = read_graph_file(data("fig3.txt"));
  Digraph m = canonicalize(g);
  bool edges = naive::edge_ids(m) == naive::edge_ids(read_graph_file(data("fig3_canonical.txt")));
  auto p = Placement::from_ids(m, {"f", "g"});
  std::vector<std::size_t> got;
  for (auto id : {"a", "b", "c", "d", "e"}) got.push_back(failure_number(m, m.vertex(id), p));
  bool numbers = got == std::vector<std::size_t>{2, 1, 2, 1, 1};
  std::string shown;
  for (auto n : got) shown += (shown.empty() ? "" : ",") + std::to_string(n);
  return {edges && numbers, std::string("edge set ") + (edges ? "matches" : "differs") + ", (a,b,c,d,e) = (" + shown + ")"};
}

Outcome hypergraph_example() {
  Digraph g = read_graph_file(data("fig4.txt"));
  Decomposer d(g);
  auto s = d.subproblem(g.all_vertices());
  auto h = d.build_hypergraph(s);
  std::set<std::vector<std::string>> edges;
  for (const auto& e : h.edges) edges.insert(sorted_ids(g, e.members));
  bool edges_ok = edges == std::set<std::vector<std::string>>{{"1"}, {"1", "2"}, {"3", "4"}, {"1", "2", "3", "4"}, {"e"}};
  auto comps = hypergraph_components(g, h);
  bool comps_ok = comps.size() == 2 && sorted_ids(g, comps[0].vertices) == std::vector<std::string>{"1", "2", "3", "4"} &&
                  sorted_ids(g, comps[1].vertices) == std::vector<std::string>{"e"};
  auto decision = d.classify(s);
  bool merge = decision.tag == CaseTag::Merge;
  std::string detail = std::string("hyperedges ") + (edges_ok ? "match" : "differ") + ", components " +
                       (comps_ok ? "match" : "differ") + ", classify = " + to_string(decision.tag);
  if (decision.tag == CaseTag::Up) detail += " on root " + g.id(s.local_roots[decision.root_index]);
  return {edges_ok && comps_ok && merge, detail};
}

Outcome hypergraph_suite(const Corpus& c) {
  std::size_t merges = 0, violations = 0;
  std::string first;
  for (std::size_t i = 0; i < c.graphs.size(); ++i) {
    auto rep = audit::run(c.graphs[i], c.trees[i]);
    merges += rep.merges;
    violations += rep.hyper.size();
    if (first.empty() && !rep.hyper.empty()) first = rep.hyper.front();
  }
  std::string detail = std::to_string(merges) + " MERGE nodes, " + std::to_string(violations) + " violations";
  if (!first.empty()) detail += " (first: " + first + ")";
  return {violations == 0 && merges > 0, detail};
}

Outcome decomposition_suite(const Corpus& c) {
  std::size_t nodes = 0, violations = 0;
  std::string first;
  for (std::size_t i = 0; i < c.graphs.size(); ++i) {
    auto rep = audit::run(c.graphs[i], c.trees[i]);
    nodes += rep.nodes;
    violations += rep.tree.size();
    if (first.empty() && !rep.tree.empty()) first = rep.tree.front();
  }
  std::string detail = std::to_string(c.graphs.size()) + " trees, " + std::to_string(nodes) + " nodes, " +
                       std::to_string(violations) + " violations";
  if (!first.empty()) detail += " (first: " + first + ")";
  return {violations == 0, detail};
}

Outcome reduction_suite() {
  auto t0 = Clock::now();
  std::size_t graphs = 0, checks = 0, disagreements = 0;
  auto run = [&](const UndirectedGraph& g, const EdgeColoring& col) {
    ++graphs;
    for (std::size_t k = 1; k <= g.size() / 2; ++k) {
      ++checks;
      if (!reduction_sides(g, col, k).agree()) ++disagreements;
    }
  };
  auto k4 = complete_graph_k4();
  run(k4, *brute_force_coloring(k4));
  auto fig2 = read_undirected_file(data("fig2.txt"));
  run(fig2, read_coloring_file(data("fig2_coloring.txt"), fig2));
  std::size_t random = 0;
  for (std::uint64_t seed = 1; random < 12 && seed < 500; ++seed) {
    auto g = random_cubic_graph(4 + 2 * (seed % 4), seed);
    auto col = brute_force_coloring(g);
    if (!col) continue;
    ++random;
    run(g, *col);
  }
  double ms = ms_since(t0);
  return {disagreements == 0 && random >= 10 && ms < 60000,
          std::to_string(graphs) + " graphs (" + std::to_string(random) + " random), " + std::to_string(checks) +
              " values of k, " + std::to_string(disagreements) + " disagreements, " + std::to_string(ms / 1000) + " s"};
}

Outcome include_mapping() {
  std::vector<std::uint32_t> beta{3, 2, 1, 4, 3};
  auto align = include_alignment(8, {2, 3, 4, 5}, 2);
  auto alpha = include_map(beta, align);
  std::string shown;
  for (auto a : alpha) shown += (shown.empty() ? "" : ",") + std::to_string(a);
  return {alpha == std::vector<std::uint32_t>{3, 2, 1, 1, 1, 1, 4, 3}, "h(<3,2,1,4,3>) = <" + shown + ">"};
}

FailAgg random_vec(std::mt19937_64& rng, std::size_t len) {
  std::uniform_int_distribution<std::int64_t> d(0, 4);
  std::vector<std::int64_t> v(len);
  for (auto& x : v) x = d(rng);
  return FailAgg(std::move(v));
}

Outcome lexvec_suite() {
  std::mt19937_64 rng(20261016);
  std::size_t bad = 0;
  const int samples = 100000;
  for (int i = 0; i < samples; ++i) {
    std::size_t len = 1 + rng() % 8;
    auto a = random_vec(rng, len), b = random_vec(rng, len), c = random_vec(rng, len), d = random_vec(rng, len);
    if (lex_cmp(a, b) != lex_cmp(a + c, b + c)) ++bad;
    if (b < a) std::swap(a, b);
    if (d < c) std::swap(c, d);
    if (!(a + c <= b + d)) ++bad;
  }
  return {bad == 0, std::to_string(samples) + " triples and quadruples, " + std::to_string(bad) + " counterexamples"};
}

double time_solve(std::size_t k, std::size_t n, std::size_t rho, std::uint64_t seed, std::size_t* cells = nullptr) {
  Digraph g = random_untangled_multitree({k, n, 3 * n, seed});
  auto t0 = Clock::now();
  auto s = solve(g, rho);
  double ms = ms_since(t0);
  if (cells) *cells = s.stats.cells;
  return ms;
}

Outcome scaling() {
  double a = time_solve(2, 100, 6, 1);
  double b = time_solve(3, 60, 5, 1);
  std::string growth;
  for (std::size_t rho = 2; rho <= 6; ++rho) {
    std::size_t cells = 0;
    double ms = time_solve(2, 100, rho, 1, &cells);
    char buf[96];
    std::snprintf(buf, sizeof buf, "%srho=%zu %.2f ms %zu cells", growth.empty() ? "" : "; ", rho, ms, cells);
    growth += buf;
  }
  char head[128];
  std::snprintf(head, sizeof head, "k=2 n=100 rho=6 %.2f ms, k=3 n=60 rho=5 %.2f ms; growth at k=2 n=100: ", a, b);
  return {a < 10000 && b < 60000, head + growth};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance runner"};
  std::vector<int> expect_fail;
  std::size_t corpus_size = 500;
  app.add_option("--expect-fail", expect_fail, "Criteria known to fail; their FAIL does not change the exit status");
  app.add_option("--corpus", corpus_size, "Number of generated instances");
  CLI11_PARSE(app, argc, argv);

  Corpus corpus = build_corpus(corpus_size);
  std::vector<std::function<Outcome()>> criteria{
      [&] { return oracle_equivalence(corpus); },
      canonical_model,
      hypergraph_example,
      [&] { return hypergraph_suite(corpus); },
      [&] { return decomposition_suite(corpus); },
      reduction_suite,
      include_mapping,
      lexvec_suite,
      scaling,
  };

  int unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    int id = static_cast<int>(i + 1);
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    bool expected_fail = std::find(expect_fail.begin(), expect_fail.end(), id) != expect_fail.end();
    if (o.pass == expected_fail) ++unexpected;
    std::printf("criterion %d: %s - %s%s\n", id, o.pass ? "PASS" : "FAIL", o.detail.c_str(),
                expected_fail ? " [expected FAIL]" : "");
    std::fflush(stdout);
  }
  return unexpected == 0 ? 0 : 1;
}
