#include <doctest.h>

#include <random>
#include <sstream>

#include "lexplace/errors.hpp"
#include "lexplace/generator.hpp"
#include "lexplace/graph_io.hpp"
#include "lexplace/hardness_gadget.hpp"
#include "lexplace/model.hpp"
#include "lexplace/oracle.hpp"
#include "support/fixtures.hpp"
#include "support/naive.hpp"
#include "support/printers.hpp"

using namespace lexplace;
using fixtures::load;

namespace {

std::vector<std::int64_t> entries(const FailAgg& f) { return {f.entries().begin(), f.entries().end()}; }

std::vector<std::vector<std::string>> argmin_ids(const Digraph& g, const OracleResult& r) {
  std::vector<std::vector<std::string>> out;
  for (const auto& p : r.argmins) {
    auto ids = g.ids_of(p);
    std::sort(ids.begin(), ids.end());
    out.push_back(ids);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Same graph with ids reversed in declaration order and renamed.
Digraph relabel(const Digraph& g) {
  Digraph h;
  for (Vertex v = static_cast<Vertex>(g.size()); v-- > 0;) h.add_vertex("x_" + g.id(v));
  auto edges = g.edges();
  std::reverse(edges.begin(), edges.end());
  for (auto [u, v] : edges) h.add_edge("x_" + g.id(u), "x_" + g.id(v));
  return h;
}

}  // namespace

TEST_CASE("canonical model of the cyclic example") {
  Digraph m = load("fig3_canonical.txt");
  auto r = brute_force_lsp(m, 2);
  CHECK(r.aggregate == FailAgg{2, 5, 1});
  CHECK(argmin_ids(m, r) == std::vector<std::vector<std::string>>{{"f", "g"}, {"f", "h"}});
  CHECK(r.evaluated == 3);
}

TEST_CASE("edge replica counts") {
  Digraph m = load("fig3_canonical.txt");
  auto zero = brute_force_lsp(m, 0);
  CHECK(zero.aggregate == FailAgg{static_cast<std::int64_t>(m.size())});
  REQUIRE(zero.argmins.size() == 1);
  CHECK(zero.argmins[0].empty());
  auto all = brute_force_lsp(m, 3);
  CHECK(all.argmins.size() == 1);
  CHECK(all.aggregate.sum() == static_cast<std::int64_t>(m.size()));
  CHECK_THROWS_AS(brute_force_lsp(m, 4), InputError);
}

TEST_CASE("cap") {
  Digraph g;
  for (int i = 0; i < 30; ++i) g.add_edge("r", "l" + std::to_string(i));
  CHECK(binomial(30, 15) == 155117520);
  try {
    brute_force_lsp(g, 15, 1000);
    FAIL("expected refusal");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("155117520") != std::string::npos);
  }
}

TEST_CASE("independent sets") {
  auto k4 = complete_graph_k4();
  CHECK(brute_force_independent_set(k4, 1));
  CHECK_FALSE(brute_force_independent_set(k4, 2));
  auto fig2 = read_undirected_file(fixtures::data_path("fig2.txt"));
  CHECK(brute_force_independent_set(fig2, 3));
  CHECK_FALSE(brute_force_independent_set(fig2, 4));
}

TEST_CASE("property: enumeration agrees with the reference recursion") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    Digraph g = naive::random_digraph(4 + seed % 7, 0.3, true, seed);
    std::size_t leaves = naive::leaves(g).size();
    std::size_t rho = seed % (leaves + 1);
    auto r = brute_force_lsp(g, rho);
    auto best = naive::lex_min(g, rho);
    CHECK(entries(r.aggregate) == best.aggregate);
    std::vector<std::set<Vertex>> ours;
    for (const auto& p : r.argmins) ours.emplace_back(p.begin(), p.end());
    std::sort(ours.begin(), ours.end());
    CHECK(ours == best.argmins);
  }
}

TEST_CASE("property: relabeling and canonicalizing keep the optimum") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    Digraph g = random_untangled_multitree({1 + seed % 3, 6 + seed % 6, 0, seed});
    std::size_t rho = 1 + seed % 3;
    if (rho > roots_and_leaves(g).leaves.size()) continue;
    auto base = brute_force_lsp(g, rho);
    Digraph h = relabel(g);
    auto moved = brute_force_lsp(h, rho);
    CHECK(base.aggregate == moved.aggregate);
    auto renamed = argmin_ids(h, moved);
    for (auto& p : renamed)
      for (auto& id : p) id = id.substr(2);
    for (auto& p : renamed) std::sort(p.begin(), p.end());
    std::sort(renamed.begin(), renamed.end());
    CHECK(renamed == argmin_ids(g, base));
    CHECK(brute_force_lsp(canonicalize(g), rho).aggregate == base.aggregate);
  }
}
