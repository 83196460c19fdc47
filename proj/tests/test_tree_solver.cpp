#include <doctest.h>

#include <random>
#include <sstream>

#include "lexplace/errors.hpp"
#include "lexplace/graph_io.hpp"
#include "lexplace/model.hpp"
#include "lexplace/tree_solver.hpp"
#include "support/naive.hpp"
#include "support/printers.hpp"

using namespace lexplace;

namespace {

Digraph parse(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

std::vector<std::string> leaf_ids(const Digraph& g, const TreeEntry& e) { return g.ids_of(e.leaves); }

Digraph random_tree(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Digraph g;
  g.add_vertex("t0");
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> d(0, i - 1);
    g.add_edge("t" + std::to_string(d(rng)), "t" + std::to_string(i));
  }
  return g;
}

}  // namespace

TEST_CASE("star") {
  Digraph g = parse("r l1\nr l2\n");
  TreeTable t = solve_tree(g, 1, 1);
  CHECK(t.at(0).aggregate == FailAgg{0, 3});
  CHECK(t.at(1).aggregate == FailAgg{2, 1});
  CHECK(leaf_ids(g, t.at(1)) == std::vector<std::string>{"l1"});
}

TEST_CASE("caterpillar") {
  Digraph g = parse("r a\nr b\na l1\na l2\nb l3\n");
  TreeTable t = solve_tree(g, 2, 2);
  CHECK(t.at(0).aggregate == FailAgg{0, 0, 6});
  // r:2, a:1, b:1, placed leaves 1 each, l2:0
  CHECK(t.at(2).aggregate == FailAgg{1, 4, 1});
  CHECK(leaf_ids(g, t.at(2)) == std::vector<std::string>{"l1", "l3"});
  CHECK(failure_aggregate(g, Placement::from_ids(g, {"l1", "l2"})) == FailAgg{2, 2, 2});
  CHECK(failure_aggregate(g, Placement::from_ids(g, {"l2", "l3"})) == FailAgg{1, 4, 1});
}

TEST_CASE("entries past the leaf count are infinite") {
  Digraph g = parse("r l1\nr l2\n");
  TreeTable t = solve_tree(g, 3, 3);
  CHECK(t.at(2).aggregate == FailAgg{0, 1, 2, 0});
  CHECK(t.at(3).aggregate.is_infinite());
  CHECK(t.leaf_count == 2);
}

TEST_CASE("rejects bad input") {
  CHECK_THROWS_AS(solve_tree(parse("r l\n"), 3, 2), InputError);
  CHECK_THROWS_AS(solve_tree(parse("a c\nb c\n"), 1, 1), InputError);
  CHECK_THROWS_AS(solve_tree(parse("s a\ns b\na t\nb t\n"), 1, 1), InputError);
}

TEST_CASE("property: matches enumeration on random trees") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    std::size_t n = 2 + seed % 11;
    Digraph g = random_tree(n, seed);
    std::size_t leaves = naive::leaves(g).size();
    std::size_t rho = std::min<std::size_t>(4, leaves + 1);
    TreeTable t = solve_tree(g, rho, rho);
    for (std::size_t x = 0; x <= rho; ++x) {
      const auto& e = t.at(x);
      if (x > leaves) {
        CHECK(e.aggregate.is_infinite());
        continue;
      }
      REQUIRE_FALSE(e.aggregate.is_infinite());
      // pad the oracle's length-(x+1) vector to length rho+1
      auto best = naive::lex_min(g, x).aggregate;
      std::vector<std::int64_t> padded(rho - x, 0);
      padded.insert(padded.end(), best.begin(), best.end());
      CHECK_MESSAGE(std::vector<std::int64_t>(e.aggregate.entries().begin(), e.aggregate.entries().end()) == padded,
                    "seed " << seed << " x " << x);
      Placement p(g, std::vector<Vertex>(e.leaves.begin(), e.leaves.end()));
      CHECK(p.rho() == x);
      FailAgg direct = failure_aggregate(g, p);
      std::vector<std::int64_t> direct_padded(rho - x, 0);
      direct_padded.insert(direct_padded.end(), direct.entries().begin(), direct.entries().end());
      CHECK(direct_padded == padded);
    }
  }
}
