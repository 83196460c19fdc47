// lexplace: command-line front end. One JSON object per line on stdout,
// diagnostics on stderr.
#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "lexplace/decomposer.hpp"
#include "lexplace/dp_solver.hpp"
#include "lexplace/errors.hpp"
#include "lexplace/generator.hpp"
#include "lexplace/graph_io.hpp"
#include "lexplace/hardness_gadget.hpp"
#include "lexplace/json_io.hpp"
#include "lexplace/model.hpp"
#include "lexplace/oracle.hpp"

using namespace lexplace;

namespace {

struct RunConfig {
  std::string input;
  std::string output;
  std::string json_out;
  std::string coloring;
  std::size_t rho = 0;
  std::size_t k = 0;
  std::size_t n = 0;
  std::uint64_t seed = 1;
  std::uint64_t cap = kDefaultOracleCap;
  std::size_t instances = 1;
  bool check = false;
};

void emit(const json& j) { std::cout << j.dump() << '\n'; }

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

int cmd_validate(const RunConfig& c) {
  emit(validation_report(read_graph_file(c.input)));
  return 0;
}

int cmd_canonicalize(const RunConfig& c) {
  Digraph g = read_graph_file(c.input);
  Digraph m = canonicalize(g);
  write_graph_file(c.output, m);
  emit({{"vertices", m.size()}, {"edges", m.edge_count()}, {"out", c.output}});
  return 0;
}

int cmd_decompose(const RunConfig& c) {
  Digraph g = read_graph_file(c.input);
  json j = to_json(g, decompose(g));
  if (!c.json_out.empty()) {
    std::ofstream out(c.json_out);
    if (!out) throw InputError("cannot write '" + c.json_out + "'");
    out << j.dump(2) << '\n';
  }
  emit(j);
  return 0;
}

int cmd_solve(const RunConfig& c) {
  Digraph g = read_graph_file(c.input);
  emit(to_json(g, solve(g, c.rho)));
  return 0;
}

int cmd_oracle(const RunConfig& c) {
  Digraph g = read_graph_file(c.input);
  emit(to_json(g, brute_force_lsp(g, c.rho, c.cap)));
  return 0;
}

int cmd_reduce(const RunConfig& c) {
  UndirectedGraph g = read_undirected_file(c.input);
  require_cubic(g);
  EdgeColoring coloring;
  std::string source = "file";
  if (!c.coloring.empty()) {
    coloring = read_coloring_file(c.coloring, g);
  } else {
    auto found = brute_force_coloring(g);
    if (!found) throw InputError("graph has no proper 3-edge-colouring");
    coloring = *found;
    source = "brute_force";
  }
  Digraph h = build_reduction(g, coloring);
  if (!c.output.empty()) write_graph_file(c.output, h);
  auto rl = roots_and_leaves(h);
  json j = {{"vertices", h.size()},
            {"edges", h.edge_count()},
            {"roots", ids_json(h, rl.roots)},
            {"leaves", rl.leaves.size()},
            {"coloring", source}};
  if (!c.output.empty()) j["out"] = c.output;
  if (c.k > 0) j["bound"] = reduction_bound(c.k).to_string();
  if (c.check) {
    json rows = json::array();
    std::size_t lo = c.k > 0 ? c.k : 1;
    std::size_t hi = c.k > 0 ? c.k : g.size() / 2;
    bool all = true;
    for (std::size_t k = lo; k <= hi; ++k) {
      auto r = reduction_sides(g, coloring, k);
      all = all && r.agree();
      rows.push_back({{"k", k},
                      {"bound", reduction_bound(k).to_string()},
                      {"optimum", to_json(r.optimum)},
                      {"placement_side", r.placement_side},
                      {"independent_side", r.independent_side},
                      {"agree", r.agree()}});
    }
    j["equivalence"] = rows;
    j["all_agree"] = all;
  }
  emit(j);
  return 0;
}

int cmd_bench(const RunConfig& c) {
  for (std::size_t i = 0; i < c.instances; ++i) {
    std::uint64_t seed = c.seed + i;
    Digraph g = random_untangled_multitree({c.k, c.n, 0, seed});
    auto t0 = std::chrono::steady_clock::now();
    DecompTree tree = decompose(g);
    double decompose_ms = ms_since(t0);
    auto t1 = std::chrono::steady_clock::now();
    Solution s = solve(g, tree, c.rho);
    double solve_ms = ms_since(t1);
    emit({{"instance", i},
          {"seed", seed},
          {"hash", hash_hex(instance_hash(g))},
          {"k", c.k},
          {"n", g.size()},
          {"edges", g.edge_count()},
          {"rho", c.rho},
          {"connectors", connectors(g).size()},
          {"merges", tree.count(CaseTag::Merge)},
          {"tau_nodes", tree.nodes.size()},
          {"cells", s.stats.cells},
          {"max_cells", s.stats.max_cells},
          {"decompose_ms", decompose_ms},
          {"solve_ms", solve_ms},
          {"aggregate", to_json(s.aggregate)}});
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lexico-minimum replica placement on multitrees"};
  app.require_subcommand(1);
  RunConfig c;

  auto* validate = app.add_subcommand("validate", "Structural checks on a graph file");
  validate->add_option("graph", c.input)->required();

  auto* canon = app.add_subcommand("canonicalize", "Write the canonical placement model");
  canon->add_option("in", c.input)->required();
  canon->add_option("out", c.output)->required();

  auto* decomp = app.add_subcommand("decompose", "Build the decomposition tree");
  decomp->add_option("graph", c.input)->required();
  decomp->add_option("--json", c.json_out, "Also write the tree to this file");

  auto* solve_cmd = app.add_subcommand("solve", "Optimal placement by dynamic programming");
  solve_cmd->add_option("graph", c.input)->required();
  solve_cmd->add_option("--rho", c.rho)->required();

  auto* oracle = app.add_subcommand("oracle", "Optimal placement by enumeration");
  oracle->add_option("graph", c.input)->required();
  oracle->add_option("--rho", c.rho)->required();
  oracle->add_option("--cap", c.cap, "Maximum number of placements to enumerate");

  auto* reduce = app.add_subcommand("reduce", "Build the 3-multitree from a cubic graph");
  reduce->add_option("graph", c.input)->required();
  reduce->add_option("--coloring", c.coloring, "Lines 'u v c'; found by search when omitted");
  reduce->add_option("--out", c.output, "Write the multitree here");
  reduce->add_option("--k", c.k, "Replica count for the bound vector");
  reduce->add_flag("--check", c.check, "Compare against independent sets for k (or every k up to |V|/2)");

  auto* bench = app.add_subcommand("bench", "Time solve on generated untangled multitrees");
  bench->add_option("--k", c.k)->required();
  bench->add_option("--n", c.n)->required();
  bench->add_option("--rho", c.rho)->required();
  bench->add_option("--seed", c.seed);
  bench->add_option("--instances", c.instances);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate) return cmd_validate(c);
    if (*canon) return cmd_canonicalize(c);
    if (*decomp) return cmd_decompose(c);
    if (*solve_cmd) return cmd_solve(c);
    if (*oracle) return cmd_oracle(c);
    if (*reduce) return cmd_reduce(c);
    if (*bench) return cmd_bench(c);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    // The graph is re-read to name the witness vertices.
    json j = {{"error", e.what()}, {"check", e.check()}};
    try {
      Digraph g = read_graph_file(c.input);
      j["witness"] = to_json(g, e.witness());
    } catch (const std::exception&) {
    }
    emit(j);
    return 2;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    emit({{"error", e.what()}});
    return 2;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    emit({{"error", e.what()}, {"internal", true}});
    return 3;
  }
  return 0;
}
