#include "lexplace/json_io.hpp"

namespace lexplace {

json to_json(const FailAgg& f) {
  if (f.is_infinite()) return "inf";
  json a = json::array();
  for (auto x : f.entries()) a.push_back(x);
  return a;
}

json ids_json(const Digraph& g, const VertexSet& s) {
  json a = json::array();
  for (Vertex v : s.members()) a.push_back(g.id(v));
  return a;
}

json to_json(const Digraph& g, const Witness& w) {
  json vs = json::array();
  for (Vertex v : w.vertices) vs.push_back(g.id(v));
  return {{"kind", w.kind}, {"vertices", vs}};
}

json validation_report(const Digraph& g) {
  json out;
  json witnesses = json::object();
  auto dag = is_dag(g);
  out["is_dag"] = dag.ok;
  if (!dag) witnesses["is_dag"] = to_json(g, *dag.witness);
  out["is_multitree"] = nullptr;
  out["is_untangled"] = nullptr;
  if (dag) {
    auto mt = is_multitree(g);
    out["is_multitree"] = mt.ok;
    if (!mt) witnesses["is_multitree"] = to_json(g, *mt.witness);
    else {
      auto un = is_untangled(g);
      out["is_untangled"] = un.ok;
      if (!un) witnesses["is_untangled"] = to_json(g, *un.witness);
    }
  }
  auto rl = roots_and_leaves(g);
  out["vertices"] = g.size();
  out["edges"] = g.edge_count();
  out["roots"] = ids_json(g, rl.roots);
  out["leaves"] = ids_json(g, rl.leaves);
  out["connectors"] = ids_json(g, connectors(g));
  out["witnesses"] = witnesses;
  return out;
}

json to_json(const Digraph& g, const DecompTree& tree) {
  json nodes = json::array();
  for (const auto& n : tree.nodes) {
    json roots = json::array();
    for (Vertex r : n.sub.local_roots) roots.push_back(g.id(r));
    json node = {{"id", n.id},
                 {"kind", to_string(n.sub.kind)},
                 {"case", to_string(n.decision.tag)},
                 {"vertices", ids_json(g, n.sub.vertices)},
                 {"local_roots", roots},
                 {"left", n.left},
                 {"right", n.right}};
    if (!n.is_leaf()) {
      const auto& d = n.decision;
      if (d.tag == CaseTag::Up || d.tag == CaseTag::Out) node["root"] = g.id(n.sub.local_roots[d.root_index]);
      if (d.tag != CaseTag::Merge) node["child"] = g.id(d.child);
      if (d.tag == CaseTag::Include) {
        json q = json::array();
        for (auto i : d.include_roots) q.push_back(g.id(n.sub.local_roots[i]));
        node["include_roots"] = q;
      }
      node["left_align"] = n.left_align;
      node["right_align"] = n.right_align;
    }
    nodes.push_back(std::move(node));
  }
  json counts = {{"UP", tree.count(CaseTag::Up)},
                 {"OUT", tree.count(CaseTag::Out)},
                 {"INCLUDE", tree.count(CaseTag::Include)},
                 {"MERGE", tree.count(CaseTag::Merge)}};
  return {{"root_count", tree.root_count}, {"node_count", tree.nodes.size()}, {"counts", counts}, {"nodes", nodes}};
}

json to_json(const Digraph& g, const Solution& s) {
  json placement = json::array();
  for (Vertex v : s.placement.members()) placement.push_back(g.id(v));
  json stats = {{"tau_nodes", s.stats.tau_nodes},
                {"tables", s.stats.tables},
                {"cells", s.stats.cells},
                {"max_cells", s.stats.max_cells},
                {"wall_ms", s.stats.wall_ms}};
  return {{"placement", placement}, {"aggregate", to_json(s.aggregate)}, {"stats", stats}};
}

json to_json(const Digraph& g, const OracleResult& r) {
  json argmins = json::array();
  for (const auto& p : r.argmins) {
    json a = json::array();
    for (Vertex v : p) a.push_back(g.id(v));
    argmins.push_back(a);
  }
  return {{"aggregate", to_json(r.aggregate)}, {"argmins", argmins}, {"evaluated", r.evaluated}};
}

}  // namespace lexplace
