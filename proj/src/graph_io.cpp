#include "lexplace/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "lexplace/errors.hpp"

namespace lexplace {

bool is_valid_token(const std::string& token) {
  if (token.empty()) return false;
  for (char c : token) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

Digraph read_graph(std::istream& in) {
  Digraph g;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::vector<std::string> tokens;
    for (std::string t; ss >> t;) tokens.push_back(t);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    auto where = [&] { return "line " + std::to_string(lineno) + ": "; };
    if (tokens.size() > 2) throw InputError(where() + "expected one or two tokens");
    for (const auto& t : tokens)
      if (!is_valid_token(t)) throw InputError(where() + "invalid vertex token '" + t + "'");
    try {
      if (tokens.size() == 1)
        g.add_vertex(tokens[0]);
      else
        g.add_edge(tokens[0], tokens[1]);
    } catch (const InputError& e) {
      throw InputError(where() + e.what());
    }
  }
  return g;
}

Digraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file '" + path + "'");
  return read_graph(in);
}

void write_graph(std::ostream& out, const Digraph& g) {
  for (auto [u, v] : g.edges()) out << g.id(u) << ' ' << g.id(v) << '\n';
  for (Vertex v = 0; v < g.size(); ++v)
    if (g.in_degree(v) == 0 && g.out_degree(v) == 0) out << g.id(v) << '\n';
}

void write_graph_file(const std::string& path, const Digraph& g) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write graph file '" + path + "'");
  write_graph(out, g);
}

}  // namespace lexplace
