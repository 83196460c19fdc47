#pragma once

#include <iosfwd>
#include <string>

#include "lexplace/digraph.hpp"

namespace lexplace {

// Edge-list text format: `#` comment lines and blank lines are skipped, `u v`
// declares the edge u->v, a single token declares a vertex. Tokens must match
// [A-Za-z0-9_]+. Errors carry the offending line number.
Digraph read_graph(std::istream& in);
Digraph read_graph_file(const std::string& path);

void write_graph(std::ostream& out, const Digraph& g);
void write_graph_file(const std::string& path, const Digraph& g);

bool is_valid_token(const std::string& token);

}  // namespace lexplace
