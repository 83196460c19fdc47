#pragma once

#include <json.hpp>

#include "lexplace/decomposer.hpp"
#include "lexplace/dp_solver.hpp"
#include "lexplace/lexvec.hpp"
#include "lexplace/model.hpp"
#include "lexplace/oracle.hpp"

namespace lexplace {

using json = nlohmann::ordered_json;

// Array of entries, or the string "inf".
json to_json(const FailAgg& f);
json to_json(const Digraph& g, const Witness& w);
json ids_json(const Digraph& g, const VertexSet& s);

// {is_dag, is_multitree, is_untangled, roots, leaves, connectors, witnesses}.
// Later checks are skipped (null) when an earlier one fails.
json validation_report(const Digraph& g);
json to_json(const Digraph& g, const DecompTree& tree);
json to_json(const Digraph& g, const Solution& s);
json to_json(const Digraph& g, const OracleResult& r);

}  // namespace lexplace
