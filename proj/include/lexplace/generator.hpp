#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "lexplace/digraph.hpp"

namespace lexplace {

struct GeneratorConfig {
  std::size_t roots = 2;        // k
  std::size_t vertices = 12;    // n
  std::size_t extra_edges = 0;  // attempts; 0 means n
  std::uint64_t seed = 1;
};

// k random recursive trees over ids v0..v{n-1}, then random cross edges from
// a non-leaf to an incomparable non-root. Each edge is kept only if the
// result is still an untangled multitree. Root count and leaf set are fixed
// by the tree phase.
Digraph random_untangled_multitree(const GeneratorConfig& config);

// FNV-1a over the edge list and isolated vertices, in graph order.
std::uint64_t instance_hash(const Digraph& g);
std::string hash_hex(std::uint64_t h);

}  // namespace lexplace
