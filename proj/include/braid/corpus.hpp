#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "braid/graph.hpp"

namespace braid {

struct CorpusOptions {
  int min_vertices = 2;
  int max_vertices = 8;
  int max_beta1 = 6;
  double multi_edge_rate = 0.15;  // chance an extra edge doubles an existing one
  double pendant_rate = 0.2;      // chance of a hanging edge per vertex
  double plant_rate = 0.2;        // chance to start from K5 or K3,3 instead of a random tree
};

struct CorpusGraph {
  std::string name;
  Graph graph;
};

// Connected loop-free multigraph; deterministic in the seed.
Graph random_connected_graph(std::uint64_t seed, const CorpusOptions& opt = {});
std::vector<CorpusGraph> random_corpus(std::uint64_t seed, int count, const CorpusOptions& opt = {});

}  // namespace braid
