#pragma once

#include <optional>
#include <vector>

#include "braid/graph.hpp"

namespace braid {

bool is_planar(const Graph& g);

// Rotation system of a planar embedding: for every graph vertex, its incident
// edge indices in cyclic order (one consistent orientation). nullopt if g is
// not planar.
std::optional<std::vector<std::vector<int>>> planar_rotation(const Graph& g);

// Brute-force Kuratowski search (K5 / K3,3 subdivision) for small graphs;
// used as an independent oracle in tests.
bool is_planar_bruteforce(const Graph& g);

}  // namespace braid
