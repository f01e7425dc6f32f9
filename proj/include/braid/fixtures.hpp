#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "braid/naming.hpp"
#include "braid/tree.hpp"

namespace braid {

// An explicitly drawn tree: vertices 0..V-1 already in order, tree edges
// listed so that depth-first traversal by ascending index reproduces the
// numbering, deleted edges in d_1, d_2, ... order.
struct PinnedFixture {
  std::string name;
  int n = 0;
  OrderedTree tree;
  VertexLabels labels;
};

OrderedTree pinned_tree(int V, const std::vector<std::pair<int, int>>& tree_edges,
                        const std::vector<std::pair<int, int>>& deleted, TreeMode mode = TreeMode::Generic);

PinnedFixture fixture_k33();       // n = 2
PinnedFixture fixture_k5_n4();     // n = 4, labels A = 6, B = 11, C = 18
PinnedFixture fixture_theta4_n3(); // n = 3, labels B = 0, A = 2

// Registry lookup by graph name and braid index ("K33"/2, "K5"/4, "Theta4"/3).
std::optional<PinnedFixture> pinned_fixture(const std::string& graph, int n);

}  // namespace braid
