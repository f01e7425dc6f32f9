#include "braid/fixtures.hpp"

#include <numeric>

namespace braid {

OrderedTree pinned_tree(int V, const std::vector<std::pair<int, int>>& tree_edges,
                        const std::vector<std::pair<int, int>>& deleted, TreeMode mode) {
  std::vector<std::string> vs;
  for (int v = 0; v < V; ++v) vs.push_back(std::to_string(v));
  std::vector<std::pair<std::string, std::string>> es;
  for (auto [a, b] : tree_edges) es.push_back({std::to_string(a), std::to_string(b)});
  for (auto [a, b] : deleted) es.push_back({std::to_string(a), std::to_string(b)});
  Graph g = Graph::make(vs, es);
  std::vector<char> mask(es.size(), 0);
  for (std::size_t e = 0; e < tree_edges.size(); ++e) mask[e] = 1;
  std::vector<long> key(V);
  std::iota(key.begin(), key.end(), 0L);
  OrderedTree t = OrderedTree::build(g, 0, mask, key, mode);
  for (int v = 0; v < V; ++v)
    if (t.ord_of[v] != v) throw TreeError("pinned tree numbering is not a depth-first order");
  t.deleted.clear();
  for (std::size_t k = 0; k < deleted.size(); ++k) {
    int e = static_cast<int>(tree_edges.size() + k);
    t.deleted.push_back(e);
    t.deleted_label[e] = static_cast<int>(k) + 1;
  }
  return t;
}

PinnedFixture fixture_k33() {
  PinnedFixture f;
  f.name = "K33";
  f.n = 2;
  f.tree = pinned_tree(6, {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {4, 5}}, {{0, 3}, {0, 4}, {1, 5}, {3, 5}});
  return f;
}

PinnedFixture fixture_k5_n4() {
  PinnedFixture f;
  f.name = "K5";
  f.n = 4;
  std::vector<std::pair<int, int>> tree;
  for (int v = 0; v < 6; ++v) tree.push_back({v, v + 1});
  tree.insert(tree.end(), {{6, 7}, {7, 8}, {6, 9}, {9, 10}, {10, 11}});
  tree.insert(tree.end(), {{11, 12}, {12, 13}, {11, 14}, {14, 15}, {11, 16}, {16, 17}, {17, 18}});
  tree.insert(tree.end(), {{18, 19}, {19, 20}, {18, 21}, {21, 22}, {18, 23}, {23, 24}});
  f.tree = pinned_tree(25, tree, {{0, 8}, {0, 15}, {0, 24}, {3, 13}, {3, 22}, {6, 20}});
  f.labels = {{6, "A"}, {11, "B"}, {18, "C"}};
  return f;
}

PinnedFixture fixture_theta4_n3() {
  PinnedFixture f;
  f.name = "Theta4";
  f.n = 3;
  f.tree = pinned_tree(6, {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {2, 5}}, {{0, 5}, {0, 4}, {0, 3}});
  f.labels = {{0, "B"}, {2, "A"}};
  return f;
}

std::optional<PinnedFixture> pinned_fixture(const std::string& graph, int n) {
  if ((graph == "K33" || graph == "K(3,3)") && n == 2) return fixture_k33();
  if ((graph == "K5" || graph == "K(5)") && n == 4) return fixture_k5_n4();
  if ((graph == "Theta4" || graph == "Theta(4)") && n == 3) return fixture_theta4_n3();
  return std::nullopt;
}

}  // namespace braid
