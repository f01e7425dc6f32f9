#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braid/graph.hpp"

namespace braid {

enum class TreeMode { Generic, Planar };

// Maximal tree with a planar embedding and the induced vertex order.
// Vertices are addressed by order number 0..V-1 everywhere below; gv_of maps
// back to the graph's vertex index.
struct OrderedTree {
  struct OEdge {
    int tau = -1;   // smaller end in the order
    int iota = -1;  // larger end
    bool deleted = false;
  };

  Graph graph;
  TreeMode mode = TreeMode::Generic;
  std::vector<int> gv_of;   // order number -> graph vertex
  std::vector<int> ord_of;  // graph vertex -> order number
  std::vector<int> parent;  // -1 for 0
  std::vector<int> parent_edge;
  std::vector<std::vector<int>> children;  // ascending = clockwise
  std::vector<int> branch_in_parent;       // 1-based branch of v at parent(v)
  std::vector<int> depth;
  std::vector<OEdge> edges;        // indexed like graph edges
  std::vector<int> deleted;        // d_1, d_2, ... as edge indices
  std::vector<int> deleted_label;  // edge -> k for d_k, 0 for tree edges

  int num_vertices() const { return static_cast<int>(parent.size()); }
  int mu(int v) const { return static_cast<int>(children[v].size()); }
  int valency_in_graph(int v) const { return graph.valency(gv_of[v]); }
  bool is_ancestor(int a, int b) const;  // a on the path from b to 0 (a == b allowed)
  int meet(int v, int w) const;
  int branch(int v, int w) const;      // g(v,w)
  bool separates(int e, int v) const;  // v separates edge e
  int tree_edge_of(int v) const { return parent_edge[v]; }  // edge parent(v)-v
  std::string vertex_name(int v) const { return std::to_string(v); }
  std::string edge_name(int e) const;  // "d_k" or "tau-iota"

  // Builds the order from a tree (edge mask), base and per-vertex child
  // ranking (graph vertex -> key; children visited by ascending key).
  static OrderedTree build(const Graph& g, int base_graph_vertex,
                           const std::vector<char>& tree_mask, const std::vector<long>& child_key,
                           TreeMode mode = TreeMode::Generic);

  // Same tree, children at `v` (order number) permuted; returns re-numbered tree.
  OrderedTree with_child_order(const std::vector<std::vector<int>>& child_order_by_graph) const;

  // Per-vertex child lists expressed in graph vertices.
  std::vector<std::vector<int>> child_lists_graph() const;

  std::string dump() const;
};

struct ConditionReport {
  bool t1 = true, t2 = true, t3 = true, t4 = true;
  bool t4_applicable = false;
  bool single_critical_vertex_cell = true;  // pile path has >= n-1 edges
  std::string w1, w2, w3, w4;
  bool all(bool need_t4) const { return t1 && t2 && t3 && (!need_t4 || t4); }
};

ConditionReport verify_conditions(const OrderedTree& t, int n = 1);

struct TreeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Follows the three-step construction. Generic mode tries the nearest-edge
// deletion rule first and a depth-first tree second, over all admissible base
// vertices, returning the first order satisfying T1-T3; if none does, the
// first admissible tree is returned and its report says which condition fails.
// Planar mode uses an outer-face walk of a planar embedding and requires T4.
OrderedTree choose_tree_and_order(const Graph& g, int n, TreeMode mode);

// Reorders children so branches with the separating property come last.
OrderedTree repair_t3(const OrderedTree& t);

}  // namespace braid
