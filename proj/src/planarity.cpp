#include "braid/planarity.hpp"

#include <algorithm>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>
#include <map>

namespace braid {

namespace {

using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                     boost::property<boost::vertex_index_t, int>,
                                     boost::property<boost::edge_index_t, int>>;
using BEdge = boost::graph_traits<BGraph>::edge_descriptor;

// Every edge is split once so the boost input is simple; vertex V+e is the
// midpoint of edge e, and boost edge 2e / 2e+1 are its two halves.
BGraph split_graph(const Graph& g) {
  int V = g.num_vertices(), E = g.num_edges();
  BGraph b(V + E);
  for (int e = 0; e < E; ++e) {
    boost::add_edge(g.edge(e).u, V + e, 2 * e, b);
    boost::add_edge(V + e, g.edge(e).v, 2 * e + 1, b);
  }
  return b;
}

}  // namespace

std::optional<std::vector<std::vector<int>>> planar_rotation(const Graph& g) {
  BGraph b = split_graph(g);
  using Emb = std::vector<std::vector<BEdge>>;
  Emb emb(boost::num_vertices(b));
  auto pm = boost::make_iterator_property_map(emb.begin(), boost::get(boost::vertex_index, b));
  bool ok = boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = b,
                                                boost::boyer_myrvold_params::embedding = pm);
  if (!ok) return std::nullopt;
  auto eidx = boost::get(boost::edge_index, b);
  std::vector<std::vector<int>> rot(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v)
    for (const auto& be : emb[v]) rot[v].push_back(static_cast<int>(eidx[be]) / 2);
  return rot;
}

bool is_planar(const Graph& g) {
  BGraph b = split_graph(g);
  return boost::boyer_myrvold_planarity_test(b);
}

namespace {

struct RotSearch {
  int V = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> inc;     // incident edge ids per vertex (loops twice)
  std::vector<std::vector<int>> rot;     // current permutation
  bool found = false;
  long budget = 0;

  int faces() const {
    // darts: (edge, dir) dir 0: u->v, 1: v->u
    int E = static_cast<int>(edges.size());
    std::vector<std::vector<int>> pos(V);
    std::vector<char> seen(2 * E, 0);
    // position of dart leaving v in rot[v]: rot stores darts (2e+dir)
    std::vector<int> at(2 * E, -1), owner(2 * E, -1);
    for (int v = 0; v < V; ++v)
      for (int i = 0; i < static_cast<int>(rot[v].size()); ++i) at[rot[v][i]] = i, owner[rot[v][i]] = v;
    int F = 0;
    for (int d0 = 0; d0 < 2 * E; ++d0) {
      if (seen[d0]) continue;
      ++F;
      int d = d0;
      while (!seen[d]) {
        seen[d] = 1;
        int rev = d ^ 1;  // dart arriving, reversed = leaving the head
        int h = owner[rev];
        const auto& r = rot[h];
        d = r[(at[rev] + 1) % r.size()];
      }
    }
    return F;
  }

  void rec(int v) {
    if (found || budget <= 0) return;
    if (v == V) {
      --budget;
      int E = static_cast<int>(edges.size());
      if (V - E + faces() == 2) found = true;
      return;
    }
    auto& r = rot[v];
    if (r.size() <= 2) {
      rec(v + 1);
      return;
    }
    std::sort(r.begin() + 1, r.end());
    do {
      rec(v + 1);
      if (found) return;
    } while (std::next_permutation(r.begin() + 1, r.end()));
  }
};

}  // namespace

bool is_planar_bruteforce(const Graph& g) {
  RotSearch s;
  s.V = g.num_vertices();
  s.rot.assign(s.V, {});
  for (int e = 0; e < g.num_edges(); ++e) {
    s.edges.push_back({g.edge(e).u, g.edge(e).v});
    s.rot[g.edge(e).u].push_back(2 * e);
    s.rot[g.edge(e).v].push_back(2 * e + 1);
  }
  s.budget = 20'000'000;
  s.rec(0);
  return s.found;
}

}  // namespace braid
