#include "braid/tree.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <sstream>

#include "braid/planarity.hpp"

namespace braid {

OrderedTree OrderedTree::build(const Graph& g, int base, const std::vector<char>& mask,
                               const std::vector<long>& child_key, TreeMode mode) {
  int V = g.num_vertices();
  OrderedTree t;
  t.graph = g;
  t.mode = mode;
  std::vector<std::vector<std::pair<int, int>>> tadj(V);  // (neighbor, edge)
  int tree_edges = 0;
  for (int e = 0; e < g.num_edges(); ++e) {
    if (!mask[e]) continue;
    ++tree_edges;
    tadj[g.edge(e).u].push_back({g.edge(e).v, e});
    tadj[g.edge(e).v].push_back({g.edge(e).u, e});
  }
  if (tree_edges != V - 1) throw TreeError("edge mask is not a spanning tree");
  t.gv_of.clear();
  t.ord_of.assign(V, -1);
  t.parent.assign(V, -1);
  t.parent_edge.assign(V, -1);
  t.depth.assign(V, 0);
  t.branch_in_parent.assign(V, 0);
  std::vector<int> gparent(V, -1), gpedge(V, -1);
  // iterative preorder DFS
  std::vector<int> stack{base};
  std::vector<char> seen(V, 0);
  seen[base] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    t.ord_of[v] = static_cast<int>(t.gv_of.size());
    t.gv_of.push_back(v);
    std::vector<std::pair<int, int>> kids;
    for (auto [w, e] : tadj[v]) {
      if (e == gpedge[v]) continue;
      if (seen[w]) throw TreeError("edge mask contains a cycle");
      seen[w] = 1;
      gparent[w] = v;
      gpedge[w] = e;
      kids.push_back({w, e});
    }
    std::stable_sort(kids.begin(), kids.end(), [&](auto a, auto b) {
      return child_key[a.first] < child_key[b.first];
    });
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(it->first);
  }
  if (static_cast<int>(t.gv_of.size()) != V) throw TreeError("edge mask does not span the graph");
  t.children.assign(V, {});
  for (int o = 1; o < V; ++o) {
    int gv = t.gv_of[o];
    int p = t.ord_of[gparent[gv]];
    t.parent[o] = p;
    t.parent_edge[o] = gpedge[gv];
    t.depth[o] = t.depth[p] + 1;
    t.children[p].push_back(o);
    t.branch_in_parent[o] = static_cast<int>(t.children[p].size());
  }
  t.edges.assign(g.num_edges(), {});
  for (int e = 0; e < g.num_edges(); ++e) {
    int a = t.ord_of[g.edge(e).u], b = t.ord_of[g.edge(e).v];
    t.edges[e] = {std::min(a, b), std::max(a, b), !mask[e]};
  }
  t.deleted.clear();
  for (int e = 0; e < g.num_edges(); ++e)
    if (!mask[e]) t.deleted.push_back(e);
  std::sort(t.deleted.begin(), t.deleted.end(), [&](int a, int b) {
    return std::pair(t.edges[a].tau, t.edges[a].iota) < std::pair(t.edges[b].tau, t.edges[b].iota);
  });
  t.deleted_label.assign(g.num_edges(), 0);
  for (std::size_t k = 0; k < t.deleted.size(); ++k) t.deleted_label[t.deleted[k]] = static_cast<int>(k) + 1;
  return t;
}

std::vector<std::vector<int>> OrderedTree::child_lists_graph() const {
  std::vector<std::vector<int>> out(num_vertices());
  for (int v = 0; v < num_vertices(); ++v)
    for (int c : children[v]) out[gv_of[v]].push_back(gv_of[c]);
  return out;
}

OrderedTree OrderedTree::with_child_order(const std::vector<std::vector<int>>& lists) const {
  std::vector<long> key(graph.num_vertices(), 0);
  for (const auto& l : lists)
    for (std::size_t i = 0; i < l.size(); ++i) key[l[i]] = static_cast<long>(i);
  std::vector<char> mask(graph.num_edges(), 0);
  for (int e = 0; e < graph.num_edges(); ++e) mask[e] = !edges[e].deleted;
  OrderedTree t = build(graph, gv_of[0], mask, key, mode);
  // keep d_k labels attached to the same graph edges
  std::vector<int> relabeled(deleted.size());
  for (std::size_t k = 0; k < deleted.size(); ++k) relabeled[k] = deleted[k];
  t.deleted = relabeled;
  for (std::size_t k = 0; k < t.deleted.size(); ++k) t.deleted_label[t.deleted[k]] = static_cast<int>(k) + 1;
  return t;
}

bool OrderedTree::is_ancestor(int a, int b) const {
  if (a > b) return false;
  while (depth[b] > depth[a]) b = parent[b];
  return a == b;
}

int OrderedTree::meet(int v, int w) const {
  while (depth[v] > depth[w]) v = parent[v];
  while (depth[w] > depth[v]) w = parent[w];
  while (v != w) v = parent[v], w = parent[w];
  return v;
}

int OrderedTree::branch(int v, int w) const {
  if (v == w) throw TreeError("branch(v, v) is undefined");
  if (!is_ancestor(v, w)) return 0;
  while (parent[w] != v) w = parent[w];
  return branch_in_parent[w];
}

bool OrderedTree::separates(int e, int v) const {
  const OEdge& x = edges[e];
  if (!x.deleted) return false;
  if (v == x.tau || v == x.iota) return false;
  int L = meet(x.tau, x.iota);
  return is_ancestor(L, v) && (is_ancestor(v, x.tau) || is_ancestor(v, x.iota));
}

std::string OrderedTree::edge_name(int e) const {
  if (edges[e].deleted) return "d_" + std::to_string(deleted_label[e]);
  return std::to_string(edges[e].tau) + "-" + std::to_string(edges[e].iota);
}

std::string OrderedTree::dump() const {
  std::ostringstream out;
  for (int v = 0; v < num_vertices(); ++v) {
    out << v << " " << graph.vertex_id(gv_of[v]) << " " << parent[v] << " [";
    for (std::size_t i = 0; i < children[v].size(); ++i) out << (i ? "," : "") << children[v][i];
    out << "]\n";
  }
  for (std::size_t k = 0; k < deleted.size(); ++k)
    out << "d_" << k + 1 << ": " << edges[deleted[k]].tau << " " << edges[deleted[k]].iota << "\n";
  return out.str();
}

ConditionReport verify_conditions(const OrderedTree& t, int n) {
  ConditionReport r;
  r.t4_applicable = t.mode == TreeMode::Planar;
  int V = t.num_vertices();
  for (int d : t.deleted) {
    int i = t.edges[d].iota;
    if (r.t1 && t.valency_in_graph(i) != 2) {
      r.t1 = false;
      r.w1 = t.edge_name(d) + ": initial vertex " + std::to_string(i) + " has valency " +
             std::to_string(t.valency_in_graph(i));
    }
    for (int v = 0; v < t.edges[d].tau && r.t2; ++v) {
      if (t.separates(d, v)) {
        r.t2 = false;
        r.w2 = t.edge_name(d) + " separated by " + std::to_string(v);
      }
    }
  }
  for (int v = 0; v < V && r.t3; ++v) {
    int mu = t.mu(v);
    if (mu < 2) continue;
    std::vector<char> prop(mu + 1, 0);
    for (int d : t.deleted)
      if (t.separates(d, v)) prop[t.branch(v, t.edges[d].iota)] = 1;
    for (int k = 1; k <= mu && r.t3; ++k)
      for (int j = k + 1; j <= mu; ++j)
        if (prop[k] && !prop[j]) {
          r.t3 = false;
          r.w3 = "vertex " + std::to_string(v) + ": branch " + std::to_string(k) +
                 " separates but branch " + std::to_string(j) + " does not";
          break;
        }
  }
  for (int d : t.deleted) {
    for (int dp : t.deleted) {
      if (!r.t4) break;
      if (dp == d) continue;
      int A = t.edges[d].tau;
      if (!(t.edges[dp].tau < A)) continue;
      if (A == t.edges[dp].iota) continue;
      if (t.branch(A, t.edges[d].iota) == t.branch(A, t.edges[dp].iota) &&
          !(t.edges[d].iota < t.edges[dp].iota)) {
        r.t4 = false;
        r.w4 = t.edge_name(d) + ", " + t.edge_name(dp);
      }
    }
  }
  // pile path
  if (V > 1) {
    if (t.mu(0) != 1) r.single_critical_vertex_cell = false;
    int v = 0, len = 0;
    while (t.mu(v) == 1) v = t.children[v][0], ++len;
    if (t.mu(v) >= 2 && len < n - 1) r.single_critical_vertex_cell = false;
  }
  return r;
}

OrderedTree repair_t3(const OrderedTree& t0) {
  OrderedTree t = t0;
  for (int pass = 0; pass < 8; ++pass) {
    auto lists = t.child_lists_graph();
    bool changed = false;
    for (int v = 0; v < t.num_vertices(); ++v) {
      int mu = t.mu(v);
      if (mu < 2) continue;
      std::vector<char> prop(mu + 1, 0);
      for (int d : t.deleted)
        if (t.separates(d, v)) prop[t.branch(v, t.edges[d].iota)] = 1;
      auto& l = lists[t.gv_of[v]];
      std::vector<int> a, b;
      for (int k = 1; k <= mu; ++k) (prop[k] ? b : a).push_back(l[k - 1]);
      a.insert(a.end(), b.begin(), b.end());
      if (a != l) changed = true, l = a;
    }
    if (!changed) break;
    std::vector<int> old_deleted = t.deleted;
    t = t.with_child_order(lists);
  }
  // relabel d_k in (tau, iota) order of the final numbering
  std::sort(t.deleted.begin(), t.deleted.end(), [&](int a, int b) {
    return std::pair(t.edges[a].tau, t.edges[a].iota) < std::pair(t.edges[b].tau, t.edges[b].iota);
  });
  for (std::size_t k = 0; k < t.deleted.size(); ++k) t.deleted_label[t.deleted[k]] = static_cast<int>(k) + 1;
  return t;
}

namespace {

std::vector<char> bridges(const Graph& g, const std::vector<char>& alive) {
  int V = g.num_vertices();
  std::vector<char> br(g.num_edges(), 0);
  std::vector<int> tin(V, -1), low(V, 0);
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int v, int pe) {
    tin[v] = low[v] = timer++;
    for (int e : g.incident(v)) {
      if (!alive[e] || e == pe) continue;
      int w = g.other(e, v);
      if (tin[w] >= 0) {
        low[v] = std::min(low[v], tin[w]);
      } else {
        dfs(w, e);
        low[v] = std::min(low[v], low[w]);
        if (low[w] > tin[v]) br[e] = 1;
      }
    }
  };
  for (int v = 0; v < V; ++v)
    if (tin[v] < 0) dfs(v, -1);
  return br;
}

std::vector<int> bfs_dist(const Graph& g, const std::vector<char>& alive, int s) {
  std::vector<int> d(g.num_vertices(), -1);
  std::deque<int> q{s};
  d[s] = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int e : g.incident(v)) {
      if (!alive[e]) continue;
      int w = g.other(e, v);
      if (d[w] < 0) d[w] = d[v] + 1, q.push_back(w);
    }
  }
  return d;
}

std::vector<char> nearest_edge_tree(const Graph& g, int base) {
  std::vector<char> alive(g.num_edges(), 1);
  while (true) {
    auto br = bridges(g, alive);
    auto dist = bfs_dist(g, alive, base);
    int best = -1;
    std::tuple<int, int, std::string, std::string, std::string> bkey;
    for (int e = 0; e < g.num_edges(); ++e) {
      if (!alive[e] || br[e]) continue;
      int du = dist[g.edge(e).u], dv = dist[g.edge(e).v];
      std::string a = g.vertex_id(g.edge(e).u), b = g.vertex_id(g.edge(e).v);
      if (b < a) std::swap(a, b);
      auto key = std::make_tuple(std::min(du, dv), std::max(du, dv), a, b, g.edge(e).id);
      if (best < 0 || key < bkey) best = e, bkey = key;
    }
    if (best < 0) break;
    alive[best] = 0;
  }
  return alive;
}

std::vector<char> dfs_tree(const Graph& g, int base) {
  std::vector<char> mask(g.num_edges(), 0), seen(g.num_vertices(), 0);
  // iterative DFS with explicit neighbor iterators
  std::vector<std::pair<int, std::size_t>> st{{base, 0}};
  seen[base] = 1;
  while (!st.empty()) {
    auto& [v, i] = st.back();
    if (i >= g.incident(v).size()) {
      st.pop_back();
      continue;
    }
    int e = g.incident(v)[i++];
    int w = g.other(e, v);
    if (seen[w]) continue;
    seen[w] = 1;
    mask[e] = 1;
    st.push_back({w, 0});
  }
  return mask;
}

std::vector<int> base_candidates(const Graph& g) {
  std::vector<int> leaves, ess, other;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.valency(v) == 1) leaves.push_back(v);
  auto by_id = [&](int a, int b) { return g.vertex_id(a) < g.vertex_id(b); };
  if (!leaves.empty()) {
    std::sort(leaves.begin(), leaves.end(), by_id);
    return leaves;
  }
  for (int v = 0; v < g.num_vertices(); ++v) {
    std::vector<char> alive(g.num_edges(), 1);
    for (int e : g.incident(v)) alive[e] = 0;
    // connectivity of g - v
    std::vector<char> seen(g.num_vertices(), 0);
    int start = v == 0 ? 1 : 0;
    if (g.num_vertices() == 1) return {0};
    std::vector<int> st{start};
    seen[start] = 1;
    int cnt = 1;
    while (!st.empty()) {
      int x = st.back();
      st.pop_back();
      for (int e : g.incident(x)) {
        if (!alive[e]) continue;
        int w = g.other(e, x);
        if (w != v && !seen[w]) seen[w] = 1, ++cnt, st.push_back(w);
      }
    }
    if (cnt == g.num_vertices() - 1) (g.valency(v) >= 3 ? ess : other).push_back(v);
  }
  std::sort(ess.begin(), ess.end(), by_id);
  std::sort(other.begin(), other.end(), by_id);
  ess.insert(ess.end(), other.begin(), other.end());
  return ess;
}

std::vector<long> index_keys(const Graph& g) {
  std::vector<long> k(g.num_vertices());
  std::iota(k.begin(), k.end(), 0L);
  return k;
}

// Outer-face walk on an embedded graph; returns the tree mask, or empty if the
// walk cannot make progress.
std::vector<char> outer_walk_tree(const Graph& g, const std::vector<std::vector<int>>& rot, int base,
                                  int start_edge) {
  int E = g.num_edges();
  std::vector<char> alive(E, 1);
  auto succ = [&](int v, int e) {
    const auto& r = rot[v];
    int n = static_cast<int>(r.size());
    int p = static_cast<int>(std::find(r.begin(), r.end(), e) - r.begin());
    for (int i = 1; i <= n; ++i) {
      int f = r[(p + i) % n];
      if (alive[f]) return f;
    }
    return -1;
  };
  int s = start_edge;  // dart base -> other(s)
  for (int iter = 0; iter <= E; ++iter) {
    auto br = bridges(g, alive);
    int v = base, e = s, found = -1;
    for (int steps = 0; steps < 2 * E + 2; ++steps) {
      if (!br[e]) {
        found = e;
        break;
      }
      int w = g.other(e, v);
      e = succ(w, e);
      v = w;
      if (v == base && e == s) break;
    }
    if (found < 0) return alive;
    alive[found] = 0;
    if (found == s) {
      s = succ(base, found);
      if (s < 0) return {};
    }
  }
  return alive;
}

std::vector<long> rotation_keys(const Graph& g, const std::vector<std::vector<int>>& rot,
                                const std::vector<char>& mask, int base) {
  std::vector<long> key(g.num_vertices(), 0);
  std::vector<int> pedge(g.num_vertices(), -1);
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<int> st{base};
  seen[base] = 1;
  while (!st.empty()) {
    int v = st.back();
    st.pop_back();
    const auto& r = rot[v];
    int n = static_cast<int>(r.size());
    int p = pedge[v] < 0 ? n - 1
                         : static_cast<int>(std::find(r.begin(), r.end(), pedge[v]) - r.begin());
    long rank = 0;
    for (int i = 1; i <= n; ++i) {
      int e = r[(p + i) % n];
      if (!mask[e] || e == pedge[v]) continue;
      int w = g.other(e, v);
      if (seen[w]) continue;
      seen[w] = 1;
      pedge[w] = e;
      key[w] = rank++;
      st.push_back(w);
    }
  }
  return key;
}

}  // namespace

OrderedTree choose_tree_and_order(const Graph& g, int n, TreeMode mode) {
  auto bases = base_candidates(g);
  if (bases.empty()) throw TreeError("no admissible base vertex");
  std::optional<OrderedTree> fallback;
  if (mode == TreeMode::Generic) {
    for (int base : bases) {
      for (int strategy = 0; strategy < 2; ++strategy) {
        auto mask = strategy == 0 ? nearest_edge_tree(g, base) : dfs_tree(g, base);
        OrderedTree t = repair_t3(OrderedTree::build(g, base, mask, index_keys(g), mode));
        auto r = verify_conditions(t, n);
        if (!r.single_critical_vertex_cell) continue;
        if (r.all(false)) return t;
        if (!fallback) fallback = t;
      }
    }
    if (fallback) return *fallback;
    throw TreeError("graph is not suitably subdivided: no base vertex gives a single critical 0-cell");
  }
  auto rot = planar_rotation(g);
  if (!rot) throw TreeError("planar mode requested for a non-planar graph");
  for (int mirror = 0; mirror < 2; ++mirror) {
    auto r = *rot;
    if (mirror)
      for (auto& x : r) std::reverse(x.begin(), x.end());
    for (int base : bases) {
      for (int s : g.incident(base)) {
        auto mask = outer_walk_tree(g, r, base, s);
        if (mask.empty()) continue;
        int cnt = static_cast<int>(std::count(mask.begin(), mask.end(), 1));
        if (cnt != g.num_vertices() - 1) continue;
        OrderedTree t = repair_t3(OrderedTree::build(g, base, mask, rotation_keys(g, r, mask, base), mode));
        auto rep = verify_conditions(t, n);
        if (!rep.single_critical_vertex_cell) continue;
        if (rep.all(true)) return t;
        if (!fallback) fallback = t;
      }
    }
  }
  if (fallback) return *fallback;
  throw TreeError("no admissible planar tree found");
}

}  // namespace braid
