#include "braid/decomposition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "braid/planarity.hpp"

namespace braid {

long long binomial(long long a, long long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  b = std::min(b, a - b);
  long long r = 1;
  for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

long long n_cut(int n, int mu, int nu) {
  return binomial(n + mu - 2, n - 1) * (nu - 2) - binomial(n + mu - 2, n) - (nu - mu - 1);
}

std::string leaf_text(LeafKind k) {
  switch (k) {
    case LeafKind::Circle: return "circle";
    case LeafKind::PlanarTriconnected: return "planar triconnected";
    default: return "non-planar triconnected";
  }
}

namespace {

using Multi = std::vector<std::pair<int, int>>;  // edges over graph vertex indices

std::map<int, int> degrees(const Multi& m) {
  std::map<int, int> d;
  for (auto [a, b] : m) d[a]++, d[b]++;
  return d;
}

bool all_degree_two(const Multi& m) {
  for (auto [v, k] : degrees(m))
    if (k != 2) return false;
  return true;
}

// Suppresses degree-2 vertices; the piece must not be a circle.
Multi smooth_multi(Multi m) {
  for (;;) {
    auto deg = degrees(m);
    int v = -1;
    for (auto [x, k] : deg)
      if (k == 2) {
        v = x;
        break;
      }
    if (v < 0) return m;
    std::vector<int> idx;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i].first == v || m[i].second == v) idx.push_back(static_cast<int>(i));
    if (idx.size() != 2) return m;  // a loop at v
    auto other = [&](int i) { return m[i].first == v ? m[i].second : m[i].first; };
    int a = other(idx[0]), b = other(idx[1]);
    m.erase(m.begin() + idx[1]);
    m.erase(m.begin() + idx[0]);
    m.push_back({std::min(a, b), std::max(a, b)});
  }
}

struct Split {
  std::vector<Multi> parts;
};

std::optional<Split> find_split(const Multi& m, int& sx, int& sy) {
  auto deg = degrees(m);
  std::vector<int> vs;
  for (auto [v, k] : deg)
    if (k >= 3) vs.push_back(v);
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      int x = vs[i], y = vs[j];
      std::map<int, int> parent;
      std::function<int(int)> find = [&](int v) {
        auto it = parent.find(v);
        if (it == parent.end() || it->second == v) return parent[v] = v;
        return it->second = find(it->second);
      };
      for (auto [a, b] : m)
        if (a != x && a != y && b != x && b != y) parent[find(a)] = find(b);
      std::map<long, Multi> cls;
      long fresh = -1;
      for (auto [a, b] : m) {
        bool ax = a == x || a == y, bx = b == x || b == y;
        long key = (ax && bx) ? fresh-- : find(ax ? b : a);
        cls[key].push_back({a, b});
      }
      bool proper = cls.size() >= 3;
      if (cls.size() == 2) {
        proper = true;
        for (const auto& [k, es] : cls)
          if (es.size() < 2) proper = false;
      }
      if (!proper) continue;
      Split s;
      for (auto& [k, es] : cls) {
        es.push_back({x, y});
        s.parts.push_back(std::move(es));
      }
      sx = x, sy = y;
      return s;
    }
  return std::nullopt;
}

bool leaf_planar(const Graph& g, const Multi& m) {
  std::set<int> vs;
  for (auto [a, b] : m) vs.insert(a), vs.insert(b);
  std::vector<std::string> ids;
  for (int v : vs) ids.push_back(g.vertex_id(v));
  std::vector<std::pair<std::string, std::string>> es;
  for (auto [a, b] : m) es.push_back({g.vertex_id(a), g.vertex_id(b)});
  return is_planar(Graph::make(ids, es));
}

int components_without(const Graph& g, int x) {
  std::vector<int> seen(g.num_vertices(), 0);
  int count = 0;
  for (int s = 0; s < g.num_vertices(); ++s) {
    if (s == x || seen[s]) continue;
    ++count;
    std::vector<int> st = {s};
    seen[s] = 1;
    while (!st.empty()) {
      int v = st.back();
      st.pop_back();
      for (int e : g.incident(v)) {
        int w = g.other(e, v);
        if (w != x && !seen[w]) seen[w] = 1, st.push_back(w);
      }
    }
  }
  return count;
}

}  // namespace

DecompositionTree biconnected_decomposition(const Graph& g) {
  // Tarjan with edge ids so parallel edges stay in one block
  int V = g.num_vertices();
  std::vector<int> disc(V, -1), low(V, 0);
  std::vector<std::size_t> comp(g.num_edges(), 0);
  std::vector<int> estack;
  std::vector<char> is_art(V, 0);
  std::size_t nc = 0;
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int v, int via) {
    disc[v] = low[v] = timer++;
    int kids = 0;
    for (int e : g.incident(v)) {
      if (e == via) continue;
      int w = g.other(e, v);
      if (disc[w] < 0) {
        estack.push_back(e);
        ++kids;
        dfs(w, e);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          if (via >= 0 || kids > 1) is_art[v] = 1;
          for (;;) {
            int f = estack.back();
            estack.pop_back();
            comp[f] = nc;
            if (f == e) break;
          }
          ++nc;
        }
      } else if (disc[w] < disc[v]) {
        estack.push_back(e);
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  if (V > 0) dfs(0, -1);
  std::vector<int> arts;
  for (int v = 0; v < V; ++v)
    if (is_art[v]) arts.push_back(v);
  DecompositionTree t;
  t.blocks.resize(nc);
  for (int e = 0; e < g.num_edges(); ++e) t.blocks[comp[e]].edges.push_back(e);
  for (auto& b : t.blocks) {
    std::map<int, int> deg;
    for (int e : b.edges) deg[g.edge(e).u]++, deg[g.edge(e).v]++;
    for (auto [v, k] : deg) b.vertices.push_back(v);
    b.segment = b.edges.size() == 1;
    b.circle = !b.segment && std::all_of(deg.begin(), deg.end(), [](auto p) { return p.second == 2; });
  }
  // blocks in order of their smallest edge
  std::sort(t.blocks.begin(), t.blocks.end(), [](const Block& a, const Block& b) { return a.edges < b.edges; });
  std::sort(arts.begin(), arts.end());
  for (auto v : arts) {
    CutVertex c;
    c.vertex = static_cast<int>(v);
    c.mu = components_without(g, c.vertex);
    c.nu = g.valency(c.vertex);
    t.cut_vertices.push_back(c);
  }
  return t;
}

void marked_decomposition(const Graph& g, Block& block) {
  block.cuts.clear();
  block.leaves.clear();
  if (block.segment) return;
  Multi m;
  for (int e : block.edges) m.push_back({std::min(g.edge(e).u, g.edge(e).v), std::max(g.edge(e).u, g.edge(e).v)});
  std::vector<Multi> work = {m};
  std::map<std::pair<int, int>, int> cuts;
  while (!work.empty()) {
    Multi h = std::move(work.back());
    work.pop_back();
    if (all_degree_two(h)) {
      Leaf l;
      l.kind = LeafKind::Circle;
      l.edges = static_cast<int>(h.size());
      block.leaves.push_back(l);
      continue;
    }
    h = smooth_multi(std::move(h));
    int x = -1, y = -1;
    auto split = find_split(h, x, y);
    if (!split) {
      Leaf l;
      l.kind = leaf_planar(g, h) ? LeafKind::PlanarTriconnected : LeafKind::NonplanarTriconnected;
      for (auto [v, k] : degrees(h)) l.vertices.push_back(v);
      l.edges = static_cast<int>(h.size());
      block.leaves.push_back(l);
      continue;
    }
    int& mu = cuts[{x, y}];
    mu = std::max(mu, static_cast<int>(split->parts.size()));
    for (auto& p : split->parts) work.push_back(std::move(p));
  }
  for (auto [k, mu] : cuts) block.cuts.push_back({k.first, k.second, mu});
  std::sort(block.leaves.begin(), block.leaves.end(), [](const Leaf& a, const Leaf& b) {
    return std::tie(a.kind, a.vertices, a.edges) < std::tie(b.kind, b.vertices, b.edges);
  });
}

DecompositionTree decompose(const Graph& g) {
  DecompositionTree t = biconnected_decomposition(g);
  for (auto& b : t.blocks) marked_decomposition(g, b);
  return t;
}

InvariantBundle invariant_bundle(const Graph& g, int n, const DecompositionTree& t) {
  InvariantBundle r;
  r.n = n;
  r.beta1 = betti1(g);
  for (const auto& c : t.cut_vertices) r.N1 += n_cut(n, c.mu, c.nu);
  for (const auto& b : t.blocks) {
    for (const auto& c : b.cuts) r.N2 += static_cast<long long>(c.mu - 1) * (c.mu - 2) / 2;
    for (const auto& l : b.leaves) {
      if (l.kind == LeafKind::PlanarTriconnected) ++r.N3;
      if (l.kind == LeafKind::NonplanarTriconnected) ++r.N3prime;
    }
  }
  return r;
}

InvariantBundle invariant_bundle(const Graph& g, int n) { return invariant_bundle(g, n, decompose(g)); }

FormulaResult h1_formula(const Graph& g, int n, FormulaFlavor flavor) {
  FormulaResult out;
  if (n < 1) throw std::invalid_argument("braid index must be positive");
  if (flavor == FormulaFlavor::P2) {
    if (n != 2) throw std::invalid_argument("the pure-braid formula is for two strands");
    if (g.essential_vertices().empty() && !smooth(g).is_cycle)
      throw std::invalid_argument("two ordered points on a segment: configuration space is disconnected");
    InvariantBundle b = invariant_bundle(g, 2);
    out.group.rank = 2 * b.N1 + 2 * b.N2 + 2 * b.N3 + 2 * b.beta1 + b.N3prime - 1;
    return out;
  }
  if (n == 1) {
    out.group.rank = betti1(g);
    out.notice = "n = 1: abelianized fundamental group of the graph";
    return out;
  }
  InvariantBundle b = invariant_bundle(g, n);
  out.group = AbelianGroup::make(b.N1 + b.N2 + b.N3 + b.beta1,
                                 std::vector<mpz_class>(static_cast<std::size_t>(b.N3prime), mpz_class(2)));
  return out;
}

long long valency_sum(const Graph& g) {
  long long s = 0;
  for (int v = 0; v < g.num_vertices(); ++v) {
    long long nu = g.valency(v);
    s += (nu - 1) * (nu - 2);
  }
  return s;
}

long long beta2_formula(const Graph& g, FormulaFlavor flavor) {
  InvariantBundle b = invariant_bundle(g, 2);
  long long vs = valency_sum(g);
  if (flavor == FormulaFlavor::P2)
    return 2 * b.N1 + 2 * b.N2 + 2 * b.N3 + b.N3prime + b.beta1 * (b.beta1 - 1) - vs;
  long long h1 = b.N1 + b.N2 + b.N3 + b.beta1;
  return h1 - b.beta1 - vs / 2 + b.beta1 * (b.beta1 - 1) / 2;
}

long long beta2_formula_printed_b2(const Graph& g) {
  InvariantBundle b = invariant_bundle(g, 2);
  return b.N1 + b.N2 + b.N3 - valency_sum(g) / 2 + b.beta1 * (b.beta1 - 1) / 2 + 2;
}

CharacterizationReport classify_beta1_characterizations(const Graph& g) {
  CharacterizationReport r;
  DecompositionTree t = decompose(g);
  InvariantBundle b = invariant_bundle(g, 2, t);
  r.planar = is_planar(g);
  r.beta1 = b.beta1;
  r.beta1_p2 = 2 * b.N1 + 2 * b.N2 + 2 * b.N3 + 2 * b.beta1 + b.N3prime - 1;
  r.plus_one = r.beta1_p2 == 2 * r.beta1 + 1;
  r.doubled = r.beta1_p2 == 2 * r.beta1;
  SmoothedGraph s = smooth(g);
  std::set<std::pair<int, int>> seen;
  r.topologically_simple = !s.is_cycle;
  for (auto [a, c] : s.edges) {
    if (a == c || !seen.insert({std::min(a, c), std::max(a, c)}).second) r.topologically_simple = false;
  }
  int nonseg = 0;
  const Block* only = nullptr;
  for (const auto& bl : t.blocks)
    if (!bl.segment) ++nonseg, only = &bl;
  bool cut = std::any_of(t.cut_vertices.begin(), t.cut_vertices.end(), [](const CutVertex& c) { return c.nu >= 3; });
  r.topologically_triconnected = nonseg == 1 && !cut && only->cuts.empty() && only->leaves.size() == 1 &&
                                 only->leaves[0].kind != LeafKind::Circle;
  if (r.plus_one && r.planar) {
    r.planar_case = std::array<long long, 3>{b.N1, b.N2, b.N3};
    if (b.N1 == 1) r.description = "planar: beta1(P2) = 2 beta1 + 1 holds, case (1,0,0): Y-shape tree or P-shape graph";
    else if (b.N2 == 1) r.description = "planar: beta1(P2) = 2 beta1 + 1 holds, case (0,1,0): theta-shape graph";
    else r.description = "planar: beta1(P2) = 2 beta1 + 1 holds, case (0,0,1): simple triconnected";
  } else if (r.plus_one) {
    r.description = "beta1(P2) = 2 beta1 + 1 holds yet the graph is non-planar; the planar characterization does not apply";
  } else if (r.doubled) {
    r.description = "beta1(P2) = 2 beta1: non-planar, topologically simple and triconnected";
  } else {
    r.description = "neither characterization holds";
  }
  return r;
}

}  // namespace braid
