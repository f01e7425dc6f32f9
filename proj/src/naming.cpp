#include "braid/naming.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace braid {

int NamedPiece::size() const { return std::accumulate(a.begin(), a.end(), 0); }

long edge_rank(const OrderedTree& t, int e) {
  const auto& x = t.edges[e];
  return (x.deleted ? (1L << 40) : 0L) + (static_cast<long>(x.tau) << 20) + x.iota;
}

namespace {

std::optional<CriticalName> name_raw(const CellSpace& cs, const Cell& u) {
  const OrderedTree& t = cs.tree();
  CriticalName nm;
  std::vector<int> verts;
  std::map<int, std::pair<int, bool>> endpoint;  // vertex -> (piece, is_tau)
  for (int i = 0; i < u.n; ++i) {
    int x = u[i];
    if (!cs.is_edge(x)) {
      verts.push_back(x);
      continue;
    }
    NamedPiece p;
    p.edge = cs.edge_of(x);
    p.deleted = cs.is_deleted(x);
    p.vertex = cs.tau(x);
    int io = cs.iota(x);
    if (p.deleted) {
      p.branch = t.branch(p.vertex, io);
      if (p.vertex != 0) p.a.assign(t.mu(p.vertex), 0);
    } else {
      p.branch = t.branch_in_parent[io];
      p.a.assign(t.mu(p.vertex), 0);
    }
    nm.pieces.push_back(p);
  }
  std::sort(nm.pieces.begin(), nm.pieces.end(),
            [](const NamedPiece& a, const NamedPiece& b) { return a.vertex > b.vertex; });
  for (std::size_t i = 0; i < nm.pieces.size(); ++i) {
    endpoint[nm.pieces[i].vertex] = {static_cast<int>(i), true};
    endpoint[t.edges[nm.pieces[i].edge].iota] = {static_cast<int>(i), false};
  }
  std::set<int> vs(verts.begin(), verts.end());
  for (int w : verts) {
    int x = w;
    while (x != 0 && vs.count(t.parent[x])) x = t.parent[x];
    if (x == 0) {
      ++nm.pile;
      continue;
    }
    auto it = endpoint.find(t.parent[x]);
    if (it == endpoint.end()) return std::nullopt;
    NamedPiece& p = nm.pieces[it->second.first];
    if (it->second.second) {
      if (p.vertex == 0) {
        ++nm.pile;
        continue;
      }
      p.a[t.branch(p.vertex, w) - 1]++;
    } else {
      if (p.deleted) return std::nullopt;
      p.a[p.branch - 1]++;
    }
  }
  return nm;
}

int first_child(const OrderedTree& t, int v) { return t.children[v].empty() ? -1 : t.children[v][0]; }

}  // namespace

std::optional<CriticalName> Namer::name(const Cell& c) const {
  Cell u = c;
  Perm p{};
  if (cs_->flavor() == Flavor::Ordered) std::tie(u, p) = cs_->phi(c);
  auto nm = name_raw(*cs_, u);
  if (!nm) return std::nullopt;
  if (cs_->flavor() == Flavor::Ordered) nm->ordered = true, nm->perm = p;
  auto back = cell(*nm);
  if (!back || !(*back == c)) return std::nullopt;
  return nm;
}

std::optional<Cell> Namer::cell(const CriticalName& nm) const {
  auto c = build(nm);
  if (!c) return std::nullopt;
  Cell u = *c;
  if (cs_->flavor() == Flavor::Ordered) u = cs_->phi(*c).first;
  if (!cs_->is_critical(u)) return std::nullopt;
  auto raw = name_raw(*cs_, u);
  if (!raw || raw->pieces != nm.pieces || raw->pile != nm.pile) return std::nullopt;
  return c;
}

std::optional<Cell> Namer::build(const CriticalName& nm) const {
  const OrderedTree& t = cs_->tree();
  int n = cs_->n();
  std::vector<int> items;
  std::set<int> occ;
  for (const auto& p : nm.pieces) {
    items.push_back(cs_->edge_item(p.edge));
    occ.insert(t.edges[p.edge].tau);
    occ.insert(t.edges[p.edge].iota);
  }
  for (const auto& p : nm.pieces) {
    int A = p.vertex;
    for (std::size_t j = 1; j <= p.a.size(); ++j) {
      int cnt = p.a[j - 1];
      if (cnt == 0) continue;
      if (static_cast<int>(j) > t.mu(A)) return std::nullopt;
      int v = t.children[A][j - 1];
      if (!p.deleted && static_cast<int>(j) == p.branch) v = first_child(t, t.edges[p.edge].iota);
      for (int i = 0; i < cnt; ++i) {
        if (v < 0 || occ.count(v)) return std::nullopt;
        items.push_back(v);
        occ.insert(v);
        v = first_child(t, v);
      }
    }
  }
  int v = 0, got = 0;
  while (got < nm.pile) {
    if (v < 0) return std::nullopt;
    if (occ.count(v)) {
      if (got > 0) return std::nullopt;
    } else {
      items.push_back(v);
      occ.insert(v);
      ++got;
    }
    v = first_child(t, v);
  }
  if (static_cast<int>(items.size()) != n) return std::nullopt;
  std::vector<int> sorted = items;
  std::sort(sorted.begin(), sorted.end(), [&](int a, int b) { return cs_->key(a) < cs_->key(b); });
  Cell u;
  u.n = static_cast<uint8_t>(n);
  for (int i = 0; i < n; ++i) u[i] = static_cast<int16_t>(sorted[i]);
  if (cs_->flavor() == Flavor::Ordered) return cs_->phi_inverse(u, nm.ordered ? nm.perm : identity_perm());
  return u;
}

std::optional<Cell> Namer::one_cell(const NamedPiece& p, const Perm& perm, bool check) const {
  CriticalName nm;
  nm.pieces = {p};
  nm.pile = cs_->n() - 1 - p.size();
  nm.ordered = cs_->flavor() == Flavor::Ordered;
  nm.perm = perm;
  if (nm.pile < 0) return std::nullopt;
  return check ? cell(nm) : build(nm);
}

NamedPiece Namer::tree_piece(int A, int k, std::vector<int> a) const {
  const OrderedTree& t = cs_->tree();
  NamedPiece p;
  p.vertex = A;
  p.branch = k;
  p.deleted = false;
  p.edge = t.parent_edge[t.children[A][k - 1]];
  p.a = std::move(a);
  return p;
}

NamedPiece Namer::deleted_piece(int d_label, std::vector<int> a) const {
  const OrderedTree& t = cs_->tree();
  NamedPiece p;
  p.edge = t.deleted[d_label - 1];
  p.deleted = true;
  p.vertex = t.edges[p.edge].tau;
  p.branch = t.branch(p.vertex, t.edges[p.edge].iota);
  if (p.vertex != 0 && a.empty()) a.assign(t.mu(p.vertex), 0);
  p.a = std::move(a);
  return p;
}

std::string Namer::vertex_label(int v) const {
  auto it = labels_.find(v);
  return it == labels_.end() ? std::to_string(v) : it->second;
}

std::string Namer::piece_text(const NamedPiece& p) const {
  std::ostringstream out;
  auto vec = [&]() {
    out << "(";
    for (std::size_t i = 0; i < p.a.size(); ++i) out << (i ? "," : "") << p.a[i];
    out << ")";
  };
  if (p.deleted) {
    out << "d_" << cs_->tree().deleted_label[p.edge];
    if (p.size() > 0) vec();
  } else {
    out << vertex_label(p.vertex) << "_" << p.branch;
    vec();
  }
  return out.str();
}

std::string Namer::text(const CriticalName& nm) const {
  std::string s;
  if (nm.pieces.empty()) s = "0_" + std::to_string(nm.pile);
  for (std::size_t i = 0; i < nm.pieces.size(); ++i) s += (i ? " ∪ " : "") + piece_text(nm.pieces[i]);
  if (nm.ordered) {
    bool id = perm_is_identity(nm.perm, cs_->n());
    if (nm.pieces.size() > 1) s = "(" + s + ")";
    s += id ? "_id" : "_" + perm_text(nm.perm, cs_->n());
  }
  return s;
}

std::string Namer::text(const Cell& c) const {
  auto nm = name(c);
  return nm ? text(*nm) : cs_->text(c);
}

std::string Namer::text(const Chain& ch) const {
  if (ch.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [c, k] : ch) {
    if (k < 0) out << (first ? "-" : " - ");
    else if (!first) out << " + ";
    long long a = k < 0 ? -k : k;
    if (a != 1) out << a;
    out << text(c);
    first = false;
  }
  return out.str();
}

std::vector<long> Namer::order_key(const Cell& c) const {
  auto nm = name(c);
  if (!nm) return {};
  const OrderedTree& t = cs_->tree();
  std::vector<long> k;
  if (nm->pieces.empty()) {
    k.push_back(0);
  } else {
    const NamedPiece& e = nm->pieces[0];
    k.push_back(e.size());
    k.push_back(edge_rank(t, e.edge));
    std::vector<int> a = e.a;
    int g = 0;
    if (nm->pieces.size() >= 2) {
      int io = t.edges[nm->pieces[1].edge].iota;
      g = e.vertex == io ? 0 : t.branch(e.vertex, io);
      if (g >= 1 && g <= static_cast<int>(a.size())) a[g - 1]++;
    }
    k.insert(k.end(), a.begin(), a.end());
    if (nm->pieces.size() >= 2) k.push_back(g);
    for (std::size_t i = 1; i < nm->pieces.size(); ++i) {
      k.push_back(edge_rank(t, nm->pieces[i].edge));
      k.insert(k.end(), nm->pieces[i].a.begin(), nm->pieces[i].a.end());
    }
  }
  if (nm->ordered)
    for (int j = 0; j < cs_->n(); ++j) k.push_back(-nm->perm[j]);
  return k;
}

}  // namespace braid
