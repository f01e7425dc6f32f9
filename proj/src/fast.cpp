#include <algorithm>
#include <numeric>

#include "braid/morse.hpp"

namespace braid {

namespace {

int first_positive(const std::vector<int>& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0) return static_cast<int>(i) + 1;
  return 0;
}

// a - 1: subtract one from the first positive entry
std::vector<int> minus_one(std::vector<int> a) {
  int p = first_positive(a);
  if (p) a[p - 1]--;
  return a;
}

std::vector<int> plus_delta(std::vector<int> a, int k) {
  if (k >= 1 && k <= static_cast<int>(a.size())) a[k - 1]++;
  return a;
}

struct Unsupported {};

Chain reduce_piece(MorseEngine& eng, const Namer& namer, const NamedPiece& p, const Perm& perm) {
  auto c = namer.one_cell(p, perm, false);
  if (!c) throw Unsupported{};
  return eng.reduce(*c);
}

Chain wedge_chain(MorseEngine& eng, const Namer& namer, int d, int dp, const Perm& perm) {
  auto c = wedge_cell(namer, d, dp);
  if (!c) throw Unsupported{};
  Cell w = *c;
  if (namer.space().flavor() == Flavor::Ordered) w = namer.space().phi_inverse(namer.space().phi(w).first, perm);
  return eng.reduce(w);
}

}  // namespace

std::optional<Cell> wedge_cell(const Namer& namer, int d, int dp) {
  const OrderedTree& t = namer.space().tree();
  int C = t.meet(t.edges[d].iota, t.edges[dp].iota);
  if (C == t.edges[d].iota || C == t.edges[dp].iota) return std::nullopt;
  int g1 = t.branch(C, t.edges[d].iota), g2 = t.branch(C, t.edges[dp].iota);
  if (g1 == g2 || t.mu(C) < 2) return std::nullopt;
  std::vector<int> a(t.mu(C), 0);
  a[std::min(g1, g2) - 1] = 1;
  return namer.one_cell(namer.tree_piece(C, std::max(g1, g2), a), identity_perm(), false);
}

Chain bold_A(MorseEngine& eng, const Namer& namer, int A, const std::vector<int>& a, int ell) {
  Chain out;
  int total = std::accumulate(a.begin(), a.end(), 0);
  std::vector<int> x = a;
  for (int alpha = 0; alpha < total; ++alpha) {
    int p = first_positive(x);
    std::vector<int> v = plus_delta(x, ell);
    v[p - 1]--;
    add_to(out, reduce_piece(eng, namer, namer.tree_piece(A, p, v), identity_perm()), 1);
    x = minus_one(x);
  }
  return out;
}

std::optional<Chain> fast_morse_boundary(MorseEngine& eng, const Namer& namer, const Cell& c2) {
  const CellSpace& cs = namer.space();
  const OrderedTree& t = cs.tree();
  auto nm = namer.name(c2);
  if (!nm || nm->dim() != 2) return std::nullopt;
  const NamedPiece& P = nm->pieces[0];  // larger tau
  const NamedPiece& Q = nm->pieces[1];
  const Perm id = identity_perm();
  try {
    if (cs.flavor() == Flavor::Ordered) {
      if (cs.n() != 2 || !P.deleted || !Q.deleted) return std::nullopt;
      int A = P.vertex;
      Chain r;
      if (t.separates(Q.edge, A)) {
        int k = t.branch(A, t.edges[P.edge].iota), l = t.branch(A, t.edges[Q.edge].iota);
        Perm rho = id;
        std::swap(rho[0], rho[1]);
        int iP = t.edges[P.edge].iota, iQ = t.edges[Q.edge].iota;
        NamedPiece d0 = P, dl = P;
        std::fill(d0.a.begin(), d0.a.end(), 0);
        dl.a = plus_delta(d0.a, l);
        add_to(r, reduce_piece(eng, namer, d0, id), 1);
        add_to(r, reduce_piece(eng, namer, dl, rho), -1);
        if (k == l && iP < iQ) add_to(r, wedge_chain(eng, namer, P.edge, Q.edge, id), -1);
        if (iQ < iP) add_to(r, wedge_chain(eng, namer, P.edge, Q.edge, rho), 1);
      }
      // c_sigma: subscripts of c_id multiplied by sigma on the right
      Chain out;
      for (const auto& [c, k] : r) {
        auto [u, p] = cs.phi(c);
        add_to(out, cs.phi_inverse(u, perm_compose(p, nm->perm, cs.n())), k);
      }
      return out;
    }
    if (!P.deleted && !Q.deleted) return Chain{};
    if (!P.deleted && Q.deleted) {
      int A = P.vertex, k = P.branch;
      if (!t.separates(Q.edge, A)) return Chain{};
      int l = t.branch(A, t.edges[Q.edge].iota);
      Chain r;
      NamedPiece x = P;
      add_to(r, reduce_piece(eng, namer, x, id), 1);
      x.a = plus_delta(P.a, l);
      add_to(r, reduce_piece(eng, namer, x, id), -1);
      add_to(r, bold_A(eng, namer, A, P.a, l), -1);
      add_to(r, bold_A(eng, namer, A, plus_delta(P.a, k), l), 1);
      return r;
    }
    if (P.deleted && !Q.deleted) {
      // the tree edge has the smaller terminal vertex, so it cannot separate d
      return Chain{};
    }
    int A = P.vertex;
    if (A == 0 || !t.separates(Q.edge, A)) return Chain{};
    int k = t.branch(A, t.edges[P.edge].iota), l = t.branch(A, t.edges[Q.edge].iota);
    Chain r;
    NamedPiece x = P;
    add_to(r, reduce_piece(eng, namer, x, id), 1);
    x.a = plus_delta(P.a, l);
    add_to(r, reduce_piece(eng, namer, x, id), -1);
    add_to(r, bold_A(eng, namer, A, P.a, l), -1);
    add_to(r, bold_A(eng, namer, A, plus_delta(P.a, k), l), 1);
    if (k == l) {
      int eps = t.edges[P.edge].iota < t.edges[Q.edge].iota ? -1 : 1;
      add_to(r, wedge_chain(eng, namer, P.edge, Q.edge, id), eps);
    }
    return r;
  } catch (const Unsupported&) {
    return std::nullopt;
  }
}

}  // namespace braid
