#include "braid/cells.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>

#ifdef BRAID_HAVE_OPENMP
#include <omp.h>
#endif

namespace braid {

void add_to(Chain& ch, const Cell& c, long long coef) {
  if (coef == 0) return;
  auto [it, fresh] = ch.emplace(c, coef);
  if (!fresh) {
    it->second += coef;
    if (it->second == 0) ch.erase(it);
  }
}

void add_to(Chain& ch, const Chain& other, long long scale) {
  for (const auto& [c, k] : other) add_to(ch, c, k * scale);
}

CellSpace::CellSpace(const OrderedTree& t, int n, Flavor flavor)
    : t_(&t), n_(n), flavor_(flavor), V_(t.num_vertices()) {
  if (n < 1 || n > kMaxN) throw std::invalid_argument("braid index out of range 1..8");
  if (V_ + t.graph.num_edges() > 32000) throw std::invalid_argument("graph too large");
}

int CellSpace::dim(const Cell& c) const {
  int d = 0;
  for (int i = 0; i < c.n; ++i) d += is_edge(c[i]);
  return d;
}

Cell CellSpace::canonical(Cell c) const {
  std::sort(c.it.begin(), c.it.begin() + c.n, [&](int a, int b) { return key(a) < key(b); });
  return c;
}

Cell CellSpace::make(std::vector<int> items) const {
  if (static_cast<int>(items.size()) != n_) throw std::invalid_argument("cell must have n items");
  Cell c;
  c.n = static_cast<uint8_t>(n_);
  for (int i = 0; i < n_; ++i) c[i] = static_cast<int16_t>(items[i]);
  return flavor_ == Flavor::Unordered ? canonical(c) : c;
}

Chain CellSpace::boundary(const Cell& c) const {
  Chain out;
  // tau-rank of every edge position
  std::vector<std::pair<int, int>> edges;  // (tau, position)
  for (int i = 0; i < c.n; ++i)
    if (is_edge(c[i])) edges.push_back({tau(c[i]), i});
  std::sort(edges.begin(), edges.end());
  for (std::size_t k = 0; k < edges.size(); ++k) {
    int pos = edges[k].second;
    long long sign = (k % 2 == 0) ? -1 : 1;  // (-1)^(k+1) with 1-based k
    Cell fi = c, ft = c;
    fi[pos] = static_cast<int16_t>(iota(c[pos]));
    ft[pos] = static_cast<int16_t>(tau(c[pos]));
    if (flavor_ == Flavor::Unordered) fi = canonical(fi), ft = canonical(ft);
    add_to(out, fi, sign);
    add_to(out, ft, -sign);
  }
  return out;
}

Classification CellSpace::classify(const Cell& c) const {
  const OrderedTree& t = *t_;
  int occ[3 * kMaxN];
  int no = 0;
  for (int i = 0; i < c.n; ++i) {
    int x = c[i];
    if (is_edge(x)) occ[no++] = tau(x), occ[no++] = iota(x);
    else occ[no++] = x;
  }
  auto occupied = [&](int v) {
    for (int i = 0; i < no; ++i)
      if (occ[i] == v) return true;
    return false;
  };
  int min_ub = 1 << 30;
  for (int i = 0; i < c.n; ++i) {
    int x = c[i];
    if (is_edge(x)) continue;
    if (x == 0 || occupied(t.parent[x])) continue;
    min_ub = std::min(min_ub, x);
  }
  int min_or = 1 << 30, or_item = -1;
  for (int i = 0; i < c.n; ++i) {
    int x = c[i];
    if (!is_edge(x) || is_deleted(x)) continue;
    int te = tau(x), ie = iota(x);
    bool ok = true;
    for (int j = 0; j < c.n && ok; ++j) {
      int y = c[j];
      if (!is_edge(y) && y != 0 && t.parent[y] == te && y < ie) ok = false;
    }
    if (ok && ie < min_or) min_or = ie, or_item = x;
  }
  Classification r;
  if (min_ub == (1 << 30) && or_item < 0) return r;
  if (min_ub < min_or) {
    r.kind = CellKind::Redundant;
    r.witness = min_ub;
  } else {
    r.kind = CellKind::Collapsible;
    r.witness = or_item;
  }
  return r;
}

Cell CellSpace::matching(const Cell& c) const {
  auto cl = classify(c);
  if (cl.kind != CellKind::Redundant) return Cell{};
  Cell w = c;
  for (int i = 0; i < c.n; ++i)
    if (c[i] == cl.witness) w[i] = static_cast<int16_t>(edge_item(t_->parent_edge[cl.witness]));
  return flavor_ == Flavor::Unordered ? canonical(w) : w;
}

std::pair<Cell, Perm> CellSpace::phi(const Cell& o) const {
  Perm p{};
  std::array<int, kMaxN> idx{};
  for (int i = 0; i < o.n; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.begin() + o.n, [&](int a, int b) { return key(o[a]) < key(o[b]); });
  Cell u;
  u.n = o.n;
  for (int j = 0; j < o.n; ++j) {
    p[j] = static_cast<int8_t>(idx[j]);
    u[j] = o[idx[j]];
  }
  return {u, p};
}

Cell CellSpace::phi_inverse(const Cell& u, const Perm& p) const {
  Cell o;
  o.n = u.n;
  for (int j = 0; j < u.n; ++j) o[p[j]] = u[j];
  return o;
}

std::vector<std::vector<Cell>> CellSpace::enumerate(long long cap, bool parallel) const {
  const OrderedTree& t = *t_;
  std::vector<int> items;
  for (int v = 0; v < V_; ++v) items.push_back(v);
  for (int e = 0; e < t.graph.num_edges(); ++e) items.push_back(V_ + e);
  std::stable_sort(items.begin(), items.end(), [&](int a, int b) { return key(a) < key(b); });
  int m = static_cast<int>(items.size());
  long long fact = 1;
  for (int i = 2; i <= n_; ++i) fact *= i;
  std::atomic<long long> count{0};
  std::atomic<bool> over{false};
  std::vector<std::vector<Cell>> per_first(m);

  auto run_first = [&](int f) {
    std::vector<char> used(V_, 0);
    std::vector<Cell>& out = per_first[f];
    Cell cur;
    cur.n = static_cast<uint8_t>(n_);
    auto mark = [&](int x, char val) {
      if (x >= V_) used[tau(x)] = val, used[iota(x)] = val;
      else used[x] = val;
    };
    auto free_item = [&](int x) {
      if (x >= V_) return !used[tau(x)] && !used[iota(x)];
      return !used[x];
    };
    std::vector<int> next_start(n_ + 1);
    // explicit recursion via lambda
    std::function<void(int, int, int)> rec = [&](int depth, int from, int last_key) {
      if (over.load(std::memory_order_relaxed)) return;
      if (depth == n_) {
        if (count.fetch_add(flavor_ == Flavor::Ordered ? fact : 1) >= cap) {
          over = true;
          return;
        }
        if (flavor_ == Flavor::Unordered) {
          out.push_back(cur);
        } else {
          Cell p = cur;
          std::array<int, kMaxN> ix{};
          for (int i = 0; i < n_; ++i) ix[i] = i;
          do {
            for (int i = 0; i < n_; ++i) p[i] = cur[ix[i]];
            out.push_back(p);
          } while (std::next_permutation(ix.begin(), ix.begin() + n_));
        }
        return;
      }
      for (int i = from; i < m; ++i) {
        int x = items[i];
        if (key(x) <= last_key) continue;
        if (!free_item(x)) continue;
        mark(x, 1);
        cur[depth] = static_cast<int16_t>(x);
        rec(depth + 1, i + 1, key(x));
        mark(x, 0);
      }
    };
    int x = items[f];
    mark(x, 1);
    cur[0] = static_cast<int16_t>(x);
    rec(1, f + 1, key(x));
  };

#ifdef BRAID_HAVE_OPENMP
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int f = 0; f < m; ++f) run_first(f);
  } else {
    for (int f = 0; f < m; ++f) run_first(f);
  }
#else
  (void)parallel;
  for (int f = 0; f < m; ++f) run_first(f);
#endif
  if (over) throw std::length_error("cell count exceeds cap of " + std::to_string(cap));
  std::vector<std::vector<Cell>> by_dim(n_ + 1);
  for (auto& v : per_first)
    for (const Cell& c : v) by_dim[dim(c)].push_back(c);
  for (auto& v : by_dim) std::sort(v.begin(), v.end());
  return by_dim;
}

std::string CellSpace::item_text(int x) const {
  if (!is_edge(x)) return std::to_string(x);
  return std::to_string(tau(x)) + "-" + std::to_string(iota(x));
}

std::string CellSpace::text(const Cell& c) const {
  std::ostringstream out;
  if (flavor_ == Flavor::Ordered) {
    out << "(";
    for (int i = 0; i < c.n; ++i) out << (i ? "," : "") << item_text(c[i]);
    out << ")";
    return out.str();
  }
  std::vector<int> es, vs;
  for (int i = 0; i < c.n; ++i) (is_edge(c[i]) ? es : vs).push_back(c[i]);
  std::sort(es.begin(), es.end(), [&](int a, int b) { return key(a) < key(b); });
  std::sort(vs.begin(), vs.end());
  out << "{";
  bool first = true;
  for (int x : es) out << (first ? "" : ",") << item_text(x), first = false;
  for (int x : vs) out << (first ? "" : ",") << item_text(x), first = false;
  out << "}";
  return out.str();
}

std::string CellSpace::text(const Chain& ch) const {
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

Cell CellSpace::parse(const std::string& s) const {
  std::string body;
  for (char ch : s)
    if (ch != '{' && ch != '}' && ch != '(' && ch != ')' && ch != ' ') body += ch;
  std::vector<int> items;
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    if (tok[0] == 'd') {
      std::string num = tok.substr(tok[1] == '_' ? 2 : 1);
      int k = std::stoi(num);
      if (k < 1 || k > static_cast<int>(t_->deleted.size()))
        throw std::invalid_argument("no deleted edge " + tok);
      items.push_back(V_ + t_->deleted[k - 1]);
      continue;
    }
    auto dash = tok.find('-');
    if (dash == std::string::npos) {
      items.push_back(std::stoi(tok));
      continue;
    }
    int a = std::stoi(tok.substr(0, dash)), b = std::stoi(tok.substr(dash + 1));
    int found = -1;
    for (int e = 0; e < t_->graph.num_edges() && found < 0; ++e) {
      const auto& x = t_->edges[e];
      if ((x.tau == a && x.iota == b) || (x.tau == b && x.iota == a)) found = e;
    }
    if (found < 0) throw std::invalid_argument("no edge " + tok);
    items.push_back(V_ + found);
  }
  return make(items);
}

std::string perm_text(const Perm& p, int n) {
  std::ostringstream out;
  out << "[";
  for (int i = 0; i < n; ++i) out << (i ? "," : "") << p[i] + 1;
  out << "]";
  return out.str();
}

Perm perm_compose(const Perm& a, const Perm& b, int n) {
  Perm r = identity_perm();
  for (int j = 0; j < n; ++j) r[j] = a[b[j]];
  return r;
}

bool perm_is_identity(const Perm& p, int n) {
  for (int i = 0; i < n; ++i)
    if (p[i] != i) return false;
  return true;
}

}  // namespace braid
