#include "braid/homology.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace braid {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from(const SparseMatrix& s) {
  IntMatrix m(s.rows, s.cols);
  for (int i = 0; i < s.rows; ++i)
    for (auto [j, v] : s.r[i]) m.at(i, j) = static_cast<long>(v);
  return m;
}

IntMatrix IntMatrix::from(const std::vector<std::vector<long long>>& d) {
  IntMatrix m(static_cast<int>(d.size()), d.empty() ? 0 : static_cast<int>(d[0].size()));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = static_cast<long>(d[i][j]);
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols != o.rows) throw std::invalid_argument("matrix shapes differ");
  IntMatrix r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const mpz_class& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

IntMatrix IntMatrix::without_column(int c) const {
  IntMatrix r(rows, cols - 1);
  for (int i = 0; i < rows; ++i)
    for (int j = 0, k = 0; j < cols; ++j)
      if (j != c) r.at(i, k++) = at(i, j);
  return r;
}

std::string IntMatrix::csv() const {
  std::ostringstream out;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) out << (j ? "," : "") << at(i, j).get_str();
    out << "\n";
  }
  return out.str();
}

namespace {

struct Smith {
  IntMatrix d;
  IntMatrix u, v;
  bool track;
  int r, c;

  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < c; ++j) std::swap(d.at(a, j), d.at(b, j));
    if (track)
      for (int j = 0; j < r; ++j) std::swap(u.at(a, j), u.at(b, j));
  }
  void swap_cols(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < r; ++i) std::swap(d.at(i, a), d.at(i, b));
    if (track)
      for (int i = 0; i < c; ++i) std::swap(v.at(i, a), v.at(i, b));
  }
  // row a += q * row b
  void add_row(int a, int b, const mpz_class& q, int from) {
    for (int j = from; j < c; ++j)
      if (d.at(b, j) != 0) d.at(a, j) += q * d.at(b, j);
    if (track)
      for (int j = 0; j < r; ++j)
        if (u.at(b, j) != 0) u.at(a, j) += q * u.at(b, j);
  }
  void add_col(int a, int b, const mpz_class& q, int from) {
    for (int i = from; i < r; ++i)
      if (d.at(i, b) != 0) d.at(i, a) += q * d.at(i, b);
    if (track)
      for (int i = 0; i < c; ++i)
        if (v.at(i, b) != 0) v.at(i, a) += q * v.at(i, b);
  }
  void negate_row(int a) {
    for (int j = 0; j < c; ++j) d.at(a, j) = -d.at(a, j);
    if (track)
      for (int j = 0; j < r; ++j) u.at(a, j) = -u.at(a, j);
  }

  bool pick_pivot(int t) {
    int bi = -1, bj = -1;
    mpz_class best;
    for (int i = t; i < r; ++i)
      for (int j = t; j < c; ++j) {
        const mpz_class& x = d.at(i, j);
        if (x == 0) continue;
        if (bi < 0 || abs(x) < best) {
          best = abs(x);
          bi = i, bj = j;
          if (best == 1) goto found;
        }
      }
    if (bi < 0) return false;
  found:
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  void run() {
    int t = 0;
    for (; t < std::min(r, c); ++t) {
      if (!pick_pivot(t)) break;
      for (;;) {
        bool clean = true;
        for (int i = t + 1; i < r; ++i) {
          if (d.at(i, t) == 0) continue;
          mpz_class q;
          mpz_fdiv_q(q.get_mpz_t(), d.at(i, t).get_mpz_t(), d.at(t, t).get_mpz_t());
          add_row(i, t, -q, t);
          if (d.at(i, t) != 0) clean = false;
        }
        for (int j = t + 1; j < c; ++j) {
          if (d.at(t, j) == 0) continue;
          mpz_class q;
          mpz_fdiv_q(q.get_mpz_t(), d.at(t, j).get_mpz_t(), d.at(t, t).get_mpz_t());
          add_col(j, t, -q, t);
          if (d.at(t, j) != 0) clean = false;
        }
        if (!clean) {
          // move the smallest remainder in row/column t onto the diagonal
          int bi = -1, bj = -1;
          mpz_class best = abs(d.at(t, t));
          for (int i = t + 1; i < r; ++i)
            if (d.at(i, t) != 0 && abs(d.at(i, t)) < best) best = abs(d.at(i, t)), bi = i, bj = -1;
          for (int j = t + 1; j < c; ++j)
            if (d.at(t, j) != 0 && abs(d.at(t, j)) < best) best = abs(d.at(t, j)), bj = j, bi = -1;
          if (bi >= 0) swap_rows(t, bi);
          if (bj >= 0) swap_cols(t, bj);
          continue;
        }
        int bad = -1;
        for (int i = t + 1; i < r && bad < 0; ++i)
          for (int j = t + 1; j < c; ++j)
            if (d.at(i, j) != 0 && !mpz_divisible_p(d.at(i, j).get_mpz_t(), d.at(t, t).get_mpz_t())) {
              bad = i;
              break;
            }
        if (bad < 0) break;
        add_row(t, bad, 1, t);
      }
      if (d.at(t, t) < 0) negate_row(t);
    }
  }
};

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m, bool transforms) {
  Smith s{m, IntMatrix(), IntMatrix(), transforms, m.rows, m.cols};
  if (transforms) {
    s.u = IntMatrix::identity(m.rows);
    s.v = IntMatrix::identity(m.cols);
  }
  s.run();
  SmithResult out;
  for (int t = 0; t < std::min(m.rows, m.cols); ++t) {
    if (s.d.at(t, t) == 0) break;
    out.factors.push_back(s.d.at(t, t));
  }
  if (transforms) {
    out.U = std::move(s.u);
    out.V = std::move(s.v);
  }
  return out;
}

mpz_class determinant(IntMatrix m) {
  int n = m.rows;
  if (n != m.cols) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int p = k + 1;
      while (p < n && m.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        mpz_class x = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
        m.at(i, j) = x;
      }
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

std::vector<mpz_class> smith_factors_by_minors(const IntMatrix& m) {
  std::vector<mpz_class> out;
  mpz_class prev = 1;
  int kmax = std::min(m.rows, m.cols);
  for (int k = 1; k <= kmax; ++k) {
    mpz_class g = 0;
    std::vector<int> rs(k), cs(k);
    std::vector<bool> rsel(m.rows, false), csel(m.cols, false);
    std::fill(rsel.begin(), rsel.begin() + k, true);
    do {
      for (int i = 0, p = 0; i < m.rows; ++i)
        if (rsel[i]) rs[p++] = i;
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + k, true);
      do {
        for (int j = 0, p = 0; j < m.cols; ++j)
          if (csel[j]) cs[p++] = j;
        IntMatrix sub(k, k);
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) sub.at(i, j) = m.at(rs[i], cs[j]);
        mpz_class det = determinant(sub);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

AbelianGroup AbelianGroup::make(long rank, const std::vector<mpz_class>& orders) {
  std::vector<mpz_class> o;
  for (const auto& x : orders)
    if (abs(x) > 1) o.push_back(abs(x));
  IntMatrix d(static_cast<int>(o.size()), static_cast<int>(o.size()));
  for (std::size_t i = 0; i < o.size(); ++i) d.at(i, i) = o[i];
  AbelianGroup g;
  g.rank = rank;
  for (const auto& f : smith_normal_form(d).factors)
    if (f > 1) g.torsion.push_back(f);
  return g;
}

AbelianGroup AbelianGroup::cokernel(const IntMatrix& rel) {
  auto s = smith_normal_form(rel);
  AbelianGroup g;
  g.rank = rel.cols - static_cast<long>(s.rank());
  for (const auto& f : s.factors)
    if (f > 1) g.torsion.push_back(f);
  return g;
}

std::string AbelianGroup::text() const {
  std::vector<std::string> parts;
  if (rank == 1) parts.push_back("Z");
  else if (rank > 1) parts.push_back("Z^" + std::to_string(rank));
  std::map<std::string, int> count;
  std::vector<std::string> order;
  for (const auto& t : torsion) {
    std::string s = t.get_str();
    if (!count[s]++) order.push_back(s);
  }
  for (const auto& s : order)
    parts.push_back(count[s] == 1 ? "Z_" + s : "Z_" + s + "^" + std::to_string(count[s]));
  if (parts.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " + " : "") + parts[i];
  return out;
}

std::vector<AbelianGroup> homology(const MorseComplex& mc) {
  int top = mc.top_dim();
  std::vector<SmithResult> snf(top + 2);
  for (int d = 1; d <= top; ++d) snf[d] = smith_normal_form(IntMatrix::from(mc.boundary[d]));
  std::vector<AbelianGroup> out(top + 1);
  for (int i = 0; i <= top; ++i) {
    long ci = static_cast<long>(mc.critical[i].size());
    long ri = i >= 1 ? static_cast<long>(snf[i].rank()) : 0;
    long rn = i + 1 <= top ? static_cast<long>(snf[i + 1].rank()) : 0;
    out[i].rank = ci - ri - rn;
    if (i + 1 <= top)
      for (const auto& f : snf[i + 1].factors)
        if (f > 1) out[i].torsion.push_back(f);
  }
  return out;
}

P2Routes p2_homology_routes(const MorseComplex& mc) {
  if (mc.top_dim() < 1) throw std::invalid_argument("complex has no 1-cells");
  P2Routes r;
  r.direct = homology(mc)[1];
  int c1 = static_cast<int>(mc.critical[1].size());
  IntMatrix d2 = mc.top_dim() >= 2 ? IntMatrix::from(mc.boundary[2]) : IntMatrix(0, c1);
  r.relative = AbelianGroup::cokernel(d2);
  long extra = static_cast<long>(mc.critical[0].size()) - 1;  // rank of the image of d1
  r.relative.rank -= extra;
  const SparseMatrix& d1 = mc.boundary[1];
  for (int i = 0; i < d1.rows && r.joining_column < 0; ++i) {
    const auto& row = d1.r[i];
    if (row.size() == 2 && row.begin()->second == -std::next(row.begin())->second &&
        (row.begin()->second == 1 || row.begin()->second == -1))
      r.joining_column = i;
  }
  if (r.joining_column < 0) {
    r.column_deleted = r.relative;
    return r;
  }
  if (extra != 1) throw std::logic_error("column deletion needs exactly two 0-cells");
  r.column_deleted = AbelianGroup::cokernel(d2.without_column(r.joining_column));
  return r;
}

std::string tag_text(OneCellTag t) {
  switch (t) {
    case OneCellTag::Pivotal: return "pivotal";
    case OneCellTag::Separating: return "separating";
    default: return "free";
  }
}

namespace {

// Deleted edges d' forming the rows attached to d: tau(d') < tau(d), tau(d)
// separates d', and iota(d') lies on the branch of iota(d) at tau(d).
std::vector<int> same_branch_class(const OrderedTree& t, int d) {
  int A = t.edges[d].tau;
  std::vector<int> out;
  if (A == 0) return out;
  int k = t.branch(A, t.edges[d].iota);
  for (int dp : t.deleted) {
    if (dp == d || t.edges[dp].tau >= A) continue;
    if (!t.separates(dp, A)) continue;
    if (t.branch(A, t.edges[dp].iota) != k) continue;
    out.push_back(dp);
  }
  std::sort(out.begin(), out.end(), [&](int a, int b) { return edge_rank(t, a) > edge_rank(t, b); });
  return out;
}

std::vector<int> deleted_desc(const OrderedTree& t) {
  std::vector<int> ds = t.deleted;
  std::sort(ds.begin(), ds.end(), [&](int a, int b) { return edge_rank(t, a) > edge_rank(t, b); });
  return ds;
}

std::vector<Perm> all_perms(int n) {
  Perm p = identity_perm();
  std::vector<Perm> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.begin() + n));
  return out;
}

std::optional<Cell> pair_cell(const Namer& namer, int d, int dp, const Perm& perm) {
  const OrderedTree& t = namer.space().tree();
  CriticalName nm;
  nm.pieces = {namer.deleted_piece(t.deleted_label[d], {}), namer.deleted_piece(t.deleted_label[dp], {})};
  nm.pile = namer.space().n() - 2;
  nm.ordered = namer.space().flavor() == Flavor::Ordered;
  nm.perm = perm;
  return namer.cell(nm);
}

Cell unordered_of(const CellSpace& cs, const Cell& c) {
  return cs.flavor() == Flavor::Ordered ? cs.phi(c).first : c;
}

}  // namespace

std::map<Cell, OneCellTag> classify_1cells(const MorseComplex& mc, const Namer& namer) {
  const CellSpace& cs = namer.space();
  const OrderedTree& t = cs.tree();
  std::map<Cell, OneCellTag> out;
  // separating: wedges of classes whose members give at least two distinct wedges
  std::set<Cell> separating;
  for (int d : t.deleted) {
    auto cls = same_branch_class(t, d);
    if (cls.size() < 2) continue;
    std::set<Cell> w;
    for (int dp : cls)
      if (auto c = wedge_cell(namer, d, dp)) w.insert(*c);
    if (w.size() >= 2) separating.insert(w.begin(), w.end());
  }
  for (const Cell& c : mc.critical.size() > 1 ? mc.critical[1] : std::vector<Cell>{}) {
    auto nm = namer.name(c);
    OneCellTag tag = OneCellTag::Free;
    if (nm && nm->dim() == 1) {
      const NamedPiece& p = nm->pieces[0];
      int A = p.vertex;
      bool piv = false;
      if (!p.a.empty() && (p.deleted || p.size() >= 2))
        for (int dp : t.deleted) {
          if (dp == p.edge || !t.separates(dp, A)) continue;
          int m = t.branch(A, t.edges[dp].iota);
          if (m >= 1 && m <= static_cast<int>(p.a.size()) && p.a[m - 1] >= 1) {
            piv = true;
            break;
          }
        }
      if (piv) tag = OneCellTag::Pivotal;
      else if (separating.count(unordered_of(cs, c))) tag = OneCellTag::Separating;
    }
    out[c] = tag;
  }
  return out;
}

UndeterminedBlock undetermined_block(const MorseComplex& mc, const Namer& namer) {
  const CellSpace& cs = namer.space();
  const OrderedTree& t = cs.tree();
  UndeterminedBlock b;
  if (mc.top_dim() < 2) return b;
  std::vector<Perm> perms = cs.flavor() == Flavor::Ordered ? all_perms(cs.n()) : std::vector<Perm>{identity_perm()};
  std::vector<std::map<int, long long>> diffs;
  for (int d : deleted_desc(t)) {
    auto cls = same_branch_class(t, d);
    if (cls.size() < 2) continue;
    int base = cls.back();
    for (const Perm& p : perms) {
      auto cb = pair_cell(namer, d, base, p);
      if (!cb) continue;
      int ib = mc.index_of(2, *cb);
      for (std::size_t q = 0; q + 1 < cls.size(); ++q) {
        auto cd = pair_cell(namer, d, cls[q], p);
        if (!cd) continue;
        int id = mc.index_of(2, *cd);
        if (id < 0 || ib < 0) continue;
        std::map<int, long long> row = mc.boundary[2].r[id];
        for (auto [j, v] : mc.boundary[2].r[ib]) {
          row[j] -= v;
          if (row[j] == 0) row.erase(j);
        }
        b.rows.push_back({*cd, *cb});
        diffs.push_back(std::move(row));
      }
    }
  }
  auto tags = classify_1cells(mc, namer);
  std::vector<int> col_of(mc.critical[1].size(), -1);
  for (std::size_t j = 0; j < mc.critical[1].size(); ++j)
    if (tags[mc.critical[1][j]] == OneCellTag::Separating) {
      col_of[j] = static_cast<int>(b.cols.size());
      b.cols.push_back(mc.critical[1][j]);
    }
  b.m = IntMatrix(static_cast<int>(diffs.size()), static_cast<int>(b.cols.size()));
  for (std::size_t i = 0; i < diffs.size(); ++i)
    for (auto [j, v] : diffs[i]) {
      if (col_of[j] < 0) {
        b.off_block_zero = false;
        continue;
      }
      b.m.at(static_cast<int>(i), col_of[j]) = static_cast<long>(v);
    }
  return b;
}

std::map<Cell, OneCellTag> classify_1cells_matrix(const MorseComplex& mc, const Namer& namer) {
  std::map<Cell, OneCellTag> out;
  if (mc.top_dim() < 1) return out;
  for (const Cell& c : mc.critical[1]) out[c] = OneCellTag::Free;
  if (mc.top_dim() < 2) return out;
  const SparseMatrix& d2 = mc.boundary[2];
  std::set<int> sep;
  UndeterminedBlock b = undetermined_block(mc, namer);
  // columns of the difference rows, read again from the matrix
  for (const auto& [x, y] : b.rows) {
    std::map<int, long long> row = d2.r[mc.index_of(2, x)];
    for (auto [j, v] : d2.r[mc.index_of(2, y)]) row[j] -= v;
    for (auto [j, v] : row)
      if (v != 0) sep.insert(j);
  }
  for (int j : sep) out[mc.critical[1][j]] = OneCellTag::Separating;
  for (int i = 0; i < d2.rows; ++i)
    if (!d2.r[i].empty()) out[mc.critical[1][d2.r[i].begin()->first]] = OneCellTag::Pivotal;
  return out;
}

}  // namespace braid
