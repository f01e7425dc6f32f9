#include "braid/presentation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace braid {

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (!out.empty() && out.back().g == l.g && out.back().e == -l.e)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (Letter& l : out) l.e = -l.e;
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return free_reduce(out);
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t i = 0, j = r.size();
  while (j - i >= 2 && r[i].g == r[j - 1].g && r[i].e == -r[j - 1].e) ++i, --j;
  return Word(r.begin() + i, r.begin() + j);
}

Word rotate(const Word& w, std::size_t k) {
  if (w.empty()) return w;
  Word out(w.begin() + k % w.size(), w.end());
  out.insert(out.end(), w.begin(), w.begin() + k % w.size());
  return out;
}

Word substitute(const Word& w, int g, const Word& image) {
  Word inv = inverse(image), out;
  for (const Letter& l : w) {
    if (l.g != g)
      out.push_back(l);
    else {
      const Word& s = l.e > 0 ? image : inv;
      out.insert(out.end(), s.begin(), s.end());
    }
  }
  return free_reduce(out);
}

int occurrences(const Word& w, int g) {
  return static_cast<int>(std::count_if(w.begin(), w.end(), [&](const Letter& l) { return l.g == g; }));
}

long long exponent_sum(const Word& w, int g) {
  long long s = 0;
  for (const Letter& l : w)
    if (l.g == g) s += l.e;
  return s;
}

bool zero_exponent_sums(const Word& w) {
  std::map<int, long long> s;
  for (const Letter& l : w) s[l.g] += l.e;
  return std::all_of(s.begin(), s.end(), [](const auto& kv) { return kv.second == 0; });
}

Chain abelianize(const CellWord& w) {
  Chain out;
  for (const auto& [c, e] : w) add_to(out, c, e);
  return out;
}

CellWord boundary_word(const CellSpace& cs, const Cell& c2) {
  std::vector<std::pair<int, int>> edges;  // (tau, position)
  for (int i = 0; i < c2.n; ++i)
    if (cs.is_edge(c2[i])) edges.push_back({cs.tau(c2[i]), i});
  if (edges.size() != 2) throw std::invalid_argument("boundary_word needs a 2-cell");
  std::sort(edges.begin(), edges.end());
  int lo = edges[0].second, hi = edges[1].second;
  auto face = [&](int pos, int v) {
    Cell f = c2;
    f[pos] = static_cast<int16_t>(v);
    return cs.flavor() == Flavor::Unordered ? cs.canonical(f) : f;
  };
  int xlo = c2[lo], xhi = c2[hi];
  return {{face(lo, cs.iota(xlo)), 1},
          {face(hi, cs.tau(xhi)), 1},
          {face(lo, cs.tau(xlo)), -1},
          {face(hi, cs.iota(xhi)), -1}};
}

Rewriter::Rewriter(const CellSpace& cs, const MorseComplex& mc, long long step_cap)
    : cs_(&cs), mc_(&mc), cap_(step_cap) {
  if (mc.top_dim() >= 1)
    for (std::size_t i = 0; i < mc.critical[1].size(); ++i) gen_[mc.critical[1][i]] = static_cast<int>(i);
}

int Rewriter::generator_of(const Cell& c) const {
  auto it = gen_.find(c);
  return it == gen_.end() ? -1 : it->second;
}

CellWord Rewriter::step(const Cell& c) const {
  auto cl = cs_->classify(c);
  if (cl.kind == CellKind::Critical) return {{c, 1}};
  if (cl.kind == CellKind::Collapsible) return {};
  const OrderedTree& t = cs_->tree();
  int v1 = cl.witness;
  int ep = cs_->edge_item(t.parent_edge[v1]);
  int v = t.parent[v1];
  int pv = -1, pe = -1;
  for (int i = 0; i < c.n; ++i) {
    if (c[i] == v1) pv = i;
    if (cs_->is_edge(c[i])) pe = i;
  }
  auto mk = [&](int a, int b) {
    Cell x = c;
    x[pv] = static_cast<int16_t>(a);
    if (b >= 0) x[pe] = static_cast<int16_t>(b);
    return cs_->flavor() == Flavor::Unordered ? cs_->canonical(x) : x;
  };
  int e = c[pe];
  return {{mk(ep, cs_->iota(e)), 1}, {mk(v, -1), 1}, {mk(ep, cs_->tau(e)), -1}};
}

Word Rewriter::rewrite(const Cell& c) {
  if (int g = generator_of(c); g >= 0) return {{g, 1}};
  if (auto it = memo_.find(c); it != memo_.end()) return it->second;
  if (++steps_ > cap_) throw std::runtime_error("rewriting exceeded its step cap");
  if (!active_.insert(c).second) throw std::logic_error("rewriting cycle at " + cs_->text(c));
  Word out;
  for (const auto& [x, e] : step(c)) {
    Word w = rewrite(x);
    if (e < 0) w = inverse(w);
    out.insert(out.end(), w.begin(), w.end());
  }
  out = free_reduce(out);
  active_.erase(c);
  memo_.emplace(c, out);
  return out;
}

Word Rewriter::rewrite(const CellWord& w) {
  Word out;
  for (const auto& [c, e] : w) {
    Word x = rewrite(c);
    if (e < 0) x = inverse(x);
    out.insert(out.end(), x.begin(), x.end());
  }
  return free_reduce(out);
}

CellWord Rewriter::to_cells(const Word& w) const {
  CellWord out;
  for (const Letter& l : w) out.push_back({mc_->critical[1].at(l.g), l.e});
  return out;
}

int Presentation::generator_count() const {
  return static_cast<int>(std::count(alive.begin(), alive.end(), 1));
}

std::vector<int> Presentation::generators() const {
  std::vector<int> out;
  for (std::size_t g = 0; g < alive.size(); ++g)
    if (alive[g]) out.push_back(static_cast<int>(g));
  return out;
}

IntMatrix Presentation::abelian_matrix() const {
  auto gens = generators();
  std::map<int, int> col;
  for (std::size_t j = 0; j < gens.size(); ++j) col[gens[j]] = static_cast<int>(j);
  IntMatrix m(static_cast<int>(relators.size()), static_cast<int>(gens.size()));
  for (std::size_t i = 0; i < relators.size(); ++i)
    for (const Letter& l : relators[i]) {
      auto it = col.find(l.g);
      if (it == col.end()) throw std::logic_error("relator uses a removed generator " + names[l.g]);
      m.at(static_cast<int>(i), it->second) += l.e;
    }
  return m;
}

std::string Presentation::letter_text(const Letter& l) const {
  return l.e > 0 ? names[l.g] : names[l.g] + "^-1";
}

std::string Presentation::word_text(const Word& w) const {
  if (w.empty()) return "1";
  std::string s;
  for (const Letter& l : w) {
    if (!s.empty()) s += ' ';
    s += letter_text(l);
  }
  return s;
}

std::string Presentation::relator_text(const Word& w) const {
  if (auto f = commutator_factors(w)) {
    std::string s;
    for (auto& [a, b] : *f) s += "[" + letter_text(a) + "," + letter_text(b) + "]";
    return s;
  }
  if (auto c = commutator_form(w)) return "[" + word_text(c->first) + "," + word_text(c->second) + "]";
  return word_text(w);
}

int Presentation::add_generator(const std::string& name) {
  names.push_back(name);
  cells.push_back(Cell{});
  alive.push_back(1);
  return static_cast<int>(names.size()) - 1;
}

void Presentation::kill(int g) {
  for (Word& r : relators) r = substitute(r, g, {});
  alive[g] = 0;
  history.push_back({TietzeMove::Kind::Kill, g, -1, {}, "kill " + names[g]});
}

void Presentation::eliminate(int g, int r) {
  Word w = free_reduce(relators[r]);
  auto it = std::find_if(w.begin(), w.end(), [&](const Letter& l) { return l.g == g; });
  if (it == w.end() || occurrences(w, g) != 1) throw std::logic_error("generator must occur once");
  Word U(w.begin(), it), V(it + 1, w.end());
  // U g^e V = 1
  Word image = it->e > 0 ? concat(inverse(U), inverse(V)) : concat(V, U);
  relators.erase(relators.begin() + r);
  for (Word& x : relators) x = substitute(x, g, image);
  alive[g] = 0;
  history.push_back({TietzeMove::Kind::Eliminate, g, -1, image, names[g] + " = " + word_text(image)});
}

void Presentation::substitute_generator(int g, const Word& value, int added) {
  if (occurrences(value, added) != 1 || occurrences(value, g) != 0)
    throw std::logic_error("not an invertible substitution");
  for (Word& x : relators) x = substitute(x, g, value);
  alive[g] = 0;
  history.push_back({TietzeMove::Kind::Substitute, g, added, value, names[g] + " = " + word_text(value)});
}

void Presentation::drop_trivial() {
  for (std::size_t i = relators.size(); i-- > 0;)
    if (free_reduce(relators[i]).empty()) {
      relators.erase(relators.begin() + static_cast<long>(i));
      history.push_back({TietzeMove::Kind::DropTrivial, -1, -1, {}, "drop trivial relator"});
    }
}

Presentation raw_presentation(const MorseComplex& mc, const CellSpace& cs, const Namer& namer,
                              Rewriter* rewriter) {
  Presentation p;
  if (mc.top_dim() < 1) return p;
  for (const Cell& c : mc.critical[1]) {
    p.names.push_back(namer.text(c));
    p.cells.push_back(c);
    p.alive.push_back(1);
  }
  Rewriter local(cs, mc);
  Rewriter& rw = rewriter ? *rewriter : local;
  if (mc.top_dim() >= 2)
    for (const Cell& c2 : mc.critical[2]) p.relators.push_back(rw.rewrite(boundary_word(cs, c2)));
  // several 0-cells: contract a spanning tree of joining 1-cells
  if (mc.critical[0].size() > 1) {
    std::vector<int> uf(mc.critical[0].size());
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int x) {
      while (uf[x] != x) x = uf[x] = uf[uf[x]];
      return x;
    };
    std::size_t joined = 1;
    const SparseMatrix& d1 = mc.boundary[1];
    for (int i = 0; i < d1.rows && joined < mc.critical[0].size(); ++i) {
      const auto& row = d1.r[i];
      if (row.size() != 2 || row.begin()->second != -std::next(row.begin())->second) continue;
      int a = find(row.begin()->first), b = find(std::next(row.begin())->first);
      if (a == b) continue;
      uf[a] = b;
      ++joined;
      p.kill(i);
    }
    if (joined != mc.critical[0].size()) throw std::logic_error("critical 0-cells are not joined by 1-cells");
  }
  return p;
}

std::vector<long> pivotal_key(const Namer& namer, const Cell& c) {
  auto nm = namer.name(c);
  if (!nm || nm->pieces.size() != 1) return namer.order_key(c);
  const NamedPiece& pc = nm->pieces[0];
  const OrderedTree& t = namer.space().tree();
  std::vector<long> k{pc.size(), pc.vertex, pc.deleted ? 1 : 0, t.edges[pc.edge].iota};
  k.insert(k.end(), pc.a.begin(), pc.a.end());
  if (nm->ordered)
    for (int i = 0; i < c.n; ++i) k.push_back(nm->perm[i]);
  return k;
}

namespace {

void notify(const SimplifyOptions& opt, const Presentation& p) {
  if (opt.after_move) opt.after_move(p);
}

// Relator in which g occurs exactly once; preferred ones first, then shortest.
int pick_relator(const Presentation& p, int g, const std::set<int>& preferred) {
  int best = -1;
  std::size_t best_len = 0;
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    if (occurrences(p.relators[i], g) != 1) continue;
    if (preferred.count(static_cast<int>(i))) return static_cast<int>(i);
    if (best < 0 || p.relators[i].size() < best_len) best = static_cast<int>(i), best_len = p.relators[i].size();
  }
  return best;
}

bool exclusive_quadratic(const Presentation& p, std::size_t r) {
  Word w = cyclic_reduce(p.relators[r]);
  if (w.empty()) return false;
  std::map<int, std::pair<int, int>> cnt;
  for (const Letter& l : w) (l.e > 0 ? cnt[l.g].first : cnt[l.g].second)++;
  for (auto& [g, c] : cnt) {
    if (c.first != 1 || c.second != 1) return false;
    for (std::size_t i = 0; i < p.relators.size(); ++i)
      if (i != r && occurrences(p.relators[i], g)) return false;
  }
  return true;
}

std::string primed(const std::string& s) { return s + "'"; }

// Cut-and-paste to a product of commutators of letters, by Nielsen moves.
void normalize_surface(Presentation& p, std::size_t r, const SimplifyOptions& opt) {
  std::set<int> done;
  for (;;) {
    Word w = cyclic_reduce(p.relators[r]);
    p.relators[r] = w;
    std::size_t L = w.size();
    std::map<int, std::vector<std::size_t>> pos;
    for (std::size_t i = 0; i < L; ++i) pos[w[i].g].push_back(i);
    int x = -1, y = -1;
    for (auto& [gx, px] : pos) {
      if (done.count(gx)) continue;
      for (auto& [gy, py] : pos) {
        if (gy == gx || done.count(gy)) continue;
        if (px[0] < py[0] && py[0] < px[1] && px[1] < py[1]) {
          x = gx, y = gy;
          break;
        }
      }
      if (x >= 0) break;
    }
    if (x < 0) break;
    // w = X A Y B X^-1 C Y^-1 D after rotating X to the front
    w = rotate(w, pos[x][0]);
    std::vector<std::size_t> ix, iy;
    for (std::size_t i = 0; i < L; ++i) {
      if (w[i].g == x) ix.push_back(i);
      if (w[i].g == y) iy.push_back(i);
    }
    Letter X = w[0], Y = w[iy[0]];
    Word A(w.begin() + 1, w.begin() + iy[0]), B(w.begin() + iy[0] + 1, w.begin() + ix[1]),
        C(w.begin() + ix[1] + 1, w.begin() + iy[1]);
    p.relators[r] = w;
    // X = X1 A^-1
    int x1 = p.add_generator(primed(p.names[x]));
    Word vx = concat({{x1, 1}}, inverse(A));
    p.substitute_generator(x, X.e > 0 ? vx : inverse(vx), x1);
    notify(opt, p);
    // Y = Y1 A^-1 B^-1
    int y1 = p.add_generator(primed(p.names[y]));
    Word vy = concat(concat({{y1, 1}}, inverse(A)), inverse(B));
    p.substitute_generator(y, Y.e > 0 ? vy : inverse(vy), y1);
    notify(opt, p);
    // X1 = C B A X2
    int x2 = p.add_generator(primed(p.names[x1]));
    Word E = concat(concat(C, B), A);
    p.substitute_generator(x1, concat(E, {{x2, 1}}), x2);
    notify(opt, p);
    done.insert(x2);
    done.insert(y1);
  }
  // align the commutator blocks with the start of the word
  Word w = p.relators[r];
  for (std::size_t k = 0; k < w.size(); ++k) {
    Word rw = rotate(w, k);
    bool ok = rw.size() % 4 == 0;
    for (std::size_t i = 0; ok && i < rw.size(); i += 4)
      ok = rw[i + 2] == Letter{rw[i].g, -rw[i].e} && rw[i + 3] == Letter{rw[i + 1].g, -rw[i + 1].e};
    if (ok) {
      p.relators[r] = rw;
      break;
    }
  }
}

}  // namespace

Presentation simplify(Presentation p, const MorseComplex& mc, const Namer& namer, const SimplifyOptions& opt) {
  if (mc.top_dim() < 1) return p;
  int c1 = static_cast<int>(mc.critical[1].size());
  std::vector<OneCellTag> tag(c1, OneCellTag::Free);
  std::vector<std::set<int>> lead_rows(c1);
  {
    auto tags = classify_1cells_matrix(mc, namer);
    for (int j = 0; j < c1; ++j) tag[j] = tags.at(mc.critical[1][j]);
    if (mc.top_dim() >= 2)
      for (int i = 0; i < mc.boundary[2].rows; ++i)
        if (!mc.boundary[2].r[i].empty()) lead_rows[mc.boundary[2].r[i].begin()->first].insert(i);
  }
  // relator indices shift as relators are removed; track original indices
  std::vector<int> origin(p.relators.size());
  std::iota(origin.begin(), origin.end(), 0);
  auto eliminate = [&](int g, const std::set<int>& preferred_orig) {
    std::set<int> pref;
    for (std::size_t i = 0; i < origin.size(); ++i)
      if (preferred_orig.count(origin[i])) pref.insert(static_cast<int>(i));
    int r = pick_relator(p, g, pref);
    if (r < 0) return false;
    p.eliminate(g, r);
    origin.erase(origin.begin() + r);
    notify(opt, p);
    return true;
  };

  std::vector<int> pivotal, separating;
  for (int j = 0; j < c1; ++j) {
    if (!p.alive[j]) continue;
    if (tag[j] == OneCellTag::Pivotal) pivotal.push_back(j);
    if (tag[j] == OneCellTag::Separating) separating.push_back(j);
  }
  std::sort(pivotal.begin(), pivotal.end(), [&](int a, int b) {
    return pivotal_key(namer, mc.critical[1][a]) > pivotal_key(namer, mc.critical[1][b]);
  });
  for (int g : pivotal) eliminate(g, lead_rows[g]);
  // basis order is largest first, so ascending cells are descending indices
  std::sort(separating.rbegin(), separating.rend());
  for (int g : separating)
    if (p.alive[g]) eliminate(g, {});
  for (bool progress = true; progress;) {
    progress = false;
    for (int g : p.generators())
      if (eliminate(g, {})) {
        progress = true;
        break;
      }
  }
  std::size_t before = p.history.size();
  p.drop_trivial();
  if (p.history.size() != before) notify(opt, p);
  if (opt.surfaces)
    for (std::size_t r = 0; r < p.relators.size(); ++r)
      if (exclusive_quadratic(p, r) && !commutator_form(p.relators[r])) normalize_surface(p, r, opt);
  return p;
}

std::optional<std::pair<Word, Word>> commutator_form(const Word& w0) {
  Word w = cyclic_reduce(w0);
  std::size_t L = w.size();
  if (L < 4 || L % 2 || !zero_exponent_sums(w)) return std::nullopt;
  auto at = [&](std::size_t k, std::size_t i) { return w[(k + i) % L]; };
  auto inv_of = [](const Letter& x, const Letter& y) { return x.g == y.g && x.e == -y.e; };
  for (std::size_t k = 0; k < L; ++k)
    for (std::size_t a = 1; 2 * a < L; ++a) {
      std::size_t b = L / 2 - a;
      // r = u v u^-1 v^-1 with |u| = a, |v| = b
      bool ok = true;
      for (std::size_t i = 0; ok && i < a; ++i) ok = inv_of(at(k, a + b + i), at(k, a - 1 - i));
      for (std::size_t i = 0; ok && i < b; ++i) ok = inv_of(at(k, 2 * a + b + i), at(k, a + b - 1 - i));
      if (ok) {
        Word r = rotate(w, k);
        return std::make_pair(Word(r.begin(), r.begin() + a), Word(r.begin() + a, r.begin() + a + b));
      }
    }
  return std::nullopt;
}

std::optional<std::vector<std::pair<Letter, Letter>>> commutator_factors(const Word& w0) {
  Word w = free_reduce(w0);
  if (w.empty() || w.size() % 4) return std::nullopt;
  for (std::size_t k = 0; k < w.size(); ++k) {
    Word r = rotate(w, k);
    std::vector<std::pair<Letter, Letter>> out;
    bool ok = true;
    for (std::size_t i = 0; ok && i < r.size(); i += 4) {
      ok = r[i].g != r[i + 1].g && r[i + 2] == Letter{r[i].g, -r[i].e} &&
           r[i + 3] == Letter{r[i + 1].g, -r[i + 1].e};
      if (ok) out.push_back({r[i], r[i + 1]});
    }
    if (ok) return out;
  }
  return std::nullopt;
}

std::optional<int> surface_genus(const Word& w0) {
  Word w = cyclic_reduce(w0);
  std::size_t L = w.size();
  if (L == 0) return 0;
  std::map<int, std::vector<std::size_t>> pos;
  for (std::size_t i = 0; i < L; ++i) pos[w[i].g].push_back(i);
  for (auto& [g, p] : pos)
    if (p.size() != 2 || w[p[0]].e != -w[p[1]].e) return std::nullopt;
  // corner i sits before letter i; letter i runs from corner i to i+1 (reversed if inverted)
  std::vector<std::size_t> parent(L);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto start = [&](std::size_t i) { return w[i].e > 0 ? i : (i + 1) % L; };
  auto end = [&](std::size_t i) { return w[i].e > 0 ? (i + 1) % L : i; };
  for (auto& [g, p] : pos) {
    parent[find(start(p[0]))] = find(start(p[1]));
    parent[find(end(p[0]))] = find(end(p[1]));
  }
  long V = 0;
  for (std::size_t i = 0; i < L; ++i) V += find(i) == i;
  long chi = V - static_cast<long>(L / 2) + 1;
  return static_cast<int>((2 - chi) / 2);
}

}  // namespace braid
