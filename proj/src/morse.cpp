#include "braid/morse.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef BRAID_HAVE_OPENMP
#include <omp.h>
#endif

namespace braid {

long long SparseMatrix::at(int i, int j) const {
  auto it = r[i].find(j);
  return it == r[i].end() ? 0 : it->second;
}

std::vector<std::vector<long long>> SparseMatrix::dense() const {
  std::vector<std::vector<long long>> d(rows, std::vector<long long>(cols, 0));
  for (int i = 0; i < rows; ++i)
    for (auto [j, v] : r[i]) d[i][j] = v;
  return d;
}

std::optional<Cell> MorseEngine::shortcut_target(const Cell& c, const Classification& cl) const {
  if (cl.kind != CellKind::Redundant) return std::nullopt;
  const OrderedTree& t = cs_->tree();
  if (cs_->flavor() == Flavor::Ordered && cs_->n() != 2) return std::nullopt;
  int v = cl.witness, p = t.parent[v];
  for (int i = 0; i < c.n; ++i) {
    int x = c[i];
    if (cs_->is_edge(x)) {
      int a = cs_->tau(x), b = cs_->iota(x);
      if ((p < a && a < v) || (p < b && b < v)) return std::nullopt;
    } else if (p < x && x < v) {
      return std::nullopt;
    }
  }
  Cell w = c;
  for (int i = 0; i < c.n; ++i)
    if (c[i] == v) w[i] = static_cast<int16_t>(p);
  return cs_->flavor() == Flavor::Unordered ? cs_->canonical(w) : w;
}

Chain MorseEngine::reduce(const Cell& c) {
  if (auto it = memo_.find(c); it != memo_.end()) return it->second;
  Classification cl = cs_->classify(c);
  Chain out;
  if (cl.kind == CellKind::Critical) {
    out[c] = 1;
    return out;
  }
  if (cl.kind == CellKind::Collapsible) return out;
  if (!active_.insert(c).second) throw std::logic_error("reduction revisits " + cs_->text(c));
  std::optional<Cell> sc = shortcut_ ? shortcut_target(c, cl) : std::nullopt;
  if (sc) {
    ++hits_;
    out = reduce(*sc);
  } else {
    Cell w = cs_->matching(c);
    Chain bd = cs_->boundary(w);
    long long kc = bd.at(c);
    for (const auto& [f, k] : bd) {
      if (f == c) continue;
      add_to(out, reduce(f), -kc * k);
    }
  }
  active_.erase(c);
  memo_.emplace(c, out);
  return out;
}

Chain MorseEngine::reduce(const Chain& ch) {
  Chain out;
  for (const auto& [c, k] : ch) add_to(out, reduce(c), k);
  return out;
}

Chain MorseEngine::reduce_step(const Cell& c) const {
  Classification cl = cs_->classify(c);
  Chain out;
  if (cl.kind == CellKind::Critical) {
    out[c] = 1;
  } else if (cl.kind == CellKind::Redundant) {
    Chain bd = cs_->boundary(cs_->matching(c));
    long long kc = bd.at(c);
    for (const auto& [f, k] : bd)
      if (!(f == c)) add_to(out, f, -kc * k);
  }
  return out;
}

Chain MorseEngine::reduce_naive(const Chain& ch, int max_iter) const {
  Chain cur = ch;
  for (int it = 0; it < max_iter; ++it) {
    Chain nxt;
    for (const auto& [c, k] : cur) add_to(nxt, reduce_step(c), k);
    if (nxt == cur) return cur;
    cur = std::move(nxt);
  }
  throw std::logic_error("naive reduction did not stabilize");
}

Method parse_method(const std::string& s) {
  if (s == "generic") return Method::Generic;
  if (s == "fast") return Method::Fast;
  if (s == "both") return Method::Both;
  throw std::invalid_argument("unknown method " + s);
}

int MorseComplex::index_of(int dim, const Cell& c) const {
  const auto& v = critical[dim];
  auto it = std::find(v.begin(), v.end(), c);
  return it == v.end() ? -1 : static_cast<int>(it - v.begin());
}

std::vector<long long> MorseComplex::counts() const {
  std::vector<long long> out;
  for (const auto& v : critical) out.push_back(static_cast<long long>(v.size()));
  return out;
}

long long MorseComplex::euler_critical() const {
  long long x = 0;
  for (std::size_t d = 0; d < critical.size(); ++d) x += (d % 2 ? -1 : 1) * static_cast<long long>(critical[d].size());
  return x;
}

long long MorseComplex::euler_full() const {
  long long x = 0;
  for (std::size_t d = 0; d < all_cells.size(); ++d) x += (d % 2 ? -1 : 1) * all_cells[d];
  return x;
}

Chain MorseComplex::row_chain(int dim, int i) const {
  Chain out;
  for (auto [j, v] : boundary[dim].r[i]) out[critical[dim - 1][j]] = v;
  return out;
}

void sort_basis(const Namer& namer, std::vector<Cell>& cells) {
  std::vector<std::pair<std::vector<long>, Cell>> keyed;
  keyed.reserve(cells.size());
  for (const Cell& c : cells) keyed.push_back({namer.order_key(c), c});
  // named cells first, by decreasing key; unnamed ones after, by cell
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
    bool nx = !x.first.empty(), ny = !y.first.empty();
    if (nx != ny) return nx;
    if (x.first != y.first) return x.first > y.first;
    return x.second < y.second;
  });
  for (std::size_t i = 0; i < cells.size(); ++i) cells[i] = keyed[i].second;
}

namespace {

int max_threads() {
#ifdef BRAID_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

int thread_id() {
#ifdef BRAID_HAVE_OPENMP
  return omp_get_thread_num();
#else
  return 0;
#endif
}

}  // namespace

MorseComplex build_morse_complex(const CellSpace& cs, const Namer& namer, const BuildOptions& opt) {
  if (opt.method != Method::Generic && cs.flavor() == Flavor::Ordered && cs.n() >= 3)
    throw std::invalid_argument("closed formulas for ordered cells exist only for n = 2");
  MorseComplex mc;
  mc.flavor = cs.flavor();
  mc.n = cs.n();
  auto all = cs.enumerate(opt.cap, opt.parallel);
  int top = 0;
  for (int d = 0; d < static_cast<int>(all.size()); ++d)
    if (!all[d].empty()) top = d;
  mc.critical.assign(top + 1, {});
  mc.all_cells.assign(top + 1, 0);
  for (int d = 0; d <= top; ++d) {
    mc.all_cells[d] = static_cast<long long>(all[d].size());
    std::vector<char> crit(all[d].size(), 0);
    const auto& cells = all[d];
    long long m = static_cast<long long>(cells.size());
#ifdef BRAID_HAVE_OPENMP
#pragma omp parallel for schedule(static) if (opt.parallel)
#endif
    for (long long i = 0; i < m; ++i) crit[i] = cs.is_critical(cells[i]);
    for (long long i = 0; i < m; ++i)
      if (crit[i]) mc.critical[d].push_back(cells[i]);
    sort_basis(namer, mc.critical[d]);
  }
  mc.provenance = opt.method == Method::Generic ? "generic" : opt.method == Method::Fast ? "fast" : "both";
  mc.boundary.assign(top + 1, {});
  int threads = opt.parallel ? max_threads() : 1;
  for (int d = 1; d <= top; ++d) {
    const auto& rows = mc.critical[d];
    const auto& cols = mc.critical[d - 1];
    std::unordered_map<Cell, int, CellHash> col_index;
    for (std::size_t j = 0; j < cols.size(); ++j) col_index[cols[j]] = static_cast<int>(j);
    SparseMatrix& M = mc.boundary[d];
    M.rows = static_cast<int>(rows.size());
    M.cols = static_cast<int>(cols.size());
    M.r.assign(rows.size(), {});
    std::vector<MorseEngine> engines;
    for (int i = 0; i < threads; ++i) engines.emplace_back(cs, opt.shortcut);
    std::vector<Chain> images(rows.size());
    std::vector<int> kind(rows.size(), 0);  // 0 generic, 1 fast, 2 mismatch
    bool use_fast = opt.method != Method::Generic && d == 2 && opt.fast_conditions_ok;
    long long m = static_cast<long long>(rows.size());
#ifdef BRAID_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads) if (opt.parallel)
#endif
    for (long long i = 0; i < m; ++i) {
      MorseEngine& eng = engines[thread_id()];
      std::optional<Chain> fast;
      if (use_fast) fast = fast_morse_boundary(eng, namer, rows[i]);
      if (fast && opt.method == Method::Fast) {
        images[i] = *fast;
        kind[i] = 1;
        continue;
      }
      images[i] = eng.morse_boundary(rows[i]);
      if (fast) kind[i] = (*fast == images[i]) ? 1 : 2;
    }
    for (long long i = 0; i < m; ++i) {
      if (use_fast) {
        if (kind[i] == 0) ++mc.fast.fallback;
        else ++mc.fast.applied;
        if (kind[i] == 2) mc.fast.mismatches.push_back(namer.text(rows[i]));
      }
      for (const auto& [c, k] : images[i]) {
        auto it = col_index.find(c);
        if (it == col_index.end()) throw std::logic_error("boundary leaves the critical basis");
        M.r[i][it->second] = k;
      }
    }
  }
  return mc;
}

}  // namespace braid
