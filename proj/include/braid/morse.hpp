#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "braid/cells.hpp"
#include "braid/naming.hpp"

namespace braid {

// Sparse integer matrix; rows are the higher-dimensional cells.
struct SparseMatrix {
  int rows = 0, cols = 0;
  std::vector<std::map<int, long long>> r;

  long long at(int i, int j) const;
  std::vector<std::vector<long long>> dense() const;
};

// Stabilized reduction onto critical cells, memoized per engine.
// Not thread safe: use one engine per thread.
class MorseEngine {
 public:
  explicit MorseEngine(const CellSpace& cs, bool shortcut = true) : cs_(&cs), shortcut_(shortcut) {}

  Chain reduce(const Cell& c);
  Chain reduce(const Chain& ch);
  Chain morse_boundary(const Cell& c) { return reduce(cs_->boundary(c)); }

  // One application of R: c + (unit) * boundary(W(c)).
  Chain reduce_step(const Cell& c) const;
  // Iterates R on a chain until it is stable; no memo, no shortcut.
  Chain reduce_naive(const Chain& ch, int max_iter = 100000) const;

  // Shortcut target V_e(c) if the hypotheses of the special reduction hold.
  std::optional<Cell> shortcut_target(const Cell& c, const Classification& cl) const;

  std::size_t memo_size() const { return memo_.size(); }
  long long shortcut_hits() const { return hits_; }

 private:
  const CellSpace* cs_;
  bool shortcut_;
  std::unordered_map<Cell, Chain, CellHash> memo_;
  std::unordered_set<Cell, CellHash> active_;
  long long hits_ = 0;
};

enum class Method { Generic, Fast, Both };
Method parse_method(const std::string& s);

struct FastStats {
  long long applied = 0;      // 2-cells evaluated by the closed formulas
  long long fallback = 0;     // not covered, generic route used
  std::vector<std::string> mismatches;  // Both: formula != generic
};

struct MorseComplex {
  Flavor flavor = Flavor::Unordered;
  int n = 0;
  std::vector<std::vector<Cell>> critical;  // by dimension, basis order (largest first)
  std::vector<SparseMatrix> boundary;       // boundary[d]: C_d -> C_{d-1}, d >= 1
  std::vector<long long> all_cells;         // cell counts of the full complex
  std::string provenance;
  FastStats fast;

  int top_dim() const { return static_cast<int>(critical.size()) - 1; }
  int index_of(int dim, const Cell& c) const;
  std::vector<long long> counts() const;
  long long euler_critical() const;
  long long euler_full() const;
  Chain row_chain(int dim, int i) const;  // boundary of basis cell i as a chain
};

struct BuildOptions {
  Method method = Method::Generic;
  bool parallel = true;
  bool shortcut = true;
  long long cap = 10'000'000;
  bool fast_conditions_ok = true;  // caller verified T1-T3 and strict subdivision
};

// Closed-form Morse boundary of a named critical 2-cell; nullopt when the
// shape is not covered by the formulas.
std::optional<Chain> fast_morse_boundary(MorseEngine& eng, const Namer& namer, const Cell& c2);

// Formula pieces exposed for tests.
Chain bold_A(MorseEngine& eng, const Namer& namer, int A, const std::vector<int>& a, int ell);
std::optional<Cell> wedge_cell(const Namer& namer, int d, int dp);  // graph edge indices

MorseComplex build_morse_complex(const CellSpace& cs, const Namer& namer, const BuildOptions& opt);

// Sorts critical cells into basis order (reverse of the cell order).
void sort_basis(const Namer& namer, std::vector<Cell>& cells);

}  // namespace braid
