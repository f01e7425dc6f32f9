#pragma once

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "braid/homology.hpp"
#include "braid/morse.hpp"

namespace braid {

struct Letter {
  int g = 0;  // generator id
  int e = 1;  // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
};
using Word = std::vector<Letter>;

Word free_reduce(const Word& w);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
// Conjugate-free core: free reduction followed by cancelling the two ends.
Word cyclic_reduce(const Word& w);
Word rotate(const Word& w, std::size_t k);
// Replaces every letter of generator g by image (inverted for g^-1).
Word substitute(const Word& w, int g, const Word& image);
int occurrences(const Word& w, int g);
long long exponent_sum(const Word& w, int g);
bool zero_exponent_sums(const Word& w);

// Words over arbitrary 1-cells, read as paths composed right to left.
using CellWord = std::vector<std::pair<Cell, int>>;
Chain abelianize(const CellWord& w);

// Square word of a 2-cell: e_hi at iota(e_lo), e_lo at tau(e_hi), then the
// inverses of e_hi at tau(e_lo) and e_lo at iota(e_hi) (lo = smaller tau).
CellWord boundary_word(const CellSpace& cs, const Cell& c2);

// r and its stabilization onto critical 1-cells.
class Rewriter {
 public:
  Rewriter(const CellSpace& cs, const MorseComplex& mc, long long step_cap = 5'000'000);

  // One application of r; empty for collapsible cells, {c} for critical ones.
  CellWord step(const Cell& c) const;
  Word rewrite(const Cell& c);
  Word rewrite(const CellWord& w);
  // Same letters as cells of the complex.
  CellWord to_cells(const Word& w) const;
  int generator_of(const Cell& c) const;  // index in the critical 1-cell basis, -1 if none

 private:
  const CellSpace* cs_;
  const MorseComplex* mc_;
  std::unordered_map<Cell, int, CellHash> gen_;
  std::unordered_map<Cell, Word, CellHash> memo_;
  std::unordered_set<Cell, CellHash> active_;
  long long steps_ = 0, cap_;
};

struct TietzeMove {
  enum class Kind { Kill, Eliminate, Substitute, DropTrivial };
  Kind kind = Kind::Eliminate;
  int generator = -1;  // removed generator (Substitute: the replaced one)
  int added = -1;      // Substitute: the new generator
  Word image;          // value of the removed generator in the remaining ones
  std::string text;
};

struct Presentation {
  std::vector<std::string> names;  // by generator id
  std::vector<Cell> cells;         // critical 1-cell of each original generator
  std::vector<char> alive;
  std::vector<Word> relators;
  std::vector<TietzeMove> history;

  int generator_count() const;
  std::vector<int> generators() const;  // live ids, ascending
  // Relation matrix of exponent sums over the live generators.
  IntMatrix abelian_matrix() const;
  AbelianGroup abelianization() const { return AbelianGroup::cokernel(abelian_matrix()); }

  std::string letter_text(const Letter& l) const;
  std::string word_text(const Word& w) const;
  // Bracket notation when the word is a literal product of commutators.
  std::string relator_text(const Word& w) const;

  int add_generator(const std::string& name);
  void kill(int g);
  // Solves relator r (g occurs exactly once) for g and substitutes everywhere.
  void eliminate(int g, int r);
  // Nielsen move: g is replaced by `value`, a word in the other generators
  // containing the freshly added generator `added` exactly once.
  void substitute_generator(int g, const Word& value, int added);
  void drop_trivial();
};

Presentation raw_presentation(const MorseComplex& mc, const CellSpace& cs, const Namer& namer,
                              Rewriter* rewriter = nullptr);

// Sort key of pivotal 1-cells: (s, tau, tree/deleted, iota, a, perm).
std::vector<long> pivotal_key(const Namer& namer, const Cell& c);

struct SimplifyOptions {
  bool surfaces = true;  // normal form for quadratic orientable relators
  std::function<void(const Presentation&)> after_move;
};

Presentation simplify(Presentation p, const MorseComplex& mc, const Namer& namer,
                      const SimplifyOptions& opt = {});

// u v u^-1 v^-1 up to cyclic rotation; exhaustive split search.
std::optional<std::pair<Word, Word>> commutator_form(const Word& w);
// Literal product of commutators of single letters after some rotation, fewest factors.
std::optional<std::vector<std::pair<Letter, Letter>>> commutator_factors(const Word& w);
// Genus of an orientable quadratic word (each generator once with each sign).
std::optional<int> surface_genus(const Word& w);

}  // namespace braid
