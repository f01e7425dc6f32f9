#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "braid/morse.hpp"

namespace braid {

// Dense integer matrix, row major.
struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<mpz_class> e;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), e(static_cast<std::size_t>(r) * c) {}
  static IntMatrix identity(int n);
  static IntMatrix from(const SparseMatrix& m);
  static IntMatrix from(const std::vector<std::vector<long long>>& d);

  mpz_class& at(int i, int j) { return e[static_cast<std::size_t>(i) * cols + j]; }
  const mpz_class& at(int i, int j) const { return e[static_cast<std::size_t>(i) * cols + j]; }
  IntMatrix operator*(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const { return rows == o.rows && cols == o.cols && e == o.e; }
  IntMatrix without_column(int j) const;
  std::string csv() const;
};

struct SmithResult {
  std::vector<mpz_class> factors;  // nonzero invariant factors d1 | d2 | ...
  std::optional<IntMatrix> U, V;   // U * M * V = diag(factors)
  std::size_t rank() const { return factors.size(); }
};

// Smallest-magnitude pivoting; transforms only when asked.
SmithResult smith_normal_form(const IntMatrix& m, bool transforms = false);

// Independent oracle: quotients of gcds of k x k minors. Exponential; small matrices only.
std::vector<mpz_class> smith_factors_by_minors(const IntMatrix& m);
mpz_class determinant(IntMatrix m);  // Bareiss

struct AbelianGroup {
  long rank = 0;
  std::vector<mpz_class> torsion;  // each >= 2, each divides the next

  // Z^rank plus the cyclic groups Z/x for the given orders (any order, 0 and 1 ignored).
  static AbelianGroup make(long rank, const std::vector<mpz_class>& orders);
  // Cokernel of a relation matrix with the given number of generators.
  static AbelianGroup cokernel(const IntMatrix& relations);

  bool torsion_free() const { return torsion.empty(); }
  std::string text() const;  // "Z^4 + Z_2"
  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
    return a.rank == b.rank && a.torsion == b.torsion;
  }
};

// H_0 .. H_top of a chain complex of critical cells.
std::vector<AbelianGroup> homology(const MorseComplex& mc);

// Three routes to H_1 of the ordered 2-point complex (pure braid group).
struct P2Routes {
  AbelianGroup direct;     // ker d1 / im d2
  AbelianGroup relative;   // coker d2 minus the extra free summand
  AbelianGroup column_deleted;  // coker d2 after deleting a joining 1-cell column
  int joining_column = -1;
  bool agree() const { return direct == relative && direct == column_deleted; }
};
P2Routes p2_homology_routes(const MorseComplex& mc);

enum class OneCellTag { Pivotal, Separating, Free };
std::string tag_text(OneCellTag t);

// Geometric characterizations (named cells; ordered cells use the underlying cell).
std::map<Cell, OneCellTag> classify_1cells(const MorseComplex& mc, const Namer& namer);
// From the matrix: pivotal = leading summands of 2-cell images, separating =
// nonzero columns of the difference rows.
std::map<Cell, OneCellTag> classify_1cells_matrix(const MorseComplex& mc, const Namer& namer);

struct UndeterminedBlock {
  IntMatrix m;
  std::vector<std::pair<Cell, Cell>> rows;  // row = image(first) - image(second)
  std::vector<Cell> cols;                   // separating 1-cells, basis order
  bool off_block_zero = true;  // row differences vanish outside the separating columns
};
UndeterminedBlock undetermined_block(const MorseComplex& mc, const Namer& namer);

}  // namespace braid
