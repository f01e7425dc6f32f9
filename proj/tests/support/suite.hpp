#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "braid/homology.hpp"
#include "braid/morse.hpp"

namespace braid::testing {

// Matrix product of consecutive Morse boundaries is zero in every degree.
bool boundary_squares_to_zero(const MorseComplex& mc);

// Only Z_2 summands in the torsion part.
bool torsion_only_two(const AbelianGroup& g);

// Free 1-cells of B_3 on FigB3n3 as named on the automatic tree, with the
// essential vertex of valency 7 printed as A.
std::set<std::string> figb3n3_free_names();
// The listed census of 28 free 1-cells.
std::set<std::string> figb3n3_listed_names();
// Equal after some renumbering of d_1..d_k.
bool equal_up_to_deleted_labels(const std::set<std::string>& got, const std::set<std::string>& want, int k);

struct PropertyReport {
  int graphs = 0;
  long long checks = 0;
  double seconds = 0;
  std::vector<std::string> failures;
  // not asserted: relators of planar n = 2 presentations that are literal commutators
  long long planar_relators = 0, planar_commutator_relators = 0;
  bool ok() const { return failures.empty(); }
};

// Formula against Morse route, torsion, planarity, subdivision invariance,
// biconnected n-independence, boundary squares, fast against generic, Euler
// characteristic, beta_2 and presentation counts on a random corpus.
PropertyReport corpus_properties(std::uint64_t seed, int count);

}  // namespace braid::testing
