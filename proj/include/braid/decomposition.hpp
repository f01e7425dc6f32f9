#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "braid/graph.hpp"
#include "braid/homology.hpp"

namespace braid {

// Cost of splitting at a cut vertex with mu x-components and valency nu.
long long n_cut(int n, int mu, int nu);
long long binomial(long long a, long long b);

struct CutVertex {
  int vertex = -1;  // graph vertex index
  int mu = 0;       // number of x-components
  int nu = 0;       // valency
};

enum class LeafKind { Circle, PlanarTriconnected, NonplanarTriconnected };
std::string leaf_text(LeafKind k);

struct Leaf {
  LeafKind kind = LeafKind::Circle;
  std::vector<int> vertices;  // essential vertices of the piece (graph indices)
  int edges = 0;              // topological edges, virtual ones included
};

struct TwoCut {
  int x = -1, y = -1;  // graph vertex indices, x < y
  int mu = 0;          // number of {x,y}-components
};

struct Block {
  std::vector<int> vertices;  // graph indices
  std::vector<int> edges;     // graph edge indices
  bool segment = false;       // topological line segment
  bool circle = false;
  std::vector<TwoCut> cuts;   // splits with at least two components
  std::vector<Leaf> leaves;
};

struct DecompositionTree {
  std::vector<CutVertex> cut_vertices;
  std::vector<Block> blocks;
};

struct InvariantBundle {
  int n = 2;
  long long beta1 = 0, N1 = 0, N2 = 0, N3 = 0, N3prime = 0;
};

// Blocks by edge sets; cut vertices with their component counts.
DecompositionTree biconnected_decomposition(const Graph& g);

// Iterative 2-cut splitting of one block, on the smoothed multigraph.
// Only pairs of essential vertices are tried; a pair splits when it has at
// least three components, or two components each with two or more edges.
void marked_decomposition(const Graph& g, Block& block);

DecompositionTree decompose(const Graph& g);
InvariantBundle invariant_bundle(const Graph& g, int n);
InvariantBundle invariant_bundle(const Graph& g, int n, const DecompositionTree& t);

enum class FormulaFlavor { B, P2 };

struct FormulaResult {
  AbelianGroup group;
  std::string notice;  // set for n = 1
};
FormulaResult h1_formula(const Graph& g, int n, FormulaFlavor flavor);

// Sum over vertices of (nu-1)(nu-2), valencies in the smoothed graph.
long long valency_sum(const Graph& g);

// B: rank-consistent Euler characteristic version (no "+2"). P2 as stated.
long long beta2_formula(const Graph& g, FormulaFlavor flavor);
long long beta2_formula_printed_b2(const Graph& g);  // with the printed "+2"

struct CharacterizationReport {
  bool planar = false;
  long long beta1 = 0;
  long long beta1_p2 = 0;
  bool plus_one = false;  // beta1(P2) = 2 beta1 + 1
  bool doubled = false;   // beta1(P2) = 2 beta1
  std::optional<std::array<long long, 3>> planar_case;  // (N1, N2, N3) when planar and plus_one
  std::string description;
  bool topologically_simple = false;
  bool topologically_triconnected = false;
};
CharacterizationReport classify_beta1_characterizations(const Graph& g);

}  // namespace braid
