#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "braid/cells.hpp"

namespace braid {

// One edge of a critical cell together with the vertices it blocks.
// Tree edge: A_k(a) with A = tau, k = branch of iota at A, a indexed by the
// branches 1..mu(A) of A (vertices behind iota count in a_k).
// Deleted edge: d(a) with a indexed by the branches of tau(d); empty when
// tau(d) = 0, in which case the stacked vertices belong to the pile.
struct NamedPiece {
  int edge = -1;  // graph edge index
  bool deleted = false;
  int vertex = -1;  // tau(edge)
  int branch = 0;   // k for tree edges, g(tau, iota) for deleted ones
  std::vector<int> a;

  int size() const;  // |a|
  friend bool operator==(const NamedPiece&, const NamedPiece&) = default;
};

struct CriticalName {
  std::vector<NamedPiece> pieces;  // by decreasing tau
  int pile = 0;                    // s in 0_s
  bool ordered = false;
  Perm perm{};  // ordered flavor: subscript

  int dim() const { return static_cast<int>(pieces.size()); }
  friend bool operator==(const CriticalName& x, const CriticalName& y) {
    return x.pieces == y.pieces && x.pile == y.pile && x.ordered == y.ordered &&
           (!x.ordered || x.perm == y.perm);
  }
};

// Display labels for vertices in names ("A" for 6 on the pinned K5 tree);
// unlabeled vertices print as their order number.
using VertexLabels = std::map<int, std::string>;

class Namer {
 public:
  explicit Namer(const CellSpace& cs, VertexLabels labels = {}) : cs_(&cs), labels_(std::move(labels)) {}

  // nullopt when the cell does not have the stacked shape of a critical cell.
  std::optional<CriticalName> name(const Cell& c) const;
  // Inverse of name; nullopt if the result is not a critical cell of that name.
  std::optional<Cell> cell(const CriticalName& nm) const;
  // Same shape without requiring the result to be critical.
  std::optional<Cell> build(const CriticalName& nm) const;
  // 1-cell of one piece, pile filled up from n.
  std::optional<Cell> one_cell(const NamedPiece& p, const Perm& perm = identity_perm(),
                               bool check = true) const;

  NamedPiece tree_piece(int A, int k, std::vector<int> a) const;
  NamedPiece deleted_piece(int d_label, std::vector<int> a) const;

  std::string text(const CriticalName& nm) const;
  std::string text(const Cell& c) const;  // name if available, else raw cell
  std::string text(const Chain& ch) const;
  std::string piece_text(const NamedPiece& p) const;
  std::string vertex_label(int v) const;

  // Ordering key of the presentation-matrix bases (ascending = smaller cell).
  std::vector<long> order_key(const Cell& c) const;

  const CellSpace& space() const { return *cs_; }
  const VertexLabels& labels() const { return labels_; }

 private:
  const CellSpace* cs_;
  VertexLabels labels_;
};

// Rank of an edge in the cell order: deleted above tree, then (tau, iota).
long edge_rank(const OrderedTree& t, int e);

}  // namespace braid
