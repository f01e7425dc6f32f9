#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "braid/tree.hpp"

namespace braid {

constexpr int kMaxN = 8;

enum class Flavor { Unordered, Ordered };

// n items; an item is a vertex (order number v) or an edge (V + edge index).
// Unordered cells keep items sorted by key (vertex number / tau of an edge);
// ordered cells keep tuple order.
struct Cell {
  std::array<int16_t, kMaxN> it{};
  uint8_t n = 0;

  int16_t operator[](int i) const { return it[i]; }
  int16_t& operator[](int i) { return it[i]; }
  friend bool operator==(const Cell& a, const Cell& b) {
    return a.n == b.n && std::equal(a.it.begin(), a.it.begin() + a.n, b.it.begin());
  }
  friend bool operator<(const Cell& a, const Cell& b) {
    if (a.n != b.n) return a.n < b.n;
    for (int i = 0; i < a.n; ++i)
      if (a.it[i] != b.it[i]) return a.it[i] < b.it[i];
    return false;
  }
};

struct CellHash {
  std::size_t operator()(const Cell& c) const noexcept {
    std::size_t h = c.n;
    for (int i = 0; i < c.n; ++i) h = h * 1000003u ^ static_cast<std::size_t>(c.it[i] + 7);
    return h;
  }
};

using Chain = std::map<Cell, long long>;
void add_to(Chain& ch, const Cell& c, long long coef);
void add_to(Chain& ch, const Chain& other, long long scale);

enum class CellKind { Critical, Redundant, Collapsible };

struct Classification {
  CellKind kind = CellKind::Critical;
  int witness = -1;  // smallest unblocked vertex, or chosen order-respecting edge item
};

// Permutation as images: perm[j] = tuple position of the j-th smallest item.
using Perm = std::array<int8_t, kMaxN>;

class CellSpace {
 public:
  CellSpace(const OrderedTree& t, int n, Flavor flavor);

  const OrderedTree& tree() const { return *t_; }
  int n() const { return n_; }
  Flavor flavor() const { return flavor_; }
  int V() const { return V_; }

  bool is_edge(int item) const { return item >= V_; }
  int edge_of(int item) const { return item - V_; }
  int edge_item(int e) const { return V_ + e; }
  int key(int item) const { return is_edge(item) ? t_->edges[item - V_].tau : item; }
  int tau(int item) const { return t_->edges[item - V_].tau; }
  int iota(int item) const { return t_->edges[item - V_].iota; }
  bool is_deleted(int item) const { return t_->edges[item - V_].deleted; }
  int dim(const Cell& c) const;

  Cell canonical(Cell c) const;  // sort by key
  Cell make(std::vector<int> items) const;  // canonical for unordered, as-is for ordered

  // Cubical boundary with the sign fixed by the tau-sorted edge index.
  Chain boundary(const Cell& c) const;
  Classification classify(const Cell& c) const;
  bool is_critical(const Cell& c) const { return classify(c).kind == CellKind::Critical; }
  // W(c) for a redundant cell, otherwise c with n == 0.
  Cell matching(const Cell& c) const;

  std::pair<Cell, Perm> phi(const Cell& ordered) const;
  Cell phi_inverse(const Cell& unordered, const Perm& p) const;

  // Enumeration of all cells by dimension (sorted). Throws when the count
  // exceeds cap.
  std::vector<std::vector<Cell>> enumerate(long long cap = 10'000'000, bool parallel = true) const;

  std::string item_text(int item) const;
  std::string text(const Cell& c) const;
  std::string text(const Chain& ch) const;
  Cell parse(const std::string& s) const;

 private:
  const OrderedTree* t_;
  int n_;
  Flavor flavor_;
  int V_;
};

inline Perm identity_perm() { return Perm{0, 1, 2, 3, 4, 5, 6, 7}; }
// (a * b)(j) = a(b(j))
Perm perm_compose(const Perm& a, const Perm& b, int n);
std::string perm_text(const Perm& p, int n);
bool perm_is_identity(const Perm& p, int n);

}  // namespace braid
