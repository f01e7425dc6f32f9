#include "doctest.h"

#include <set>

#include "braid/pipeline.hpp"
#include "braid/presentation.hpp"

using namespace braid;

namespace {

Word w(std::initializer_list<int> xs) {
  Word out;
  for (int x : xs) out.push_back({x > 0 ? x : -x, x > 0 ? 1 : -1});
  return out;
}

std::unique_ptr<Pipeline> theta4_n3(Flavor f = Flavor::Unordered) {
  PipelineOptions o;
  o.n = 3;
  o.flavor = f;
  return run_pipeline("Theta4", o);
}

}  // namespace

TEST_CASE("word operations") {
  CHECK(free_reduce(w({1, 2, -2, -1, 3})) == w({3}));
  CHECK(inverse(w({1, -2})) == w({2, -1}));
  CHECK(cyclic_reduce(w({-3, 1, 2, 3})) == w({1, 2}));
  CHECK(rotate(w({1, 2, 3}), 1) == w({2, 3, 1}));
  CHECK(substitute(w({1, -2, 1}), 1, w({3, 4})) == w({3, 4, -2, 3, 4}));
  CHECK(substitute(w({-1}), 1, w({3, 4})) == w({-4, -3}));
  CHECK(occurrences(w({1, -1, 2, 1}), 1) == 3);
  CHECK(exponent_sum(w({1, -1, 2, 1}), 1) == 1);
  CHECK(zero_exponent_sums(w({1, 2, -1, -2})));
  CHECK(!zero_exponent_sums(w({1, 2, -1})));
}

TEST_CASE("commutator recognition") {
  CHECK(commutator_form(w({1, 2, -1, -2})).has_value());
  CHECK(commutator_form(w({2, -1, -2, 1})).has_value());               // rotated
  CHECK(commutator_form(w({1, 3, 2, -3, -1, -2})).has_value());        // [a, c b c^-1]
  CHECK(!commutator_form(w({1, 2, 3, -1, -2, -3})).has_value());
  CHECK(!commutator_form(w({1, 2, -1, -2, 3, 4, -3, -4})).has_value());  // genus 2
  auto f = commutator_factors(w({1, 2, -1, -2, 3, 4, -3, -4}));
  REQUIRE(f.has_value());
  CHECK(f->size() == 2);
  CHECK(!commutator_factors(w({1, 2, 3, -1, -2, -3})).has_value());
  CHECK(surface_genus(w({1, 2, -1, -2})) == 1);
  CHECK(surface_genus(w({1, 2, -1, -2, 3, 4, -3, -4})) == 2);
  CHECK(surface_genus(w({1, 2, 3, -1, -2, -3})) == 1);
  CHECK(!surface_genus(w({1, 1, 2})).has_value());
}

TEST_CASE("boundary word and its abelianization") {
  auto p = theta4_n3();
  const CellSpace& cs = *p->cells;
  Cell c2 = *p->namer->cell(CriticalName{{p->namer->tree_piece(2, 2, {1, 0, 0}), p->namer->deleted_piece(1, {})}});
  CellWord bw = boundary_word(cs, c2);
  std::string s;
  for (auto [c, e] : bw) s += (s.empty() ? "" : " ") + cs.text(c) + (e < 0 ? "^-1" : "");
  CHECK(s == "{2-4,3,5} {0-5,2,3} {2-4,0,3}^-1 {0-5,3,4}^-1");

  PipelineOptions o;
  auto k = prepare("K33", o);
  auto cells = k->cells->enumerate();
  for (const auto& c : cells[2]) {
    Chain neg;
    add_to(neg, k->cells->boundary(c), -1);
    CHECK(abelianize(boundary_word(*k->cells, c)) == neg);
  }
}

TEST_CASE("rewriting onto critical 1-cells") {
  auto p = theta4_n3();
  Rewriter rw(*p->cells, p->complex);
  Presentation raw = raw_presentation(p->complex, *p->cells, *p->namer);
  Cell c2 = *p->namer->cell(CriticalName{{p->namer->tree_piece(2, 2, {1, 0, 0}), p->namer->deleted_piece(1, {})}});
  CHECK(raw.word_text(rw.rewrite(boundary_word(*p->cells, c2))) == "A_2(1,0,1) d_1 A_2(1,0,0)^-1 d_1^-1");

  MorseEngine eng(*p->cells);
  auto cells = p->cells->enumerate();
  for (const Cell& c : cells[1]) {
    Word r = rw.rewrite(c);
    CHECK(abelianize(rw.to_cells(r)) == eng.reduce(c));
    auto cl = p->cells->classify(c);
    if (cl.kind == CellKind::Collapsible) CHECK(r.empty());
    if (cl.kind == CellKind::Critical) CHECK(r == Word{{rw.generator_of(c), 1}});
  }
}

TEST_CASE("raw presentations") {
  auto p = theta4_n3();
  Presentation raw = raw_presentation(p->complex, *p->cells, *p->namer);
  CHECK(raw.generator_count() == 8);
  REQUIRE(raw.relators.size() == 3);
  std::set<std::string> rel;
  for (const Word& r : raw.relators) rel.insert(raw.word_text(r));
  CHECK(rel == std::set<std::string>{
                   "A_2(1,0,1) d_1 A_2(1,0,0)^-1 d_1^-1",
                   "A_3(1,1,0) d_2 A_3(1,0,0)^-1 d_2^-1 A_3(0,1,0)^-1",
                   "A_3(1,1,0) A_2(1,0,0) d_3 A_3(0,1,0)^-1 d_3^-1 A_3(1,0,0)^-1 A_2(1,0,1)^-1"});
  CHECK(raw.abelianization() == homology(p->complex)[1]);

  PipelineOptions o;
  auto k = run_pipeline("K33", o);
  Presentation kr = raw_presentation(k->complex, *k->cells, *k->namer);
  CHECK(kr.generator_count() == 7);
  CHECK(kr.relators.size() == 3);
}

TEST_CASE("simplification of the three-point theta presentation") {
  auto p = theta4_n3();
  Presentation raw = raw_presentation(p->complex, *p->cells, *p->namer);
  AbelianGroup h1 = homology(p->complex)[1];
  int steps = 0;
  SimplifyOptions opt;
  opt.after_move = [&](const Presentation& q) {
    ++steps;
    CHECK(q.abelianization() == h1);
  };
  Presentation s = simplify(raw, p->complex, *p->namer, opt);
  CHECK(steps == static_cast<int>(s.history.size()));
  CHECK(s.generator_count() == 6);
  REQUIRE(s.relators.size() == 1);
  CHECK(zero_exponent_sums(s.relators[0]));
  CHECK(!commutator_form(s.relators[0]).has_value());
  auto f = commutator_factors(s.relators[0]);
  REQUIRE(f.has_value());
  CHECK(f->size() == 3);
  CHECK(surface_genus(s.relators[0]) == 3);

  std::vector<std::string> gone;
  for (const auto& m : s.history) {
    if (m.kind == TietzeMove::Kind::Eliminate) gone.push_back(s.names[m.generator]);
    if (m.kind == TietzeMove::Kind::Substitute) CHECK(occurrences(m.image, m.added) == 1);
  }
  CHECK(gone == std::vector<std::string>{"A_3(1,1,0)", "A_2(1,0,1)"});
}

TEST_CASE("each elimination removes one generator and one relator") {
  PipelineOptions o;
  o.n = 2;
  o.flavor = Flavor::Ordered;
  auto p = run_pipeline("K5", o);
  Presentation raw = raw_presentation(p->complex, *p->cells, *p->namer);
  int gens = raw.generator_count();
  auto rels = raw.relators.size();
  SimplifyOptions opt;
  opt.surfaces = false;
  opt.after_move = [&](const Presentation& q) {
    const auto& m = q.history.back();
    if (m.kind == TietzeMove::Kind::Eliminate) {
      CHECK(q.generator_count() == gens - 1);
      CHECK(q.relators.size() == rels - 1);
    }
    gens = q.generator_count();
    rels = q.relators.size();
  };
  Presentation s = simplify(raw, p->complex, *p->namer, opt);
  CHECK(s.generator_count() == 12);
  CHECK(s.relators.size() == 1);
  CHECK(s.abelianization() == AbelianGroup::make(12, {}));
}

TEST_CASE("surface normalization is a sequence of Nielsen moves") {
  auto p = theta4_n3(Flavor::Ordered);
  Presentation raw = raw_presentation(p->complex, *p->cells, *p->namer);
  AbelianGroup h1 = homology(p->complex)[1];
  SimplifyOptions opt;
  opt.after_move = [&](const Presentation& q) { CHECK(q.abelianization() == h1); };
  Presentation s = simplify(raw, p->complex, *p->namer, opt);
  CHECK(h1 == AbelianGroup::make(26, {}));
  CHECK(s.generator_count() == 26);
  REQUIRE(s.relators.size() == 1);
  CHECK(surface_genus(s.relators[0]) == 13);
  auto f = commutator_factors(s.relators[0]);
  REQUIRE(f.has_value());
  CHECK(f->size() == 13);
}
