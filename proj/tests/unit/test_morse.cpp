#include "doctest.h"

#include "braid/morse.hpp"
#include "braid/pipeline.hpp"
#include "suite.hpp"

using namespace braid;

TEST_CASE("reduction examples on the K3,3 tree") {
  PipelineOptions o;
  auto p = prepare("K33", o);
  MorseEngine eng(*p->cells);
  CHECK(p->cells->text(eng.reduce(p->cells->parse("{0-3,5}"))) == "{2-4,3} + {0-3,1}");
  Cell crit = p->cells->parse("{1-5,2}");
  CHECK(eng.reduce(crit) == Chain{{crit, 1}});

  o.flavor = Flavor::Ordered;
  auto q = prepare("K33", o);
  MorseEngine oe(*q->cells);
  // {1,3} with the transposition is the tuple (3,1)
  CHECK(q->cells->text(oe.reduce(q->cells->parse("(3,1)"))) == "(1,0)");
  CHECK(q->cells->text(oe.reduce(q->cells->parse("(1,3)"))) == "(0,1)");
}

TEST_CASE("memoized, shortcut and naive reduction agree") {
  for (auto [name, n, f] : std::vector<std::tuple<std::string, int, Flavor>>{
           {"K33", 2, Flavor::Unordered}, {"K33", 2, Flavor::Ordered}, {"Theta4", 3, Flavor::Unordered},
           {"K4", 3, Flavor::Unordered}, {"FigB3n3", 2, Flavor::Ordered}}) {
    PipelineOptions o;
    o.n = n;
    o.flavor = f;
    auto p = prepare(name, o);
    MorseEngine fast(*p->cells, true), plain(*p->cells, false);
    auto all = p->cells->enumerate();
    long long hits_before = fast.shortcut_hits();
    for (int d = 1; d <= 2 && d < static_cast<int>(all.size()); ++d)
      for (const Cell& c : all[d]) {
        Chain a = fast.reduce(c), b = plain.reduce(c);
        CHECK(a == b);
        CHECK(a == plain.reduce_naive(Chain{{c, 1}}));
      }
    CHECK(fast.shortcut_hits() >= hits_before);
  }
}

TEST_CASE("Morse boundary squares to zero and Euler characteristics agree") {
  for (auto [name, n] : std::vector<std::pair<std::string, int>>{{"K5", 4}, {"FigB3n3", 3}, {"K4", 3}, {"Theta4", 3}}) {
    PipelineOptions o;
    o.n = n;
    auto p = run_pipeline(name, o);
    CHECK(testing::boundary_squares_to_zero(p->complex));
    CHECK(p->complex.euler_critical() == p->complex.euler_full());
  }
}

TEST_CASE("closed formulas agree with generic reduction") {
  for (auto [name, n, f] : std::vector<std::tuple<std::string, int, Flavor>>{
           {"K5", 4, Flavor::Unordered}, {"K5", 2, Flavor::Unordered}, {"K5", 2, Flavor::Ordered},
           {"Theta4", 3, Flavor::Unordered}, {"FigB3n3", 3, Flavor::Unordered}, {"FigCounterEx", 2, Flavor::Ordered}}) {
    PipelineOptions o;
    o.n = n;
    o.flavor = f;
    o.method = Method::Both;
    auto p = run_pipeline(name, o);
    CHECK_MESSAGE(p->complex.fast.mismatches.empty(), name, " n=", n);
    if (p->fast_ok && p->complex.top_dim() >= 2 && !p->complex.critical[2].empty())
      CHECK(p->complex.fast.applied > 0);
  }
}

TEST_CASE("critical cell counts") {
  PipelineOptions o;
  o.n = 4;
  auto k5 = run_pipeline("K5", o);
  CHECK(k5->graph.num_vertices() == 25);
  CHECK(k5->complex.counts() == std::vector<long long>{1, 67, 232, 96, 0});
  o.n = 3;
  CHECK(run_pipeline("Theta4", o)->complex.counts() == std::vector<long long>{1, 8, 3});
  o.flavor = Flavor::Ordered;
  CHECK(run_pipeline("Theta4", o)->complex.euler_critical() == -24);
}

TEST_CASE("names of critical cells round trip") {
  PipelineOptions o;
  o.n = 4;
  auto p = run_pipeline("K5", o);
  for (int d = 0; d <= p->complex.top_dim(); ++d)
    for (const Cell& c : p->complex.critical[d]) {
      auto nm = p->namer->name(c);
      REQUIRE(nm.has_value());
      CHECK(p->namer->cell(*nm) == c);
    }
  Cell a = *p->namer->one_cell(p->namer->tree_piece(6, 2, {1, 0}));
  CHECK(p->namer->text(a) == "A_2(1,0)");
}

TEST_CASE("cap is enforced") {
  PipelineOptions o;
  o.n = 4;
  o.cap = 1000;
  CHECK_THROWS(run_pipeline("K5", o));
}

TEST_CASE("serial and parallel complexes are identical") {
  for (auto [name, n, f] : std::vector<std::tuple<std::string, int, Flavor>>{
           {"K5", 4, Flavor::Unordered}, {"Theta4", 3, Flavor::Ordered}, {"K(4,4)", 3, Flavor::Unordered}}) {
    PipelineOptions o;
    o.n = n;
    o.flavor = f;
    o.parallel = false;
    auto s = run_pipeline(name, o);
    o.parallel = true;
    auto p = run_pipeline(name, o);
    CHECK(s->complex.critical == p->complex.critical);
    REQUIRE(s->complex.boundary.size() == p->complex.boundary.size());
    for (std::size_t d = 1; d < s->complex.boundary.size(); ++d)
      CHECK(s->complex.boundary[d].r == p->complex.boundary[d].r);
  }
}
