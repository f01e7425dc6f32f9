#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "braid/fixtures.hpp"
#include "braid/homology.hpp"
#include "braid/pipeline.hpp"
#include "suite.hpp"

using namespace braid;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, int r, int c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(r, c);
  for (auto& x : m.e) x = d(rng);
  return m;
}

mpz_class leibniz(const IntMatrix& m) {
  std::vector<int> p(m.rows);
  std::iota(p.begin(), p.end(), 0);
  mpz_class total = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < m.rows; ++i)
      for (int j = i + 1; j < m.rows; ++j) inversions += p[i] > p[j];
    mpz_class term = inversions % 2 ? -1 : 1;
    for (int i = 0; i < m.rows; ++i) term *= m.at(i, p[i]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

}  // namespace

TEST_CASE("Smith normal form against the minors oracle") {
  std::mt19937_64 rng(424242);
  for (int t = 0; t < 60; ++t) {
    int r = 1 + t % 6, c = 1 + (t / 6) % 6;
    IntMatrix m = random_matrix(rng, r, c, -4, 4);
    if (t % 5 == 0) m = m * random_matrix(rng, c, c, -1, 1);  // force rank loss now and then
    auto s = smith_normal_form(m, true);
    CHECK(s.factors == smith_factors_by_minors(m));
    for (std::size_t i = 0; i + 1 < s.factors.size(); ++i) CHECK(s.factors[i + 1] % s.factors[i] == 0);
    REQUIRE(s.U.has_value());
    IntMatrix d = *s.U * m * *s.V;
    for (int i = 0; i < d.rows; ++i)
      for (int j = 0; j < d.cols; ++j)
        CHECK(d.at(i, j) == (i == j && i < static_cast<int>(s.rank()) ? s.factors[i] : mpz_class(0)));
    CHECK(abs(determinant(*s.U)) == 1);
    CHECK(abs(determinant(*s.V)) == 1);
  }
}

TEST_CASE("Bareiss determinant against permutation expansion") {
  std::mt19937_64 rng(99);
  for (int n = 1; n <= 6; ++n)
    for (int t = 0; t < 5; ++t) {
      IntMatrix m = random_matrix(rng, n, n, -9, 9);
      CHECK(determinant(m) == leibniz(m));
    }
}

TEST_CASE("abelian group normal form") {
  auto g = AbelianGroup::make(2, {mpz_class(4), mpz_class(6), mpz_class(1), mpz_class(0)});
  CHECK(g.rank == 2);
  CHECK(g.torsion == std::vector<mpz_class>{2, 12});
  CHECK(g.text() == "Z^2 + Z_2 + Z_12");
  CHECK(AbelianGroup::make(0, {}).text() == "0");
  CHECK(AbelianGroup::make(1, {2, 2}).text() == "Z + Z_2^2");
  auto c = AbelianGroup::cokernel(IntMatrix::from({{2, 0, 0}, {0, 3, 0}}));
  CHECK(c == AbelianGroup::make(1, {6}));
}

TEST_CASE("K3,3 homology by all routes") {
  PipelineOptions o;
  auto b = run_pipeline("K33", o);
  auto hb = homology(b->complex);
  CHECK(hb[0] == AbelianGroup::make(1, {}));
  CHECK(hb[1] == AbelianGroup::make(4, {2}));
  CHECK(hb[2] == AbelianGroup::make(0, {}));
  o.flavor = Flavor::Ordered;
  auto p = run_pipeline("K33", o);
  auto r = p2_homology_routes(p->complex);
  CHECK(r.agree());
  CHECK(r.direct == AbelianGroup::make(8, {}));
  CHECK(homology(p->complex)[2] == AbelianGroup::make(1, {}));
}

TEST_CASE("K5 undetermined block") {
  auto f = fixture_k5_n4();
  CellSpace cs(f.tree, f.n, Flavor::Unordered);
  Namer nm(cs, f.labels);
  auto mc = build_morse_complex(cs, nm, {});
  auto b = undetermined_block(mc, nm);
  CHECK(b.off_block_zero);
  REQUIRE(b.m.rows == 7);
  REQUIRE(b.m.cols == 7);
  std::vector<std::string> cols;
  for (const Cell& c : b.cols) cols.push_back(nm.text(c));
  CHECK(cols == std::vector<std::string>{"C_3(1,0,0)", "C_3(0,1,0)", "C_2(1,0,0)", "B_3(1,0,0)", "B_3(0,1,0)",
                                         "B_2(1,0,0)", "A_2(1,0)"});
  std::vector<std::string> rows;
  for (auto [x, y] : b.rows) rows.push_back(nm.text(x) + " - " + nm.text(y));
  CHECK(rows.front() == "d_6 ∪ d_5 - d_6 ∪ d_2");
  CHECK(b.m == IntMatrix::from({{0, 0, -1, 0, -1, 0, 0},
                                {0, 0, 0, 1, -1, 0, 0},
                                {-1, 0, 0, 0, -1, 0, 0},
                                {0, -1, 0, 0, 0, 0, -1},
                                {0, 0, 0, 0, 1, 0, -1},
                                {0, 0, 0, -1, 0, 0, -1},
                                {0, 0, 0, 0, 0, -1, -1}}));
  CHECK(smith_normal_form(b.m).factors == std::vector<mpz_class>{1, 1, 1, 1, 1, 1, 2});
  CHECK(abs(determinant(b.m)) == 2);

  auto geo = classify_1cells(mc, nm), mat = classify_1cells_matrix(mc, nm);
  CHECK(geo == mat);
  int fr = 0, sep = 0;
  for (auto& [c, t] : geo) {
    fr += t == OneCellTag::Free;
    sep += t == OneCellTag::Separating;
  }
  CHECK(fr == 6);
  CHECK(sep == 7);
  CHECK(homology(mc)[1] == AbelianGroup::make(6, {2}));
}

TEST_CASE("FigB3n3 free 1-cell census") {
  auto got = testing::figb3n3_free_names();
  auto want = testing::figb3n3_listed_names();
  CHECK(want.size() == 28);
  CHECK(got.size() == 28);
  CHECK(testing::equal_up_to_deleted_labels(got, want, 4));

  PipelineOptions o;
  o.n = 3;
  auto p = run_pipeline("FigB3n3", o);
  auto tags = classify_1cells(p->complex, *p->namer);
  CHECK(tags.size() == p->complex.critical[1].size());
  for (auto& [c, t] : tags) CHECK(t != OneCellTag::Separating);
  CHECK(homology(p->complex)[1] == AbelianGroup::make(28, {}));
}

TEST_CASE("relabelling helper is not vacuous") {
  std::set<std::string> a = {"d_1(1,0)", "d_2"}, b = {"d_2(1,0)", "d_1"}, c = {"d_1(1,0)", "d_3"};
  CHECK(testing::equal_up_to_deleted_labels(a, b, 2));
  CHECK(!testing::equal_up_to_deleted_labels(a, c, 2));
}
