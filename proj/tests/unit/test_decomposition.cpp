#include "doctest.h"

#include <numeric>
#include <set>

#include "braid/corpus.hpp"
#include "braid/decomposition.hpp"
#include "braid/pipeline.hpp"

using namespace braid;

namespace {

int components_without(const Graph& g, int x) {
  std::vector<int> root(g.num_vertices());
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  for (const Edge& e : g.edges())
    if (e.u != x && e.v != x) root[find(e.u)] = find(e.v);
  std::set<int> roots;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (v != x) roots.insert(find(v));
  return static_cast<int>(roots.size());
}

Graph k33_doubled() {
  Graph k = complete_bipartite(3, 3);
  std::vector<std::pair<std::string, std::string>> edges;
  for (const Edge& e : k.edges()) edges.emplace_back(k.vertex_id(e.u), k.vertex_id(e.v));
  edges.push_back(edges.front());
  return Graph::make(k.vertex_ids(), edges);
}

}  // namespace

TEST_CASE("cut-vertex cost") {
  CHECK(n_cut(3, 3, 7) == 23);
  for (int n = 2; n <= 5; ++n) CHECK(n_cut(n, 2, 2) == 0);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(2, 5) == 0);
}

TEST_CASE("cut vertices against vertex removal") {
  for (const auto& cg : random_corpus(515, 40)) {
    const Graph& g = cg.graph;
    auto t = biconnected_decomposition(g);
    std::set<int> found;
    for (const auto& c : t.cut_vertices) {
      found.insert(c.vertex);
      CHECK(c.mu == components_without(g, c.vertex));
      CHECK(c.nu == g.valency(c.vertex));
    }
    for (int v = 0; v < g.num_vertices(); ++v)
      CHECK((components_without(g, v) > 1) == (found.count(v) == 1));
    std::set<int> covered;
    for (const auto& b : t.blocks) covered.insert(b.edges.begin(), b.edges.end());
    CHECK(static_cast<int>(covered.size()) == g.num_edges());
  }
}

TEST_CASE("invariant bundles of the named graphs") {
  struct Row {
    std::string g;
    long long b1, n1, n2, n3, n3p;
  };
  for (const Row& r : std::vector<Row>{{"K33", 4, 0, 0, 0, 1},
                                       {"K5", 6, 0, 0, 0, 1},
                                       {"K4", 3, 0, 0, 1, 0},
                                       {"Theta3", 2, 0, 1, 0, 0},
                                       {"Theta4", 3, 0, 3, 0, 0},
                                       {"FigB3n3", 4, 23, 1, 0, 0}}) {
    auto b = invariant_bundle(build_graph(r.g), 3);
    CHECK_MESSAGE(b.beta1 == r.b1, r.g);
    CHECK_MESSAGE(b.N1 == r.n1, r.g);
    CHECK_MESSAGE(b.N2 == r.n2, r.g);
    CHECK_MESSAGE(b.N3 == r.n3, r.g);
    CHECK_MESSAGE(b.N3prime == r.n3p, r.g);
  }
  auto t = decompose(build_graph("Theta4"));
  REQUIRE(t.blocks.size() == 1);
  REQUIRE(t.blocks[0].cuts.size() == 1);
  CHECK(t.blocks[0].cuts[0].mu == 4);
  CHECK(t.blocks[0].leaves.size() == 4);
}

TEST_CASE("doubling an edge of K3,3") {
  Graph g = k33_doubled();
  auto b = invariant_bundle(g, 2);
  CHECK(b.beta1 == 5);
  CHECK(b.N2 == 1);
  CHECK(b.N3prime == 1);
  auto f = h1_formula(g, 2, FormulaFlavor::B).group;
  CHECK(f == AbelianGroup::make(6, {2}));
  PipelineOptions o;
  auto p = run_pipeline(g, o);
  CHECK(homology(p->complex)[1] == f);
}

TEST_CASE("formula routes against the Morse complex") {
  for (auto [name, n] : std::vector<std::pair<std::string, int>>{
           {"K33", 2}, {"K5", 2}, {"K4", 2}, {"K4", 3}, {"Theta3", 2}, {"Theta4", 3}, {"FigB3n3", 3}, {"FigCounterEx", 2}}) {
    PipelineOptions o;
    o.n = n;
    auto p = run_pipeline(name, o);
    CHECK_MESSAGE(homology(p->complex)[1] == h1_formula(p->input, n, FormulaFlavor::B).group, name, " n=", n);
  }
  for (int m = 3; m <= 5; ++m) {
    auto f = h1_formula(theta_graph(m), 2, FormulaFlavor::B).group;
    CHECK(f == AbelianGroup::make((m - 1) * (m - 2) / 2 + (m - 1), {}));
  }
}

TEST_CASE("formula edge cases") {
  Graph seg = Graph::make({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  CHECK_THROWS_AS(h1_formula(seg, 2, FormulaFlavor::P2), std::invalid_argument);
  CHECK_THROWS_AS(h1_formula(build_graph("K4"), 3, FormulaFlavor::P2), std::invalid_argument);
  CHECK_THROWS_AS(h1_formula(build_graph("K4"), 0, FormulaFlavor::B), std::invalid_argument);
  auto one = h1_formula(build_graph("K4"), 1, FormulaFlavor::B);
  CHECK(!one.notice.empty());
  CHECK(one.group == AbelianGroup::make(3, {}));
}

TEST_CASE("second Betti numbers") {
  Graph k33 = build_graph("K33"), k5 = build_graph("K5");
  CHECK(beta2_formula(k33, FormulaFlavor::B) == 0);
  CHECK(beta2_formula_printed_b2(k33) == 2);
  CHECK(beta2_formula(k33, FormulaFlavor::P2) == 1);
  CHECK(beta2_formula(k5, FormulaFlavor::P2) == 1);
  PipelineOptions o;
  CHECK(homology(run_pipeline("K33", o)->complex)[2].rank == 0);
  o.flavor = Flavor::Ordered;
  CHECK(homology(run_pipeline("K33", o)->complex)[2].rank == 1);
  CHECK(homology(run_pipeline("K5", o)->complex)[2].rank == 1);
}

TEST_CASE("first Betti number characterizations") {
  auto k4 = classify_beta1_characterizations(build_graph("K4"));
  CHECK(k4.planar);
  CHECK(k4.plus_one);
  REQUIRE(k4.planar_case.has_value());
  CHECK(*k4.planar_case == std::array<long long, 3>{0, 0, 1});
  auto th = classify_beta1_characterizations(build_graph("Theta3"));
  REQUIRE(th.planar_case.has_value());
  CHECK(*th.planar_case == std::array<long long, 3>{0, 1, 0});
  auto k33 = classify_beta1_characterizations(build_graph("K33"));
  CHECK(!k33.planar);
  CHECK(k33.doubled);
  CHECK(k33.topologically_simple);
  CHECK(k33.topologically_triconnected);
  auto t4 = classify_beta1_characterizations(build_graph("Theta4"));
  CHECK(!t4.plus_one);
  CHECK(!t4.doubled);
  auto ce = classify_beta1_characterizations(build_graph("FigCounterEx"));
  CHECK(!ce.planar);
  CHECK(ce.plus_one);
  CHECK(!ce.planar_case.has_value());
}
