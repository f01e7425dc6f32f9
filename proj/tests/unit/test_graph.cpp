#include "doctest.h"

#include "braid/corpus.hpp"
#include "braid/graph.hpp"
#include "braid/planarity.hpp"

using namespace braid;

TEST_CASE("graph construction validates input") {
  CHECK_THROWS_AS(Graph::make({"a", "b"}, {{"a", "a"}}), GraphError);
  CHECK_THROWS_AS(Graph::make({"a", "b", "c"}, {{"a", "b"}}), GraphError);
  CHECK_THROWS_AS(Graph::make({"a", "a"}, {{"a", "a"}}), GraphError);
  CHECK_THROWS_AS(Graph::make({"a", "b"}, {{"a", "z"}}), GraphError);
  Graph g = Graph::make({"a", "b"}, {{"a", "b"}, {"a", "b"}});
  CHECK(g.num_edges() == 2);
  CHECK_FALSE(g.is_simple());
  CHECK(betti1(g) == 1);
}

TEST_CASE("built-in graphs") {
  Graph k33 = build_graph("K33"), k5 = build_graph("K5");
  CHECK(k33.num_vertices() == 6);
  CHECK(k33.num_edges() == 9);
  CHECK(betti1(k33) == 4);
  CHECK(betti1(k5) == 6);
  CHECK(betti1(build_graph("Theta(5)")) == 4);
  CHECK(betti1(build_graph("FigB3n3")) == 4);
  CHECK(build_graph("K(2,3)").num_edges() == 6);
  CHECK_THROWS(build_graph("NoSuchGraph"));
}

TEST_CASE("JSON and edge-list input") {
  Graph j = parse_graph_json(R"({"edges":[["u","v"],["v","w"],["w","u"],["u","x","tail"]]})");
  CHECK(j.num_vertices() == 4);
  CHECK(j.edge_index("tail") == 3);
  Graph e = parse_edge_list("# triangle\nu v\nv w\nw u\n");
  CHECK(e.num_edges() == 3);
  CHECK(betti1(e) == 1);
  CHECK_THROWS_AS(parse_graph_json("{\"vertices\":[1]}"), GraphError);
}

TEST_CASE("subdivision meets the chain length requirement") {
  for (const char* name : {"K5", "K33", "K4", "Theta4", "FigB3n3"})
    for (int n = 2; n <= 4; ++n) {
      auto [s, rec] = subdivide(build_graph(name), n, SubdivisionPolicy{});
      CHECK(is_suitable(s, n, false));
      CHECK(betti1(s) == betti1(build_graph(name)));
    }
  auto [s, rec] = subdivide(build_graph("K5"), 4, SubdivisionPolicy::parse("strict"));
  CHECK(is_suitable(s, 4, true));
  CHECK(subdivide_each(build_graph("K4"), 3).num_edges() == 18);
  CHECK_THROWS(SubdivisionPolicy::parse("zero"));
}

TEST_CASE("smoothing recovers the topological graph") {
  Graph g = subdivide_each(build_graph("K33"), 3);
  SmoothedGraph s = smooth(g);
  CHECK(s.vertices.size() == 6);
  CHECK(s.edges.size() == 9);
  for (int v : s.valency) CHECK(v == 3);
  Graph loop = subdivide_each(build_graph("FigB3n3"), 2);
  CHECK(smooth(loop).edges.size() == 5);
}

TEST_CASE("planarity agrees with the Kuratowski search") {
  CHECK_FALSE(is_planar(build_graph("K5")));
  CHECK_FALSE(is_planar(build_graph("K33")));
  CHECK(is_planar(build_graph("K4")));
  CHECK(is_planar(build_graph("FigB3n3")));
  CHECK_FALSE(is_planar(build_graph("FigCounterEx")));
  int nonplanar = 0;
  for (const auto& cg : random_corpus(11, 60)) {
    bool p = is_planar(cg.graph);
    CHECK(p == is_planar_bruteforce(cg.graph));
    nonplanar += !p;
    if (auto rot = planar_rotation(cg.graph)) {
      CHECK(p);
      CHECK(static_cast<int>(rot->size()) == cg.graph.num_vertices());
    }
  }
  CHECK(nonplanar > 0);
}

TEST_CASE("random corpus is deterministic") {
  auto a = random_corpus(5, 10), b = random_corpus(5, 10);
  for (int i = 0; i < 10; ++i) {
    CHECK(a[i].graph.num_edges() == b[i].graph.num_edges());
    CHECK(a[i].graph.edges()[0].u == b[i].graph.edges()[0].u);
    CHECK_FALSE(a[i].graph.essential_vertices().empty());
  }
}
