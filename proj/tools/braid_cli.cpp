#include <chrono>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "braid/corpus.hpp"
#include "braid/decomposition.hpp"
#include "braid/homology.hpp"
#include "braid/pipeline.hpp"
#include "braid/presentation.hpp"

using namespace braid;
using nlohmann::ordered_json;

namespace {

struct Args {
  std::string graph;
  int n = 2;
  std::string flavor = "unordered";
  std::string mode = "generic";
  std::string method = "generic";
  std::string format = "json";
  std::string subdivide = "auto";
  long long cap = 10'000'000;
  std::uint64_t seed = 1;
  int count = 0;
  bool no_pinned = false;
  bool raw = false;
  bool timing = false;
};

PipelineOptions options(const Args& a) {
  PipelineOptions o;
  o.n = a.n;
  o.flavor = a.flavor == "ordered" ? Flavor::Ordered : Flavor::Unordered;
  o.mode = a.mode == "planar" ? TreeMode::Planar : TreeMode::Generic;
  o.method = parse_method(a.method);
  o.subdivision = SubdivisionPolicy::parse(a.subdivide);
  o.cap = a.cap;
  o.use_pinned = !a.no_pinned;
  return o;
}

ordered_json group_json(const AbelianGroup& g) {
  ordered_json t = ordered_json::array();
  for (const auto& x : g.torsion) t.push_back(std::stoll(x.get_str()));
  return {{"rank", g.rank}, {"torsion", t}, {"text", g.text()}};
}

ordered_json header(const std::string& cmd, const Args& a, const std::string& graph) {
  return {{"command", cmd}, {"graph", graph}, {"n", a.n}, {"flavor", a.flavor}, {"mode", a.mode}};
}

void put_h1(ordered_json& j, const AbelianGroup& g) {
  j["rank"] = g.rank;
  j["torsion"] = group_json(g)["torsion"];
}

FormulaFlavor formula_flavor(const Args& a) { return a.flavor == "ordered" ? FormulaFlavor::P2 : FormulaFlavor::B; }

ordered_json cmd_homology(const Args& a) {
  auto p = run_pipeline(a.graph, options(a));
  auto h = homology(p->complex);
  ordered_json j = header("homology", a, a.graph);
  put_h1(j, h.size() > 1 ? h[1] : AbelianGroup{});
  j["critical_cells"] = p->complex.counts();
  j["euler_characteristic"] = p->complex.euler_critical();
  ordered_json hs = ordered_json::array();
  for (std::size_t i = 0; i < h.size(); ++i) {
    auto g = group_json(h[i]);
    hs.push_back({{"degree", i}, {"rank", g["rank"]}, {"torsion", g["torsion"]}});
  }
  j["homology"] = hs;
  j["subdivided_vertices"] = p->graph.num_vertices();
  j["pinned_tree"] = p->pinned;
  if (p->complex.flavor == Flavor::Ordered && a.n == 2 && p->complex.top_dim() >= 1) {
    auto r = p2_homology_routes(p->complex);
    j["routes"] = {{"direct", r.direct.text()}, {"relative", r.relative.text()},
                   {"column_deleted", r.column_deleted.text()}, {"agree", r.agree()}};
  }
  if (!p->complex.fast.mismatches.empty()) j["fast_mismatches"] = p->complex.fast.mismatches;
  return j;
}

ordered_json cmd_formula(const Args& a) {
  Graph g = build_graph(a.graph);
  auto f = h1_formula(g, a.n, formula_flavor(a));
  ordered_json j = header("formula", a, a.graph);
  put_h1(j, f.group);
  auto b = invariant_bundle(g, a.n);
  j["invariants"] = {{"beta1", b.beta1}, {"N1", b.N1}, {"N2", b.N2}, {"N3", b.N3}, {"N3prime", b.N3prime}};
  if (!f.notice.empty()) j["notice"] = f.notice;
  return j;
}

ordered_json check_one(const Args& a, const Graph& g, const std::string& name, bool& ok) {
  auto p = run_pipeline(g, options(a));
  auto h1 = homology(p->complex)[1];
  auto f = h1_formula(g, a.n, formula_flavor(a));
  ordered_json j = header("check", a, name);
  put_h1(j, h1);
  j["morse"] = h1.text();
  j["formula"] = f.group.text();
  std::string verdict = h1 == f.group ? "match" : "mismatch";
  if (p->complex.flavor == Flavor::Ordered && a.n == 2) {
    auto r = p2_homology_routes(p->complex);
    j["routes_agree"] = r.agree();
    if (!r.agree()) verdict = "mismatch";
  }
  if (!p->complex.fast.mismatches.empty()) {
    j["fast_mismatches"] = p->complex.fast.mismatches;
    verdict = "mismatch";
  }
  j["verdict"] = verdict;
  ok = ok && verdict == "match";
  return j;
}

ordered_json cmd_check(const Args& a, bool& ok) {
  if (a.count > 0) {
    ordered_json out = {{"command", "check"}, {"seed", a.seed}, {"count", a.count},
                        {"n", a.n}, {"flavor", a.flavor}};
    ordered_json runs = ordered_json::array();
    int bad = 0;
    for (const auto& cg : random_corpus(a.seed, a.count)) {
      bool one = true;
      auto j = check_one(a, cg.graph, cg.name, one);
      bad += !one;
      runs.push_back({{"graph", cg.name}, {"morse", j["morse"]}, {"formula", j["formula"]}, {"verdict", j["verdict"]}});
    }
    out["runs"] = runs;
    out["mismatches"] = bad;
    out["verdict"] = bad ? "mismatch" : "match";
    ok = bad == 0;
    return out;
  }
  return check_one(a, build_graph(a.graph), a.graph, ok);
}

ordered_json cmd_decompose(const Args& a) {
  Graph g = build_graph(a.graph);
  auto t = decompose(g);
  auto b = invariant_bundle(g, a.n, t);
  ordered_json j = header("decompose", a, a.graph);
  ordered_json cuts = ordered_json::array();
  for (const auto& c : t.cut_vertices)
    cuts.push_back({{"vertex", g.vertex_id(c.vertex)}, {"mu", c.mu}, {"nu", c.nu}, {"n_cut", n_cut(a.n, c.mu, c.nu)}});
  j["cut_vertices"] = cuts;
  ordered_json blocks = ordered_json::array();
  for (const auto& bl : t.blocks) {
    ordered_json vs = ordered_json::array(), tc = ordered_json::array(), lv = ordered_json::array();
    for (int v : bl.vertices) vs.push_back(g.vertex_id(v));
    for (const auto& c : bl.cuts) tc.push_back({{"x", g.vertex_id(c.x)}, {"y", g.vertex_id(c.y)}, {"mu", c.mu}});
    for (const auto& l : bl.leaves) {
      ordered_json lvs = ordered_json::array();
      for (int v : l.vertices) lvs.push_back(g.vertex_id(v));
      lv.push_back({{"kind", leaf_text(l.kind)}, {"vertices", lvs}, {"edges", l.edges}});
    }
    blocks.push_back({{"vertices", vs}, {"edges", bl.edges.size()}, {"segment", bl.segment},
                      {"circle", bl.circle}, {"two_cuts", tc}, {"leaves", lv}});
  }
  j["blocks"] = blocks;
  j["invariants"] = {{"beta1", b.beta1}, {"N1", b.N1}, {"N2", b.N2}, {"N3", b.N3}, {"N3prime", b.N3prime}};
  return j;
}

ordered_json cmd_cells(const Args& a) {
  auto p = run_pipeline(a.graph, options(a));
  const auto& mc = p->complex;
  ordered_json j = header("cells", a, a.graph);
  std::map<Cell, OneCellTag> tags;
  if (mc.top_dim() >= 1 && mc.flavor == Flavor::Unordered) tags = classify_1cells_matrix(mc, *p->namer);
  ordered_json dims = ordered_json::array();
  for (int d = 0; d <= mc.top_dim(); ++d) {
    ordered_json cs = ordered_json::array();
    for (const Cell& c : mc.critical[d]) {
      ordered_json e = {{"cell", p->cells->text(c)}, {"name", p->namer->text(c)}};
      if (d == 1 && tags.count(c)) e["tag"] = tag_text(tags[c]);
      cs.push_back(e);
    }
    dims.push_back({{"dim", d}, {"count", mc.critical[d].size()}, {"cells", cs}});
  }
  j["critical"] = dims;
  return j;
}

ordered_json cmd_tree(const Args& a) {
  auto p = prepare(a.graph, options(a));
  ordered_json j = header("tree", a, a.graph);
  j["dump"] = p->tree.dump();
  std::vector<std::string> ids;
  for (int v = 0; v < p->tree.num_vertices(); ++v) ids.push_back(p->graph.vertex_id(p->tree.gv_of[v]));
  j["vertex_ids"] = ids;
  const auto& c = p->conditions;
  j["conditions"] = {{"T1", c.t1}, {"T2", c.t2}, {"T3", c.t3}, {"T4", c.t4_applicable ? ordered_json(c.t4) : ordered_json()}};
  j["pinned_tree"] = p->pinned;
  j["fast_formulas_apply"] = p->fast_ok;
  return j;
}

ordered_json cmd_present(const Args& a) {
  auto p = run_pipeline(a.graph, options(a));
  Presentation pr = raw_presentation(p->complex, *p->cells, *p->namer);
  if (!a.raw) pr = simplify(pr, p->complex, *p->namer);
  ordered_json j = header("present", a, a.graph);
  ordered_json gens = ordered_json::array(), rels = ordered_json::array(), hist = ordered_json::array();
  for (int g : pr.generators()) gens.push_back(pr.names[g]);
  for (const Word& r : pr.relators) rels.push_back(pr.relator_text(r));
  for (const auto& m : pr.history) hist.push_back(m.text);
  j["generators"] = gens;
  j["relators"] = rels;
  j["history"] = hist;
  j["abelianization"] = pr.abelianization().text();
  return j;
}

ordered_json cmd_beta2(const Args& a) {
  if (a.n != 2) throw std::invalid_argument("beta2 is defined here for two strands");
  Graph g = build_graph(a.graph);
  auto p = run_pipeline(g, options(a));
  auto h = homology(p->complex);
  ordered_json j = header("beta2", a, a.graph);
  j["direct"] = h.size() > 2 ? h[2].rank : 0;
  j["formula"] = beta2_formula(g, formula_flavor(a));
  if (formula_flavor(a) == FormulaFlavor::B) j["printed_formula"] = beta2_formula_printed_b2(g);
  return j;
}

void emit_text(const ordered_json& j, std::ostream& os, int indent = 0) {
  std::size_t w = 0;
  for (auto it = j.begin(); it != j.end(); ++it) w = std::max(w, it.key().size());
  for (auto it = j.begin(); it != j.end(); ++it) {
    os << std::string(indent, ' ') << it.key() << std::string(w - it.key().size() + 2, ' ');
    const auto& v = it.value();
    if (v.is_string())
      os << v.get<std::string>();
    else if (v.is_object()) {
      os << "\n";
      emit_text(v, os, indent + 2);
      continue;
    } else if (v.is_array() && !v.empty() && (v[0].is_object() || v[0].is_string())) {
      os << "\n";
      for (const auto& x : v) {
        if (x.is_object()) {
          os << std::string(indent + 2, ' ') << "-\n";
          emit_text(x, os, indent + 4);
        } else
          os << std::string(indent + 2, ' ') << x.get<std::string>() << "\n";
      }
      continue;
    } else
      os << v.dump();
    os << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph braid group homology and presentations"};
  app.require_subcommand(1);
  Args a;
  const std::vector<std::string> names = {"homology", "formula", "check", "decompose", "cells", "tree", "present", "beta2"};
  const std::map<std::string, std::string> help = {
      {"homology", "H_* by discrete Morse theory and Smith normal form"},
      {"formula", "H_1 from the decomposition formulas"},
      {"check", "both routes, compared; exit 1 on mismatch"},
      {"decompose", "cut vertices, 2-cuts and triconnected leaves"},
      {"cells", "critical cells of the Morse complex"},
      {"tree", "maximal tree, order and tree conditions"},
      {"present", "group presentation over critical 1-cells"},
      {"beta2", "second Betti number, formula and direct"}};
  for (const auto& nm : names) {
    auto* s = app.add_subcommand(nm, help.at(nm));
    s->add_option("--graph", a.graph, "built-in name, file path or inline JSON");
    s->add_option("--n", a.n, "number of points")->check(CLI::Range(1, kMaxN));
    s->add_option("--flavor", a.flavor)->check(CLI::IsMember({"unordered", "ordered"}));
    s->add_option("--mode", a.mode)->check(CLI::IsMember({"generic", "planar"}));
    s->add_option("--method", a.method)->check(CLI::IsMember({"generic", "fast", "both"}));
    s->add_option("--format", a.format)->check(CLI::IsMember({"json", "text"}));
    s->add_option("--subdivide", a.subdivide, "auto, strict, none, uniform or a segment count");
    s->add_option("--cap", a.cap, "maximum number of cells");
    s->add_option("--seed", a.seed, "random corpus seed");
    s->add_option("--count", a.count, "random corpus size (check)");
    s->add_flag("--no-pinned", a.no_pinned, "ignore the drawn fixture trees");
    s->add_flag("--raw", a.raw, "present: skip simplification");
    s->add_flag("--timing", a.timing, "add elapsed seconds to the report");
  }
  CLI11_PARSE(app, argc, argv);
  std::string cmd = app.get_subcommands().front()->get_name();
  bool ok = true;
  try {
    if (a.graph.empty() && !(cmd == "check" && a.count > 0)) throw std::invalid_argument("--graph is required");
    auto t0 = std::chrono::steady_clock::now();
    ordered_json j;
    if (cmd == "homology") j = cmd_homology(a);
    else if (cmd == "formula") j = cmd_formula(a);
    else if (cmd == "check") j = cmd_check(a, ok);
    else if (cmd == "decompose") j = cmd_decompose(a);
    else if (cmd == "cells") j = cmd_cells(a);
    else if (cmd == "tree") j = cmd_tree(a);
    else if (cmd == "present") j = cmd_present(a);
    else j = cmd_beta2(a);
    if (a.timing) j["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (a.format == "json")
      std::cout << j.dump(2) << "\n";
    else
      emit_text(j, std::cout);
  } catch (const std::exception& ex) {
    ordered_json e = {{"error", ex.what()}};
    std::cerr << e.dump() << "\n";
    return 2;
  }
  return ok ? 0 : 1;
}
