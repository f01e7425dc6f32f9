#include "braid/pipeline.hpp"

#include <stdexcept>

#include "braid/planarity.hpp"

namespace braid {

namespace {

void finish(Pipeline& p, const PipelineOptions& opt) {
  p.conditions = verify_conditions(p.tree, opt.n);
  p.fast_ok = p.conditions.all(false) && (opt.n != 2 || is_suitable(p.graph, 2, true));
  p.cells = std::make_unique<CellSpace>(p.tree, opt.n, opt.flavor);
  p.namer = std::make_unique<Namer>(*p.cells, p.labels);
}

}  // namespace

std::unique_ptr<Pipeline> prepare(const Graph& g, const PipelineOptions& opt, const std::string& name) {
  if (opt.n < 1 || opt.n > kMaxN) throw std::invalid_argument("braid index must be in 1.." + std::to_string(kMaxN));
  if (opt.mode == TreeMode::Planar && !is_planar(g))
    throw std::invalid_argument("planar mode requested for a non-planar graph");
  auto p = std::make_unique<Pipeline>();
  p->graph_name = name;
  p->input = g;
  if (opt.use_pinned && opt.mode == TreeMode::Generic && opt.subdivision.kind == SubdivisionKind::Auto) {
    if (auto f = pinned_fixture(name, opt.n)) {
      p->tree = f->tree;
      p->graph = f->tree.graph;
      p->labels = f->labels;
      p->pinned = true;
      finish(*p, opt);
      return p;
    }
  }
  std::tie(p->graph, p->record) = subdivide(g, opt.n, opt.subdivision);
  p->tree = choose_tree_and_order(p->graph, opt.n, opt.mode);
  finish(*p, opt);
  return p;
}

std::unique_ptr<Pipeline> prepare(const std::string& graph_spec, const PipelineOptions& opt) {
  return prepare(build_graph(graph_spec), opt, graph_spec);
}

void build_complex(Pipeline& p, const PipelineOptions& opt) {
  BuildOptions b;
  b.method = opt.method;
  b.parallel = opt.parallel;
  b.shortcut = opt.shortcut;
  b.cap = opt.cap;
  b.fast_conditions_ok = p.fast_ok;
  p.complex = build_morse_complex(*p.cells, *p.namer, b);
}

std::unique_ptr<Pipeline> run_pipeline(const std::string& graph_spec, const PipelineOptions& opt) {
  auto p = prepare(graph_spec, opt);
  build_complex(*p, opt);
  return p;
}

std::unique_ptr<Pipeline> run_pipeline(const Graph& g, const PipelineOptions& opt) {
  auto p = prepare(g, opt);
  build_complex(*p, opt);
  return p;
}

}  // namespace braid
