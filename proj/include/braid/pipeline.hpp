#pragma once

#include <memory>
#include <optional>
#include <string>

#include "braid/cells.hpp"
#include "braid/fixtures.hpp"
#include "braid/graph.hpp"
#include "braid/morse.hpp"
#include "braid/naming.hpp"
#include "braid/tree.hpp"

namespace braid {

struct PipelineOptions {
  int n = 2;
  Flavor flavor = Flavor::Unordered;
  TreeMode mode = TreeMode::Generic;
  Method method = Method::Generic;
  SubdivisionPolicy subdivision{};
  long long cap = 10'000'000;
  bool parallel = true;
  bool shortcut = true;
  bool use_pinned = true;  // drawn trees for the named fixtures
};

// Graph -> subdivision -> ordered tree -> cells -> Morse complex.
// Members reference each other, so the object is not movable.
struct Pipeline {
  std::string graph_name;
  Graph input;
  Graph graph;  // subdivided
  SubdivisionRecord record;
  OrderedTree tree;
  VertexLabels labels;
  bool pinned = false;
  ConditionReport conditions;
  bool fast_ok = false;  // T1-T3 hold and, for n = 2, the subdivision is strict
  std::unique_ptr<CellSpace> cells;
  std::unique_ptr<Namer> namer;
  MorseComplex complex;

  Pipeline() = default;
  Pipeline(const Pipeline&) = delete;
  Pipeline& operator=(const Pipeline&) = delete;
};

// Tree and cell space only; the complex is left empty.
std::unique_ptr<Pipeline> prepare(const std::string& graph_spec, const PipelineOptions& opt);
std::unique_ptr<Pipeline> prepare(const Graph& g, const PipelineOptions& opt, const std::string& name = "");
void build_complex(Pipeline& p, const PipelineOptions& opt);

std::unique_ptr<Pipeline> run_pipeline(const std::string& graph_spec, const PipelineOptions& opt);
std::unique_ptr<Pipeline> run_pipeline(const Graph& g, const PipelineOptions& opt);

}  // namespace braid
