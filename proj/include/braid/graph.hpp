#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace braid {

struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Edge {
  std::string id;
  int u = -1;
  int v = -1;
};

// Finite connected multigraph without loops. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  // Validates ids, endpoints, loops and connectivity. Empty edge ids are
  // replaced by "e<index>".
  static Graph make(std::vector<std::string> vertices,
                    const std::vector<std::pair<std::string, std::string>>& edges,
                    std::vector<std::string> edge_ids = {});

  int num_vertices() const { return static_cast<int>(vids_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::string& vertex_id(int v) const { return vids_[v]; }
  const std::vector<std::string>& vertex_ids() const { return vids_; }
  int vertex_index(const std::string& id) const;
  int edge_index(const std::string& id) const;
  const Edge& edge(int e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& incident(int v) const { return adj_[v]; }
  int valency(int v) const { return static_cast<int>(adj_[v].size()); }
  int other(int e, int v) const { return edges_[e].u == v ? edges_[e].v : edges_[e].u; }
  std::vector<int> essential_vertices() const;
  bool is_simple() const;

 private:
  std::vector<std::string> vids_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::map<std::string, int> vindex_;
  std::map<std::string, int> eindex_;
};

int betti1(const Graph& g);
bool is_connected(const Graph& g);

// original edge id -> (replacement edge ids, inserted vertex ids), in path order
struct SubdivisionRecord {
  std::map<std::string, std::pair<std::vector<std::string>, std::vector<std::string>>> paths;
};

enum class SubdivisionKind { Auto, Strict, None, Uniform, Fixed };

struct SubdivisionPolicy {
  SubdivisionKind kind = SubdivisionKind::Auto;
  int segments = 0;  // used by Fixed
  static SubdivisionPolicy parse(const std::string& s);
};

// Length requirement of every topological chain for braid index n.
bool is_suitable(const Graph& g, int n, bool strict);

std::pair<Graph, SubdivisionRecord> subdivide(const Graph& g, int n, SubdivisionPolicy policy);

// Splits every edge into k segments.
Graph subdivide_each(const Graph& g, int k);

// Topological multigraph obtained by suppressing valency-2 vertices. Loops are
// kept here (this is the only place they are allowed), so the result is a raw
// edge list over the surviving vertex indices of g.
struct SmoothedGraph {
  std::vector<int> vertices;            // indices in g of vertices kept
  std::vector<std::pair<int, int>> edges;  // endpoints as positions in `vertices`
  std::vector<int> valency;
  bool is_cycle = false;                // g itself is a circle
};
SmoothedGraph smooth(const Graph& g);

Graph parse_graph_json(const std::string& text);
Graph parse_edge_list(const std::string& text);

// Built-in names (K5, K33, K4, Theta3, Theta4, FigB3n3, FigCounterEx,
// K(m), K(m,n), Theta(m)), a path to a .json / edge-list file, or inline JSON.
Graph build_graph(const std::string& spec);
std::optional<Graph> builtin_graph(const std::string& name);
std::vector<std::string> builtin_names();

Graph complete_graph(int m);
Graph complete_bipartite(int m, int n);
Graph theta_graph(int m);

}  // namespace braid
