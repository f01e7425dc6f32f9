#include "braid/graph.hpp"

#include <algorithm>
#include <deque>
#include <filesystem>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "json.hpp"

namespace braid {

Graph Graph::make(std::vector<std::string> vertices,
                  const std::vector<std::pair<std::string, std::string>>& edges,
                  std::vector<std::string> edge_ids) {
  Graph g;
  g.vids_ = std::move(vertices);
  for (int i = 0; i < g.num_vertices(); ++i) {
    if (!g.vindex_.emplace(g.vids_[i], i).second)
      throw GraphError("duplicate vertex id '" + g.vids_[i] + "'");
  }
  if (g.vids_.empty()) throw GraphError("graph has no vertices");
  g.adj_.assign(g.vids_.size(), {});
  for (std::size_t i = 0; i < edges.size(); ++i) {
    Edge e;
    e.id = (i < edge_ids.size() && !edge_ids[i].empty()) ? edge_ids[i] : "e" + std::to_string(i);
    auto iu = g.vindex_.find(edges[i].first);
    auto iv = g.vindex_.find(edges[i].second);
    if (iu == g.vindex_.end() || iv == g.vindex_.end())
      throw GraphError("edge '" + e.id + "' has an unknown endpoint");
    if (iu->second == iv->second)
      throw GraphError("loop edge '" + e.id + "' at '" + edges[i].first +
                       "': subdivide the loop into a cycle of at least three edges first");
    e.u = iu->second;
    e.v = iv->second;
    if (!g.eindex_.emplace(e.id, static_cast<int>(i)).second)
      throw GraphError("duplicate edge id '" + e.id + "'");
    g.adj_[e.u].push_back(static_cast<int>(i));
    g.adj_[e.v].push_back(static_cast<int>(i));
    g.edges_.push_back(std::move(e));
  }
  if (!is_connected(g)) throw GraphError("graph is disconnected");
  return g;
}

int Graph::vertex_index(const std::string& id) const {
  auto it = vindex_.find(id);
  return it == vindex_.end() ? -1 : it->second;
}

int Graph::edge_index(const std::string& id) const {
  auto it = eindex_.find(id);
  return it == eindex_.end() ? -1 : it->second;
}

std::vector<int> Graph::essential_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < num_vertices(); ++v)
    if (valency(v) >= 3) out.push_back(v);
  return out;
}

bool Graph::is_simple() const {
  std::set<std::pair<int, int>> seen;
  for (const auto& e : edges_)
    if (!seen.insert({std::min(e.u, e.v), std::max(e.u, e.v)}).second) return false;
  return true;
}

int betti1(const Graph& g) { return g.num_edges() - g.num_vertices() + 1; }

bool is_connected(const Graph& g) {
  if (g.num_vertices() == 0) return true;
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int e : g.incident(v)) {
      int w = g.other(e, v);
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == g.num_vertices();
}

SubdivisionPolicy SubdivisionPolicy::parse(const std::string& s) {
  SubdivisionPolicy p;
  if (s == "auto") p.kind = SubdivisionKind::Auto;
  else if (s == "strict") p.kind = SubdivisionKind::Strict;
  else if (s == "none") p.kind = SubdivisionKind::None;
  else if (s == "uniform") p.kind = SubdivisionKind::Uniform;
  else {
    int k = 0;
    try {
      k = std::stoi(s);
    } catch (...) {
      throw GraphError("unknown subdivision policy '" + s + "'");
    }
    if (k < 1) throw GraphError("subdivision segment count must be >= 1");
    p.kind = SubdivisionKind::Fixed;
    p.segments = k;
  }
  return p;
}

namespace {

struct Chain {
  int a = -1, b = -1;      // endpoint vertices (valency != 2, or the anchor of a circle)
  std::vector<int> edges;  // in order from a to b
};

std::vector<Chain> chains(const Graph& g) {
  std::vector<char> branch(g.num_vertices(), 0);
  bool any = false;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.valency(v) != 2) branch[v] = 1, any = true;
  if (!any) branch[0] = 1;
  std::vector<char> used(g.num_edges(), 0);
  std::vector<Chain> out;
  for (int s = 0; s < g.num_vertices(); ++s) {
    if (!branch[s]) continue;
    for (int e0 : g.incident(s)) {
      if (used[e0]) continue;
      Chain c;
      c.a = s;
      int v = s, e = e0;
      while (true) {
        used[e] = 1;
        c.edges.push_back(e);
        v = g.other(e, v);
        if (branch[v]) break;
        int next = g.incident(v)[0] == e ? g.incident(v)[1] : g.incident(v)[0];
        e = next;
      }
      c.b = v;
      out.push_back(std::move(c));
    }
  }
  return out;
}

int girth(const Graph& g) {
  int best = 1 << 29;
  for (int s = 0; s < g.num_vertices(); ++s) {
    std::vector<int> dist(g.num_vertices(), -1), pe(g.num_vertices(), -1);
    std::deque<int> q{s};
    dist[s] = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int e : g.incident(v)) {
        if (e == pe[v]) continue;
        int w = g.other(e, v);
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          pe[w] = e;
          q.push_back(w);
        } else {
          best = std::min(best, dist[v] + dist[w] + 1);
        }
      }
    }
  }
  return best;
}

int required_chain_length(const Graph& g, const std::vector<Chain>& cs, std::size_t i, int n,
                          bool strict) {
  const Chain& c = cs[i];
  int r = std::max(1, n - 1);
  if (strict && n == 2) r = std::max(r, 2);
  if (c.a == c.b) {
    r = std::max(r, std::max(3, n + 1));
  } else {
    for (std::size_t j = 0; j < cs.size(); ++j) {
      if (j == i) continue;
      bool parallel = (cs[j].a == c.a && cs[j].b == c.b) || (cs[j].a == c.b && cs[j].b == c.a);
      if (parallel) r = std::max(r, (n + 2) / 2);
    }
  }
  (void)g;
  return r;
}

std::string fresh(const std::string& base, const std::set<std::string>& taken) {
  std::string s = base;
  while (taken.count(s)) s += "'";
  return s;
}

std::pair<Graph, SubdivisionRecord> split_edges(const Graph& g, const std::vector<int>& segs) {
  std::set<std::string> vtaken(g.vertex_ids().begin(), g.vertex_ids().end());
  std::set<std::string> etaken;
  for (const auto& e : g.edges()) etaken.insert(e.id);
  std::vector<std::string> verts = g.vertex_ids();
  std::vector<std::pair<std::string, std::string>> es;
  std::vector<std::string> eids;
  SubdivisionRecord rec;
  for (int i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edge(i);
    int k = segs[i];
    auto& entry = rec.paths[e.id];
    if (k <= 1) {
      es.push_back({g.vertex_id(e.u), g.vertex_id(e.v)});
      eids.push_back(e.id);
      entry.first.push_back(e.id);
      continue;
    }
    std::string prev = g.vertex_id(e.u);
    for (int j = 1; j <= k; ++j) {
      std::string next;
      if (j < k) {
        next = fresh(e.id + "." + std::to_string(j), vtaken);
        vtaken.insert(next);
        verts.push_back(next);
        entry.second.push_back(next);
      } else {
        next = g.vertex_id(e.v);
      }
      std::string eid = fresh(e.id + "/" + std::to_string(j), etaken);
      etaken.insert(eid);
      es.push_back({prev, next});
      eids.push_back(eid);
      entry.first.push_back(eid);
      prev = next;
    }
  }
  return {Graph::make(std::move(verts), es, std::move(eids)), std::move(rec)};
}

}  // namespace

bool is_suitable(const Graph& g, int n, bool strict) {
  auto cs = chains(g);
  int need = std::max(1, n - 1);
  if (strict && n == 2) need = std::max(need, 2);
  for (const auto& c : cs)
    if (static_cast<int>(c.edges.size()) < need) return false;
  if (betti1(g) > 0 && girth(g) < n + 1) return false;
  return true;
}

std::pair<Graph, SubdivisionRecord> subdivide(const Graph& g, int n, SubdivisionPolicy policy) {
  if (n < 1) throw GraphError("braid index must be >= 1");
  std::vector<int> segs(g.num_edges(), 1);
  switch (policy.kind) {
    case SubdivisionKind::None:
      if (!is_suitable(g, n, false))
        throw GraphError("graph is not suitably subdivided for n=" + std::to_string(n));
      return split_edges(g, segs);
    case SubdivisionKind::Uniform:
      std::fill(segs.begin(), segs.end(), n + 1);
      return split_edges(g, segs);
    case SubdivisionKind::Fixed:
      std::fill(segs.begin(), segs.end(), policy.segments);
      return split_edges(g, segs);
    case SubdivisionKind::Auto:
    case SubdivisionKind::Strict: {
      bool strict = policy.kind == SubdivisionKind::Strict || n == 2;
      auto cs = chains(g);
      for (std::size_t i = 0; i < cs.size(); ++i) {
        int L = static_cast<int>(cs[i].edges.size());
        int r = required_chain_length(g, cs, i, n, strict);
        if (L >= r) continue;
        for (int j = 0; j < L; ++j) segs[cs[i].edges[j]] = r / L + (j < r % L ? 1 : 0);
      }
      return split_edges(g, segs);
    }
  }
  return split_edges(g, segs);
}

Graph subdivide_each(const Graph& g, int k) {
  return split_edges(g, std::vector<int>(g.num_edges(), k)).first;
}

SmoothedGraph smooth(const Graph& g) {
  SmoothedGraph s;
  auto cs = chains(g);
  std::map<int, int> pos;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.valency(v) != 2) {
      pos[v] = static_cast<int>(s.vertices.size());
      s.vertices.push_back(v);
    }
  }
  if (s.vertices.empty()) {
    s.is_cycle = true;
    s.vertices.push_back(0);
    pos[0] = 0;
  }
  s.valency.assign(s.vertices.size(), 0);
  for (const auto& c : cs) {
    int a = pos.at(c.a), b = pos.at(c.b);
    s.edges.push_back({a, b});
    s.valency[a]++;
    s.valency[b]++;
  }
  return s;
}

Graph parse_graph_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& ex) {
    throw GraphError(std::string("invalid graph JSON: ") + ex.what());
  }
  auto as_id = [](const nlohmann::json& x) {
    return x.is_string() ? x.get<std::string>() : x.dump();
  };
  std::vector<std::string> verts;
  std::set<std::string> seen;
  if (j.contains("vertices"))
    for (const auto& v : j["vertices"]) verts.push_back(as_id(v));
  std::vector<std::pair<std::string, std::string>> es;
  std::vector<std::string> ids;
  if (!j.contains("edges")) throw GraphError("graph JSON needs an \"edges\" array");
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() < 2) throw GraphError("each edge must be [u, v] or [u, v, id]");
    es.push_back({as_id(e[0]), as_id(e[1])});
    ids.push_back(e.size() > 2 ? as_id(e[2]) : "");
  }
  if (verts.empty()) {
    for (const auto& [a, b] : es) {
      if (seen.insert(a).second) verts.push_back(a);
      if (seen.insert(b).second) verts.push_back(b);
    }
  }
  return Graph::make(std::move(verts), es, std::move(ids));
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> verts;
  std::set<std::string> seen;
  std::vector<std::pair<std::string, std::string>> es;
  std::vector<std::string> ids;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string a, b, id;
    if (!(ls >> a)) continue;
    if (!(ls >> b)) throw GraphError("edge-list line needs two vertices: '" + line + "'");
    ls >> id;
    for (const auto& x : {a, b})
      if (seen.insert(x).second) verts.push_back(x);
    es.push_back({a, b});
    ids.push_back(id);
  }
  return Graph::make(std::move(verts), es, std::move(ids));
}

Graph complete_graph(int m) {
  std::vector<std::string> v;
  for (int i = 0; i < m; ++i) v.push_back(std::to_string(i));
  std::vector<std::pair<std::string, std::string>> es;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) es.push_back({v[i], v[j]});
  return Graph::make(v, es);
}

Graph complete_bipartite(int m, int n) {
  std::vector<std::string> v;
  for (int i = 0; i < m; ++i) v.push_back("a" + std::to_string(i));
  for (int i = 0; i < n; ++i) v.push_back("b" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> es;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) es.push_back({v[i], v[m + j]});
  return Graph::make(v, es);
}

Graph theta_graph(int m) {
  std::vector<std::pair<std::string, std::string>> es(m, {"A", "B"});
  return Graph::make({"A", "B"}, es);
}

namespace {

// Two circles and a theta sharing the vertex A (valency 7, three A-components).
Graph fig_b3n3() {
  std::vector<std::pair<std::string, std::string>> es = {
      {"A", "x1"}, {"x1", "x2"}, {"x2", "A"},  // circle
      {"A", "y1"}, {"y1", "y2"}, {"y2", "A"},  // circle
      {"A", "B"},  {"A", "B"},   {"A", "B"}};  // theta
  return Graph::make({"A", "x1", "x2", "y1", "y2", "B"}, es);
}

// Two copies of K_{3,3} minus an edge xy, glued along x and y.
Graph fig_counter_ex() {
  std::vector<std::string> v = {"x", "y", "a1", "a2", "b1", "b2", "c1", "c2", "f1", "f2"};
  std::vector<std::pair<std::string, std::string>> es;
  auto half = [&](const std::string& p1, const std::string& p2, const std::string& q1,
                  const std::string& q2) {
    std::vector<std::string> left = {"x", p1, p2}, right = {"y", q1, q2};
    for (const auto& l : left)
      for (const auto& r : right)
        if (!(l == "x" && r == "y")) es.push_back({l, r});
  };
  half("a1", "a2", "b1", "b2");
  half("c1", "c2", "f1", "f2");
  return Graph::make(v, es);
}

}  // namespace

std::vector<std::string> builtin_names() {
  return {"K5", "K33", "K4", "Theta3", "Theta4", "FigB3n3", "FigCounterEx"};
}

std::optional<Graph> builtin_graph(const std::string& name) {
  static const std::regex km(R"(K\(?(\d+)\)?)"), kmn(R"(K\((\d+),(\d+)\))"),
      th(R"(Theta\(?(\d+)\)?)");
  std::smatch m;
  if (name == "K33") return complete_bipartite(3, 3);
  if (name == "FigB3n3") return fig_b3n3();
  if (name == "FigCounterEx") return fig_counter_ex();
  if (std::regex_match(name, m, kmn)) return complete_bipartite(std::stoi(m[1]), std::stoi(m[2]));
  if (std::regex_match(name, m, km)) return complete_graph(std::stoi(m[1]));
  if (std::regex_match(name, m, th)) return theta_graph(std::stoi(m[1]));
  return std::nullopt;
}

Graph build_graph(const std::string& spec) {
  if (auto g = builtin_graph(spec)) return *g;
  std::string trimmed = spec;
  trimmed.erase(0, trimmed.find_first_not_of(" \t\n"));
  if (!trimmed.empty() && trimmed[0] == '{') return parse_graph_json(trimmed);
  if (std::filesystem::exists(spec)) {
    std::ifstream in(spec);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_graph_json(text);
    return parse_edge_list(text);
  }
  throw GraphError("unknown graph '" + spec + "'");
}

}  // namespace braid
