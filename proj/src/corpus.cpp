#include "braid/corpus.hpp"

#include <random>

namespace braid {

Graph random_connected_graph(std::uint64_t seed, const CorpusOptions& opt) {
  std::mt19937_64 rng(seed);
  auto uni = [&](int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng); };
  std::bernoulli_distribution multi(opt.multi_edge_rate), pendant(opt.pendant_rate), plant(opt.plant_rate);
  for (;;) {
    int V = uni(opt.min_vertices, opt.max_vertices);
    std::vector<std::pair<int, int>> es;
    if (plant(rng) && opt.max_vertices >= 6) {
      if (uni(0, 1) == 0 && opt.max_beta1 >= 6) {
        V = 5;
        for (int i = 0; i < 5; ++i)
          for (int j = i + 1; j < 5; ++j) es.push_back({i, j});
      } else {
        V = 6;
        for (int i = 0; i < 3; ++i)
          for (int j = 3; j < 6; ++j) es.push_back({i, j});
      }
    } else {
      for (int i = 1; i < V; ++i) es.push_back({uni(0, i - 1), i});
    }
    std::vector<std::string> ids;
    for (int i = 0; i < V; ++i) ids.push_back("v" + std::to_string(i));
    int extra = uni(0, std::max(0, opt.max_beta1 - static_cast<int>(es.size()) + V - 1));
    for (int k = 0; k < extra; ++k) {
      if (multi(rng) && !es.empty()) {
        es.push_back(es[uni(0, static_cast<int>(es.size()) - 1)]);
        continue;
      }
      int a = uni(0, V - 1), b = uni(0, V - 1);
      if (a == b) continue;
      es.push_back({a, b});
    }
    int hang = 0;
    for (int i = 0; i < V && V + hang < opt.max_vertices; ++i)
      if (pendant(rng)) {
        ids.push_back("p" + std::to_string(hang++));
        es.push_back({i, static_cast<int>(ids.size()) - 1});
      }
    std::vector<std::pair<std::string, std::string>> named;
    for (auto [a, b] : es) named.push_back({ids[a], ids[b]});
    Graph g = Graph::make(ids, named);
    if (g.essential_vertices().size() > 8 || betti1(g) > opt.max_beta1) continue;
    if (g.essential_vertices().empty()) continue;  // segments and circles carry no structure
    return g;
  }
}

std::vector<CorpusGraph> random_corpus(std::uint64_t seed, int count, const CorpusOptions& opt) {
  std::vector<CorpusGraph> out;
  for (int i = 0; i < count; ++i) {
    std::uint64_t s = seed * 1000003ULL + static_cast<std::uint64_t>(i);
    out.push_back({"random-" + std::to_string(seed) + "-" + std::to_string(i), random_connected_graph(s, opt)});
  }
  return out;
}

}  // namespace braid
