#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "turan/hypergraph.hpp"

namespace fixtures {

using turan::Edge;
using turan::Hypergraph;

inline Hypergraph graph(std::size_t n, std::vector<Edge> edges) { return Hypergraph(n, 2, std::move(edges)); }

inline Hypergraph triangle() { return graph(3, {{0, 1}, {1, 2}, {0, 2}}); }

inline Hypergraph k4() { return turan::complete_hypergraph(4, 2); }

inline Hypergraph path(std::size_t n) {
  std::vector<Edge> e;
  for (turan::Vertex i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return graph(n, std::move(e));
}

inline Hypergraph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (turan::Vertex i = 0; i < n; ++i) e.push_back({i, static_cast<turan::Vertex>((i + 1) % n)});
  return graph(n, std::move(e));
}

// Random multihypergraph: m edges drawn uniformly from the r-subsets, repeats allowed.
inline Hypergraph random_multi(std::size_t n, int r, std::size_t m, turan::Rng& rng) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i) {
    Edge e;
    while (e.size() < static_cast<std::size_t>(r)) {
      const turan::Vertex v = rng.below(n);
      if (std::find(e.begin(), e.end(), v) == e.end()) e.push_back(v);
    }
    edges.push_back(e);
  }
  return Hypergraph(n, r, std::move(edges), turan::Flavor::Multi);
}

}  // namespace fixtures
