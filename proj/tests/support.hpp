#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "distsl/graph.hpp"

namespace distsl::testing {

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Random labeled spanning tree plus each remaining pair with probability p.
inline Graph random_connected_graph(std::mt19937_64& rng, int n, double p) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::set<Edge> edges;
  for (int i = 1; i < n; ++i) {
    const int j = uniform_int(rng, 0, i - 1);
    edges.insert({std::min(perm[i], perm[j]), std::max(perm[i], perm[j])});
  }
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!edges.contains({u, v}) && coin(rng)) edges.insert({u, v});
    }
  }
  const std::vector<Edge> list(edges.begin(), edges.end());
  return Graph(n, list);
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

inline Graph star(int leaves) {
  return join(make_named(NamedGraph::complete, 1), make_named(NamedGraph::empty, leaves));
}

}  // namespace distsl::testing
