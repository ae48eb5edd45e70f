#include "distsl/matching.hpp"

#include <bit>
#include <limits>
#include <queue>

#include "distsl/errors.hpp"

namespace distsl {
namespace {

constexpr int kMaskBits = 63;

std::vector<std::vector<int>> double_cover_adjacency(const Graph& g) {
  std::vector<std::vector<int>> adjacency(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    adjacency[u].assign(g.neighbors(u).begin(), g.neighbors(u).end());
  }
  return adjacency;
}

class HopcroftKarp {
 public:
  HopcroftKarp(int left, int right, const std::vector<std::vector<int>>& adj)
      : adj_(adj), mate_left_(left, -1), mate_right_(right, -1), layer_(left) {}

  BipartiteMatching run() {
    int size = 0;
    while (build_layers()) {
      for (int u = 0; u < static_cast<int>(mate_left_.size()); ++u) {
        if (mate_left_[u] < 0 && augment(u)) ++size;
      }
    }
    return {mate_left_, mate_right_, size};
  }

 private:
  static constexpr int kUnreached = std::numeric_limits<int>::max();

  // BFS layering from free left vertices; true when some augmenting path
  // exists.
  bool build_layers() {
    std::queue<int> queue;
    for (int u = 0; u < static_cast<int>(mate_left_.size()); ++u) {
      if (mate_left_[u] < 0) {
        layer_[u] = 0;
        queue.push(u);
      } else {
        layer_[u] = kUnreached;
      }
    }
    bool found = false;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      for (int v : adj_[u]) {
        const int w = mate_right_[v];
        if (w < 0) {
          found = true;
        } else if (layer_[w] == kUnreached) {
          layer_[w] = layer_[u] + 1;
          queue.push(w);
        }
      }
    }
    return found;
  }

  bool augment(int u) {
    for (int v : adj_[u]) {
      const int w = mate_right_[v];
      if (w < 0 || (layer_[w] == layer_[u] + 1 && augment(w))) {
        mate_left_[u] = v;
        mate_right_[v] = u;
        return true;
      }
    }
    layer_[u] = kUnreached;
    return false;
  }

  const std::vector<std::vector<int>>& adj_;
  std::vector<int> mate_left_;
  std::vector<int> mate_right_;
  std::vector<int> layer_;
};

BipartiteMatching double_cover_matching(const Graph& g) {
  return hopcroft_karp(g.order(), g.order(), double_cover_adjacency(g));
}

}  // namespace

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

int deficiency(const Graph& g, const VertexSet& s) {
  if (!s.empty() && s.members().back() >= g.order()) {
    throw InvalidParameter("vertex set exceeds the graph order");
  }
  int isolated = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (s.contains(v)) continue;
    bool lonely = true;
    for (Vertex u : g.neighbors(v)) {
      if (!s.contains(u)) {
        lonely = false;
        break;
      }
    }
    if (lonely) ++isolated;
  }
  return isolated - static_cast<int>(s.size());
}

DeficiencyWitness max_deficiency_brute(const Graph& g, int cap) {
  const int n = g.order();
  if (n > cap || n > kMaskBits) {
    throw SizeLimitExceeded("brute-force deficiency search is capped at n <= " +
                            std::to_string(cap) + " (got n = " + std::to_string(n) +
                            "); use the fast method");
  }
  std::vector<std::uint64_t> adj(n, 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= std::uint64_t{1} << v;
    adj[v] |= std::uint64_t{1} << u;
  }
  const std::uint64_t limit = std::uint64_t{1} << n;
  int best = std::numeric_limits<int>::min();
  int best_size = 0;
  std::uint64_t best_mask = 0;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    const int size = std::popcount(mask);
    int isolated = 0;
    for (std::uint64_t rest = ~mask & (limit - 1); rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if ((adj[v] & ~mask) == 0) ++isolated;
    }
    const int def = isolated - size;
    if (def > best || (def == best && size < best_size)) {
      best = def;
      best_size = size;
      best_mask = mask;
    }
  }
  return {VertexSet::from_mask(best_mask), best};
}

DeficiencyWitness max_deficiency_fast(const Graph& g) {
  const int n = g.order();
  const auto adjacency = double_cover_adjacency(g);
  const BipartiteMatching matching = hopcroft_karp(n, n, adjacency);

  std::vector<bool> left_seen(n, false);
  std::vector<bool> right_seen(n, false);
  std::queue<int> queue;
  for (int u = 0; u < n; ++u) {
    if (matching.mate_left[u] < 0) {
      left_seen[u] = true;
      queue.push(u);
    }
  }
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop();
    for (int v : adjacency[u]) {
      if (right_seen[v]) continue;
      right_seen[v] = true;
      const int w = matching.mate_right[v];
      if (w >= 0 && !left_seen[w]) {
        left_seen[w] = true;
        queue.push(w);
      }
    }
  }
  std::vector<Vertex> s;
  for (Vertex v = 0; v < n; ++v) {
    if (right_seen[v]) s.push_back(v);
  }
  DeficiencyWitness witness{VertexSet(std::move(s)), 0};
  witness.deficiency = deficiency(g, witness.s);
  if (witness.deficiency != n - matching.size) {
    throw Error("internal error: alternating-path witness has deficiency " +
                std::to_string(witness.deficiency) + ", expected " +
                std::to_string(n - matching.size));
  }
  return witness;
}

Rational fractional_matching_number_brute(const Graph& g, int cap) {
  const auto witness = max_deficiency_brute(g, cap);
  return Rational(g.order() - witness.deficiency, 2);
}

Graph bipartite_double_cover(const Graph& g) {
  const int n = g.order();
  std::vector<Edge> edges;
  edges.reserve(2 * g.size());
  for (const auto& [u, v] : g.edges()) {
    edges.emplace_back(u, n + v);
    edges.emplace_back(v, n + u);
  }
  return Graph(2 * n, edges);
}

BipartiteMatching hopcroft_karp(int left_count, int right_count,
                                const std::vector<std::vector<int>>& adjacency) {
  if (static_cast<int>(adjacency.size()) != left_count) {
    throw InvalidParameter("adjacency list count does not match the left side");
  }
  for (const auto& list : adjacency) {
    for (int v : list) {
      if (v < 0 || v >= right_count) {
        throw InvalidParameter("right vertex " + std::to_string(v) + " out of range");
      }
    }
  }
  return HopcroftKarp(left_count, right_count, adjacency).run();
}

Rational fractional_matching_number_fast(const Graph& g) {
  return Rational(double_cover_matching(g).size, 2);
}

FractionalMatching::FractionalMatching(std::vector<Edge> edges, std::vector<int> half_weights)
    : edges_(std::move(edges)), half_weights_(std::move(half_weights)) {
  if (edges_.size() != half_weights_.size()) {
    throw InvalidParameter("one weight per edge is required");
  }
  for (int w : half_weights_) {
    if (w < 0 || w > 2) throw InvalidParameter("edge weight outside [0, 1]");
  }
}

Rational FractionalMatching::value() const {
  std::int64_t halves = 0;
  for (int w : half_weights_) halves += w;
  return Rational(halves, 2);
}

bool FractionalMatching::is_valid_for(const Graph& g) const {
  std::vector<int> load(g.order(), 0);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto [u, v] = edges_[i];
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.adjacent(u, v)) {
      return false;
    }
    load[u] += half_weights_[i];
    load[v] += half_weights_[i];
  }
  for (int l : load) {
    if (l > 2) return false;
  }
  return true;
}

FractionalMatching optimal_fractional_matching(const Graph& g) {
  const BipartiteMatching matching = double_cover_matching(g);
  auto edges = g.edges();
  std::vector<int> halves;
  halves.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    halves.push_back((matching.mate_left[u] == v ? 1 : 0) +
                     (matching.mate_left[v] == u ? 1 : 0));
  }
  return FractionalMatching(std::move(edges), std::move(halves));
}

FactorCheck has_k2ck_factor(const Graph& g, int brute_cap) {
  const Rational mu = fractional_matching_number_fast(g);
  if (mu * 2 == Rational(g.order())) return {true, std::nullopt};
  if (g.order() <= brute_cap) return {false, max_deficiency_brute(g, brute_cap)};
  return {false, max_deficiency_fast(g)};
}

}  // namespace distsl
