#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_set>

#include "distsl/errors.hpp"
#include "distsl/matching.hpp"

namespace distsl {
namespace {

using Mask = std::uint32_t;
constexpr int kMaxFactorOrder = 31;

// Backtracking over the set of still-uncovered vertices. Only edges and odd
// cycles are tried: an even cycle splits into disjoint edges, so this loses
// no solutions. Failed masks are memoized.
class FactorSearch {
 public:
  explicit FactorSearch(const Graph& g) : g_(g), adj_(g.order(), 0) {
    for (const auto& [u, v] : g.edges()) {
      adj_[u] |= Mask{1} << v;
      adj_[v] |= Mask{1} << u;
    }
  }

  std::optional<Factor> run() {
    const Mask all = (Mask{1} << g_.order()) - 1;
    if (!solve(all)) return std::nullopt;
    return Factor{components_};
  }

 private:
  bool solve(Mask uncovered) {
    if (uncovered == 0) return true;
    if (failed_.contains(uncovered)) return false;

    Vertex pivot = -1;
    int pivot_degree = 0;
    for (Mask rest = uncovered; rest != 0; rest &= rest - 1) {
      const Vertex v = std::countr_zero(rest);
      const int d = std::popcount(adj_[v] & uncovered);
      if (pivot < 0 || d < pivot_degree) {
        pivot = v;
        pivot_degree = d;
      }
    }
    if (pivot_degree > 0) {
      const Mask without_pivot = uncovered & ~(Mask{1} << pivot);
      for (Mask rest = adj_[pivot] & uncovered; rest != 0; rest &= rest - 1) {
        const Vertex u = std::countr_zero(rest);
        components_.push_back({pivot, u});
        if (solve(without_pivot & ~(Mask{1} << u))) return true;
        components_.pop_back();
      }
      std::vector<Vertex> path{pivot};
      if (grow_cycle(uncovered, path, Mask{1} << pivot)) return true;
    }
    failed_.insert(uncovered);
    return false;
  }

  bool grow_cycle(Mask uncovered, std::vector<Vertex>& path, Mask on_path) {
    const Vertex tail = path.back();
    // Each cycle is reachable in both directions; close only the one whose
    // second vertex is smaller than its last.
    if (path.size() >= 3 && path.size() % 2 == 1 && path[1] < tail &&
        (adj_[tail] >> path.front() & 1U) != 0) {
      components_.push_back(path);
      if (solve(uncovered & ~on_path)) return true;
      components_.pop_back();
    }
    for (Mask rest = adj_[tail] & uncovered & ~on_path; rest != 0; rest &= rest - 1) {
      const Vertex next = std::countr_zero(rest);
      path.push_back(next);
      if (grow_cycle(uncovered, path, on_path | (Mask{1} << next))) return true;
      path.pop_back();
    }
    return false;
  }

  const Graph& g_;
  std::vector<Mask> adj_;
  std::vector<std::vector<Vertex>> components_;
  std::unordered_set<Mask> failed_;
};

}  // namespace

std::vector<Edge> Factor::edges() const {
  std::vector<Edge> out;
  for (const auto& c : components) {
    if (c.size() == 2) {
      out.emplace_back(std::min(c[0], c[1]), std::max(c[0], c[1]));
      continue;
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
      const Vertex a = c[i];
      const Vertex b = c[(i + 1) % c.size()];
      out.emplace_back(std::min(a, b), std::max(a, b));
    }
  }
  return out;
}

bool is_k2ck_factor(const Graph& g, const Factor& f) {
  std::vector<bool> covered(g.order(), false);
  for (const auto& c : f.components) {
    if (c.size() < 2) return false;
    for (Vertex v : c) {
      if (v < 0 || v >= g.order() || covered[v]) return false;
      covered[v] = true;
    }
    if (c.size() == 2) {
      if (!g.adjacent(c[0], c[1])) return false;
      continue;
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (!g.adjacent(c[i], c[(i + 1) % c.size()])) return false;
    }
  }
  for (bool b : covered) {
    if (!b) return false;
  }
  return true;
}

std::optional<Factor> find_factor_backtracking(const Graph& g, int cap) {
  if (g.order() > cap || g.order() > kMaxFactorOrder) {
    throw SizeLimitExceeded("factor backtracking is capped at n <= " +
                            std::to_string(cap) + " (got n = " +
                            std::to_string(g.order()) + ")");
  }
  return FactorSearch(g).run();
}

}  // namespace distsl
