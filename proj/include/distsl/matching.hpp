#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "distsl/graph.hpp"

namespace distsl {

using Rational = boost::rational<std::int64_t>;

// "5/2", or "2" for integral values.
std::string to_string(const Rational& r);

inline constexpr int kDefaultBruteCap = 24;
inline constexpr int kDefaultFactorCap = 12;

// A set S with its deficiency i(G - S) - |S|.
struct DeficiencyWitness {
  VertexSet s;
  int deficiency = 0;
};

// i(G - S) - |S|, recomputed from the graph. S = V(G) gives -n.
int deficiency(const Graph& g, const VertexSet& s);

// Maximizes the deficiency over all 2^n subsets. Ties go to the smallest
// |S|, then the smallest bitmask. Throws SizeLimitExceeded when n > cap.
DeficiencyWitness max_deficiency_brute(const Graph& g, int cap = kDefaultBruteCap);

// Same maximum in polynomial time: X is the set of left vertices of the
// double cover reachable by alternating paths from unmatched left vertices
// (the Gallai-Edmonds "D" side), and S = N_G(X). No tie-breaking guarantee.
DeficiencyWitness max_deficiency_fast(const Graph& g);

// mu_f(G) = (n - max deficiency) / 2 by exhaustive subset enumeration.
Rational fractional_matching_number_brute(const Graph& g, int cap = kDefaultBruteCap);

// G x K2: vertex v becomes (v,0) -> v and (v,1) -> n + v; each edge uv
// yields (u,0)-(v,1) and (v,0)-(u,1).
Graph bipartite_double_cover(const Graph& g);

struct BipartiteMatching {
  std::vector<int> mate_left;   // -1 when unmatched
  std::vector<int> mate_right;  // -1 when unmatched
  int size = 0;
};

// Hopcroft-Karp maximum matching. adjacency[u] lists the right neighbours of
// left vertex u.
BipartiteMatching hopcroft_karp(int left_count, int right_count,
                                const std::vector<std::vector<int>>& adjacency);

// Half the maximum matching of the bipartite double cover.
Rational fractional_matching_number_fast(const Graph& g);

// Half-integral fractional matching: each edge carries 0, 1/2 or 1.
class FractionalMatching {
 public:
  FractionalMatching(std::vector<Edge> edges, std::vector<int> half_weights);

  const std::vector<Edge>& edges() const { return edges_; }
  Rational weight(std::size_t i) const { return Rational(half_weights_[i], 2); }
  Rational value() const;
  // Per-vertex incident weight is at most 1 and every edge belongs to g.
  bool is_valid_for(const Graph& g) const;

 private:
  std::vector<Edge> edges_;
  std::vector<int> half_weights_;
};

// Built from a maximum matching of the double cover: an edge gets half a
// unit for each of its two lifts that is matched.
FractionalMatching optimal_fractional_matching(const Graph& g);

struct FactorCheck {
  bool has_factor = false;
  // Set when has_factor is false: a set S with i(G - S) > |S|.
  std::optional<DeficiencyWitness> witness;
};

// {K2, {Ck}}-factor existence: i(G - S) <= |S| for every S, i.e. mu_f = n/2.
// The violating witness comes from brute force for n <= brute_cap (with its
// deterministic tie-break) and from max_deficiency_fast above that.
FactorCheck has_k2ck_factor(const Graph& g, int brute_cap = kDefaultBruteCap);

// Spanning subgraph whose components are single edges or cycles.
struct Factor {
  // Each component lists its vertices; a cycle in traversal order.
  std::vector<std::vector<Vertex>> components;
  std::vector<Edge> edges() const;
};

bool is_k2ck_factor(const Graph& g, const Factor& f);

// Explicit factor search by backtracking (edges tried before cycles, lowest
// residual degree first). Throws SizeLimitExceeded when n > cap.
std::optional<Factor> find_factor_backtracking(const Graph& g, int cap = kDefaultFactorCap);

}  // namespace distsl
