#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace distsl {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Sorted, duplicate-free set of vertex labels.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members);
  explicit VertexSet(std::vector<Vertex> members);

  // Bit i of `mask` selects vertex i.
  static VertexSet from_mask(std::uint64_t mask);

  bool contains(Vertex v) const;
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<Vertex>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  // Formats as "{0, 3, 5}".
  std::string to_string() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

// Simple undirected graph on vertices 0..n-1. Immutable once built; every
// edit returns a new value.
class Graph {
 public:
  // Edgeless graph on n >= 1 vertices.
  explicit Graph(int n);
  // Rejects out-of-range labels, self-loops and repeated edges.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return n_; }
  std::size_t size() const { return m_; }

  bool adjacent(Vertex u, Vertex v) const {
    return adj_[static_cast<std::size_t>(u) * n_ + v] != 0;
  }
  std::span<const Vertex> neighbors(Vertex v) const { return nbrs_[v]; }
  int degree(Vertex v) const { return static_cast<int>(nbrs_[v].size()); }

  // All edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  // Copy of this graph with the non-edge uv added.
  Graph with_edge(Vertex u, Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  void check_vertex(Vertex v) const;

  int n_;
  std::size_t m_ = 0;
  std::vector<std::uint8_t> adj_;
  std::vector<std::vector<Vertex>> nbrs_;
};

enum class NamedGraph { complete, cycle, path, empty };

Graph make_named(NamedGraph kind, int n);

// G1 v G2: labels of g1 first, then g2's labels shifted by g1.order().
Graph join(const Graph& g1, const Graph& g2);
// G1 + G2 with the same labeling rule as join().
Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph complement(const Graph& g);
// Induced subgraph on V(G) \ s; surviving labels are compacted in order.
Graph delete_vertices(const Graph& g, const VertexSet& s);

bool is_connected(const Graph& g);
int component_count(const Graph& g);
int isolated_count(const Graph& g);

}  // namespace distsl
