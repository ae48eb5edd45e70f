#include "distsl/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "distsl/errors.hpp"

namespace distsl {

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (!members_.empty() && members_.front() < 0) {
    throw InvalidParameter("vertex set contains a negative label");
  }
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw InvalidParameter("vertex set contains a duplicate label");
  }
}

VertexSet VertexSet::from_mask(std::uint64_t mask) {
  std::vector<Vertex> members;
  for (Vertex v = 0; mask != 0; ++v, mask >>= 1) {
    if (mask & 1U) members.push_back(v);
  }
  return VertexSet(std::move(members));
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

std::string VertexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i > 0) os << ", ";
    os << members_[i];
  }
  os << '}';
  return os.str();
}

Graph::Graph(int n) : n_(n) {
  if (n < 1) throw InvalidParameter("graph order must be at least 1");
  adj_.assign(static_cast<std::size_t>(n) * n, 0);
  nbrs_.resize(n);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const auto& [u, v] : edges) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) {
      throw InvalidParameter("self-loop at vertex " + std::to_string(u));
    }
    if (adjacent(u, v)) {
      throw InvalidParameter("duplicate edge " + std::to_string(u) + "-" +
                             std::to_string(v));
    }
    adj_[static_cast<std::size_t>(u) * n_ + v] = 1;
    adj_[static_cast<std::size_t>(v) * n_ + u] = 1;
    nbrs_[u].push_back(v);
    nbrs_[v].push_back(u);
    ++m_;
  }
  for (auto& list : nbrs_) std::sort(list.begin(), list.end());
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw InvalidParameter("vertex " + std::to_string(v) +
                           " out of range for order " + std::to_string(n_));
  }
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : nbrs_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
  auto e = edges();
  e.emplace_back(u, v);
  return Graph(n_, e);
}

Graph make_named(NamedGraph kind, int n) {
  if (n < 1) throw InvalidParameter("graph order must be at least 1");
  std::vector<Edge> edges;
  switch (kind) {
    case NamedGraph::complete:
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      }
      break;
    case NamedGraph::cycle:
      if (n < 3) {
        throw InvalidParameter("cycle needs at least 3 vertices, got " +
                               std::to_string(n));
      }
      for (Vertex u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
      edges.emplace_back(0, n - 1);
      break;
    case NamedGraph::path:
      for (Vertex u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
      break;
    case NamedGraph::empty:
      break;
  }
  return Graph(n, edges);
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const int shift = g1.order();
  auto edges = g1.edges();
  for (const auto& [u, v] : g2.edges()) edges.emplace_back(u + shift, v + shift);
  return Graph(g1.order() + g2.order(), edges);
}

Graph join(const Graph& g1, const Graph& g2) {
  const int shift = g1.order();
  auto edges = g1.edges();
  for (const auto& [u, v] : g2.edges()) edges.emplace_back(u + shift, v + shift);
  for (Vertex u = 0; u < g1.order(); ++u) {
    for (Vertex v = 0; v < g2.order(); ++v) edges.emplace_back(u, v + shift);
  }
  return Graph(g1.order() + g2.order(), edges);
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    }
  }
  return Graph(g.order(), edges);
}

Graph delete_vertices(const Graph& g, const VertexSet& s) {
  const int n = g.order();
  if (!s.empty() && s.members().back() >= n) {
    throw InvalidParameter("deleted vertex " + std::to_string(s.members().back()) +
                           " out of range");
  }
  if (static_cast<int>(s.size()) >= n) {
    throw InvalidParameter("cannot delete every vertex of the graph");
  }
  std::vector<Vertex> relabel(n, -1);
  int next = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (!s.contains(v)) relabel[v] = next++;
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) {
    if (relabel[u] >= 0 && relabel[v] >= 0) edges.emplace_back(relabel[u], relabel[v]);
  }
  return Graph(next, edges);
}

int component_count(const Graph& g) {
  std::vector<bool> seen(g.order(), false);
  int components = 0;
  for (Vertex root = 0; root < g.order(); ++root) {
    if (seen[root]) continue;
    ++components;
    std::queue<Vertex> queue;
    queue.push(root);
    seen[root] = true;
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop();
      for (Vertex v : g.neighbors(u)) {
        if (!seen[v]) {
          seen[v] = true;
          queue.push(v);
        }
      }
    }
  }
  return components;
}

bool is_connected(const Graph& g) { return component_count(g) == 1; }

int isolated_count(const Graph& g) {
  int count = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) ++count;
  }
  return count;
}

}  // namespace distsl
