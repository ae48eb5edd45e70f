#include <random>

#include "doctest.h"
#include "distsl/errors.hpp"
#include "distsl/graph.hpp"
#include "support.hpp"

using namespace distsl;

namespace {
Graph K(int n) { return make_named(NamedGraph::complete, n); }
Graph E(int n) { return make_named(NamedGraph::empty, n); }
}  // namespace

TEST_CASE("named graphs") {
  const Graph k4 = K(4);
  CHECK(k4.size() == 6);
  for (Vertex v = 0; v < 4; ++v) CHECK(k4.degree(v) == 3);

  const Graph p3 = make_named(NamedGraph::path, 3);
  CHECK(p3.edges() == std::vector<Edge>{{0, 1}, {1, 2}});

  const Graph c5 = make_named(NamedGraph::cycle, 5);
  CHECK(c5.size() == 5);
  for (Vertex v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);

  CHECK_THROWS_AS(make_named(NamedGraph::cycle, 2), InvalidParameter);
  CHECK_THROWS_AS(make_named(NamedGraph::complete, 0), InvalidParameter);
}

TEST_CASE("graph construction rejects bad edges") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), InvalidParameter);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), InvalidParameter);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), InvalidParameter);
  CHECK_THROWS_AS(Graph(0), InvalidParameter);
}

TEST_CASE("vertex sets") {
  const VertexSet s{3, 0, 5};
  CHECK(s.to_string() == "{0, 3, 5}");
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(1));
  CHECK(VertexSet::from_mask(0b101001) == s);
  CHECK(VertexSet{}.to_string() == "{}");
  CHECK_THROWS_AS(VertexSet({1, 1}), InvalidParameter);
  CHECK_THROWS_AS(VertexSet({-1}), InvalidParameter);
}

TEST_CASE("join") {
  const Graph p3 = join(K(1), E(2));
  CHECK(p3.order() == 3);
  CHECK(p3.size() == 2);
  CHECK(p3.degree(0) == 2);

  CHECK(join(K(2), E(3)).size() == 7);

  const Graph g1 = join(K(1), disjoint_union(K(2), E(2)));
  CHECK(g1.order() == 5);
  CHECK(g1.size() == 5);
}

TEST_CASE("disjoint union") {
  const Graph two_k2 = disjoint_union(K(2), K(2));
  CHECK(two_k2.order() == 4);
  CHECK(two_k2.size() == 2);
  CHECK(component_count(two_k2) == 2);
  CHECK(disjoint_union(K(1), E(3)) == E(4));
  const Graph mid = disjoint_union(K(5 - 2 - 1), E(1 + 1));
  CHECK(mid == disjoint_union(K(2), E(2)));
  CHECK(mid.size() == 1);
}

TEST_CASE("complement") {
  CHECK(complement(K(4)) == E(4));
  const Graph c5 = make_named(NamedGraph::cycle, 5);
  const Graph cc = complement(c5);
  CHECK(cc.size() == 5);
  for (Vertex v = 0; v < 5; ++v) CHECK(cc.degree(v) == 2);
  CHECK(is_connected(cc));

  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    const Graph g = testing::random_graph(rng, testing::uniform_int(rng, 1, 12), 0.4);
    CHECK(complement(complement(g)) == g);
  }
}

TEST_CASE("vertex deletion") {
  const Graph star = testing::star(3);
  CHECK(delete_vertices(star, {0}) == E(3));
  CHECK(delete_vertices(make_named(NamedGraph::cycle, 5), {0}) ==
        make_named(NamedGraph::path, 4));
  CHECK(delete_vertices(K(4), {0, 1}) == K(2));
  CHECK_THROWS_AS(delete_vertices(K(2), {0, 1}), InvalidParameter);
  CHECK_THROWS_AS(delete_vertices(K(2), {5}), InvalidParameter);
}

TEST_CASE("connectivity and isolated vertices") {
  CHECK(is_connected(make_named(NamedGraph::path, 3)));
  CHECK_FALSE(is_connected(disjoint_union(K(2), K(2))));
  CHECK(is_connected(Graph(1)));
  CHECK(isolated_count(E(3)) == 3);
  CHECK(isolated_count(delete_vertices(testing::star(3), {0})) == 3);
  CHECK(isolated_count(make_named(NamedGraph::cycle, 5)) == 0);
}

TEST_CASE("edge addition") {
  const Graph p3 = make_named(NamedGraph::path, 3);
  const Graph k3 = p3.with_edge(0, 2);
  CHECK(k3 == K(3));
  CHECK_THROWS_AS(p3.with_edge(0, 1), InvalidParameter);
}
