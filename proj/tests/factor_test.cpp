#include <random>

#include "doctest.h"
#include "distsl/errors.hpp"
#include "distsl/matching.hpp"
#include "support.hpp"

using namespace distsl;

namespace {

// Exhaustive oracle: some edge subset has every degree in {1, 2} and no
// degree-1 vertex adjacent to a degree-2 vertex.
bool factor_by_edge_subsets(const Graph& g) {
  const auto edges = g.edges();
  const std::size_t m = edges.size();
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    std::vector<int> deg(g.order(), 0);
    for (std::size_t i = 0; i < m; ++i) {
      if (mask >> i & 1U) {
        ++deg[edges[i].first];
        ++deg[edges[i].second];
      }
    }
    bool ok = true;
    for (int d : deg) ok = ok && (d == 1 || d == 2);
    for (std::size_t i = 0; ok && i < m; ++i) {
      if (mask >> i & 1U) ok = deg[edges[i].first] == deg[edges[i].second];
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("factor examples") {
  const Graph c7 = make_named(NamedGraph::cycle, 7);
  CHECK(has_k2ck_factor(c7).has_factor);
  const auto f7 = find_factor_backtracking(c7);
  REQUIRE(f7);
  CHECK(is_k2ck_factor(c7, *f7));

  const Graph star = testing::star(3);
  const auto check = has_k2ck_factor(star);
  CHECK_FALSE(check.has_factor);
  REQUIRE(check.witness);
  CHECK(check.witness->s == VertexSet{0});
  CHECK(check.witness->deficiency == 2);
  CHECK_FALSE(find_factor_backtracking(star));

  const Graph k4 = make_named(NamedGraph::complete, 4);
  const auto f4 = find_factor_backtracking(k4);
  REQUIRE(f4);
  CHECK(is_k2ck_factor(k4, *f4));
  CHECK(f4->edges().size() == 2);

  const Graph c6 = make_named(NamedGraph::cycle, 6);
  const auto f6 = find_factor_backtracking(c6);
  REQUIRE(f6);
  CHECK(is_k2ck_factor(c6, *f6));

  const Graph c5 = make_named(NamedGraph::cycle, 5);
  const auto f5 = find_factor_backtracking(c5);
  REQUIRE(f5);
  REQUIRE(f5->components.size() == 1);
  CHECK(f5->components[0].size() == 5);
}

TEST_CASE("extremal graph has no factor") {
  // K1 v (K13 + co-K2), join vertex labelled 0.
  const Graph g = join(make_named(NamedGraph::complete, 1),
                       disjoint_union(make_named(NamedGraph::complete, 13),
                                      make_named(NamedGraph::empty, 2)));
  const auto check = has_k2ck_factor(g);
  CHECK_FALSE(check.has_factor);
  REQUIRE(check.witness);
  CHECK(check.witness->s == VertexSet{0});
}

TEST_CASE("factor certificate validation") {
  const Graph k4 = make_named(NamedGraph::complete, 4);
  CHECK(is_k2ck_factor(k4, Factor{{{0, 1}, {2, 3}}}));
  CHECK(is_k2ck_factor(k4, Factor{{{0, 1, 2, 3}}}));
  CHECK_FALSE(is_k2ck_factor(k4, Factor{{{0, 1}}}));
  CHECK_FALSE(is_k2ck_factor(k4, Factor{{{0, 1}, {1, 2, 3}}}));
  const Graph p4 = make_named(NamedGraph::path, 4);
  CHECK_FALSE(is_k2ck_factor(p4, Factor{{{0, 2}, {1, 3}}}));
  CHECK_FALSE(is_k2ck_factor(p4, Factor{{{0, 1, 2, 3}}}));
}

TEST_CASE("factor search cap") {
  CHECK_THROWS_AS(find_factor_backtracking(make_named(NamedGraph::complete, 13)),
                  SizeLimitExceeded);
  CHECK(find_factor_backtracking(make_named(NamedGraph::complete, 20), 20));
}

TEST_CASE("existence test, search and edge-subset oracle agree") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 150; ++t) {
    const int n = testing::uniform_int(rng, 1, 10);
    const Graph g = t % 4 == 0 ? testing::random_graph(rng, n, 0.3)
                               : testing::random_connected_graph(rng, n, 0.15);
    const auto check = has_k2ck_factor(g);
    const auto found = find_factor_backtracking(g);
    CHECK(check.has_factor == found.has_value());
    if (found) CHECK(is_k2ck_factor(g, *found));
    if (!check.has_factor) {
      REQUIRE(check.witness);
      CHECK(check.witness->deficiency > 0);
      CHECK(deficiency(g, check.witness->s) == check.witness->deficiency);
    }
    if (g.size() <= 16) CHECK(factor_by_edge_subsets(g) == check.has_factor);
  }
}
