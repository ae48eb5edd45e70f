#include <random>

#include "doctest.h"
#include "distsl/errors.hpp"
#include "distsl/graph_io.hpp"
#include "support.hpp"

using namespace distsl;

TEST_CASE("graph6 decodes the triangle") {
  const Graph g = parse_graph6("Bw");
  CHECK(g == make_named(NamedGraph::complete, 3));
  CHECK(to_graph6(g) == "Bw");
  CHECK(parse_graph6(">>graph6<<Bw\n") == g);
}

TEST_CASE("graph6 known encodings") {
  CHECK(to_graph6(Graph(1)) == "@");
  CHECK(to_graph6(make_named(NamedGraph::cycle, 5)) == "Dhc");
  CHECK(to_graph6(make_named(NamedGraph::path, 3)) == "Bg");
  CHECK(to_graph6(make_named(NamedGraph::complete, 4)) == "C~");
}

TEST_CASE("graph6 round trip up to n = 62") {
  std::mt19937_64 rng(62);
  for (int n = 1; n <= 62; ++n) {
    for (double p : {0.1, 0.5, 0.9}) {
      const Graph g = testing::random_graph(rng, n, p);
      const std::string code = to_graph6(g);
      CHECK(code.size() == 1 + (static_cast<std::size_t>(n) * (n - 1) / 2 + 5) / 6);
      CHECK(parse_graph6(code) == g);
      CHECK(to_graph6(parse_graph6(code)) == code);
    }
  }
}

TEST_CASE("graph6 long form") {
  std::mt19937_64 rng(63);
  const Graph g = testing::random_graph(rng, 100, 0.2);
  const std::string code = to_graph6(g);
  CHECK(code[0] == '~');
  CHECK(parse_graph6(code) == g);
}

TEST_CASE("graph6 errors name the byte") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("Bww"), ParseError);
  CHECK_THROWS_AS(parse_graph6("B"), ParseError);
  try {
    parse_graph6("D!c");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("byte 1") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_graph6("Bx"), ParseError);  // nonzero padding
}

TEST_CASE("edge list parsing") {
  CHECK(parse_edgelist("3 2\n0 1\n1 2\n") == make_named(NamedGraph::path, 3));
  CHECK(parse_edgelist("# comment\n\n2 1\n1 0\n") == make_named(NamedGraph::complete, 2));

  try {
    parse_edgelist("3 2\n0 1\n0 0\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    const std::string what = e.what();
    CHECK(what.find("line 3") != std::string::npos);
    CHECK(what.find("self-loop") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_edgelist("3 2\n0 1\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_edgelist("3 1\n0 3\n"), ParseError);
  CHECK_THROWS_AS(parse_edgelist("3\n"), ParseError);
  CHECK_THROWS_AS(parse_edgelist("3 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_edgelist("3 1\n0 1\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_edgelist("x y\n"), ParseError);
  CHECK_THROWS_AS(parse_edgelist(""), ParseError);
}

TEST_CASE("edge list round trip") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    const Graph g = testing::random_graph(rng, testing::uniform_int(rng, 1, 20), 0.3);
    CHECK(parse_edgelist(to_edgelist(g)) == g);
  }
}
