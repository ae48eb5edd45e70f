#include "distsl/graph_io.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <vector>

#include "distsl/errors.hpp"

namespace distsl {
namespace {

constexpr int kShortFormLimit = 62;
constexpr int kLongFormLimit = 258047;

std::string byte_context(std::size_t pos, char c) {
  return "byte " + std::to_string(pos) + " ('" + std::string(1, c) + "')";
}

int sextet(std::string_view text, std::size_t pos) {
  const char c = text[pos];
  if (c < 63 || c > 126) throw ParseError("graph6: invalid " + byte_context(pos, c));
  return c - 63;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace

Graph parse_graph6(std::string_view raw) {
  const std::string text = trim(raw);
  if (text.empty()) throw ParseError("graph6: empty input");
  std::string_view body = text;
  if (body.starts_with(">>graph6<<")) body.remove_prefix(10);
  if (body.empty()) throw ParseError("graph6: missing header byte");

  int n = 0;
  std::size_t pos = 0;
  if (body[0] == '~') {
    if (body.size() >= 2 && body[1] == '~') {
      throw ParseError("graph6: orders above " + std::to_string(kLongFormLimit) +
                       " are not supported");
    }
    if (body.size() < 4) throw ParseError("graph6: truncated long-form header");
    n = (sextet(body, 1) << 12) | (sextet(body, 2) << 6) | sextet(body, 3);
    pos = 4;
  } else {
    n = sextet(body, 0);
    pos = 1;
  }
  if (n < 1) throw ParseError("graph6: order must be at least 1 (byte 0)");

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t expected = pos + (bits + 5) / 6;
  if (body.size() != expected) {
    throw ParseError("graph6: expected " + std::to_string(expected) + " bytes for n = " +
                     std::to_string(n) + ", got " + std::to_string(body.size()));
  }

  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int value = sextet(body, pos + bit / 6);
      if ((value >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  // Padding bits must be zero.
  if (bit % 6 != 0) {
    const std::size_t last = pos + bit / 6;
    if ((sextet(body, last) & ((1 << (6 - bit % 6)) - 1)) != 0) {
      throw ParseError("graph6: nonzero padding in " + byte_context(last, body[last]));
    }
  }
  return Graph(n, edges);
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= kShortFormLimit) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= kLongFormLimit) {
    out.push_back('~');
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  } else {
    throw InvalidParameter("graph6 encoding supports n <= " + std::to_string(kLongFormLimit));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

Graph parse_edgelist(std::istream& in) {
  std::string line;
  int line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      const std::string t = trim(line);
      if (t.empty() || t[0] == '#') continue;
      line = t;
      return true;
    }
    return false;
  };
  auto fail = [&](const std::string& what) -> ParseError {
    return ParseError("edgelist line " + std::to_string(line_no) + ": " + what);
  };

  if (!next_line()) throw ParseError("edgelist: missing 'n m' header");
  long long n = 0;
  long long m = 0;
  {
    std::istringstream header(line);
    std::string extra;
    if (!(header >> n >> m) || (header >> extra)) throw fail("expected header 'n m'");
  }
  if (n < 1 || n > 1'000'000) throw fail("order n must be between 1 and 1000000");
  if (m < 0 || m > n * (n - 1) / 2) throw fail("edge count m out of range");

  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (long long e = 0; e < m; ++e) {
    if (!next_line()) {
      throw ParseError("edgelist: expected " + std::to_string(m) + " edges, found " +
                       std::to_string(e));
    }
    std::istringstream row(line);
    long long u = 0;
    long long v = 0;
    std::string extra;
    if (!(row >> u >> v) || (row >> extra)) throw fail("expected 'u v'");
    if (u < 0 || u >= n || v < 0 || v >= n) throw fail("vertex label out of range");
    if (u == v) throw fail("self-loop at vertex " + std::to_string(u));
    const Edge key{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
    if (!seen.insert(key).second) {
      throw fail("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
    edges.push_back(key);
  }
  if (next_line()) throw fail("unexpected content after " + std::to_string(m) + " edges");
  return Graph(static_cast<int>(n), edges);
}

Graph parse_edgelist(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edgelist(in);
}

std::string to_edgelist(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace distsl
