#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "distsl/graph.hpp"

namespace distsl {

// graph6: header byte 63 + n for n <= 62, otherwise '~' followed by three
// 6-bit groups of n. Upper-triangle bits are read column by column
// (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed six to a byte plus 63.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// First line "n m", then m lines "u v" with 0-based labels. Blank lines and
// lines starting with '#' are skipped.
Graph parse_edgelist(std::istream& in);
Graph parse_edgelist(std::string_view text);
std::string to_edgelist(const Graph& g);

}  // namespace distsl
