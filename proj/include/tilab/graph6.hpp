#pragma once

#include <string>
#include <string_view>

#include "tilab/graph.hpp"

namespace tilab {

/// Parses one graph6 line (trailing whitespace ignored). Orders 63 and 64 use
/// the four-byte '~' size prefix. Throws ParseError.
Graph parse_graph6(std::string_view text);

std::string to_graph6(const Graph& g);

}  // namespace tilab
