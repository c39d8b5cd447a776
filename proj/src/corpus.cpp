#include <string>

#include "tilab/errors.hpp"
#include "tilab/graph6.hpp"
#include "tilab/search.hpp"

namespace tilab {

Corpus load_graph6_corpus(std::istream& in, bool strict) {
  Corpus out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.graphs.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      if (strict) throw ParseError(e.what(), number);
      out.errors.push_back({number, e.what()});
    }
  }
  return out;
}

}  // namespace tilab
