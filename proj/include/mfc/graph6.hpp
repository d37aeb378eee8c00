#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "mfc/graph.hpp"

namespace mfc {

class Graph6Error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Decodes one graph6 line. A leading ">>graph6<<" header and trailing
/// "\n"/"\r\n" are accepted. Throws Graph6Error on bytes outside 63..126,
/// a truncated or overlong payload, or n outside [1, 64].
Graph parse_graph6(std::string_view text);

/// Encodes g as graph6 without a trailing newline.
std::string to_graph6(const Graph& g);

}  // namespace mfc
