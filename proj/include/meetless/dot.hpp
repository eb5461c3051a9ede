#pragma once

#include <string>

#include "meetless/order.hpp"

namespace meetless {

// Hasse diagram in Graphviz DOT: one node per element, one edge per
// covering pair (the transitive reduction), drawn bottom to top.
std::string hasse_dot(FinitePoset const& p, std::string const& graph_name = "P");

}  // namespace meetless
