#include "meetless/dot.hpp"

namespace meetless {
namespace {

std::string quoted(std::string const& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string hasse_dot(FinitePoset const& p, std::string const& graph_name) {
  std::string out = "digraph " + quoted(graph_name) + " {\n  rankdir=BT;\n";
  for (ElementId x = 0; x < p.size(); ++x) {
    out += "  " + quoted(p.name(x)) + ";\n";
  }
  for (auto [x, y] : p.covers()) {
    out += "  " + quoted(p.name(x)) + " -> " + quoted(p.name(y)) + ";\n";
  }
  return out + "}\n";
}

}  // namespace meetless
