#pragma once

// JSON interchange for semilattices, lattices, posets, measures and
// refinement problems. Objects are emitted with sorted keys and tables in id
// order, so output is byte-stable. Malformed input raises ParseError;
// structural violations raise the checker's own error kinds.

#include <string>

#include <json.hpp>

#include "meetless/congruence.hpp"
#include "meetless/measures.hpp"
#include "meetless/order.hpp"
#include "meetless/refinement.hpp"

namespace meetless {

using Json = nlohmann::json;

// Parses text, mapping syntax errors to ParseError.
Json parse_json(std::string const& text);
Json read_json_file(std::string const& path);  // "-" reads stdin

// {"elements":[...], "zero":x, "joins":[[x,y,z],...], "order"?:[[x,y],...]}
// Joins may list each unordered pair once in either orientation; a missing
// pair is an error. "order", when present, must agree with the joins.
Json semilattice_to_json(FiniteJoinSemilattice const& s);
FiniteJoinSemilattice semilattice_from_json(Json const& j);

// The semilattice format plus "meets" (optional; derived when absent).
Json lattice_to_json(FiniteLattice const& l);
FiniteLattice lattice_from_json(Json const& j);

// {"elements":[...], "order":[[x,y],...]}; the reflexive-transitive closure
// of the listed pairs.
Json poset_to_json(FinitePoset const& p);
FinitePoset poset_from_json(Json const& j);

// {"poset":{...}, "values":"terms" | {semilattice}, "depth":d,
//  "pairs"?:[[a,b],...], "mu":[[x,y,v],...]}
// Entries omitted from "mu" are 0. With "terms", values are F(Λ) terms.
Json measure_to_json(PosetMeasure const& m);
PosetMeasure measure_from_json(Json const& j);
std::string value_name(PosetMeasure const& m, FreeElement const& v);
FreeElement value_from_name(PosetMeasure const& m, std::string const& text);

// {"semilattice":{...}, "a":x, "b":y, "chain":[...], "order"?:[positions]}
struct ProblemFile {
  RefinementProblem problem;
  std::vector<std::size_t> order;
};
ProblemFile problem_from_json(Json const& j);
Json witness_to_json(RefinementProblem const& p, RefinementWitness const& w);

}  // namespace meetless
