#pragma once

// Text syntax for elements of F(Λ):
//
//   term := "0" | "a" | "b" | "c(" nat ")"
//         | "join(" term {"," term} ")"
//         | "bowtie" ["@" nat] "(" term "," term "," term ")"
//
// bowtie(u,v,w) is the generator one level above its highest component;
// bowtie@L(u,v,w) places it at level L explicitly, which the printer needs
// for sets that mix components of different ranks. Whitespace is ignored.

#include <string>
#include <string_view>

#include "meetless/free_ext.hpp"

namespace meetless {

// Throws ParseError with the byte offset, or the construction error
// (NotInC, RankTooHigh) of an ill-formed generator.
FreeElement parse_term(std::string_view text);

// Canonical text; parse_term(print_term(x)) == x.
std::string print_term(FreeElement const& x);

// The same layout with base elements named by `base`; for display over
// other bases (not parseable in general).
std::string print_term(FreeElement const& x, Base const& base);

}  // namespace meetless
