#pragma once

// Exhaustive generation of small finite lattices, one per isomorphism class.
//
// A finite <join,0>-semilattice always has a top and all meets, so the
// semilattices with n elements are exactly the n-element lattices. Each one
// is built as 0 + (poset on n-2 middle elements) + 1, kept when every pair has
// a least upper bound, and deduplicated by a canonical form (the least order
// matrix over all relabellings of the middle elements).

#include <cstdint>
#include <vector>

#include "meetless/order.hpp"

namespace meetless {

// All lattices with exactly n elements up to isomorphism, in canonical order.
// Element names: "0", then "x1".."x{n-2}", then "1" (a single "0" when n=1).
std::vector<FiniteJoinSemilattice> lattices_of_size(std::size_t n);

// Concatenation of lattices_of_size(1..max_n).
std::vector<FiniteJoinSemilattice> lattices_up_to(std::size_t max_n);

// The distributive members of lattices_up_to(max_n).
std::vector<FiniteJoinSemilattice> distributive_up_to(std::size_t max_n);

// 64-bit FNV-1a of the canonical JSON text; stable across runs and platforms.
std::uint64_t content_hash(FiniteJoinSemilattice const& s);

}  // namespace meetless
