#pragma once

// Seeded random generation of elements of F(Λ) and of index sets, shared by
// the property suites and the tests.

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "meetless/chain.hpp"

namespace meetless {

using Rng = std::mt19937_64;

struct SampleShape {
  std::uint64_t max_complexity = 6;
  std::uint32_t max_rank = 2;
};

// A random term over the given atoms (base codes), built from joins and
// bowties; w of each bowtie is drawn from elements known to lie below u v v.
// The result respects the shape bounds.
FreeElement random_element(Rng& rng, FreeExtension const& ext,
                           std::span<Code const> atoms, SampleShape shape = {});

// Nontrivial generators bowtie(u,v,w) over a carrier of base codes, in
// carrier order.
std::vector<FreeElement> base_bowties(FreeExtension const& ext,
                                      std::span<Code const> carrier);

// Sorted random subset of {0..universe-1}, each member kept with
// probability p.
std::vector<ChainIndex> random_index_set(Rng& rng, ChainIndex universe,
                                         double p = 0.5);

}  // namespace meetless
