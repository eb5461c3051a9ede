#pragma once

// Small named structures shared by the unit tests.

#include <string>
#include <utility>
#include <vector>

#include "meetless/order.hpp"

namespace meetless::testing {

inline FiniteJoinSemilattice from_covers(
    std::vector<std::string> names,
    std::vector<std::pair<ElementId, ElementId>> covers) {
  return semilattice_from_poset(FinitePoset::from_pairs(std::move(names), covers));
}

// {0 < 1 < ... < n-1}
inline FiniteJoinSemilattice chain_of(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::pair<ElementId, ElementId>> covers;
  for (ElementId i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
    if (i > 0) covers.emplace_back(i - 1, i);
  }
  return from_covers(names, covers);
}

// The boolean square {0, a, b, ab}.
inline FiniteJoinSemilattice square() {
  return from_covers({"0", "a", "b", "ab"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

inline FiniteJoinSemilattice m3() {
  return from_covers({"0", "p", "q", "r", "1"},
                     {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
}

// 0 < x < y < 1 and 0 < z < 1.
inline FiniteJoinSemilattice n5() {
  return from_covers({"0", "x", "y", "z", "1"},
                     {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
}

}  // namespace meetless::testing
