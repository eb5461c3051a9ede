#pragma once

// Poset measures μ: P x P -> S and the V-measure decomposition property.
//
// Values are FreeElements over a shared FreeExtension, so one type covers
// measures into an explicit finite semilattice (rank-0 values over a
// TableBase) and into the levels of F(Λ).

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "meetless/free_ext.hpp"
#include "meetless/order.hpp"

namespace meetless {

using ValuePair = std::pair<FreeElement, FreeElement>;

struct PosetMeasure {
  FinitePoset poset;
  std::shared_ptr<FreeExtension const> ext;
  std::vector<FreeElement> mu;  // row-major n*n
  // Rank bound of the value level (informational for F(Λ)-valued measures).
  std::uint32_t depth = 0;
  // Pairs (a, b) tested by default when the value semilattice cannot be
  // enumerated; ignored when empty and the base is finite.
  std::vector<ValuePair> default_pairs;

  std::size_t size() const noexcept { return poset.size(); }
  FreeElement const& at(ElementId x, ElementId y) const {
    return mu.at(x * size() + y);
  }
};

struct MeasureViolation {
  enum class Kind { nonzero_on_comparable, triangle };
  Kind kind;
  ElementId x, y, z;  // z unused for nonzero_on_comparable
};

// First violation: pairs x <= y with μ(x,y) != 0 in id order, then triples
// (x,y,z) with μ(x,z) !<= μ(x,y) v μ(y,z) in lexicographic order.
std::optional<MeasureViolation> find_measure_violation(PosetMeasure const& m);
inline bool is_poset_measure(PosetMeasure const& m) {
  return !find_measure_violation(m).has_value();
}

enum class Side : std::uint8_t { a, b };

struct Decomposition {
  std::vector<ElementId> chain;  // z_0 = x, ..., z_n = y
  std::vector<Side> sides;       // sides[i] labels the step z_i -> z_{i+1}
};

struct FailureWitness {
  ElementId x, y;
  FreeElement a, b;
};

struct VMeasureLimits {
  // Largest interval [x, y] the search may explore.
  std::size_t max_interval = 4096;
};

// A chain x = z_0 < ... < z_n = y (or the single step x <= x) with each
// μ(z_{i+1}, z_i) below a or below b, found breadth first (shortest,
// smallest ids first). Throws SearchSpaceTooLarge.
std::optional<Decomposition> find_decomposition(PosetMeasure const& m,
                                                ElementId x, ElementId y,
                                                FreeElement const& a,
                                                FreeElement const& b,
                                                VMeasureLimits limits = {});

// Pairs tested when none are supplied: every pair of the finite base, or
// m.default_pairs.
std::vector<ValuePair> default_value_pairs(PosetMeasure const& m);

// Scans x ascending, y descending over x <= y, then the pairs in order, and
// returns the first (x, y, a, b) with μ(y, x) <= a v b but no decomposition.
std::optional<FailureWitness> find_v_measure_failure(
    PosetMeasure const& m, std::span<ValuePair const> pairs,
    VMeasureLimits limits = {});
std::optional<FailureWitness> find_v_measure_failure(
    PosetMeasure const& m, VMeasureLimits limits = {});

// The chain 0 < 1 < ... < n with μ(ξ,η) = 0 if ξ <= η, c_ξ if η < ξ < n and
// a v b if η < ξ = n, valued in S({0..n-1}) inside F(Λ). Default pair (a, b).
PosetMeasure counterexample_measure(std::uint32_t n, std::uint32_t depth = 0);

// Rows x_{i,ξ} = μ̄(ξ, z_{n-i}) for a chain z_0 <= ... <= z_n in P and
// indices ξ naming elements of P (element names are decimal indices).
struct SequencePattern;
SequencePattern extension_sequences(PosetMeasure const& mbar,
                                    std::span<ElementId const> chain,
                                    std::span<std::uint64_t const> indices);

// 1..N-1 where N is the largest element of P named by a natural number.
std::vector<std::uint64_t> default_extension_indices(PosetMeasure const& mbar);

}  // namespace meetless
