#pragma once

// Finite posets and finite <join,0>-semilattices given by explicit tables.
//
// Elements are dense ids 0..n-1 with a display name. Orders are stored as a
// pair of bit matrices (up-sets by row and down-sets by row) so that leq is
// one bit probe and set-valued queries reduce to word kernels.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "meetless/bitmatrix.hpp"

namespace meetless {

using ElementId = std::uint32_t;

class FinitePoset {
 public:
  FinitePoset() = default;

  // `leq` must already be a partial order; it is checked, not repaired.
  // Throws NotAPartialOrder naming the first violating pair.
  static FinitePoset from_relation(std::vector<std::string> names,
                                   BitMatrix leq);

  // Reflexive-transitive closure of the listed pairs (x <= y). Throws
  // NotAPartialOrder if the closure has a cycle.
  static FinitePoset from_pairs(
      std::vector<std::string> names,
      std::span<std::pair<ElementId, ElementId> const> pairs);

  std::size_t size() const noexcept { return names_.size(); }
  std::string const& name(ElementId x) const { return names_.at(x); }
  std::vector<std::string> const& names() const noexcept { return names_; }
  std::optional<ElementId> find(std::string_view name) const;
  // Throws UnknownElement.
  ElementId id_of(std::string_view name) const;

  bool leq(ElementId x, ElementId y) const noexcept { return up_.test(x, y); }
  bool less(ElementId x, ElementId y) const noexcept {
    return x != y && up_.test(x, y);
  }

  // Row x: {y : x <= y}.
  BitMatrix const& up_sets() const noexcept { return up_; }
  // Row x: {y : y <= x}.
  BitMatrix const& down_sets() const noexcept { return down_; }

  // Covering pairs (x, y): x < y with nothing strictly between.
  std::vector<std::pair<ElementId, ElementId>> covers() const;

  friend bool operator==(FinitePoset const& a, FinitePoset const& b) {
    return a.names_ == b.names_ && a.up_ == b.up_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, ElementId> index_;
  BitMatrix up_;
  BitMatrix down_;
};

// ↓X. Throws UnknownElement for ids outside P.
std::vector<ElementId> lower_set(FinitePoset const& poset,
                                 std::span<ElementId const> xs);

class FiniteJoinSemilattice {
 public:
  FiniteJoinSemilattice() = default;

  FinitePoset const& poset() const noexcept { return poset_; }
  std::size_t size() const noexcept { return poset_.size(); }
  std::string const& name(ElementId x) const { return poset_.name(x); }
  std::optional<ElementId> find(std::string_view n) const {
    return poset_.find(n);
  }
  ElementId id_of(std::string_view n) const { return poset_.id_of(n); }

  ElementId zero() const noexcept { return zero_; }
  ElementId join(ElementId x, ElementId y) const noexcept {
    return join_[x * size() + y];
  }
  bool leq(ElementId x, ElementId y) const noexcept {
    return poset_.leq(x, y);
  }
  std::span<ElementId const> join_table() const noexcept { return join_; }

  // Top element (the join of everything); finite semilattices always have one.
  ElementId top() const noexcept { return top_; }

  friend bool operator==(FiniteJoinSemilattice const& a,
                         FiniteJoinSemilattice const& b) {
    return a.poset_ == b.poset_ && a.zero_ == b.zero_ && a.join_ == b.join_;
  }

 private:
  friend FiniteJoinSemilattice validate_semilattice(FinitePoset,
                                                    ElementId,
                                                    std::vector<ElementId>);
  FinitePoset poset_;
  ElementId zero_ = 0;
  ElementId top_ = 0;
  std::vector<ElementId> join_;
};

// Checks that `zero` is least and that join_table (row-major n*n) gives the
// least upper bound of every pair under the poset's order.
// Throws NotAPartialOrder, NoZero or JoinNotLub, each naming the first
// violating element or pair in id order.
FiniteJoinSemilattice validate_semilattice(FinitePoset poset, ElementId zero,
                                           std::vector<ElementId> join_table);

// Derives the order from the join table (x <= y iff x v y = y), then
// validates as above.
FiniteJoinSemilattice semilattice_from_joins(std::vector<std::string> names,
                                             ElementId zero,
                                             std::vector<ElementId> join_table);

// Builds the semilattice of a finite poset that is already a lattice with a
// least element, computing joins as least upper bounds. Throws JoinNotLub if
// some pair has no least upper bound, NoZero if there is no least element.
FiniteJoinSemilattice semilattice_from_poset(FinitePoset poset);

struct DistributivityCounterexample {
  ElementId c, a, b;
  friend bool operator==(DistributivityCounterexample const&,
                         DistributivityCounterexample const&) = default;
};

// First (c, a, b) in lexicographic id order with c <= a v b and no x <= a,
// y <= b such that c = x v y; nullopt when S is distributive.
std::optional<DistributivityCounterexample> distributivity_counterexample(
    FiniteJoinSemilattice const& s);

inline bool is_distributive(FiniteJoinSemilattice const& s) {
  return !distributivity_counterexample(s).has_value();
}

// In a finite semilattice every element is the join of the join-irreducibles
// below it, so strong distributivity coincides with distributivity.
inline bool is_strongly_distributive(FiniteJoinSemilattice const& s) {
  return is_distributive(s);
}

std::vector<ElementId> join_irreducibles(FiniteJoinSemilattice const& s);

// Greatest lower bound: the join of all common lower bounds.
ElementId meet(FiniteJoinSemilattice const& s, ElementId x, ElementId y);

// Join of a (possibly empty) set of elements.
ElementId join_all(FiniteJoinSemilattice const& s,
                   std::span<ElementId const> xs);

class IsotoneMap {
 public:
  // Throws NotIsotone naming the first pair x <= y with f(x) !<= f(y).
  static IsotoneMap make(FinitePoset source, FinitePoset target,
                         std::vector<ElementId> graph);

  FinitePoset const& source() const noexcept { return source_; }
  FinitePoset const& target() const noexcept { return target_; }
  ElementId operator()(ElementId x) const { return graph_.at(x); }
  std::vector<ElementId> const& graph() const noexcept { return graph_; }

 private:
  FinitePoset source_;
  FinitePoset target_;
  std::vector<ElementId> graph_;
};

class JoinZeroHomomorphism {
 public:
  // Throws NotAHomomorphism naming the first pair whose join is not
  // preserved (or the zero).
  static JoinZeroHomomorphism make(FiniteJoinSemilattice source,
                                   FiniteJoinSemilattice target,
                                   std::vector<ElementId> graph);

  FiniteJoinSemilattice const& source() const noexcept { return source_; }
  FiniteJoinSemilattice const& target() const noexcept { return target_; }
  ElementId operator()(ElementId x) const { return graph_.at(x); }
  std::vector<ElementId> const& graph() const noexcept { return graph_; }

  // this ∘ first
  JoinZeroHomomorphism after(JoinZeroHomomorphism const& first) const;

 private:
  FiniteJoinSemilattice source_;
  FiniteJoinSemilattice target_;
  std::vector<ElementId> graph_;
};

}  // namespace meetless
