#pragma once

// Congruences of finite lattices and the semilattice Conc L they form.

#include <memory>
#include <string>
#include <vector>

#include "meetless/order.hpp"

namespace meetless {

struct PosetMeasure;

class FiniteLattice {
 public:
  // Meets computed as greatest lower bounds.
  static FiniteLattice from_semilattice(FiniteJoinSemilattice s);
  // Meets supplied by a table (row-major n*n); throws MeetNotGlb naming the
  // first pair whose entry is not the greatest lower bound.
  static FiniteLattice with_meets(FiniteJoinSemilattice s,
                                  std::vector<ElementId> meet_table);

  FiniteJoinSemilattice const& semilattice() const noexcept { return s_; }
  std::size_t size() const noexcept { return s_.size(); }
  ElementId join(ElementId x, ElementId y) const noexcept {
    return s_.join(x, y);
  }
  ElementId meet(ElementId x, ElementId y) const noexcept {
    return meet_[x * size() + y];
  }
  bool leq(ElementId x, ElementId y) const noexcept { return s_.leq(x, y); }
  std::string const& name(ElementId x) const { return s_.name(x); }
  std::span<ElementId const> meet_table() const noexcept { return meet_; }

 private:
  FiniteJoinSemilattice s_;
  std::vector<ElementId> meet_;
};

// A partition of the lattice, stored as block labels numbered in order of
// first occurrence; equal partitions have equal labels.
class Congruence {
 public:
  Congruence() = default;
  explicit Congruence(std::vector<std::uint32_t> labels);

  static Congruence identity(std::size_t n);
  static Congruence full(std::size_t n);

  std::size_t size() const noexcept { return labels_.size(); }
  bool same(ElementId x, ElementId y) const {
    return labels_.at(x) == labels_.at(y);
  }
  std::vector<std::uint32_t> const& labels() const noexcept { return labels_; }
  std::size_t block_count() const noexcept;
  // Sorted list of sorted blocks.
  std::vector<std::vector<ElementId>> blocks() const;

  // Every block of *this lies inside a block of other.
  bool refines(Congruence const& other) const;

  friend bool operator==(Congruence const&, Congruence const&) = default;
  friend auto operator<=>(Congruence const&, Congruence const&) = default;

 private:
  std::vector<std::uint32_t> labels_;
};

// Compatible with join and meet.
bool is_congruence(FiniteLattice const& l, Congruence const& theta);

// Least congruence collapsing x and y, by closure to a fixpoint.
Congruence principal_congruence(FiniteLattice const& l, ElementId x,
                                ElementId y);

// Smallest equivalence containing both (always a congruence again).
Congruence congruence_join(Congruence const& a, Congruence const& b);

struct ConcSemilattice {
  FiniteJoinSemilattice semilattice;  // ids index `members`
  std::vector<Congruence> members;

  ElementId id_of(Congruence const& theta) const;
};

// All congruences as the join-closure of the principal ones, ordered by
// refinement. Zero is the identity; element names list the blocks.
ConcSemilattice all_congruences(FiniteLattice const& l);

// Independent oracle: filter every partition of the carrier for
// compatibility. Sorted. Throws TooLarge above `max_elements` (default 9).
std::vector<Congruence> congruences_by_partition_filter(
    FiniteLattice const& l, std::size_t max_elements = 9);

// mu(x, y) = Θ(y, x v y) in Conc L.
struct ThetaPlus {
  std::shared_ptr<ConcSemilattice const> conc;
  std::vector<ElementId> table;  // row-major n*n, ids in conc
};
ThetaPlus theta_plus(FiniteLattice const& l);

// The same measure packaged for the measure checkers.
PosetMeasure theta_plus_measure(FiniteLattice const& l);

// Display name of a congruence: "[[x,y],[z]]" using element names.
std::string congruence_name(FiniteLattice const& l, Congruence const& theta);

}  // namespace meetless
