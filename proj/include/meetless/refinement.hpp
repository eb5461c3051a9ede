#pragma once

// Monotone refinement: split an isotone chain (c_i) below a v b into isotone
// chains (a_i) below a and (b_i) below b with c_i = a_i v b_i.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "meetless/free_ext.hpp"
#include "meetless/order.hpp"

namespace meetless {

struct RefinementProblem {
  FiniteJoinSemilattice s;
  ElementId a = 0, b = 0;
  std::vector<ElementId> chain;

  // Throws NotIsotone when the chain decreases somewhere, HypothesisViolated
  // when some c_i is not below a v b, UnknownElement for bad ids.
  void validate() const;
};

struct RefinementWitness {
  std::vector<ElementId> as, bs;
  friend bool operator==(RefinementWitness const&,
                         RefinementWitness const&) = default;
};

// a_i <= a, b_i <= b, c_i = a_i v b_i, both sequences isotone.
bool is_valid_witness(RefinementProblem const& p, RefinementWitness const& w);

// a_i = a ^ c_i, b_i = b ^ c_i. Throws NotDistributive when the meets fail
// to rejoin to c_i.
RefinementWitness refine_lattice(RefinementProblem const& p);

// Per index, the maximal join-irreducibles C_i below c_i split into
// A_i = C_i below a and B_i = C_i below b at the last index, then propagated
// downwards: A_i = ↓A_{i+1} ∩ C_i, B_i = ↓B_{i+1} ∩ C_i. a_i = ⋁A_i,
// b_i = ⋁B_i. Throws NotDistributive.
struct JoinIrredCover {
  std::vector<std::vector<ElementId>> A, B;
};
JoinIrredCover join_irreducible_cover(RefinementProblem const& p);
RefinementWitness refine_strongly_distributive(RefinementProblem const& p);

// Inserts indices one at a time in `order` (a permutation of chain
// positions; natural order when empty), keeping a valid partial witness.
// Each new k between inserted neighbours i < k < j splits c_k <= a_j v b_j
// as a' v b' (least such pair by ids) and sets a_k = a_i v a',
// b_k = b_i v b'. Throws DistributivitySplitFailed.
RefinementWitness refine_sequential(RefinementProblem const& p,
                                    std::vector<std::size_t> order = {});

// Depth-first search over (a_i, b_i) in ↓a x ↓b, pruned by isotonicity and
// memoised on (i, a_{i-1}, b_{i-1}); nullopt means unsatisfiable.
// Throws TooLarge when |↓a| * |↓b| exceeds `guard`.
std::optional<RefinementWitness> refine_bruteforce(
    RefinementProblem const& p, std::size_t guard = 1u << 20);

// Rows x_{i,ξ} (i = 0..n) over a finite sample of indices ξ, valued in a
// FreeExtension, with the distinguished a, b and c_ξ.
struct SequencePattern {
  std::shared_ptr<FreeExtension const> ext;
  FreeElement a, b;
  std::vector<std::uint64_t> indices;
  std::vector<FreeElement> c;                // c[k] for indices[k]
  std::vector<std::vector<FreeElement>> x;   // x[i][k]
};

struct ConditionReport {
  bool holds = true;
  std::vector<bool> per_index;
  // First failure as (row, index position); row unused for condition 1.
  std::optional<std::pair<std::size_t, std::size_t>> first_violation;
};

struct PatternReport {
  ConditionReport cond1;  // x_0 = 0 and x_n = c
  ConditionReport cond2;  // every x_i <= c
  ConditionReport cond3;  // x_{i+1} <= a v x_i or x_{i+1} <= b v x_i
  std::vector<bool> rows_isotone;
  // Per row, the first sample position from which the row is constant.
  std::vector<std::size_t> constant_from;
};

PatternReport check_pattern(SequencePattern const& sp);

}  // namespace meetless
