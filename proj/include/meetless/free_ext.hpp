#pragma once

// The free distributive extension R(S) of a <join,0>-semilattice S and its
// iterates R^n(S).
//
// An element of R(S) is a reduced set of triples <u,v,w> with w <= u v v:
// exactly one diagonal triple <p,p,p> (p is the projection pi), no pair
// <u,v,w>, <v,u,w> and no <u,u,w> among the other triples, and no component
// of another triple below p. The order is
//
//   x <= y  iff  every <u,v,w> in x \ y has u <= pi(y) or w <= pi(y),
//
// and an element s of S is identified with the singleton {<s,s,s>}.
//
// FreeElement stores each element at its rank (the least n with x in
// R^n(S)): rank 0 is a base code, rank n >= 1 is a reduced set whose triple
// components live in R^{n-1}(S). Because R^{n-1}(S) sits inside R^n(S) only
// through singletons, a non-singleton set of level n has rank exactly n, so
// the representation is canonical and equality is structural.

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "meetless/order.hpp"

namespace meetless {

using Code = std::uint64_t;

// Access contract for the base semilattice. Codes are opaque; only the base
// interprets them.
class Base {
 public:
  virtual ~Base() = default;
  virtual Code zero() const = 0;
  virtual bool leq(Code x, Code y) const = 0;
  virtual Code join(Code x, Code y) const = 0;
  virtual std::string name(Code x) const = 0;
  // Complete carrier when the base is finite and enumerable.
  virtual std::optional<std::vector<Code>> elements() const {
    return std::nullopt;
  }
};

// A FiniteJoinSemilattice seen through the Base contract; codes are ids.
class TableBase final : public Base {
 public:
  explicit TableBase(FiniteJoinSemilattice s) : s_(std::move(s)) {}

  Code zero() const override { return s_.zero(); }
  bool leq(Code x, Code y) const override {
    return s_.leq(static_cast<ElementId>(x), static_cast<ElementId>(y));
  }
  Code join(Code x, Code y) const override {
    return s_.join(static_cast<ElementId>(x), static_cast<ElementId>(y));
  }
  std::string name(Code x) const override {
    return s_.name(static_cast<ElementId>(x));
  }
  std::optional<std::vector<Code>> elements() const override;

  FiniteJoinSemilattice const& semilattice() const noexcept { return s_; }

 private:
  FiniteJoinSemilattice s_;
};

struct Triple;
struct FreeNode;

class FreeElement;
std::uint64_t complexity(FreeElement const& x);

class FreeElement {
 public:
  FreeElement() = default;

  static FreeElement base(Code c) {
    FreeElement e;
    e.code_ = c;
    return e;
  }

  std::uint32_t rank() const noexcept;
  bool is_base() const noexcept { return node_ == nullptr; }
  // Only meaningful when is_base().
  Code code() const noexcept { return code_; }

  // Reduced-set view; only meaningful when !is_base().
  FreeElement const& diagonal() const;
  std::span<Triple const> triples() const;

  std::size_t hash() const noexcept;

  friend bool operator==(FreeElement const& a, FreeElement const& b);
  friend std::strong_ordering operator<=>(FreeElement const& a,
                                          FreeElement const& b);

 private:
  friend class FreeExtension;
  friend std::uint64_t complexity(FreeElement const& x);
  Code code_ = 0;
  std::shared_ptr<FreeNode const> node_;
};

struct Triple {
  FreeElement u, v, w;
  friend bool operator==(Triple const&, Triple const&) = default;
  friend std::strong_ordering operator<=>(Triple const& a, Triple const& b);
};

struct FreeNode {
  std::uint32_t rank = 0;
  FreeElement diagonal;
  std::vector<Triple> triples;  // sorted, non-diagonal
  std::size_t hash = 0;
  std::uint64_t complexity = 0;
};

struct FreeElementHash {
  std::size_t operator()(FreeElement const& x) const noexcept {
    return x.hash();
  }
};

// Projection onto the diagonal; identity on base elements.
FreeElement pi(FreeElement const& x);

// Iterated projection down to rank <= k. Throws RankTooHigh when k exceeds
// rank(x).
FreeElement pi_down(FreeElement const& x, std::uint32_t k);

// 0 on base elements, else the sum over all triples (diagonal included) of
// cx(u) + cx(v) + cx(w) + 1.
std::uint64_t complexity(FreeElement const& x);

// Operations of R^n(S) for a fixed base.
class FreeExtension {
 public:
  explicit FreeExtension(std::shared_ptr<Base const> base)
      : base_(std::move(base)) {}

  Base const& base() const noexcept { return *base_; }
  std::shared_ptr<Base const> const& base_ptr() const noexcept {
    return base_;
  }

  FreeElement element(Code c) const { return FreeElement::base(c); }
  FreeElement zero() const { return FreeElement::base(base_->zero()); }
  bool is_zero(FreeElement const& x) const {
    return x.is_base() && x.code() == base_->zero();
  }

  bool leq(FreeElement const& x, FreeElement const& y) const;
  FreeElement join(FreeElement const& x, FreeElement const& y) const;
  FreeElement join_all(std::span<FreeElement const> xs) const;

  // The canonical generator at level 1 + max rank of the components.
  // Throws NotInC when w is not below u v v.
  FreeElement bowtie(FreeElement const& u, FreeElement const& v,
                     FreeElement const& w) const;

  // The canonical generator of R^level(S); components must have rank below
  // `level`.
  FreeElement bowtie_at(std::uint32_t level, FreeElement const& u,
                        FreeElement const& v, FreeElement const& w) const;

  // Builds the element of R^level(S) with the given diagonal and non-diagonal
  // triples, checking conditions (1)-(3) and membership of every triple.
  // Collapses to the diagonal when no other triple is present.
  // Throws NotReduced or NotInC.
  FreeElement reduced_set(std::uint32_t level, FreeElement diagonal,
                          std::vector<Triple> triples) const;

  // True when x is a valid canonical element over this base (used on
  // untrusted input and in property checks).
  bool is_reduced(FreeElement const& x) const;

 private:
  FreeElement normalize(std::uint32_t level, FreeElement p,
                        std::vector<Triple> triples) const;
  FreeElement make_node(std::uint32_t level, FreeElement diagonal,
                        std::vector<Triple> triples) const;

  std::shared_ptr<Base const> base_;
};

using BaseMap = std::function<Code(Code)>;

// R^n(f) for a <join,0>-homomorphism f of bases given on codes: recursion
// through the triples, renormalising each node with bowtie and join in the
// target.
FreeElement lift_hom(FreeExtension const& target, BaseMap const& f,
                     FreeElement const& x);

struct EnumerationLimits {
  // Non-diagonal triples of C(S) with nonzero, distinct u, v.
  std::size_t max_triples = 64;
  // Total number of reduced sets produced.
  std::size_t max_elements = std::size_t{1} << 22;
};

// All elements of rank <= 1 whose base components lie in `carrier` (which
// must be a <join,0>-subsemilattice of the base). Deterministic order:
// diagonal in carrier order, then mixed-radix over conflict pairs.
// Throws TooLarge when a limit is exceeded.
std::vector<FreeElement> enumerate_R(FreeExtension const& ext,
                                     std::span<Code const> carrier,
                                     EnumerationLimits limits = {});

// Closed-form count of the same set: sum over diagonals p of 3^k(p), k(p)
// the number of conflict pairs with all components outside ↓p. Saturates
// at 2^62.
std::size_t count_R(Base const& base, std::span<Code const> carrier);

// Member of R(T) for the carrier T: rank <= 1 and every base code in T.
bool in_R(FreeElement const& x, std::span<Code const> carrier_sorted);

// Base codes occurring anywhere in x.
void collect_codes(FreeElement const& x, std::vector<Code>& out);

}  // namespace meetless
