#pragma once

// The chain-indexed semilattices S(Λ) and F(Λ) = D(S(Λ)).
//
// S(Λ) is generated by a, b and c_i (i in Λ) subject to c_i <= a v b and
// c_i <= c_j for i <= j. Its elements are 0, a, b, a v b and, for each i,
// c_i, a v c_i, b v c_i. Indices are naturals; every element touches only
// finitely many of them, so the single ChainBase below serves every finite
// Λ at once and S(X) is the sub-semilattice of codes whose index lies in X.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "meetless/free_ext.hpp"
#include "meetless/order.hpp"

namespace meetless {

using ChainIndex = std::uint64_t;

enum class ChainTag : std::uint8_t { zero, a, b, ab, c, ac, bc };

struct ChainElement {
  ChainTag tag = ChainTag::zero;
  ChainIndex index = 0;  // meaningful iff tag is c, ac or bc

  bool indexed() const noexcept {
    return tag == ChainTag::c || tag == ChainTag::ac || tag == ChainTag::bc;
  }
  Code code() const noexcept {
    return (static_cast<Code>(indexed() ? index : 0) << 3) |
           static_cast<Code>(tag);
  }
  static ChainElement from_code(Code code) noexcept {
    return {static_cast<ChainTag>(code & 7u), code >> 3};
  }
  friend bool operator==(ChainElement const&, ChainElement const&) = default;
};

namespace chain {
inline Code zero() { return ChainElement{ChainTag::zero}.code(); }
inline Code a() { return ChainElement{ChainTag::a}.code(); }
inline Code b() { return ChainElement{ChainTag::b}.code(); }
inline Code ab() { return ChainElement{ChainTag::ab}.code(); }
inline Code c(ChainIndex i) { return ChainElement{ChainTag::c, i}.code(); }
inline Code ac(ChainIndex i) { return ChainElement{ChainTag::ac, i}.code(); }
inline Code bc(ChainIndex i) { return ChainElement{ChainTag::bc, i}.code(); }
}  // namespace chain

class ChainBase final : public Base {
 public:
  Code zero() const override { return chain::zero(); }
  bool leq(Code x, Code y) const override { return join(x, y) == y; }
  Code join(Code x, Code y) const override;
  std::string name(Code x) const override;
};

// Shared extension over ChainBase.
FreeExtension const& chain_extension();
std::shared_ptr<FreeExtension const> const& chain_extension_ptr();

// Elements of S(X) in id order: 0, a, b, a v b, then c_i, a v c_i, b v c_i
// for each i in X ascending.
std::vector<Code> s_lambda_codes(std::span<ChainIndex const> indices);

// S(X) as an explicit table; element names are canonical terms.
FiniteJoinSemilattice s_lambda(std::span<ChainIndex const> indices);

// An isotone map between finite chains of naturals.
class IndexMap {
 public:
  // image[k] is the value at source[k]. Throws NotIsotone, or UnknownElement
  // when a value is outside the target.
  static IndexMap make(std::vector<ChainIndex> source,
                       std::vector<ChainIndex> target,
                       std::vector<ChainIndex> image);

  std::vector<ChainIndex> const& source() const noexcept { return source_; }
  std::vector<ChainIndex> const& target() const noexcept { return target_; }
  ChainIndex operator()(ChainIndex i) const;

  // On codes of S(source): fixes 0, a, b, a v b and reindexes the rest.
  Code on_code(Code code) const;

 private:
  std::vector<ChainIndex> source_;
  std::vector<ChainIndex> target_;
  std::vector<ChainIndex> image_;
};

// S(f) as a table homomorphism S(source) -> S(target), verified.
JoinZeroHomomorphism s_map(IndexMap const& f);

// Least X with x in F(X), sorted.
std::vector<ChainIndex> support(FreeElement const& x);

// x[Y/X]: apply F(e_{X,Y}), e_{X,Y} sending the k-th smallest element of X to
// the k-th smallest of Y. Throws SupportNotContained, TooShort.
FreeElement substitute(FreeElement const& x, std::span<ChainIndex const> from,
                       std::span<ChainIndex const> to);

// x[Y/X] == x, for x in F(X ∩ Y) with X ∩ Y a lower subset of both.
// Throws HypothesisViolated when X ∩ Y is not a lower subset of X and of Y,
// SupportNotContained when x is not in F(X ∩ Y), TooShort when |X| > |Y|.
bool fix_check(FreeElement const& x, std::span<ChainIndex const> from,
               std::span<ChainIndex const> to);

struct Interpolation {
  enum class Kind { interpolant, certificate };
  Kind kind;
  FreeElement z;       // interpolant: x <= z <= y, support(z) ⊆ X ∩ Y
  ChainIndex xi = 0;   // certificate: xi = min(Y \ X) and c_xi <= y

  bool is_interpolant() const noexcept { return kind == Kind::interpolant; }
};

// For x in F(X), y in F(Y), x <= y: either some z in F(X ∩ Y) lies between
// them, or Y is not inside X and c_min(Y\X) <= y. Follows the induction on
// cx(x) + cx(y); the result is verified before it is returned.
// Throws NotLeq, SupportViolation; InternalError if verification fails.
Interpolation interpolate(FreeElement const& x, std::span<ChainIndex const> X,
                          FreeElement const& y, std::span<ChainIndex const> Y);

// (for all i in X: c_i <= x) implies c_max(X) <= x, decided by projecting x
// to S(Λ) and concluding there. X must be nonempty.
bool supci_check(std::span<ChainIndex const> X, FreeElement const& x);

// Elements of rank <= depth over S(Λ): the finite level F_depth of the
// increasing union.
struct FLevel {
  std::uint32_t depth = 0;
  bool contains(FreeElement const& x) const noexcept {
    return x.rank() <= depth;
  }
};

}  // namespace meetless
