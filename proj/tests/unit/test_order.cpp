#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "meetless/chain.hpp"
#include "meetless/corpus.hpp"
#include "meetless/error.hpp"

namespace meetless {
namespace {

using testing::chain_of;
using testing::square;

TEST(Semilattice, MinimalAndSquareAreValid) {
  auto const two = semilattice_from_joins({"0", "1"}, 0, {0, 1, 1, 1});
  EXPECT_EQ(two.size(), 2u);
  EXPECT_EQ(two.top(), 1u);
  auto const s = semilattice_from_joins({"0", "a", "b", "ab"}, 0,
                                        {0, 1, 2, 3, 1, 1, 3, 3, 2, 3, 2, 3, 3, 3, 3, 3});
  EXPECT_TRUE(s == square());
}

TEST(Semilattice, CorruptedJoinIsRejectedWithWitness) {
  // Without an order, a v b = a just describes the chain 0 < b < a < ab.
  auto const chain = semilattice_from_joins(
      {"0", "a", "b", "ab"}, 0, {0, 1, 2, 3, 1, 1, 1, 3, 2, 1, 2, 3, 3, 3, 3, 3});
  EXPECT_TRUE(chain.leq(2, 1));
  // Order supplied separately, joins wrong.
  auto const poset = square().poset();
  try {
    validate_semilattice(poset, 0, {0, 1, 2, 3, 1, 1, 1, 3, 2, 1, 2, 3, 3, 3, 3, 3});
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.kind(), ErrorKind::join_not_lub);
    EXPECT_EQ(e.witness(), (std::vector<std::string>{"a", "b"}));
  }
}

TEST(Semilattice, RejectsNonOrders) {
  BitMatrix m(2);
  m.set(0, 0);
  m.set(1, 1);
  m.set(0, 1);
  m.set(1, 0);
  EXPECT_THROW(FinitePoset::from_relation({"x", "y"}, m), Error);
  std::vector<std::pair<ElementId, ElementId>> const none;
  EXPECT_THROW(semilattice_from_poset(FinitePoset::from_pairs({"x", "y"}, none)), Error);
}

TEST(LowerSet, Examples) {
  auto const s = square();
  std::vector<ElementId> const a{1};
  EXPECT_EQ(lower_set(s.poset(), a), (std::vector<ElementId>{0, 1}));
  EXPECT_TRUE(lower_set(s.poset(), {}).empty());
  std::vector<ChainIndex> const xs{0, 1};
  auto const sl = s_lambda(xs);
  std::vector<ElementId> const c1{sl.id_of("c(1)")};
  auto const got = lower_set(sl.poset(), c1);
  std::vector<std::string> names;
  for (auto id : got) names.push_back(sl.name(id));
  std::sort(names.begin(), names.end());
  EXPECT_EQ(names, (std::vector<std::string>{"0", "c(0)", "c(1)"}));
}

TEST(Distributivity, Examples) {
  EXPECT_TRUE(is_distributive(square()));
  EXPECT_TRUE(is_distributive(chain_of(2)));
  EXPECT_TRUE(is_distributive(chain_of(1)));
  EXPECT_TRUE(is_strongly_distributive(chain_of(1)));
  std::vector<ChainIndex> const zero{0};
  auto const s = s_lambda(zero);
  auto const cx = distributivity_counterexample(s);
  ASSERT_TRUE(cx.has_value());
  EXPECT_EQ(s.name(cx->c), "c(0)");
  EXPECT_EQ(s.name(cx->a), "a");
  EXPECT_EQ(s.name(cx->b), "b");
  EXPECT_FALSE(is_strongly_distributive(s));
}

std::vector<std::string> names_of(FiniteJoinSemilattice const& s,
                                  std::vector<ElementId> const& ids) {
  std::vector<std::string> out;
  for (auto id : ids) out.push_back(s.name(id));
  std::sort(out.begin(), out.end());
  return out;
}

TEST(JoinIrreducibles, Examples) {
  EXPECT_EQ(names_of(square(), join_irreducibles(square())),
            (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(names_of(chain_of(3), join_irreducibles(chain_of(3))),
            (std::vector<std::string>{"1", "2"}));
  std::vector<ChainIndex> const zero{0};
  auto const s = s_lambda(zero);
  EXPECT_EQ(names_of(s, join_irreducibles(s)),
            (std::vector<std::string>{"a", "b", "c(0)"}));
}

TEST(Meet, Examples) {
  auto const s = square();
  EXPECT_EQ(meet(s, 1, 2), 0u);
  EXPECT_EQ(meet(s, 1, 3), 1u);
  std::vector<ChainIndex> const zero{0};
  auto const sl = s_lambda(zero);
  EXPECT_EQ(sl.name(meet(sl, sl.id_of("join(a,c(0))"), sl.id_of("join(b,c(0))"))),
            "c(0)");
}

TEST(Maps, IsotoneAndHomomorphismChecks) {
  auto const c2 = chain_of(2);
  auto const c3 = chain_of(3);
  EXPECT_NO_THROW(IsotoneMap::make(c2.poset(), c3.poset(), {0, 2}));
  try {
    IsotoneMap::make(c2.poset(), c3.poset(), {2, 0});
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_isotone);
  }
  EXPECT_THROW(JoinZeroHomomorphism::make(c2, c3, {1, 2}), Error);
  auto const f = JoinZeroHomomorphism::make(c2, c3, {0, 2});
  auto const g = JoinZeroHomomorphism::make(c3, c3, {0, 1, 1});
  EXPECT_EQ(g.after(f).graph(), (std::vector<ElementId>{0, 1}));
  EXPECT_THROW(f.after(g), Error);
}

TEST(Corpus, LatticeCountsMatchTheIndependentEnumeration) {
  std::vector<std::size_t> const expected{1, 1, 1, 2, 5, 15, 53};
  for (std::size_t n = 1; n <= 7; ++n) {
    EXPECT_EQ(lattices_of_size(n).size(), expected[n - 1]) << "n=" << n;
  }
  EXPECT_THROW(lattices_of_size(9), Error);
}

TEST(Corpus, DistributiveCountsMatchTheIndependentEnumeration) {
  std::vector<std::size_t> const expected{1, 1, 1, 2, 3, 5, 8};
  auto const all = distributive_up_to(7);
  std::vector<std::size_t> counts(7);
  for (auto const& s : all) counts[s.size() - 1]++;
  EXPECT_EQ(counts, expected);
}

TEST(Corpus, MembersArePairwiseNonIsomorphicAndStable) {
  auto const a = lattices_of_size(6);
  auto const b = lattices_of_size(6);
  std::set<std::uint64_t> hashes;
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(content_hash(a[i]), content_hash(b[i]));
    hashes.insert(content_hash(a[i]));
  }
  EXPECT_EQ(hashes.size(), a.size());
}

TEST(Covers, SquareHasFourCoverEdges) {
  EXPECT_EQ(square().poset().covers().size(), 4u);
  EXPECT_EQ(chain_of(5).poset().covers().size(), 4u);
}

}  // namespace
}  // namespace meetless
