#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "meetless/chain.hpp"
#include "meetless/corpus.hpp"
#include "meetless/error.hpp"
#include "meetless/refinement.hpp"

namespace meetless {
namespace {

using testing::square;

RefinementProblem on_square(std::vector<ElementId> chain) {
  return RefinementProblem{square(), 1, 2, std::move(chain)};
}

using Seq = std::vector<ElementId>;

TEST(RefineLattice, Examples) {
  auto const w = refine_lattice(on_square({0, 1, 3}));
  EXPECT_EQ(w.as, (Seq{0, 1, 1}));
  EXPECT_EQ(w.bs, (Seq{0, 0, 2}));
  auto const zeros = refine_lattice(on_square({0, 0, 0}));
  EXPECT_EQ(zeros.as, (Seq{0, 0, 0}));
  EXPECT_EQ(zeros.bs, (Seq{0, 0, 0}));
  auto const top = refine_lattice(on_square({3, 3}));
  EXPECT_EQ(top.as, (Seq{1, 1}));
  EXPECT_EQ(top.bs, (Seq{2, 2}));
}

TEST(RefineLattice, NonDistributiveIsReported) {
  std::vector<ChainIndex> const zero{0};
  auto const s = s_lambda(zero);
  RefinementProblem p{s, s.id_of("a"), s.id_of("b"), {s.id_of("c(0)")}};
  try {
    refine_lattice(p);
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_distributive);
  }
}

TEST(RefineStronglyDistributive, Examples) {
  auto const p = on_square({0, 1, 3});
  EXPECT_TRUE(is_valid_witness(p, refine_strongly_distributive(p)));
  auto const cover = join_irreducible_cover(on_square({3, 3, 3}));
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(cover.A[i], (Seq{1}));
    EXPECT_EQ(cover.B[i], (Seq{2}));
  }
  auto const empty = refine_strongly_distributive(on_square({}));
  EXPECT_TRUE(empty.as.empty() && empty.bs.empty());
}

TEST(RefineSequential, Examples) {
  auto const p = on_square({0, 1, 3});
  EXPECT_TRUE(is_valid_witness(p, refine_sequential(p, {1, 0, 2})));
  auto const single = on_square({3});
  EXPECT_TRUE(is_valid_witness(single, refine_sequential(single)));
  auto const pair = on_square({3, 3});
  EXPECT_TRUE(is_valid_witness(pair, refine_sequential(pair, {1, 0})));
  EXPECT_THROW(refine_sequential(p, {0, 0, 1}), Error);
}

TEST(RefineBruteforce, Examples) {
  for (auto const& s : distributive_up_to(4)) {
    for (ElementId a = 0; a < s.size(); ++a) {
      for (ElementId b = 0; b < s.size(); ++b) {
        RefinementProblem p{s, a, b, {s.join(a, b)}};
        auto const w = refine_bruteforce(p);
        ASSERT_TRUE(w.has_value());
        EXPECT_TRUE(is_valid_witness(p, *w));
      }
    }
  }
  std::vector<ChainIndex> const zero{0};
  auto const s = s_lambda(zero);
  RefinementProblem p{s, s.id_of("a"), s.id_of("b"), {s.id_of("c(0)")}};
  EXPECT_FALSE(refine_bruteforce(p).has_value());
  auto const e = refine_bruteforce(on_square({}));
  ASSERT_TRUE(e.has_value());
  EXPECT_TRUE(e->as.empty());
  try {
    refine_bruteforce(on_square({3}), 2);
    FAIL();
  } catch (Error const& err) {
    EXPECT_EQ(err.kind(), ErrorKind::too_large);
  }
}

TEST(RefinementProblem, Validation) {
  EXPECT_THROW(on_square({3, 1}).validate(), Error);
  RefinementProblem p{square(), 1, 1, {3}};
  try {
    p.validate();
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.kind(), ErrorKind::hypothesis_violated);
  }
  EXPECT_THROW(on_square({7}).validate(), Error);
}

TEST(Witness, ValidityCheck) {
  auto const p = on_square({0, 1, 3});
  EXPECT_TRUE(is_valid_witness(p, {{0, 1, 1}, {0, 0, 2}}));
  EXPECT_FALSE(is_valid_witness(p, {{0, 1, 0}, {0, 0, 3}}));
  EXPECT_FALSE(is_valid_witness(p, {{0, 1}, {0, 0}}));
}

}  // namespace
}  // namespace meetless
