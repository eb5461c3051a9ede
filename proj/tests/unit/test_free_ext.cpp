#include <gtest/gtest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "meetless/chain.hpp"
#include "meetless/error.hpp"
#include "meetless/free_ext.hpp"
#include "meetless/sampling.hpp"
#include "meetless/suites.hpp"
#include "meetless/term.hpp"

namespace meetless {
namespace {

FreeExtension const& F() { return chain_extension(); }
FreeElement t(char const* text) { return parse_term(text); }

TEST(FreeOrder, Examples) {
  auto const g = t("bowtie(a,b,join(a,b))");
  EXPECT_TRUE(F().leq(g, t("a")));
  EXPECT_FALSE(F().leq(t("a"), g));
  Rng rng(1);
  std::vector<ChainIndex> const xs{0, 1, 2};
  auto const atoms = s_lambda_codes(xs);
  for (int i = 0; i < 200; ++i) {
    auto const x = random_element(rng, F(), atoms);
    EXPECT_TRUE(F().leq(x, x));
  }
}

TEST(Projection, Examples) {
  auto const g = t("bowtie(a,b,join(a,b))");
  EXPECT_EQ(pi(g), t("0"));
  EXPECT_EQ(pi(t("a")), t("a"));
  auto const x = F().join(t("c(0)"), t("bowtie(a,b,c(1))"));
  EXPECT_EQ(pi(x), t("c(0)"));
  EXPECT_EQ(pi_down(g, 0), t("0"));
  EXPECT_EQ(pi_down(g, 1), g);
  EXPECT_THROW(pi_down(t("a"), 1), Error);
}

TEST(Projection, RankTwoStepsDown) {
  auto const g = t("bowtie(bowtie(a,b,c(0)),bowtie(b,a,c(0)),c(0))");
  ASSERT_EQ(g.rank(), 2u);
  auto const d = t("bowtie(a,c(1),join(a,c(1)))");
  auto const x = F().join(g, d);
  ASSERT_EQ(x.rank(), 2u);
  EXPECT_EQ(x.diagonal(), d);
  EXPECT_EQ(pi_down(x, 1), d);
  EXPECT_EQ(pi_down(x, 0), d.diagonal());
  EXPECT_EQ(pi_down(x, 0), t("0"));
  EXPECT_EQ(pi_down(g, 0), t("0"));
}

TEST(Join, AbsorbsGeneratorsBelowTheDiagonal) {
  // a v bowtie(a,b,c0) = a, and b v bowtie(a,b,c0) = b v c0
  EXPECT_EQ(F().join(t("a"), t("bowtie(a,b,c(0))")), t("a"));
  EXPECT_EQ(F().join(t("b"), t("bowtie(a,b,c(0))")), t("join(b,c(0))"));
}

TEST(Bowtie, CaseFormula) {
  EXPECT_EQ(t("bowtie(a,a,a)"), t("a"));
  EXPECT_EQ(t("bowtie(0,b,0)"), t("0"));
  auto const g = t("bowtie(a,b,join(a,b))");
  ASSERT_FALSE(g.is_base());
  EXPECT_EQ(g.diagonal(), t("0"));
  ASSERT_EQ(g.triples().size(), 1u);
  EXPECT_EQ(g.triples()[0].u, t("a"));
  EXPECT_EQ(g.triples()[0].v, t("b"));
  EXPECT_EQ(g.triples()[0].w, t("join(a,b)"));
  EXPECT_THROW(t("bowtie(a,0,b)"), Error);  // b is not below a
}

TEST(Join, Examples) {
  EXPECT_EQ(F().join(t("bowtie(a,b,join(a,b))"), t("bowtie(b,a,join(a,b))")),
            t("join(a,b)"));
  Rng rng(2);
  std::vector<ChainIndex> const xs{0, 1};
  auto const atoms = s_lambda_codes(xs);
  for (int i = 0; i < 200; ++i) {
    auto const x = random_element(rng, F(), atoms);
    EXPECT_EQ(F().join(x, F().zero()), x);
  }
}

TEST(Join, IsTheLeastUpperBoundOnSamples) {
  Rng rng(3);
  std::vector<ChainIndex> const xs{0, 1};
  auto const atoms = s_lambda_codes(xs);
  std::vector<FreeElement> pool;
  for (int i = 0; i < 150; ++i) pool.push_back(random_element(rng, F(), atoms));
  for (auto const& x : pool) {
    for (auto const& y : pool) {
      auto const j = F().join(x, y);
      ASSERT_TRUE(F().is_reduced(j));
      ASSERT_TRUE(F().leq(x, j) && F().leq(y, j));
      ASSERT_EQ(j, F().join(y, x));
      for (auto const& z : pool) {
        if (F().leq(x, z) && F().leq(y, z)) ASSERT_TRUE(F().leq(j, z));
      }
    }
  }
}

TEST(Complexity, Examples) {
  EXPECT_EQ(complexity(t("a")), 0u);
  EXPECT_EQ(complexity(t("bowtie(a,b,join(a,b))")), 2u);
  auto const g = t("bowtie(a,b,c(0))");
  auto const h = F().bowtie(g, t("b"), t("c(0)"));
  EXPECT_GT(complexity(h), complexity(g));
}

TEST(EnumerateR, SmallBases) {
  auto const two = std::make_shared<TableBase>(testing::chain_of(2));
  std::vector<Code> const c2{0, 1};
  EXPECT_EQ(enumerate_R(FreeExtension(two), c2).size(), 2u);
  EXPECT_EQ(count_R(*two, c2), 2u);
  auto const one = std::make_shared<TableBase>(testing::chain_of(1));
  std::vector<Code> const c1{0};
  EXPECT_EQ(enumerate_R(FreeExtension(one), c1).size(), 1u);
}

TEST(EnumerateR, SquareCountIsPinned) {
  auto const sq = std::make_shared<TableBase>(testing::square());
  std::vector<Code> const c{0, 1, 2, 3};
  EXPECT_EQ(count_R(*sq, c), kRS0Count);
  auto const all = enumerate_R(FreeExtension(sq), c);
  EXPECT_EQ(all.size(), kRS0Count);
  std::set<FreeElement> distinct(all.begin(), all.end());
  EXPECT_EQ(distinct.size(), kRS0Count);
}

TEST(EnumerateR, GuardTrips) {
  std::vector<ChainIndex> const xs{0, 1};
  auto const c = s_lambda_codes(xs);
  EnumerationLimits limits;
  limits.max_elements = 1000;
  try {
    enumerate_R(F(), c, limits);
    FAIL();
  } catch (Error const& e) {
    EXPECT_TRUE(is_guard_overflow(e.kind()));
  }
}

TEST(ReducedSet, ConditionsAreEnforced) {
  auto const a = t("a"), b = t("b"), ab = t("join(a,b)"), z = t("0");
  // <u,u,w> is not allowed among the non-diagonal triples
  EXPECT_THROW(F().reduced_set(1, z, {{a, a, a}}), Error);
  // a pair <u,v,w>, <v,u,w>
  EXPECT_THROW(F().reduced_set(1, z, {{a, b, ab}, {b, a, ab}}), Error);
  // a component below the diagonal
  EXPECT_THROW(F().reduced_set(1, a, {{a, b, ab}}), Error);
  EXPECT_NO_THROW(F().reduced_set(1, z, {{a, b, ab}}));
}

TEST(Terms, RoundTripOnSamples) {
  Rng rng(4);
  std::vector<ChainIndex> const xs{0, 3, 7};
  auto const atoms = s_lambda_codes(xs);
  for (int i = 0; i < 500; ++i) {
    auto const x = random_element(rng, F(), atoms, SampleShape{10, 3});
    EXPECT_EQ(parse_term(print_term(x)), x) << print_term(x);
  }
  EXPECT_EQ(print_term(t(" join( c(2) , a ) ")), "join(a,c(2))");
}

TEST(Terms, MixedLevelsCarryAnExplicitLevel) {
  // A level-2 generator whose components all lie in S is not the level-1
  // generator with the same components.
  auto const lifted = t("bowtie@2(b,a,join(a,b))");
  auto const plain = t("bowtie(b,a,join(a,b))");
  EXPECT_EQ(lifted.rank(), 2u);
  EXPECT_NE(lifted, plain);
  EXPECT_FALSE(F().leq(lifted, plain));
  auto const high = t("bowtie(bowtie(a,b,c(0)),bowtie(b,a,c(0)),c(0))");
  auto const mixed = F().join(high, lifted);
  auto const text = print_term(mixed);
  EXPECT_EQ(text,
            "join(bowtie@2(b,a,join(a,b)),"
            "bowtie(bowtie(a,b,c(0)),bowtie(b,a,c(0)),c(0)))");
  EXPECT_EQ(parse_term(text), mixed);
}

TEST(Terms, Errors) {
  for (char const* bad : {"", "d", "c()", "c(x)", "join(a", "bowtie(a,b)", "a b"}) {
    try {
      parse_term(bad);
      FAIL() << bad;
    } catch (Error const& e) {
      EXPECT_EQ(e.kind(), ErrorKind::parse_error) << bad;
    }
  }
}

TEST(LiftHom, IdentityAndBaseMap) {
  Rng rng(6);
  std::vector<ChainIndex> const xs{0, 1};
  auto const atoms = s_lambda_codes(xs);
  auto const f = IndexMap::make({0, 1}, {4, 9}, {4, 9});
  for (int i = 0; i < 100; ++i) {
    auto const x = random_element(rng, F(), atoms);
    EXPECT_EQ(lift_hom(F(), [](Code c) { return c; }, x), x);
    auto const y = lift_hom(F(), [&](Code c) { return f.on_code(c); }, x);
    EXPECT_EQ(y, substitute(x, xs, std::vector<ChainIndex>{4, 9}));
  }
}

}  // namespace
}  // namespace meetless
