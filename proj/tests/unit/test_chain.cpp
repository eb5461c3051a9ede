#include <gtest/gtest.h>

#include "meetless/chain.hpp"
#include "meetless/error.hpp"
#include "meetless/term.hpp"

namespace meetless {
namespace {

using Ix = std::vector<ChainIndex>;

FreeElement t(char const* text) { return parse_term(text); }

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (Error const& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error";
  return ErrorKind::internal;
}

TEST(SLambda, Examples) {
  auto const s0 = s_lambda(Ix{});
  EXPECT_EQ(s0.poset().names(), (std::vector<std::string>{"0", "a", "b", "join(a,b)"}));
  EXPECT_EQ(s_lambda(Ix{0}).size(), 7u);
  auto const s01 = s_lambda(Ix{0, 1});
  EXPECT_EQ(s01.join(s01.id_of("c(0)"), s01.id_of("join(b,c(1))")),
            s01.id_of("join(b,c(1))"));
  EXPECT_EQ(s_lambda(Ix{2, 5, 9}).size(), 13u);
  EXPECT_EQ(s_lambda(Ix{1, 1}).size(), 7u);  // indices form a set
}

TEST(SLambda, Relations) {
  auto const& base = chain_extension().base();
  EXPECT_TRUE(base.leq(chain::c(3), chain::ab()));
  EXPECT_TRUE(base.leq(chain::c(3), chain::c(8)));
  EXPECT_FALSE(base.leq(chain::c(8), chain::c(3)));
  EXPECT_FALSE(base.leq(chain::c(0), chain::a()));
  EXPECT_EQ(base.join(chain::a(), chain::c(2)), chain::ac(2));
  EXPECT_EQ(base.join(chain::ac(2), chain::bc(5)), chain::ab());
  EXPECT_EQ(base.join(chain::ac(2), chain::c(5)), chain::ac(5));
}

TEST(SMap, Examples) {
  auto const id = IndexMap::make({0, 1}, {0, 1}, {0, 1});
  auto const h = s_map(id);
  for (ElementId x = 0; x < h.source().size(); ++x) EXPECT_EQ(h(x), x);
  auto const f = IndexMap::make({0}, {5}, {5});
  auto const hf = s_map(f);
  auto const& src = hf.source();
  auto const& tgt = hf.target();
  EXPECT_EQ(tgt.name(hf(src.id_of("c(0)"))), "c(5)");
  EXPECT_EQ(tgt.name(hf(src.id_of("join(a,c(0))"))), "join(a,c(5))");
  auto const k = IndexMap::make({0, 1}, {0}, {0, 0});
  auto const hk = s_map(k);
  EXPECT_EQ(hk.target().name(hk(hk.source().id_of("c(1)"))), "c(0)");
  EXPECT_EQ(kind_of([] { IndexMap::make({0, 1}, {0, 1}, {1, 0}); }),
            ErrorKind::not_isotone);
  EXPECT_EQ(kind_of([] { IndexMap::make({0}, {1}, {2}); }),
            ErrorKind::unknown_element);
}

TEST(Support, Examples) {
  EXPECT_TRUE(support(t("join(a,b)")).empty());
  EXPECT_EQ(support(t("c(3)")), Ix{3});
  EXPECT_EQ(support(t("bowtie(join(a,c(2)),join(b,c(5)),c(5))")), (Ix{2, 5}));
}

TEST(Substitute, Examples) {
  EXPECT_EQ(substitute(t("c(3)"), Ix{3}, Ix{7, 9}), t("c(7)"));
  auto const x = t("bowtie(a,b,c(5))");
  EXPECT_EQ(substitute(x, Ix{0, 5}, Ix{0, 5}), x);
  EXPECT_EQ(substitute(x, Ix{0, 5}, Ix{0, 3, 8}), t("bowtie(a,b,c(3))"));
  EXPECT_EQ(kind_of([&] { substitute(x, Ix{0}, Ix{0, 1}); }),
            ErrorKind::support_not_contained);
  EXPECT_EQ(kind_of([&] { substitute(x, Ix{0, 5}, Ix{1}); }), ErrorKind::too_short);
}

TEST(Fix, Examples) {
  EXPECT_TRUE(fix_check(t("c(1)"), Ix{0, 1, 5}, Ix{0, 1, 7}));
  EXPECT_TRUE(fix_check(t("bowtie(a,b,c(2))"), Ix{0, 2}, Ix{0, 2}));
  EXPECT_EQ(kind_of([] { fix_check(t("c(2)"), Ix{1, 2}, Ix{0, 2}); }),
            ErrorKind::hypothesis_violated);
}

TEST(Interpolate, Examples) {
  auto const r1 = interpolate(t("a"), Ix{0}, t("join(a,c(1))"), Ix{1});
  ASSERT_TRUE(r1.is_interpolant());
  EXPECT_EQ(r1.z, t("a"));
  auto const r2 = interpolate(t("c(0)"), Ix{0}, t("c(1)"), Ix{1});
  ASSERT_FALSE(r2.is_interpolant());
  EXPECT_EQ(r2.xi, 1u);
  auto const x = t("bowtie(a,b,c(0))");
  auto const r3 = interpolate(x, Ix{0}, t("c(0)"), Ix{0, 1});
  ASSERT_TRUE(r3.is_interpolant());
  EXPECT_TRUE(r3.z == x || r3.z == t("c(0)"));
}

TEST(Interpolate, Preconditions) {
  EXPECT_EQ(kind_of([] { interpolate(t("b"), Ix{}, t("a"), Ix{}); }),
            ErrorKind::not_leq);
  EXPECT_EQ(kind_of([] { interpolate(t("c(2)"), Ix{0}, t("join(a,b)"), Ix{}); }),
            ErrorKind::support_violation);
}

TEST(Supci, Examples) {
  EXPECT_TRUE(supci_check(Ix{0, 1}, t("c(1)")));
  EXPECT_TRUE(supci_check(Ix{0, 1}, t("join(a,c(1))")));
  EXPECT_TRUE(supci_check(Ix{0, 1}, t("join(a,b)")));
  EXPECT_TRUE(supci_check(Ix{0, 1}, t("bowtie(a,b,c(1))")));
}

}  // namespace
}  // namespace meetless
