#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "meetless/chain.hpp"
#include "meetless/congruence.hpp"
#include "meetless/error.hpp"
#include "meetless/measures.hpp"
#include "meetless/refinement.hpp"
#include "meetless/term.hpp"

namespace meetless {
namespace {

FreeElement t(std::string const& text) { return parse_term(text); }

// A finite extension of the counterexample chain 0 < 1 < ... < N by a point
// m with 0 < m < N and m incomparable to 1..N-1, in which the step from 0 to
// N through m splits every c_ξ into an a-part and a b-part.
PosetMeasure honest_extension(std::uint32_t N) {
  auto const& ext = chain_extension();
  std::vector<std::string> names;
  for (std::uint32_t i = 0; i <= N; ++i) names.push_back(std::to_string(i));
  names.push_back("m");
  ElementId const m = N + 1;
  std::vector<std::pair<ElementId, ElementId>> covers;
  for (ElementId i = 0; i < N; ++i) covers.emplace_back(i, i + 1);
  covers.emplace_back(0, m);
  covers.emplace_back(m, N);
  auto poset = FinitePoset::from_pairs(names, covers);
  auto const a = ext.element(chain::a()), b = ext.element(chain::b());
  std::vector<FreeElement> a_part(N), b_part(N);
  FreeElement acc_a = ext.zero(), acc_b = ext.zero();
  for (std::uint32_t i = 0; i < N; ++i) {
    auto const c = ext.element(chain::c(i));
    acc_a = ext.join(acc_a, ext.bowtie(a, b, c));
    acc_b = ext.join(acc_b, ext.bowtie(b, a, c));
    a_part[i] = acc_a;
    b_part[i] = acc_b;
  }
  std::size_t const n = names.size();
  std::vector<FreeElement> mu(n * n, ext.zero());
  auto at = [&](ElementId x, ElementId y) -> FreeElement& { return mu[x * n + y]; };
  for (ElementId x = 1; x <= N; ++x) {
    for (ElementId y = 0; y < x; ++y) {
      at(x, y) = x == N ? ext.element(chain::ab()) : ext.element(chain::c(x));
    }
  }
  at(m, 0) = a;
  for (ElementId xi = 1; xi < N; ++xi) {
    at(m, xi) = a;
    at(xi, m) = b_part[xi];
  }
  at(N, m) = b;
  return PosetMeasure{std::move(poset), chain_extension_ptr(), std::move(mu), 1,
                      {{a, b}}};
}

TEST(PosetMeasure, Examples) {
  auto const c2 = FiniteLattice::from_semilattice(testing::chain_of(2));
  EXPECT_TRUE(is_poset_measure(theta_plus_measure(c2)));
  EXPECT_TRUE(is_poset_measure(counterexample_measure(3)));
  auto bad = counterexample_measure(3);
  bad.mu[1 * 4 + 1] = t("a");
  auto const v = find_measure_violation(bad);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->kind, MeasureViolation::Kind::nonzero_on_comparable);
  EXPECT_EQ(v->x, 1u);
  EXPECT_EQ(v->y, 1u);
}

TEST(PosetMeasure, TriangleViolation) {
  auto m = counterexample_measure(3);
  m.mu[2 * 4 + 0] = t("join(a,b)");  // μ(2,0) above μ(2,1) v μ(1,0) = c_2
  auto const v = find_measure_violation(m);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->kind, MeasureViolation::Kind::triangle);
}

TEST(VMeasure, Examples) {
  auto const n5 = FiniteLattice::from_semilattice(testing::n5());
  EXPECT_FALSE(find_v_measure_failure(theta_plus_measure(n5)).has_value());
  auto const& ext = chain_extension();
  for (std::uint32_t n = 2; n <= 6; ++n) {
    auto const w = find_v_measure_failure(counterexample_measure(n));
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->x, 0u);
    EXPECT_EQ(w->y, n);
    EXPECT_EQ(w->a, ext.element(chain::a()));
    EXPECT_EQ(w->b, ext.element(chain::b()));
  }
  // n = 1: μ(1,0) = a v b, a single step that is below neither a nor b.
  auto const one = counterexample_measure(1);
  EXPECT_TRUE(is_poset_measure(one));
}

TEST(VMeasure, ZeroMeasureDecomposesTrivially) {
  auto const s = testing::chain_of(3);
  auto const base = std::make_shared<TableBase>(testing::square());
  auto ext = std::make_shared<FreeExtension const>(base);
  PosetMeasure m{s.poset(), ext, std::vector<FreeElement>(9, ext->zero()), 0, {}};
  EXPECT_TRUE(is_poset_measure(m));
  EXPECT_FALSE(find_v_measure_failure(m).has_value());
  auto const d = find_decomposition(m, 0, 2, ext->element(1), ext->element(2));
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(d->chain.front(), 0u);
  EXPECT_EQ(d->chain.back(), 2u);
}

TEST(VMeasure, GuardTrips) {
  auto const m = counterexample_measure(6);
  auto const& ext = chain_extension();
  std::vector<ValuePair> const pairs{{ext.element(chain::a()), ext.element(chain::b())}};
  try {
    find_v_measure_failure(m, pairs, VMeasureLimits{2});
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.kind(), ErrorKind::search_space_too_large);
  }
}

TEST(Counterexample, Entries) {
  auto const m = counterexample_measure(3);
  EXPECT_EQ(m.at(2, 0), t("c(2)"));
  EXPECT_EQ(m.at(0, 2), t("0"));
  EXPECT_EQ(m.at(3, 1), t("join(a,b)"));
  EXPECT_EQ(m.poset.name(3), "3");
  EXPECT_THROW(counterexample_measure(0), Error);
}

TEST(ExtensionSequences, HonestExtensionSatisfiesTheConditions) {
  for (std::uint32_t N : {3u, 4u, 5u}) {
    auto const mbar = honest_extension(N);
    ASSERT_TRUE(is_poset_measure(mbar)) << "N=" << N;
    auto const m = mbar.poset.id_of("m");
    std::vector<ElementId> const chain{0, m, N};
    auto const idx = default_extension_indices(mbar);
    EXPECT_EQ(idx.size(), N - 1);
    auto const sp = extension_sequences(mbar, chain, idx);
    auto const r = check_pattern(sp);
    EXPECT_TRUE(r.cond1.holds);
    EXPECT_TRUE(r.cond2.holds);
    EXPECT_TRUE(r.cond3.holds);
  }
}

TEST(ExtensionSequences, Guards) {
  auto const m = counterexample_measure(3);
  std::vector<ElementId> const bad{0, 9};
  std::vector<std::uint64_t> const idx{1};
  try {
    extension_sequences(m, bad, idx);
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.kind(), ErrorKind::index_out_of_poset);
  }
  std::vector<ElementId> const down{2, 1};
  EXPECT_THROW(extension_sequences(m, down, idx), Error);
}

TEST(CheckPattern, OneSidedLabelsFailConditionThree) {
  auto const& ext = chain_extension();
  SequencePattern sp;
  sp.ext = chain_extension_ptr();
  sp.a = ext.element(chain::a());
  sp.b = ext.element(chain::b());
  sp.indices = {0, 1};
  sp.c = {ext.element(chain::c(0)), ext.element(chain::c(1))};
  sp.x = {{ext.zero(), ext.zero()}, sp.c};
  auto const r = check_pattern(sp);
  EXPECT_TRUE(r.cond1.holds);
  EXPECT_FALSE(r.cond3.holds);
  ASSERT_TRUE(r.cond3.first_violation.has_value());
}

TEST(CheckPattern, DegenerateSingleRow) {
  auto const& ext = chain_extension();
  SequencePattern sp;
  sp.ext = chain_extension_ptr();
  sp.a = ext.element(chain::a());
  sp.b = ext.element(chain::b());
  sp.indices = {1};
  sp.c = {ext.element(chain::c(1))};
  sp.x = {{ext.zero()}};
  EXPECT_FALSE(check_pattern(sp).cond1.holds);
  sp.c = {ext.zero()};
  EXPECT_TRUE(check_pattern(sp).cond1.holds);
}

}  // namespace
}  // namespace meetless
