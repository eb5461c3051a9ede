#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "meetless/chain.hpp"
#include "meetless/congruence.hpp"
#include "meetless/corpus.hpp"
#include "meetless/dot.hpp"
#include "meetless/error.hpp"
#include "meetless/json_io.hpp"

namespace meetless {
namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (Error const& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error";
  return ErrorKind::internal;
}

TEST(Json, SemilatticeRoundTrip) {
  for (auto const& s : lattices_up_to(6)) {
    auto const j = semilattice_to_json(s);
    EXPECT_TRUE(semilattice_from_json(j) == s);
    EXPECT_EQ(semilattice_to_json(semilattice_from_json(parse_json(j.dump()))), j);
  }
  std::vector<ChainIndex> const xs{0, 4};
  auto const s = s_lambda(xs);
  EXPECT_TRUE(semilattice_from_json(semilattice_to_json(s)) == s);
}

TEST(Json, MissingJoinIsAnError) {
  auto j = semilattice_to_json(testing::square());
  j["joins"].erase(j["joins"].size() - 1);
  EXPECT_EQ(kind_of([&] { semilattice_from_json(j); }), ErrorKind::parse_error);
}

TEST(Json, CorruptJoinNamesThePair) {
  Json j = semilattice_to_json(testing::square());
  j["order"] = Json::array({{"0", "a"}, {"0", "b"}, {"a", "ab"}, {"b", "ab"}});
  for (auto& row : j["joins"]) {
    if (row[0] == "a" && row[1] == "b") row[2] = "a";
  }
  try {
    semilattice_from_json(j);
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.kind(), ErrorKind::join_not_lub);
    EXPECT_EQ(e.witness(), (std::vector<std::string>{"a", "b"}));
  }
  // Without an order, a join that is not an upper bound.
  Json k = semilattice_to_json(testing::square());
  for (auto& row : k["joins"]) {
    if (row[0] == "a" && row[1] == "b") row[2] = "0";
  }
  EXPECT_EQ(kind_of([&] { semilattice_from_json(k); }), ErrorKind::join_not_lub);
}

TEST(Json, SyntaxErrors) {
  EXPECT_EQ(kind_of([] { parse_json("{"); }), ErrorKind::parse_error);
  EXPECT_EQ(kind_of([] { semilattice_from_json(parse_json("[1,2]")); }),
            ErrorKind::parse_error);
  EXPECT_EQ(kind_of([] { read_json_file("/nonexistent/file.json"); }),
            ErrorKind::parse_error);
}

TEST(Json, LatticeAndPosetRoundTrip) {
  auto const l = FiniteLattice::from_semilattice(testing::n5());
  auto const back = lattice_from_json(lattice_to_json(l));
  EXPECT_TRUE(back.semilattice() == l.semilattice());
  EXPECT_TRUE(std::equal(back.meet_table().begin(), back.meet_table().end(),
                         l.meet_table().begin(), l.meet_table().end()));
  auto const p = testing::square().poset();
  EXPECT_TRUE(poset_from_json(poset_to_json(p)) == p);
}

TEST(Json, MeasureRoundTrip) {
  for (std::uint32_t n = 1; n <= 4; ++n) {
    auto const m = counterexample_measure(n, 1);
    auto const j = measure_to_json(m);
    auto const back = measure_from_json(j);
    EXPECT_EQ(back.mu, m.mu);
    EXPECT_TRUE(back.poset == m.poset);
    EXPECT_EQ(measure_to_json(back), j);
  }
  auto const t = theta_plus_measure(FiniteLattice::from_semilattice(testing::n5()));
  auto const j = measure_to_json(t);
  auto const back = measure_from_json(j);
  EXPECT_EQ(measure_to_json(back), j);
  EXPECT_EQ(find_v_measure_failure(back).has_value(), false);
}

TEST(Json, ProblemAndWitness) {
  Json const j = parse_json(R"({"semilattice":{"elements":["0","a","b","ab"],
    "zero":"0","joins":[["0","0","0"],["0","a","a"],["0","b","b"],["0","ab","ab"],
    ["a","a","a"],["a","b","ab"],["a","ab","ab"],["b","b","b"],["b","ab","ab"],
    ["ab","ab","ab"]]},"a":"a","b":"b","chain":["0","a","ab"]})");
  auto const f = problem_from_json(j);
  EXPECT_EQ(f.problem.chain.size(), 3u);
  auto const w = witness_to_json(f.problem, {{0, 1, 1}, {0, 0, 2}});
  EXPECT_EQ(w["a_seq"], Json({"0", "a", "a"}));
  EXPECT_EQ(w["b_seq"], Json({"0", "0", "b"}));
}

TEST(Dot, SquareHasCoverEdgesOnly) {
  auto const text = hasse_dot(testing::square().poset(), "sq");
  EXPECT_NE(text.find("digraph \"sq\""), std::string::npos);
  EXPECT_NE(text.find("rankdir=BT"), std::string::npos);
  std::size_t edges = 0;
  for (std::size_t pos = 0; (pos = text.find("->", pos)) != std::string::npos; ++pos) ++edges;
  EXPECT_EQ(edges, 4u);
}

}  // namespace
}  // namespace meetless
