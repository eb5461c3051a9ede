#include <gtest/gtest.h>

#include <sstream>

#include "../golden_runner.hpp"
#include "meetless/cli.hpp"
#include "meetless/json_io.hpp"

namespace meetless {
namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<char const*> args, std::string const& input = {}) {
  args.insert(args.begin(), "meetless");
  std::istringstream in(input);
  std::ostringstream out, err;
  int const code = run_cli(static_cast<int>(args.size()), args.data(), in, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, ComplexityExample) {
  auto const r = run({"freeext", "cx", "bowtie(a,b,join(a,b))"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(parse_json(r.out)["cx"], 2);
}

TEST(Cli, CounterexamplePipesIntoCheck) {
  auto const m = run({"measure", "counterexample", "--n", "3"});
  ASSERT_EQ(m.code, 0);
  auto const c = run({"measure", "check", "--vmeasure", "--pairs", "a,b", "-"}, m.out);
  EXPECT_EQ(c.code, 1);
  auto const j = parse_json(c.out);
  EXPECT_EQ(j["failure"]["x"], "0");
  EXPECT_EQ(j["failure"]["y"], "3");
  EXPECT_EQ(j["failure"]["a"], "a");
  EXPECT_EQ(j["failure"]["b"], "b");
}

TEST(Cli, SLambdaHasSevenElements) {
  auto const r = run({"chain", "slambda", "--indices", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(parse_json(r.out)["elements"].size(), 7u);
  auto const back = run({"check", "semilattice", "-"}, r.out);
  EXPECT_EQ(back.code, 0);
  EXPECT_EQ(parse_json(back.out)["distributive"], false);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"chain", "slambda", "--bogus"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"freeext", "cx", "join("}).code, 2);
  EXPECT_EQ(run({"check", "semilattice", "-"}, "{\"elements\":").code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, GuardOverflowExitsWithThree) {
  ::setenv("MEETLESS_GUARD", "3", 1);
  auto const m = run({"measure", "counterexample", "--n", "4"});
  auto const r = run({"measure", "check", "--vmeasure", "-"}, m.out);
  ::unsetenv("MEETLESS_GUARD");
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(parse_json(r.out)["error"], "SearchSpaceTooLarge");
}

TEST(Cli, OutputIsDeterministic) {
  auto const a = run({"chain", "slambda", "--indices", "0,3"});
  auto const b = run({"chain", "slambda", "--indices", "0,3"});
  EXPECT_EQ(a.out, b.out);
}

TEST(CliGolden, AllCasesMatch) {
  auto const o = golden::run_all(MEETLESS_CLI_PATH, MEETLESS_GOLDEN_DIR);
  EXPECT_GT(o.cases, 40u);
  for (auto const& f : o.failures) ADD_FAILURE() << f;
}

}  // namespace
}  // namespace meetless
