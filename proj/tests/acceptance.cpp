// Acceptance driver: one pass/fail line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include "golden_runner.hpp"
#include "meetless/chain.hpp"
#include "meetless/json_io.hpp"
#include "meetless/measures.hpp"
#include "meetless/sampling.hpp"
#include "meetless/suites.hpp"
#include "meetless/term.hpp"

namespace {

struct Criterion {
  int number;
  char const* suite;  // nullptr for the CLI criterion
  double budget_s;    // 0 means no time bound
};

constexpr Criterion kCriteria[] = {
    {1, "semilattice-laws", 10},     {2, "free-structure", 300},
    {3, "join-oracle", 300},         {4, "projection", 0},
    {5, "bowtie-identities", 30},    {6, "functor-laws", 0},
    {7, "interpolation", 600},       {8, "lemmas", 0},
    {9, "theta-plus", 300},          {10, "counterexample", 60},
    {11, "monotone-refinement", 300}, {12, nullptr, 0},
};

// Golden CLI cases plus in-process round trips of the interchange formats.
meetless::SuiteResult cli_contract() {
  using namespace meetless;
  SuiteResult r{"cli-contract", true, {}, 0};
  auto const o = golden::run_all(MEETLESS_CLI_PATH, MEETLESS_GOLDEN_DIR);
  std::size_t trips = 0;
  std::string trip_failure;
  Rng rng(12);
  std::vector<ChainIndex> const xs{0, 1, 2};
  auto const atoms = s_lambda_codes(xs);
  for (int i = 0; i < 2000 && trip_failure.empty(); ++i, ++trips) {
    auto const x = random_element(rng, chain_extension(), atoms);
    if (!(parse_term(print_term(x)) == x)) trip_failure = print_term(x);
  }
  for (std::uint32_t n = 1; n <= 6 && trip_failure.empty(); ++n, ++trips) {
    auto const j = measure_to_json(counterexample_measure(n, 1));
    if (measure_to_json(measure_from_json(parse_json(j.dump()))) != j) {
      trip_failure = "counterexample measure " + std::to_string(n);
    }
  }
  for (std::size_t k = 0; k <= 4 && trip_failure.empty(); ++k, ++trips) {
    std::vector<ChainIndex> ix;
    for (ChainIndex i = 0; i < k; ++i) ix.push_back(2 * i);
    auto const j = semilattice_to_json(s_lambda(ix));
    if (semilattice_to_json(semilattice_from_json(parse_json(j.dump()))) != j) {
      trip_failure = "S(Λ) table " + std::to_string(k);
    }
  }
  r.passed = o.failures.empty() && trip_failure.empty() && o.cases > 0;
  r.detail = std::to_string(o.cases) + " golden cases, " +
             std::to_string(o.failures.size()) + " diffs; " +
             std::to_string(trips) + " round trips";
  if (!o.failures.empty()) r.detail += "; first: " + o.failures.front();
  if (!trip_failure.empty()) r.detail += "; round trip failed: " + trip_failure;
  return r;
}

}  // namespace

int main() {
  int failed = 0;
  for (auto const& c : kCriteria) {
    auto const start = std::chrono::steady_clock::now();
    auto r = c.suite ? meetless::run_suite(c.suite) : cli_contract();
    double const secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool const in_time = c.budget_s == 0 || secs < c.budget_s;
    bool const pass = r.passed && in_time;
    if (!pass) ++failed;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << c.number << " ["
              << r.name << "] " << r.detail << " (" << timing;
    if (c.budget_s > 0) std::cout << ", budget " << c.budget_s << " s";
    std::cout << ")" << (in_time ? "" : " OVER BUDGET") << std::endl;
  }
  std::cout << (12 - failed) << "/12 criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
