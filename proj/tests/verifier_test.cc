// Copyright 2026 The habcsm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "habcsm/verifier.hpp"

#include <algorithm>
#include <vector>

#include "gtest/gtest.h"
#include "habcsm/interaction.hpp"
#include "habcsm/strategy.hpp"
#include "test_util.hpp"

namespace habcsm {
namespace {

using verifier::brute_force_weight;
using verifier::MissingTuple;
using verifier::verify_coverage;

TEST(BruteForceWeightTest, FreshAndComplete) {
  const auto p = parse_spec("CA(N;2,3^4)");
  TupleUniverse u(p.system, p.strength);
  EXPECT_EQ(brute_force_weight(TestCase{{2, 0, 1, 1}}, u), 6u);
  for (const auto& row : testing::orthogonal_array_l9().rows) u.mark_covered(row);
  EXPECT_EQ(brute_force_weight(TestCase{{2, 0, 1, 1}}, u), 0u);
}

TEST(BruteForceWeightPropertyTest, MatchesCoverageWeight) {
  testing::ProblemGenerator gen(23, {2, 7, 2, 4, 2, 3, 0.25});
  int mismatches = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto problem = gen.next();
    TupleUniverse u(problem.system, problem.strength);
    const int prefill = gen.pick(0, 25);
    for (int r = 0; r < prefill; ++r) u.mark_covered(gen.random_row(problem.system));
    const auto tc = gen.random_row(problem.system);
    if (brute_force_weight(tc, u) != coverage_weight(tc, u)) ++mismatches;
  }
  EXPECT_EQ(mismatches, 0);
}

TEST(VerifyCoverageTest, OrthogonalArrayIsComplete) {
  const auto p = parse_spec("CA(N;2,3^4)");
  const auto report = verify_coverage(testing::orthogonal_array_l9(), p);
  EXPECT_TRUE(report.complete());
  EXPECT_EQ(report.required, 54u);
}

TEST(VerifyCoverageTest, DeletedRowLosesExactlyItsPairs) {
  const auto p = parse_spec("CA(N;2,3^4)");
  for (std::size_t drop = 0; drop < 9; ++drop) {
    auto ts = testing::orthogonal_array_l9();
    const auto removed = ts.rows[drop];
    ts.rows.erase(ts.rows.begin() + static_cast<long>(drop));
    auto report = verify_coverage(ts, p);
    std::vector<MissingTuple> expected;
    for (std::size_t a = 0; a < 4; ++a) {
      for (std::size_t b = a + 1; b < 4; ++b) {
        expected.push_back({{a, b}, {removed[a], removed[b]}});
      }
    }
    std::sort(report.missing.begin(), report.missing.end());
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(report.missing, expected) << "dropped row " << drop;
  }
}

TEST(VerifyCoverageTest, EmptySetMissesEverything) {
  const auto p = parse_spec("VSCA(N;2,3^4,{CA(3,3^3)})");
  const auto report = verify_coverage(TestSet{}, p);
  EXPECT_EQ(report.required, 81u);
  EXPECT_EQ(report.missing.size(), 81u);
}

TEST(VerifyCoverageTest, SubStrengthIsChecked) {
  // Pairwise-complete but not triple-complete on the sub columns.
  const auto p = parse_spec("VSCA(N;2,3^4,{CA(3,3^3)})");
  const auto report = verify_coverage(testing::orthogonal_array_l9(), p);
  EXPECT_EQ(report.missing.size(), 27u - 9u);
  for (const auto& m : report.missing) {
    EXPECT_EQ(m.columns, (std::vector<std::size_t>{0, 1, 2}));
  }
}

TEST(VerifyCoveragePropertyTest, GeneratedSetsAreComplete) {
  testing::ProblemGenerator gen(29, {2, 7, 2, 4, 2, 3, 0.25});
  GenerationOptions opts;
  opts.search.mcn = 50;
  for (int i = 0; i < 50; ++i) {
    const auto problem = gen.next();
    opts.search.seed = static_cast<std::uint64_t>(i);
    const auto report = generate_test_set(problem, opts);
    ASSERT_TRUE(verify_coverage(report.test_set, problem).complete())
        << to_spec_string(problem) << " seed " << i;
  }
}

TEST(VerifyCoveragePropertyTest, EveryRowWasLoadBearingWhenAdded) {
  testing::ProblemGenerator gen(31, {2, 6, 2, 4, 2, 3, 0.25});
  GenerationOptions opts;
  opts.search.mcn = 50;
  for (int i = 0; i < 25; ++i) {
    const auto problem = gen.next();
    opts.search.seed = static_cast<std::uint64_t>(i);
    const auto report = generate_test_set(problem, opts);
    TestSet prefix;
    auto missing_before = verify_coverage(prefix, problem).missing.size();
    for (std::size_t r = 0; r < report.test_set.size(); ++r) {
      prefix.rows.push_back(report.test_set.rows[r]);
      const auto missing_after = verify_coverage(prefix, problem).missing.size();
      // Without row r the prefix misses exactly newly_covered[r] more tuples.
      ASSERT_GT(report.newly_covered[r], 0u);
      ASSERT_EQ(missing_before - missing_after, report.newly_covered[r]);
      missing_before = missing_after;
    }
    ASSERT_EQ(missing_before, 0u);
  }
}

TEST(RequiredColumnSetsTest, MatchesUniverseCombinations) {
  testing::ProblemGenerator gen(37, {2, 7, 2, 4, 2, 4, 0.5});
  for (int i = 0; i < 100; ++i) {
    const auto problem = gen.next();
    const TupleUniverse u(problem.system, problem.strength);
    auto sets = verifier::required_column_sets(problem.system, problem.strength);
    std::vector<std::vector<std::size_t>> from_universe;
    for (const auto& c : u.combinations()) from_universe.push_back(c.columns);
    std::sort(sets.begin(), sets.end());
    std::sort(from_universe.begin(), from_universe.end());
    ASSERT_EQ(sets, from_universe);
  }
}

}  // namespace
}  // namespace habcsm
