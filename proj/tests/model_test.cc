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

#include "habcsm/model.hpp"

#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "test_util.hpp"

namespace habcsm {
namespace {

std::vector<int> repeat(int v, int k) { return std::vector<int>(k, v); }

TEST(ParseSpecTest, UniformCoveringArray) {
  const auto p = parse_spec("CA(N;2,3^4)");
  EXPECT_EQ(p.system.cardinalities(), repeat(3, 4));
  EXPECT_EQ(p.strength.main_strength, 2);
  EXPECT_TRUE(p.strength.subs.empty());
}

TEST(ParseSpecTest, MixedGroupsExpandLeftToRight) {
  const auto p = parse_spec("MCA(N;2,3^6 2^4)");
  std::vector<int> expected = repeat(3, 6);
  for (int i = 0; i < 4; ++i) expected.push_back(2);
  EXPECT_EQ(p.system.cardinalities(), expected);
  EXPECT_EQ(p.system.size(), 10u);
  EXPECT_EQ(p.strength.main_strength, 2);
}

TEST(ParseSpecTest, VariableStrengthBindsLeftmostColumns) {
  const auto p = parse_spec("VSCA(N;2,3^15,{CA(3,3^3)})");
  EXPECT_EQ(p.system.cardinalities(), repeat(3, 15));
  ASSERT_EQ(p.strength.subs.size(), 1u);
  EXPECT_EQ(p.strength.subs[0].strength, 3);
  EXPECT_EQ(p.strength.subs[0].columns, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(ParseSpecTest, SuccessiveSubsClaimDisjointRuns) {
  const auto p = parse_spec("VSCA(N;2,3^15,{CA(3,3^4),CA(3,3^5)})");
  ASSERT_EQ(p.strength.subs.size(), 2u);
  EXPECT_EQ(p.strength.subs[0].columns, (std::vector<std::size_t>{0, 1, 2, 3}));
  EXPECT_EQ(p.strength.subs[1].columns,
            (std::vector<std::size_t>{4, 5, 6, 7, 8}));
}

TEST(ParseSpecTest, PositionalSubSkipsColumnsOfOtherCardinality) {
  const auto p = parse_spec("VSCA(N;2,4^3 5^3 6^2,{CA(3,5^3)})");
  ASSERT_EQ(p.strength.subs.size(), 1u);
  EXPECT_EQ(p.strength.subs[0].columns, (std::vector<std::size_t>{3, 4, 5}));
}

TEST(ParseSpecTest, ExplicitColumnListAndLenientSubForms) {
  const auto p = parse_spec(" VSCA ( N ; 2 , 10^1 9^1 8^1 7^1 , { CA(3,[1, 2,3]) ,"
                            " MCA(N,3, 10^1 9^1 8^1) } ) ");
  ASSERT_EQ(p.strength.subs.size(), 2u);
  EXPECT_EQ(p.strength.subs[0].columns, (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(p.strength.subs[1].columns, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(ParseSpecTest, EmptySubListIsPlainCoveringArray) {
  const auto p = parse_spec("VSCA(N;2,3^15,{})");
  EXPECT_TRUE(p.strength.subs.empty());
  EXPECT_EQ(p.system.size(), 15u);
}

SpecError::Kind error_kind(const std::string& text) {
  try {
    parse_spec(text);
  } catch (const SpecError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for " << text;
  return SpecError::Kind::kSyntax;
}

TEST(ParseSpecTest, SemanticErrors) {
  EXPECT_EQ(error_kind("CA(N;5,3^4)"), SpecError::Kind::kSemantic);
  EXPECT_EQ(error_kind("CA(N;1,3^4)"), SpecError::Kind::kSemantic);
  EXPECT_EQ(error_kind("CA(N;2,1^4)"), SpecError::Kind::kSemantic);
  EXPECT_EQ(error_kind("CA(N;2,3^1)"), SpecError::Kind::kSemantic);
  EXPECT_EQ(error_kind("VSCA(N;2,3^4,{CA(3,[1,2,9])})"),
            SpecError::Kind::kSemantic);
  EXPECT_EQ(error_kind("VSCA(N;2,3^4,{CA(3,[2,1,0])})"),
            SpecError::Kind::kSemantic);
  EXPECT_EQ(error_kind("VSCA(N;2,3^4,{CA(4,3^3)})"), SpecError::Kind::kSemantic);
  EXPECT_EQ(error_kind("VSCA(N;2,3^4,{CA(3,3^5)})"), SpecError::Kind::kSemantic);
  EXPECT_EQ(error_kind("VSCA(N;2,3^4,{CA(3,2^3)})"), SpecError::Kind::kSemantic);
}

TEST(ParseSpecTest, SyntaxErrors) {
  for (const char* bad :
       {"", "CA", "CA(2,3^4)", "CA(N;2,3^4", "CA(N;2,3 4)", "XA(N;2,3^4)",
        "CA(N;2,3^4)x", "CA(N;-2,3^4)", "CA(N;2,3^0)",
        "VSCA(N;2,3^4)", "VSCA(N;2,3^4,{CA(3,3^3)}", "CA(N;2,3^4,{CA(3,3^3)})"}) {
    EXPECT_EQ(error_kind(bad), SpecError::Kind::kSyntax) << bad;
  }
}

TEST(ParseSpecTest, IgnoresNPlaceholderAndWhitespace) {
  EXPECT_EQ(parse_spec("CA ( N ; 2 , 3^4 )"), parse_spec("CA(N;2,3^4)"));
  EXPECT_EQ(parse_spec("CA(N,2,3^4)"), parse_spec("CA(N;2,3^4)"));
}

TEST(ParseSpecPropertyTest, UniformGridHasExactShape) {
  for (int p = 2; p <= 12; ++p) {
    for (int t = 2; t <= p; ++t) {
      for (int v = 2; v <= 10; ++v) {
        const std::string text = "CA(N;" + std::to_string(t) + "," +
                                 std::to_string(v) + "^" + std::to_string(p) + ")";
        const auto parsed = parse_spec(text);
        ASSERT_EQ(parsed.system.cardinalities(), repeat(v, p)) << text;
        ASSERT_EQ(parsed.strength.main_strength, t) << text;
      }
    }
  }
}

TEST(ParseSpecPropertyTest, CanonicalFormRoundTrips) {
  testing::ProblemGenerator gen(11, {2, 9, 2, 6, 2, 4, 0.5});
  for (int i = 0; i < 500; ++i) {
    const auto problem = gen.next();
    const auto text = to_spec_string(problem);
    const auto reparsed = parse_spec(text);
    ASSERT_EQ(reparsed, problem) << text;
    ASSERT_EQ(to_spec_string(reparsed), text);
  }
}

TEST(ToSpecStringTest, CompressesRuns) {
  EXPECT_EQ(to_spec_string(parse_spec("MCA(N;2,3^2 3^1 2^4)")),
            "MCA(N;2,3^3 2^4)");
  EXPECT_EQ(to_spec_string(parse_spec("MCA(N;2,3^4)")), "CA(N;2,3^4)");
  EXPECT_EQ(to_spec_string(parse_spec("VSCA(N;2,3^4,{CA(3,3^3)})")),
            "VSCA(N;2,3^4,{CA(3,[0,1,2])})");
}

TEST(ValidateTestCaseTest, ReportsEveryViolation) {
  const ParameterSystem sys({3, 3, 3, 3});
  EXPECT_TRUE(validate_test_case({{0, 1, 2, 0}}, sys).empty());

  const auto one = validate_test_case({{0, 3, 0, 0}}, sys);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].kind, Violation::Kind::kOutOfRange);
  EXPECT_EQ(one[0].index, 1u);

  const auto many = validate_test_case({{-1, 3, 0, 7}}, sys);
  ASSERT_EQ(many.size(), 3u);
  EXPECT_EQ(many[2].index, 3u);

  const auto empty = validate_test_case({}, ParameterSystem({3, 3}));
  ASSERT_EQ(empty.size(), 1u);
  EXPECT_EQ(empty[0].kind, Violation::Kind::kLengthMismatch);
}

TEST(ParameterSystemTest, RejectsDegenerateSystems) {
  EXPECT_THROW(ParameterSystem({3}), SpecError);
  EXPECT_THROW(ParameterSystem({3, 1}), SpecError);
}

}  // namespace
}  // namespace habcsm
