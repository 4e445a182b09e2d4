#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "joint_reduction.hpp"

using namespace fixture;

namespace {

PolynomialElement poly(std::vector<std::pair<Rational, ExponentVector>> terms) { return PolynomialElement::fromTerms(terms); }

// {X} for I and {Y} for J
JointReductionCandidate xyCandidate() { return {{1, 1}, {{mono({1, 0})}, {mono({0, 1})}}}; }

}  // namespace

TEST(JointReductionCandidate, Validation) {
  const auto family = exampleFamily();
  EXPECT_NO_THROW(xyCandidate().validate(family));
  JointReductionCandidate wrongType{{2, 1}, {{mono({1, 0}), mono({0, 2})}, {mono({0, 1})}}};
  EXPECT_THROW(wrongType.validate(family), Error);
  JointReductionCandidate notInIdeal{{1, 1}, {{mono({0, 1})}, {mono({0, 1})}}};
  try {
    notInIdeal.validate(family);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotContained);
  }
}

TEST(VerifyJointReductionAt, ExampleIdentity) {
  const Filtration F(exampleFamily());
  EXPECT_TRUE(verifyJointReductionAt(F, xyCandidate(), {1, 1}).equal);
  EXPECT_TRUE(verifyJointReductionAt(F, xyCandidate(), {3, 2}).equal);
  // X I^r J^{s+1} + Y I^{r+1} J^s = I^{r+1} J^{s+1} for all r, s
  for (const auto& n : boxPoints({1, 1}, {6, 6})) EXPECT_TRUE(verifyJointReductionAt(F, xyCandidate(), n).equal) << n.str();
}

TEST(VerifyJointReductionAt, BadCandidateHasWitness) {
  const Filtration F(exampleFamily());
  const JointReductionCandidate c{{1, 1}, {{mono({2, 0})}, {mono({0, 1})}}};
  const auto r = verifyJointReductionAt(F, c, {1, 1});
  EXPECT_FALSE(r.equal);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_TRUE(F.ideal({1, 1})->contains(*r.witness));
}

TEST(VerifyJointReductionAt, ZeroCoordinateUsesUnitIdeal) {
  // At n = (1,0): X * F(0,0) + Y * F(1,-1) = (x) + y I = (x, y^3), which is not I.
  const Filtration F(exampleFamily());
  const auto r = verifyJointReductionAt(F, xyCandidate(), {1, 0});
  EXPECT_FALSE(r.equal);
  EXPECT_EQ(*r.witness, ExponentVector({0, 2}));
  EXPECT_THROW(verifyJointReductionAt(F, xyCandidate(), {0, 0}), Error);
}

TEST(VerifyJointReductionGrid, ExampleBoxes) {
  const Filtration F(exampleFamily());
  const auto shifted = verifyJointReductionGrid(F, xyCandidate(), {1, 1}, {6, 6});
  EXPECT_EQ(shifted.verified.size(), 36u);
  EXPECT_TRUE(shifted.failures.empty());
  EXPECT_EQ(shifted.claimedReductionVector(), MultiIndex({1, 1}));

  const auto full = verifyJointReductionGrid(F, xyCandidate(), {0, 0}, {5, 5});
  EXPECT_EQ(full.verified.size() + full.failures.size(), 36u);
  EXPECT_EQ(full.verified.size(), 25u);
  for (const auto& f : full.failures) EXPECT_TRUE(f.n[0] == 0 || f.n[1] == 0);
  EXPECT_EQ(full.claimedReductionVectors, std::vector<MultiIndex>{MultiIndex({1, 1})});
}

TEST(VerifyJointReductionGrid, SingletonMatchesPointCheck) {
  const Filtration F(exampleFamily());
  for (const auto& n : boxPoints({1, 0}, {3, 3})) {
    const auto report = verifyJointReductionGrid(F, xyCandidate(), n, n);
    EXPECT_EQ(report.failures.empty(), verifyJointReductionAt(F, xyCandidate(), n).equal);
  }
}

TEST(VerifyJointReductionGrid, MalformedCandidateFailsEverywhere) {
  // both elements lie in m * I_i
  const Filtration F(exampleFamily());
  const JointReductionCandidate c{{1, 1}, {{mono({2, 0})}, {mono({0, 2})}}};
  const auto report = verifyJointReductionGrid(F, c, {1, 1}, {3, 3});
  EXPECT_TRUE(report.verified.empty());
  EXPECT_EQ(report.failures.size(), 9u);
  EXPECT_TRUE(report.claimedReductionVectors.empty());
}

TEST(JrNumber, ExampleFamily) {
  const Filtration F(exampleFamily());
  const auto report = jrNumber(F, xyCandidate(), 4);
  ASSERT_TRUE(report.value.has_value());
  EXPECT_EQ(*report.value, 0);
  EXPECT_EQ(report.attempts.front().tested, 25u);
}

TEST(JrNumber, TypeTwoZero) {
  const Filtration F(exampleFamily());
  JointReductionSearchOptions options;
  options.seed = 5;
  options.grid = {5, 5};
  const auto found = searchJointReduction(F, {2, 0}, options);
  EXPECT_TRUE(found.gridReport.failures.empty());
  const auto report = jrNumber(F, found.candidate, 4);
  ASSERT_TRUE(report.value.has_value());
  EXPECT_LE(*report.value, 1);

  const JointReductionCandidate generic{{2, 0}, {{poly({{1, {1, 0}}, {2, {0, 2}}}), poly({{3, {1, 0}}, {-1, {0, 2}}})}, {}}};
  EXPECT_TRUE(verifyJointReductionGrid(F, generic, {2, 0}, {5, 5}).failures.empty());
}

TEST(JrNumber, MaximalIdealWithLinearForms) {
  const Filtration F({{maximal(2)}});
  const JointReductionCandidate c{{2}, {{poly({{1, {1, 0}}, {1, {0, 1}}}), poly({{1, {1, 0}}, {-1, {0, 1}}})}}};
  const auto report = jrNumber(F, c, 4);
  ASSERT_TRUE(report.value.has_value());
  EXPECT_EQ(*report.value, 0);
}

TEST(JrNumber, NoneFoundKeepsBestAttempt) {
  const Filtration F(exampleFamily());
  const JointReductionCandidate c{{1, 1}, {{mono({2, 0})}, {mono({0, 1})}}};
  const auto report = jrNumber(F, c, 2);
  EXPECT_FALSE(report.value.has_value());
  EXPECT_EQ(report.attempts.size(), 3u);
  ASSERT_NE(report.bestAttempt(), nullptr);
  EXPECT_TRUE(report.bestAttempt()->firstFailure.has_value());
}

TEST(SearchJointReduction, DeterministicAndPasses) {
  const Filtration F(exampleFamily());
  JointReductionSearchOptions options;
  options.seed = 1;
  options.grid = {5, 5};
  const auto a = searchJointReduction(F, {1, 1}, options);
  const auto b = searchJointReduction(F, {1, 1}, options);
  EXPECT_EQ(a.candidate.elements, b.candidate.elements);
  EXPECT_EQ(a.draws, b.draws);
  // stability probe on the extended box
  EXPECT_TRUE(verifyJointReductionGrid(F, a.candidate, {1, 1}, {7, 7}).failures.empty());
}

TEST(SearchJointReduction, OneVariable) {
  const Filtration F({{ideal({{1}})}});
  JointReductionSearchOptions options;
  options.grid = {6};
  const auto found = searchJointReduction(F, {1}, options);
  EXPECT_EQ(found.candidate.elements[0][0].terms().begin()->first, ExponentVector({1}));
}

TEST(SearchJointReduction, Exhausted) {
  const Filtration F({{maximal(2), maximal(2)}});
  JointReductionSearchOptions options;
  options.grid = {3, 3};
  options.maxDraws = 0;
  try {
    searchJointReduction(F, {1, 1}, options);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSearchExhausted);
  }
}

TEST(JointReduction, PermutationEquivariance) {
  const Filtration F(exampleFamily());
  const Filtration swapped({{idealJ(), idealI()}});
  const JointReductionCandidate c{{1, 1}, {{poly({{1, {1, 0}}, {1, {0, 2}}})}, {poly({{2, {2, 0}}, {1, {0, 1}}})}}};
  const JointReductionCandidate cs{{1, 1}, {c.elements[1], c.elements[0]}};
  for (const auto& n : boxPoints({1, 1}, {3, 3})) {
    EXPECT_EQ(verifyJointReductionAt(F, c, n).equal, verifyJointReductionAt(swapped, cs, {n[1], n[0]}).equal);
  }
}
