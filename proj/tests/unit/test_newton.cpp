#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "newton.hpp"
#include "oracles.hpp"
#include "simplex.hpp"

using namespace fixture;

TEST(Simplex, SmallProblems) {
  using Relation = LinearProgram::Relation;
  // min -x - y s.t. x + 2y <= 4, 3x + y <= 6 -> (8/5, 6/5)
  LinearProgram lp;
  lp.variables = 2;
  lp.rows = {{{1, 2}, Relation::kLessEqual, 4}, {{3, 1}, Relation::kLessEqual, 6}};
  lp.objective = {-1, -1};
  auto sol = solve(lp);
  ASSERT_EQ(sol.status, LpStatus::kOptimal);
  EXPECT_EQ(sol.value, Rational(-14) / 5);
  EXPECT_EQ(sol.x[0], Rational(8) / 5);

  LinearProgram infeasible;
  infeasible.variables = 1;
  infeasible.rows = {{{1}, LinearProgram::Relation::kEqual, -1}};
  infeasible.objective = {0};
  EXPECT_EQ(solve(infeasible).status, LpStatus::kInfeasible);
}

TEST(NewtonMember, Examples) {
  const auto I = ideal({{2, 0}, {0, 2}});
  auto cert = newtonMember(I, {1, 1});
  ASSERT_TRUE(cert.verdict);
  EXPECT_TRUE(cert.verify(I, {1, 1}));
  ASSERT_EQ(cert.weights.size(), 2u);
  EXPECT_EQ(cert.weights[0].second, Rational(1) / 2);
  EXPECT_EQ(cert.weights[1].second, Rational(1) / 2);

  EXPECT_FALSE(newtonMember(I, {1, 0}).verdict);

  oracle::Random rnd(21);
  for (int t = 0; t < 30; ++t) {
    const auto J = rnd.ideal(3, 4);
    for (std::size_t g = 0; g < J.size(); ++g) {
      auto c = newtonMember(J, J.generators()[g]);
      ASSERT_TRUE(c.verdict);
      EXPECT_TRUE(c.verify(J, J.generators()[g]));
    }
  }
}

TEST(NewtonMember, TamperedCertificateIsRejected) {
  const auto I = ideal({{2, 0}, {0, 2}});
  auto cert = newtonMember(I, {1, 1});
  cert.weights[0].second = Rational(2) / 3;
  EXPECT_FALSE(cert.verify(I, {1, 1}));
}

TEST(NewtonMember, Errors) {
  EXPECT_THROW(newtonMember(ideal({{1, 1}}), {1, 1}), Error);
  EXPECT_THROW(newtonMember(maximal(2), {1, 1, 1}), Error);
}

TEST(IntegralClosure, Examples) {
  EXPECT_EQ(integralClosure(ideal({{2, 0}, {0, 2}})), ideal({{2, 0}, {1, 1}, {0, 2}}));
  EXPECT_EQ(integralClosure(idealI()), idealI());
  EXPECT_EQ(integralClosure(maximal(2)), maximal(2));
  EXPECT_FALSE(isComplete(ideal({{2, 0}, {0, 2}})));
  EXPECT_TRUE(isComplete(ideal({{2, 0}, {1, 1}, {0, 2}})));
  EXPECT_TRUE(isComplete(idealI()));
  EXPECT_THROW(integralClosure(ideal({{1, 1}})), Error);
}

TEST(IntegralClosure, MatchesLpBoxScan) {
  oracle::Random rnd(22);
  for (int t = 0; t < 120; ++t) {
    const std::size_t d = static_cast<std::size_t>(rnd.between(1, 3));
    const auto I = rnd.ideal(d, 5);
    EXPECT_EQ(integralClosure(I), oracle::lpBoxClosure(I)) << I.str();
  }
}

TEST(IntegralClosure, IdempotentMonotoneMultiplicative) {
  oracle::Random rnd(23);
  for (int t = 0; t < 100; ++t) {
    const std::size_t d = static_cast<std::size_t>(rnd.between(1, 3));
    const auto I = rnd.ideal(d, 5);
    const auto J = rnd.ideal(d, 5);
    const auto cI = integralClosure(I);
    const auto cJ = integralClosure(J);
    EXPECT_EQ(integralClosure(cI), cI);
    EXPECT_TRUE(isSubset(I, cI));
    // I*J is inside I, so its closure is inside the closure of I
    EXPECT_TRUE(isSubset(integralClosure(product(I, J)), cI));
    EXPECT_TRUE(isSubset(product(cI, cJ), integralClosure(product(I, J))));
  }
}

TEST(PowerOracle, Examples) {
  EXPECT_TRUE(powerOracleMember(ideal({{2, 0}, {0, 2}}), {1, 1}, 2));
  EXPECT_TRUE(powerOracleMember(maximal(2), {1, 0}, 1));
  EXPECT_FALSE(powerOracleMember(ideal({{2, 0}, {0, 2}}), {1, 0}, 8));
}

TEST(PowerOracle, AgreesWithNewtonMember) {
  oracle::Random rnd(24);
  for (int t = 0; t < 40; ++t) {
    const std::size_t d = static_cast<std::size_t>(rnd.between(1, 3));
    const auto I = rnd.ideal(d, 3);
    const auto corner = I.boundingCorner();
    const Exponent kmax = static_cast<Exponent>(d) * *std::max_element(corner.begin(), corner.end());
    for (const auto& n : boxPoints(MultiIndex(d), MultiIndex(std::vector<Exponent>(corner.begin(), corner.end())))) {
      const ExponentVector a(std::vector<Exponent>(n.begin(), n.end()));
      EXPECT_EQ(newtonMember(I, a).verdict, powerOracleMember(I, a, kmax)) << I.str() << " at " << a.str();
    }
  }
}

TEST(NewtonPolyhedron, FacetsDescribeMembership) {
  oracle::Random rnd(25);
  for (int t = 0; t < 60; ++t) {
    const auto I = rnd.ideal(3, 4);
    const auto np = NewtonPolyhedron::of(I);
    for (const auto& f : np.facets()) {
      for (auto c : f.normal) EXPECT_GE(c, 0);
    }
    const auto corner = I.boundingCorner();
    for (const auto& n : boxPoints(MultiIndex(3), MultiIndex(std::vector<Exponent>(corner.begin(), corner.end())))) {
      const ExponentVector a(std::vector<Exponent>(n.begin(), n.end()));
      EXPECT_EQ(np.contains(a), newtonMember(I, a).verdict);
    }
  }
}

TEST(ProductClosure, MatchesClosureOfProduct) {
  oracle::Random rnd(26);
  for (int t = 0; t < 40; ++t) {
    const std::size_t d = static_cast<std::size_t>(rnd.between(2, 3));
    IdealFamily family{{rnd.ideal(d, 3), rnd.ideal(d, 3)}};
    ProductClosure closures(family);
    for (const auto& n : boxPoints({0, 0}, {2, 2})) {
      if (n.isZero()) continue;
      const auto expected = integralClosure(multiPower(family, n));
      EXPECT_EQ(closures.closure(n), expected) << n.str();
      EXPECT_EQ(closures.closureColength(n), colength(expected));
    }
  }
}
