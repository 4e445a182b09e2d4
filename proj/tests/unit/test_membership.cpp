#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "membership.hpp"
#include "oracles.hpp"

using namespace fixture;

namespace {

PolynomialElement poly(std::vector<std::pair<Rational, ExponentVector>> terms) { return PolynomialElement::fromTerms(terms); }

std::vector<PolynomialElement> monomials(const MonomialIdeal& I) {
  std::vector<PolynomialElement> out;
  for (const auto& g : I.generators()) out.push_back(mono(g));
  return out;
}

PolynomialElement randomElement(oracle::Random& rnd, const MonomialIdeal& I) {
  for (;;) {
    std::vector<std::pair<Rational, ExponentVector>> terms;
    for (const auto& g : I.generators()) {
      const auto c = rnd.between(-2, 2);
      if (c == 0) continue;
      // occasionally push a term deeper into the ideal
      ExponentVector e = g;
      if (rnd.between(0, 3) == 0) e[static_cast<std::size_t>(rnd.between(0, static_cast<Exponent>(g.dim()) - 1))] += 1;
      terms.emplace_back(Rational(static_cast<long>(c)), e);
    }
    if (terms.empty()) continue;
    try {
      return poly(terms);
    } catch (const Error&) {
      // terms cancelled to zero
    }
  }
}

}  // namespace

TEST(Polynomial, CanonicalForm) {
  const auto p = poly({{1, {1, 0}}, {2, {0, 1}}, {-1, {1, 0}}});
  ASSERT_EQ(p.terms().size(), 1u);
  EXPECT_EQ(p.terms().begin()->second, 2);
  EXPECT_THROW(poly({{1, {1, 0}}, {-1, {1, 0}}}), Error);
  EXPECT_THROW(poly({}), Error);
  EXPECT_EQ(poly({{1, {1, 0}}, {1, {0, 1}}}), poly({{1, {0, 1}}, {1, {1, 0}}}));
}

TEST(TermwiseContained, Examples) {
  EXPECT_TRUE(termwiseContained(poly({{1, {3, 0}}, {1, {0, 3}}}), ideal({{3, 0}, {1, 1}, {0, 3}})));
  EXPECT_FALSE(termwiseContained(poly({{1, {1, 0}}, {1, {0, 2}}}), idealJ()));
}

TEST(StableClosure, Examples) {
  const TruncatedRing r3(2, 3);
  const auto x = stableClosure(r3, {mono({1, 0})});
  EXPECT_EQ(x.dimension(), 3u);
  for (const ExponentVector& e : {ExponentVector{1, 0}, ExponentVector{2, 0}, ExponentVector{1, 1}}) EXPECT_TRUE(x.containsMonomial(e));
  EXPECT_FALSE(x.containsMonomial({0, 1}));

  const TruncatedRing r2(2, 2);
  EXPECT_EQ(stableClosure(r2, {poly({{1, {1, 0}}, {1, {0, 1}}})}).dimension(), 1u);

  const TruncatedRing r4(2, 4);
  EXPECT_EQ(stableClosure(r4, monomials(ideal({{3, 0}, {1, 1}, {0, 3}}))).dimension(), 5u);
}

TEST(StableClosure, MonotoneAndIdempotent) {
  oracle::Random rnd(41);
  const TruncatedRing host(2, 5);
  for (int t = 0; t < 30; ++t) {
    const auto I = rnd.ideal(2, 4);
    std::vector<PolynomialElement> seeds{randomElement(rnd, I), randomElement(rnd, I)};
    const auto small = stableClosure(host, {seeds[0]});
    const auto big = stableClosure(host, seeds);
    for (const auto& row : small.basis()) EXPECT_TRUE(big.contains(row));
    std::vector<PolynomialElement> again;
    for (const auto& row : big.basis()) {
      std::vector<std::pair<Rational, ExponentVector>> terms;
      for (const auto& [i, c] : row) terms.emplace_back(c, host.monomial(i));
      again.push_back(poly(terms));
    }
    EXPECT_EQ(stableClosure(host, again), big);
  }
}

TEST(VerifyIdealEquality, ExampleIdentities) {
  // X*J + Y*I = IJ
  std::vector<PolynomialElement> lhs{mono({3, 0}), mono({1, 1}), mono({1, 1}), mono({0, 3})};
  for (auto method : {EqualityMethod::kGeneratorQuotient, EqualityMethod::kTruncatedRing}) {
    EXPECT_TRUE(verifyIdealEquality(lhs, ideal({{3, 0}, {1, 1}, {0, 3}}), method).equal);
  }

  // (X^3 + Y^3, XY) IJ = I^2 J^2
  const auto ij = product(idealI(), idealJ());
  const auto target = product(ij, ij);
  EXPECT_EQ(target, ideal({{6, 0}, {4, 1}, {2, 2}, {1, 4}, {0, 6}}));
  std::vector<PolynomialElement> reduction;
  for (const auto& g : ij.generators()) {
    reduction.push_back(poly({{1, {3, 0}}, {1, {0, 3}}}).timesMonomial(g));
    reduction.push_back(mono({1, 1}).timesMonomial(g));
  }
  for (auto method : {EqualityMethod::kGeneratorQuotient, EqualityMethod::kTruncatedRing}) {
    EXPECT_TRUE(verifyIdealEquality(reduction, target, method).equal);
  }
}

TEST(VerifyIdealEquality, GeneratorsOfTargetAlwaysPass) {
  oracle::Random rnd(42);
  for (int t = 0; t < 80; ++t) {
    const auto T = rnd.ideal(static_cast<std::size_t>(rnd.between(1, 3)), 5);
    EXPECT_TRUE(verifyIdealEquality(monomials(T), T).equal);
  }
}

TEST(VerifyIdealEquality, Errors) {
  try {
    verifyIdealEquality({mono({1, 0})}, idealJ());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotContained);
  }
  EXPECT_THROW(verifyIdealEquality({mono({1, 1})}, ideal({{1, 1}})), Error);
}

TEST(VerifyIdealEquality, DroppingAnElementNeverErrors) {
  std::vector<PolynomialElement> lhs{mono({3, 0}), mono({1, 1}), mono({0, 3})};
  const auto T = ideal({{3, 0}, {1, 1}, {0, 3}});
  for (std::size_t drop = 0; drop < lhs.size(); ++drop) {
    auto smaller = lhs;
    smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(drop));
    const auto r = verifyIdealEquality(smaller, T);
    EXPECT_FALSE(r.equal);
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_EQ(*r.witness, lhs[drop].terms().begin()->first);
  }
}

TEST(VerifyIdealEquality, AgreesWithBruteForceOracle) {
  oracle::Random rnd(43);
  int positives = 0;
  for (int t = 0; t < 150; ++t) {
    const auto T = rnd.ideal(2, 3);
    const Exponent N = adicInclusionDegree(T);
    if (N > 6) continue;
    std::vector<PolynomialElement> lhs;
    const auto count = rnd.between(1, static_cast<Exponent>(T.size()) + 1);
    for (Exponent i = 0; i < count; ++i) lhs.push_back(randomElement(rnd, T));
    const bool expected = oracle::bruteEquality(lhs, T, N + 2);
    positives += expected;
    for (auto method : {EqualityMethod::kGeneratorQuotient, EqualityMethod::kTruncatedRing}) {
      const auto r = verifyIdealEquality(lhs, T, method);
      EXPECT_EQ(r.equal, expected) << T.str();
      if (!r.equal) {
        ASSERT_TRUE(r.witness.has_value());
        const auto& gens = T.generators();
        EXPECT_NE(std::find(gens.begin(), gens.end(), *r.witness), gens.end());
      }
    }
  }
  EXPECT_GT(positives, 10);
}
