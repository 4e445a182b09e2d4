#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace fixture;

namespace {

ErrorCode codeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

}  // namespace

TEST(Exponent, RejectsNegativeEntries) {
  EXPECT_EQ(codeOf([] { ExponentVector({1, -1}); }), ErrorCode::kNegativeExponent);
}

TEST(Exponent, CheckedArithmeticOverflows) {
  EXPECT_EQ(codeOf([] { checkedAdd(INT64_MAX, 1); }), ErrorCode::kOverflow);
  EXPECT_EQ(codeOf([] { ExponentVector({INT64_MAX / 2 + 1}).scaled(2); }), ErrorCode::kOverflow);
}

TEST(Exponent, BoxAndShellEnumeration) {
  auto box = boxPoints({0, 1}, {1, 2});
  ASSERT_EQ(box.size(), 4u);
  EXPECT_EQ(box.front(), MultiIndex({0, 1}));
  EXPECT_EQ(box.back(), MultiIndex({1, 2}));
  // binom(t+s-1, s-1) points per shell
  EXPECT_EQ(shell(3, 2).size(), 6u);
  EXPECT_EQ(shell(2, 0).size(), 1u);
}

TEST(Minimalize, Examples) {
  EXPECT_EQ(minimalize({{2, 0}, {1, 1}, {2, 1}}).generators(), (std::vector<ExponentVector>{{1, 1}, {2, 0}}));
  EXPECT_EQ(minimalize({{1, 0}, {0, 1}}).generators(), (std::vector<ExponentVector>{{0, 1}, {1, 0}}));
  EXPECT_EQ(minimalize({{3, 0}, {1, 1}, {2, 2}, {0, 3}}), ideal({{3, 0}, {1, 1}, {0, 3}}));
}

TEST(Minimalize, Errors) {
  EXPECT_EQ(codeOf([] { minimalize({}); }), ErrorCode::kEmptyGenerators);
  EXPECT_EQ(codeOf([] { minimalize({{1, 0}, {1, 0, 0}}); }), ErrorCode::kDimensionMismatch);
}

TEST(Minimalize, IdempotentAndOrderInsensitive) {
  oracle::Random rnd(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = static_cast<std::size_t>(rnd.between(1, 3));
    std::vector<ExponentVector> gens;
    const auto count = rnd.between(1, 9);
    for (int i = 0; i < count; ++i) {
      ExponentVector g(d);
      for (std::size_t k = 0; k < d; ++k) g[k] = rnd.between(0, 5);
      gens.push_back(g);
    }
    const auto once = minimalize(gens);
    EXPECT_EQ(minimalize(once.generators()), once);
    std::shuffle(gens.begin(), gens.end(), rnd.engine());
    EXPECT_EQ(minimalize(gens), once);
    // antichain
    for (const auto& a : once.generators()) {
      for (const auto& b : once.generators()) {
        if (a != b) {
          EXPECT_FALSE(a.divides(b));
        }
      }
    }
  }
}

TEST(Product, Examples) {
  EXPECT_EQ(product(idealI(), idealJ()), ideal({{3, 0}, {1, 1}, {0, 3}}));
  EXPECT_EQ(product(maximal(2), maximal(2)), ideal({{2, 0}, {1, 1}, {0, 2}}));
  // I*m then containment both ways with the shifted generators
  const auto shifted = product(idealI(), maximal(2));
  EXPECT_TRUE(isSubset(shifted, idealI()));
  EXPECT_EQ(codeOf([] { product(maximal(2), maximal(3)); }), ErrorCode::kDimensionMismatch);
}

TEST(Product, CommutativeAssociativeAndMatchesNaive) {
  oracle::Random rnd(12);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t d = static_cast<std::size_t>(rnd.between(1, 3));
    const auto a = rnd.ideal(d, 4);
    const auto b = rnd.ideal(d, 4);
    const auto c = rnd.ideal(d, 4);
    EXPECT_EQ(product(a, b), product(b, a));
    EXPECT_EQ(product(product(a, b), c), product(a, product(b, c)));
    EXPECT_EQ(product(a, b), oracle::naiveProduct(a, b));
    EXPECT_GE(colength(product(a, b)), std::max(colength(a), colength(b)));
  }
}

TEST(MultiPower, Examples) {
  const auto family = exampleFamily();
  EXPECT_EQ(multiPower(family, {1, 1}), ideal({{3, 0}, {1, 1}, {0, 3}}));
  EXPECT_EQ(multiPower(family, {2, 1}), ideal({{4, 0}, {2, 1}, {1, 3}, {0, 5}}));
  EXPECT_EQ(multiPower({{maximal(2)}}, {1}), maximal(2));
  EXPECT_EQ(codeOf([&] { multiPower(family, {-1, 2}); }), ErrorCode::kNegativeExponent);
  EXPECT_EQ(codeOf([&] { multiPower(family, {0, 0}); }), ErrorCode::kZeroMultiIndex);
}

TEST(MultiPower, AdditiveInExponent) {
  oracle::Random rnd(13);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t d = static_cast<std::size_t>(rnd.between(1, 3));
    IdealFamily family{{rnd.ideal(d, 3), rnd.ideal(d, 3)}};
    MultiIndex n{rnd.between(0, 2), rnd.between(0, 2)};
    MultiIndex m{rnd.between(0, 2), rnd.between(0, 2)};
    if (n.isZero() || m.isZero()) continue;
    EXPECT_EQ(multiPower(family, n + m), product(multiPower(family, n), multiPower(family, m)));
    // repeated squaring against repeated naive multiplication
    MonomialIdeal naive = family.ideals[0];
    for (Exponent k = 1; k < n[0] + 2; ++k) naive = oracle::naiveProduct(naive, family.ideals[0]);
    EXPECT_EQ(power(family.ideals[0], n[0] + 2), naive);
  }
}

TEST(Contains, Examples) {
  const auto ij = ideal({{3, 0}, {1, 1}, {0, 3}});
  EXPECT_TRUE(ij.contains({2, 1}));
  EXPECT_FALSE(ij.contains({0, 2}));
  for (const auto& g : ij.generators()) EXPECT_TRUE(contains(ij, g));
  EXPECT_EQ(codeOf([&] { contains(ij, {1, 1, 1}); }), ErrorCode::kDimensionMismatch);
}

TEST(IsMPrimary, Examples) {
  EXPECT_TRUE(isMPrimary(idealI()));
  EXPECT_FALSE(isMPrimary(ideal({{1, 1}})));
  EXPECT_TRUE(isMPrimary(ideal({{2, 0}, {1, 1}, {0, 2}})));
}

TEST(Colength, Examples) {
  EXPECT_EQ(colength(maximal(2)), 1u);
  EXPECT_EQ(colength(ideal({{3, 0}, {1, 1}, {0, 3}})), 5u);
  EXPECT_EQ(colength(idealI()), 2u);
  EXPECT_EQ(codeOf([] { colength(ideal({{1, 0}})); }), ErrorCode::kNotMPrimary);
  EXPECT_EQ(standardMonomials(ideal({{3, 0}, {1, 1}, {0, 3}})).size(), 5u);
}

TEST(Colength, ClosedFormForPowersOfXY2) {
  const IdealFamily family{{idealI()}};
  for (Exponent n = 1; n <= 8; ++n) {
    EXPECT_EQ(colength(multiPower(family, {n})), static_cast<std::uint64_t>(n * n + n)) << "n=" << n;
  }
}

TEST(Colength, MatchesInclusionExclusion) {
  oracle::Random rnd(14);
  int compared = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t d = static_cast<std::size_t>(rnd.between(1, 3));
    const auto I = rnd.ideal(d, 6, 3);
    if (I.size() > 5) continue;
    ++compared;
    EXPECT_EQ(colength(I), oracle::inclusionExclusionColength(I)) << I.str();
  }
  EXPECT_GT(compared, 200);
}

TEST(AdicInclusionDegree, SmallCases) {
  EXPECT_EQ(adicInclusionDegree(maximal(3)), 1);
  EXPECT_EQ(adicInclusionDegree(ideal({{3, 0}, {1, 1}, {0, 3}})), 3);
  EXPECT_EQ(adicInclusionDegree(idealI()), 2);
}

TEST(IdealFamily, Validation) {
  EXPECT_EQ(codeOf([] { IdealFamily{}.validate(); }), ErrorCode::kEmptyGenerators);
  EXPECT_EQ(codeOf([] { IdealFamily{{maximal(2), maximal(3)}}.validate(); }), ErrorCode::kDimensionMismatch);
  EXPECT_EQ(codeOf([] { IdealFamily{{ideal({{1, 0}})}}.validate(); }), ErrorCode::kNotMPrimary);
}
