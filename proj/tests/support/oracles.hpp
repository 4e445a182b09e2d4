#pragma once

// Slow reference implementations used only by the tests. None of them shares
// an algorithm with the library code it checks.

#include <cstdint>
#include <random>
#include <vector>

#include "monomial_ideal.hpp"
#include "polynomial.hpp"

namespace oracle {

using powerclose::Exponent;
using powerclose::ExponentVector;
using powerclose::MonomialIdeal;
using powerclose::PolynomialElement;

/// Sum over generator subsets of signed box volumes above their lcm.
std::uint64_t inclusionExclusionColength(const MonomialIdeal& ideal);

/// Naive pairwise product then pairwise minimalization.
MonomialIdeal naiveProduct(const MonomialIdeal& a, const MonomialIdeal& b);

/// Every point of the bounding box run through the LP membership test, then minimalized.
MonomialIdeal lpBoxClosure(const MonomialIdeal& ideal);

/// (lhs) == T decided in R/m^{D+1} with D = degreeBound, by dense elimination of all
/// products x^b * f of degree <= D. Exact whenever m^{D+1} lies in m*T.
bool bruteEquality(const std::vector<PolynomialElement>& lhs, const MonomialIdeal& target, Exponent degreeBound);

class Random {
 public:
  explicit Random(std::uint64_t seed) : rng_(seed) {}

  Exponent between(Exponent lo, Exponent hi) { return std::uniform_int_distribution<Exponent>(lo, hi)(rng_); }

  /// m-primary: pure powers up to `bound` plus a few mixed points.
  MonomialIdeal ideal(std::size_t dim, Exponent bound, std::size_t extraMax = 4);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
