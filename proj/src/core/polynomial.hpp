#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "exponent.hpp"
#include "rational.hpp"

namespace powerclose {

/// A nonzero polynomial with rational coefficients, terms keyed by exponent
/// in lexicographic order. Zero coefficients are never stored.
class PolynomialElement {
 public:
  /// Combines like terms. Throws kInvalidArgument if the result is zero,
  /// kDimensionMismatch if exponents have different lengths.
  static PolynomialElement fromTerms(const std::vector<std::pair<Rational, ExponentVector>>& terms);
  static PolynomialElement monomial(const ExponentVector& exponent, Rational coefficient = 1);

  std::size_t dim() const noexcept { return dim_; }
  const std::map<ExponentVector, Rational>& terms() const noexcept { return terms_; }

  PolynomialElement timesMonomial(const ExponentVector& exponent) const;
  friend PolynomialElement operator*(const PolynomialElement& a, const PolynomialElement& b);

  bool operator==(const PolynomialElement&) const = default;

  std::string str() const;

 private:
  PolynomialElement() = default;

  std::size_t dim_ = 0;
  std::map<ExponentVector, Rational> terms_;
};

}  // namespace powerclose
