#include "polynomial.hpp"

#include <sstream>

namespace powerclose {

PolynomialElement PolynomialElement::fromTerms(const std::vector<std::pair<Rational, ExponentVector>>& terms) {
  if (terms.empty()) fail(ErrorCode::kInvalidArgument, "the zero polynomial is not a valid element");
  PolynomialElement p;
  p.dim_ = terms.front().second.dim();
  for (const auto& [coefficient, exponent] : terms) {
    if (exponent.dim() != p.dim_) fail(ErrorCode::kDimensionMismatch, "polynomial terms of different lengths");
    Rational& slot = p.terms_[exponent];
    slot += coefficient;
    if (slot == 0) p.terms_.erase(exponent);
  }
  if (p.terms_.empty()) fail(ErrorCode::kInvalidArgument, "the zero polynomial is not a valid element");
  return p;
}

PolynomialElement PolynomialElement::monomial(const ExponentVector& exponent, Rational coefficient) {
  return fromTerms({{std::move(coefficient), exponent}});
}

PolynomialElement PolynomialElement::timesMonomial(const ExponentVector& exponent) const {
  if (exponent.dim() != dim_) fail(ErrorCode::kDimensionMismatch, "monomial and polynomial have different dimensions");
  PolynomialElement out;
  out.dim_ = dim_;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + exponent, c);
  return out;
}

PolynomialElement operator*(const PolynomialElement& a, const PolynomialElement& b) {
  std::vector<std::pair<Rational, ExponentVector>> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) terms.emplace_back(ca * cb, ea + eb);
  }
  return PolynomialElement::fromTerms(terms);
}

std::string PolynomialElement::str() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << c.get_str() << '*' << e.str();
  }
  return out.str();
}

}  // namespace powerclose
