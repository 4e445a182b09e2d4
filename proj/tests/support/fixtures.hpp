#pragma once

#include <initializer_list>
#include <vector>

#include "monomial_ideal.hpp"
#include "polynomial.hpp"

namespace fixture {

using namespace powerclose;

inline MonomialIdeal ideal(std::initializer_list<ExponentVector> gens) { return MonomialIdeal::fromGenerators(gens); }

inline PolynomialElement mono(ExponentVector e) { return PolynomialElement::monomial(e); }

/// I = (x, y^2), J = (x^2, y).
inline MonomialIdeal idealI() { return ideal({{1, 0}, {0, 2}}); }
inline MonomialIdeal idealJ() { return ideal({{2, 0}, {0, 1}}); }

inline IdealFamily exampleFamily(FiltrationKind kind = FiltrationKind::kClosure) { return {{idealI(), idealJ()}, kind}; }

inline MonomialIdeal maximal(std::size_t d) {
  std::vector<ExponentVector> gens;
  for (std::size_t k = 0; k < d; ++k) gens.push_back(ExponentVector::unit(d, k));
  return MonomialIdeal::fromGenerators(gens);
}

}  // namespace fixture
