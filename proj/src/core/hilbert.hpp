#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "monomial_ideal.hpp"
#include "newton.hpp"
#include "rational.hpp"

namespace powerclose {

/// The Z^s-graded filtration induced by a family: F(n) = I^n (adic) or
/// closure(I^n) (closure), with F(n) = F(n^+). Ideals and colengths are
/// memoized; the object is safe to share between threads.
class Filtration {
 public:
  explicit Filtration(IdealFamily family);

  const IdealFamily& family() const noexcept { return closures_.family(); }
  FiltrationKind kind() const noexcept { return family().filtration; }
  std::size_t size() const noexcept { return family().size(); }
  std::size_t dim() const noexcept { return family().dim(); }

  /// F(n^+); nullopt stands for the unit ideal (n^+ = 0).
  std::optional<MonomialIdeal> ideal(const MultiIndex& n) const;
  /// lambda(R / F(n)) for n >= 0; 0 at n = 0.
  std::uint64_t hilbert(const MultiIndex& n) const;

 private:
  ProductClosure closures_;
  mutable std::mutex mutex_;
  mutable std::map<MultiIndex, MonomialIdeal> ideals_;
  mutable std::map<MultiIndex, std::uint64_t> colengths_;
};

std::uint64_t hilbertFunction(const Filtration& filtration, const MultiIndex& n);

/// P(n) = sum_{|alpha| <= d} (-1)^{d-|alpha|} e_alpha prod_i binom(n_i + alpha_i - 1, alpha_i).
class NumericalPolynomial {
 public:
  NumericalPolynomial(std::size_t s, std::size_t d) : s_(s), d_(d) {}

  std::size_t variables() const noexcept { return s_; }
  std::size_t degree() const noexcept { return d_; }

  void setCoefficient(const MultiIndex& alpha, Integer value);
  Integer coefficient(const MultiIndex& alpha) const;
  const std::map<MultiIndex, Integer>& coefficients() const noexcept { return coefficients_; }

  Integer evaluate(const MultiIndex& n) const;
  /// (Delta_s^{beta_s}...Delta_1^{beta_1} P)(0), from the Pascal rule on the basis.
  Integer differenceAtOrigin(const MultiIndex& beta) const;

  /// prod_i binom(n_i + alpha_i - 1, alpha_i), generalized binomials.
  static Integer basis(const MultiIndex& alpha, const MultiIndex& n);

 private:
  std::size_t s_;
  std::size_t d_;
  std::map<MultiIndex, Integer> coefficients_;
};

/// All alpha in N^s with |alpha| <= d, graded then lexicographic.
std::vector<MultiIndex> indicesUpToDegree(std::size_t s, std::size_t d);

Integer mixedMultiplicity(const Filtration& filtration, const MultiIndex& alpha, bool overrideGate = false);

enum class MultiplicityMethod { kDifferenceFormula, kPolynomialFit };

struct MixedMultiplicityTable {
  MultiplicityMethod method = MultiplicityMethod::kDifferenceFormula;
  std::map<MultiIndex, Integer> values;  // |alpha| = d
};

MixedMultiplicityTable mixedMultiplicities(const Filtration& filtration, bool overrideGate = false);
MixedMultiplicityTable topCoefficients(const NumericalPolynomial& polynomial);

/// Raised when a fitted polynomial disagrees with H on a validation point,
/// has a non-integral coefficient, or a negative top coefficient.
class FitValidationError : public Error {
 public:
  FitValidationError(const std::string& message, std::optional<MultiIndex> point, Rational fitted, Integer actual)
      : Error(ErrorCode::kValidationFailure, message), point_(std::move(point)), fitted_(std::move(fitted)), actual_(std::move(actual)) {}

  const std::optional<MultiIndex>& point() const noexcept { return point_; }
  const Rational& fitted() const noexcept { return fitted_; }
  const Integer& actual() const noexcept { return actual_; }

 private:
  std::optional<MultiIndex> point_;
  Rational fitted_;
  Integer actual_;
};

struct PolynomialFit {
  NumericalPolynomial polynomial;
  std::vector<MultiIndex> interpolationPoints;
  std::vector<MultiIndex> validationPoints;
};

/// Exact interpolation on window + {m : |m| <= d}, validated on the next
/// diagonal shells until at least s*d extra points are checked.
PolynomialFit fitHilbertPolynomial(const Filtration& filtration, const MultiIndex& window);

struct PEqualsHMismatch {
  MultiIndex n;
  Integer polynomial;
  std::uint64_t hilbert = 0;
};

struct PEqualsHReport {
  MultiIndex bound;
  std::size_t checked = 0;
  std::vector<PEqualsHMismatch> mismatches;
};

PEqualsHReport checkPEqualsH(const Filtration& filtration, const NumericalPolynomial& polynomial, const MultiIndex& bound);

}  // namespace powerclose
