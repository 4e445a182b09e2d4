#include "hilbert.hpp"

#include <algorithm>
#include <sstream>

namespace powerclose {

namespace {

void requireShape(const Filtration& f, const MultiIndex& n, const char* what) {
  if (n.size() != f.size()) fail(ErrorCode::kDimensionMismatch, std::string(what) + " has length " + std::to_string(n.size()) + ", family has " + std::to_string(f.size()) + " ideals");
  if (!n.nonnegative()) fail(ErrorCode::kNegativeExponent, std::string(what) + " must be nonnegative, got " + n.str());
}

Integer binomial(const Integer& top, unsigned long k) {
  Integer out;
  mpz_bin_ui(out.get_mpz_t(), top.get_mpz_t(), k);
  return out;
}

// Exact solve of a square system; nullopt when singular.
std::optional<std::vector<Rational>> solveSquare(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
      b[r] -= factor * b[col];
    }
  }
  for (std::size_t r = 0; r < n; ++r) b[r] /= a[r][r];
  return b;
}

int signFor(std::size_t d, Exponent degree) { return ((static_cast<Exponent>(d) - degree) % 2 == 0) ? 1 : -1; }

}  // namespace

Filtration::Filtration(IdealFamily family) : closures_(std::move(family)) {}

std::optional<MonomialIdeal> Filtration::ideal(const MultiIndex& n) const {
  if (n.size() != size()) fail(ErrorCode::kDimensionMismatch, "multi-index length differs from family size");
  const MultiIndex key = n.positivePart();
  if (key.isZero()) return std::nullopt;
  {
    std::lock_guard lock(mutex_);
    if (auto it = ideals_.find(key); it != ideals_.end()) return it->second;
  }
  MonomialIdeal value = kind() == FiltrationKind::kAdic ? multiPower(family(), key) : closures_.closure(key);
  std::lock_guard lock(mutex_);
  return ideals_.emplace(key, std::move(value)).first->second;
}

std::uint64_t Filtration::hilbert(const MultiIndex& n) const {
  requireShape(*this, n, "n");
  if (n.isZero()) return 0;
  {
    std::lock_guard lock(mutex_);
    if (auto it = colengths_.find(n); it != colengths_.end()) return it->second;
  }
  const std::uint64_t value = kind() == FiltrationKind::kAdic ? colength(multiPower(family(), n)) : closures_.closureColength(n);
  std::lock_guard lock(mutex_);
  colengths_.emplace(n, value);
  return value;
}

std::uint64_t hilbertFunction(const Filtration& filtration, const MultiIndex& n) { return filtration.hilbert(n); }

void NumericalPolynomial::setCoefficient(const MultiIndex& alpha, Integer value) {
  if (alpha.size() != s_ || !alpha.nonnegative() || alpha.total() > static_cast<Exponent>(d_)) {
    fail(ErrorCode::kInvalidArgument, "coefficient index " + alpha.str() + " outside the polynomial's range");
  }
  if (value == 0) {
    coefficients_.erase(alpha);
  } else {
    coefficients_[alpha] = std::move(value);
  }
}

Integer NumericalPolynomial::coefficient(const MultiIndex& alpha) const {
  auto it = coefficients_.find(alpha);
  return it == coefficients_.end() ? Integer(0) : it->second;
}

Integer NumericalPolynomial::basis(const MultiIndex& alpha, const MultiIndex& n) {
  Integer out = 1;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    out *= binomial(Integer(n[i]) + alpha[i] - 1, static_cast<unsigned long>(alpha[i]));
  }
  return out;
}

Integer NumericalPolynomial::evaluate(const MultiIndex& n) const {
  if (n.size() != s_) fail(ErrorCode::kDimensionMismatch, "evaluation point has the wrong length");
  Integer out = 0;
  for (const auto& [alpha, e] : coefficients_) out += signFor(d_, alpha.total()) * e * basis(alpha, n);
  return out;
}

Integer NumericalPolynomial::differenceAtOrigin(const MultiIndex& beta) const {
  if (beta.size() != s_ || !beta.nonnegative()) fail(ErrorCode::kInvalidArgument, "difference order must be a nonnegative multi-index");
  // Delta_i lowers alpha_i by one in binom(n_i + alpha_i - 1, alpha_i); at n = 0 the
  // remaining factor binom(alpha_i - beta_i - 1, alpha_i - beta_i) is 1 iff alpha_i == beta_i.
  Integer out = 0;
  for (const auto& [alpha, e] : coefficients_) {
    bool survives = true;
    for (std::size_t i = 0; i < s_ && survives; ++i) survives = alpha[i] == beta[i];
    if (survives) out += signFor(d_, alpha.total()) * e;
  }
  return out;
}

std::vector<MultiIndex> indicesUpToDegree(std::size_t s, std::size_t d) {
  std::vector<MultiIndex> out;
  for (std::size_t total = 0; total <= d; ++total) {
    auto layer = shell(s, static_cast<Exponent>(total));
    std::sort(layer.begin(), layer.end());
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

Integer mixedMultiplicity(const Filtration& filtration, const MultiIndex& alpha, bool overrideGate) {
  requireShape(filtration, alpha, "alpha");
  const auto d = static_cast<Exponent>(filtration.dim());
  if (alpha.total() != d) fail(ErrorCode::kWrongTotalDegree, "mixed multiplicity needs |alpha| = " + std::to_string(d) + ", got " + alpha.str());
  if (filtration.kind() == FiltrationKind::kAdic && !overrideGate) {
    fail(ErrorCode::kValidityGate, "the difference formula is only licensed for closure filtrations of monomial ideals; pass the override to evaluate it on an adic filtration");
  }
  Integer total = 0;
  for (const auto& n : boxPoints(MultiIndex(alpha.size()), alpha)) {
    Integer term = signFor(filtration.dim(), n.total());
    for (std::size_t i = 0; i < n.size(); ++i) term *= binomial(Integer(alpha[i]), static_cast<unsigned long>(n[i]));
    total += term * toInteger(filtration.hilbert(n));
  }
  return total;
}

MixedMultiplicityTable mixedMultiplicities(const Filtration& filtration, bool overrideGate) {
  MixedMultiplicityTable table;
  table.method = MultiplicityMethod::kDifferenceFormula;
  for (const auto& alpha : shell(filtration.size(), static_cast<Exponent>(filtration.dim()))) {
    table.values[alpha] = mixedMultiplicity(filtration, alpha, overrideGate);
  }
  return table;
}

MixedMultiplicityTable topCoefficients(const NumericalPolynomial& polynomial) {
  MixedMultiplicityTable table;
  table.method = MultiplicityMethod::kPolynomialFit;
  for (const auto& alpha : shell(polynomial.variables(), static_cast<Exponent>(polynomial.degree()))) {
    table.values[alpha] = polynomial.coefficient(alpha);
  }
  return table;
}

PolynomialFit fitHilbertPolynomial(const Filtration& filtration, const MultiIndex& window) {
  requireShape(filtration, window, "window");
  const std::size_t s = filtration.size();
  const std::size_t d = filtration.dim();
  const auto unknowns = indicesUpToDegree(s, d);

  PolynomialFit fit{NumericalPolynomial(s, d), {}, {}};
  for (const auto& m : indicesUpToDegree(s, d)) fit.interpolationPoints.push_back(window + m);

  std::vector<std::vector<Rational>> matrix;
  std::vector<Rational> rhs;
  for (const auto& point : fit.interpolationPoints) {
    std::vector<Rational> row;
    row.reserve(unknowns.size());
    for (const auto& alpha : unknowns) row.emplace_back(NumericalPolynomial::basis(alpha, point));
    matrix.push_back(std::move(row));
    rhs.emplace_back(toInteger(filtration.hilbert(point)));
  }
  auto solution = solveSquare(std::move(matrix), std::move(rhs));
  if (!solution) fail(ErrorCode::kSingularSystem, "interpolation system is singular");

  for (std::size_t j = 0; j < unknowns.size(); ++j) {
    Rational e = signFor(d, unknowns[j].total()) * (*solution)[j];
    if (e.get_den() != 1) {
      throw FitValidationError("fitted coefficient e" + unknowns[j].str() + " = " + toString(e) + " is not an integer", std::nullopt, e, 0);
    }
    if (unknowns[j].total() == static_cast<Exponent>(d) && e < 0) {
      throw FitValidationError("top coefficient e" + unknowns[j].str() + " = " + toString(e) + " is negative", std::nullopt, e, 0);
    }
    fit.polynomial.setCoefficient(unknowns[j], e.get_num());
  }

  const std::size_t wanted = std::max<std::size_t>(1, s * d);
  for (std::size_t layer = d + 1; fit.validationPoints.size() < wanted; ++layer) {
    auto points = shell(s, static_cast<Exponent>(layer));
    std::sort(points.begin(), points.end());
    for (const auto& m : points) fit.validationPoints.push_back(window + m);
  }
  for (const auto& point : fit.validationPoints) {
    const Integer fitted = fit.polynomial.evaluate(point);
    const Integer actual = toInteger(filtration.hilbert(point));
    if (fitted != actual) {
      std::ostringstream msg;
      msg << "fitted polynomial gives " << fitted.get_str() << " at " << point.str() << " but H = " << actual.get_str();
      throw FitValidationError(msg.str(), point, Rational(fitted), actual);
    }
  }
  return fit;
}

PEqualsHReport checkPEqualsH(const Filtration& filtration, const NumericalPolynomial& polynomial, const MultiIndex& bound) {
  requireShape(filtration, bound, "bound");
  PEqualsHReport report;
  report.bound = bound;
  for (const auto& n : boxPoints(MultiIndex(bound.size()), bound)) {
    ++report.checked;
    const Integer p = polynomial.evaluate(n);
    const std::uint64_t h = filtration.hilbert(n);
    if (p != toInteger(h)) report.mismatches.push_back({n, p, h});
  }
  return report;
}

}  // namespace powerclose
