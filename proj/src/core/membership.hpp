#pragma once

#include <map>
#include <optional>
#include <vector>

#include "monomial_ideal.hpp"
#include "polynomial.hpp"
#include "sparse_linalg.hpp"

namespace powerclose {

/// k[X_1..X_d] / m^N as a vector space, basis = monomials of total degree
/// <= N-1 in lexicographic order.
class TruncatedRing {
 public:
  using Vector = SparseEchelon<RationalField>::Row;

  TruncatedRing(std::size_t dim, Exponent order);

  std::size_t dim() const noexcept { return dim_; }
  Exponent order() const noexcept { return order_; }
  std::size_t size() const noexcept { return basis_.size(); }
  const ExponentVector& monomial(std::uint32_t index) const { return basis_.at(index); }
  std::optional<std::uint32_t> indexOf(const ExponentVector& e) const;

  /// Image of p; terms of degree >= N are dropped.
  Vector truncate(const PolynomialElement& p) const;
  /// X_axis * v; basis monomials of degree N-1 map to zero.
  Vector multiplyByVariable(const Vector& v, std::size_t axis) const;

 private:
  std::size_t dim_;
  Exponent order_;
  std::vector<ExponentVector> basis_;
  std::map<ExponentVector, std::uint32_t> index_;
};

/// A subspace of a truncated ring closed under multiplication by every
/// variable, kept in reduced row echelon form so equal subspaces compare equal.
class StableSubspace {
 public:
  using Vector = TruncatedRing::Vector;

  StableSubspace(const TruncatedRing& host, std::vector<Vector> reducedBasis);

  std::size_t dimension() const noexcept { return basis_.size(); }
  const std::vector<Vector>& basis() const noexcept { return basis_; }
  bool contains(const Vector& v) const;
  bool containsMonomial(const ExponentVector& e) const;

  bool operator==(const StableSubspace& other) const { return basis_ == other.basis_; }

 private:
  const TruncatedRing* host_;
  std::vector<Vector> basis_;
  SparseEchelon<RationalField> echelon_;
};

/// Smallest variable-stable subspace containing the truncated seeds. The
/// worklist is FIFO over seeds then variables in order, so bases are reproducible.
StableSubspace stableClosure(const TruncatedRing& host, const std::vector<PolynomialElement>& seeds);

/// Every term of p lies in the monomial ideal, which for monomial ideals is p in T.
bool termwiseContained(const PolynomialElement& p, const MonomialIdeal& ideal);

enum class EqualityMethod {
  /// Compare in T/mT, whose basis is the minimal generators of T.
  kGeneratorQuotient,
  /// Stable closure inside R/m^{N+1} with N the m-adic inclusion degree of T.
  kTruncatedRing,
};

struct EqualityResult {
  bool equal = false;
  /// A minimal generator of T outside the ideal generated by the left side.
  std::optional<ExponentVector> witness;
};

/// Decides (lhs) == T in the local ring at the origin, given lhs is inside T.
/// Both methods reduce to T subset of (lhs) + mT and conclude by Nakayama.
/// Throws kNotContained if some lhs element is not in T, kNotMPrimary.
EqualityResult verifyIdealEquality(const std::vector<PolynomialElement>& lhs, const MonomialIdeal& target,
                                   EqualityMethod method = EqualityMethod::kGeneratorQuotient);

}  // namespace powerclose
