#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "monomial_ideal.hpp"
#include "rational.hpp"

namespace powerclose {

/// Result of deciding whether x^a lies in the integral closure of a monomial
/// ideal, i.e. whether a lies in conv(generators) + R^d_{>=0}.
struct NewtonMembershipCertificate {
  bool verdict = false;
  /// (generator index, weight) with positive weights summing to 1.
  std::vector<std::pair<std::size_t, Rational>> weights;
  /// a - sum(weight * generator), componentwise >= 0.
  std::vector<Rational> slack;

  /// Recheck the certificate against the ideal and the point in exact arithmetic.
  bool verify(const MonomialIdeal& ideal, const ExponentVector& a) const;
};

NewtonMembershipCertificate newtonMember(const MonomialIdeal& ideal, const ExponentVector& a);

/// Inequality <normal, a> >= offset of a Newton polyhedron; normal is a
/// primitive nonnegative integer vector.
struct Facet {
  std::vector<Exponent> normal;
  Exponent offset = 0;

  auto operator<=>(const Facet&) const = default;
};

/// H-description of NP(I) = conv(generators) + R^d_{>=0}.
class NewtonPolyhedron {
 public:
  static NewtonPolyhedron of(const MonomialIdeal& ideal);

  const std::vector<ExponentVector>& vertices() const noexcept { return vertices_; }
  const std::vector<Facet>& facets() const noexcept { return facets_; }
  bool contains(const ExponentVector& a) const;

 private:
  std::vector<ExponentVector> vertices_;
  std::vector<Facet> facets_;
};

/// Vertices of NP(I): generators not in the Newton polyhedron of the others.
std::vector<ExponentVector> newtonVertices(const MonomialIdeal& ideal);
/// Primitive inner normals of the facets spanned by `vertices` and the coordinate rays.
std::vector<std::vector<Exponent>> facetNormals(std::size_t dim, const std::vector<ExponentVector>& vertices);

MonomialIdeal integralClosure(const MonomialIdeal& ideal);
bool isComplete(const MonomialIdeal& ideal);

/// One-sided oracle: x^{ka} in I^k for some 1 <= k <= kmax.
bool powerOracleMember(const MonomialIdeal& ideal, const ExponentVector& a, Exponent kmax);

/// closure(I_1^{n_1}...I_s^{n_s}) computed from the Minkowski decomposition
/// NP(I^n) = sum n_i NP(I_i). Facet normals depend only on the support of n,
/// so they are computed once per support and cached. Thread-safe.
class ProductClosure {
 public:
  explicit ProductClosure(IdealFamily family);

  const IdealFamily& family() const noexcept { return family_; }

  /// n >= 0, |n| >= 1.
  MonomialIdeal closure(const MultiIndex& n) const;
  std::uint64_t closureColength(const MultiIndex& n) const;
  bool member(const MultiIndex& n, const ExponentVector& a) const;

 private:
  struct Inequalities {
    std::vector<Facet> facets;
    std::vector<Exponent> extent;
  };

  Inequalities inequalities(const MultiIndex& n) const;
  const std::vector<std::vector<Exponent>>& normalsFor(const std::vector<bool>& support) const;

  IdealFamily family_;
  mutable std::mutex mutex_;
  mutable std::map<std::vector<bool>, std::vector<std::vector<Exponent>>> normals_;
};

namespace detail {

/// Staircase of the lattice points satisfying all facet inequalities, over
/// the box [0, extent_k] on the first d-1 coordinates.
Staircase latticeStaircase(std::size_t dim, const std::vector<Facet>& facets, const std::vector<Exponent>& extent);

}  // namespace detail

}  // namespace powerclose
