#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "exponent.hpp"

namespace powerclose {

/// A nonzero proper monomial ideal of k[X_1..X_d], stored as its antichain of
/// minimal generators in lexicographic order. Two ideals are equal iff their
/// generator lists are equal.
class MonomialIdeal {
 public:
  /// Minimalizes `gens`. Throws kEmptyGenerators or kDimensionMismatch.
  static MonomialIdeal fromGenerators(std::vector<ExponentVector> gens);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<ExponentVector>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }

  bool contains(const ExponentVector& a) const;
  /// Smallest exponent p with X_axis^p in the ideal, if any.
  std::optional<Exponent> purePower(std::size_t axis) const;
  bool isMPrimary() const;
  /// Componentwise maximum over the generators.
  ExponentVector boundingCorner() const;

  bool operator==(const MonomialIdeal&) const = default;

  std::string str() const;

 private:
  MonomialIdeal(std::size_t dim, std::vector<ExponentVector> gens) : dim_(dim), gens_(std::move(gens)) {}

  std::size_t dim_ = 0;
  std::vector<ExponentVector> gens_;
};

inline std::ostream& operator<<(std::ostream& out, const MonomialIdeal& ideal) { return out << ideal.str(); }

MonomialIdeal minimalize(std::vector<ExponentVector> gens);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
/// I^k for k >= 1, by repeated squaring.
MonomialIdeal power(const MonomialIdeal& ideal, Exponent k);
bool contains(const MonomialIdeal& ideal, const ExponentVector& a);
bool isMPrimary(const MonomialIdeal& ideal);
/// a is a subset of b.
bool isSubset(const MonomialIdeal& a, const MonomialIdeal& b);

/// Number of standard monomials, i.e. dim_k R/I. Throws kNotMPrimary.
std::uint64_t colength(const MonomialIdeal& ideal);
std::vector<ExponentVector> standardMonomials(const MonomialIdeal& ideal);
/// Smallest N such that every monomial of total degree N lies in the ideal.
Exponent adicInclusionDegree(const MonomialIdeal& ideal);

void requireMPrimary(const MonomialIdeal& ideal);

/// Which filtration a family induces: F(n) = I^n or F(n) = closure(I^n).
enum class FiltrationKind { kAdic, kClosure };

std::string_view filtrationName(FiltrationKind kind) noexcept;

/// (I_1..I_s), all of the same ambient dimension, plus the filtration flag.
struct IdealFamily {
  std::vector<MonomialIdeal> ideals;
  FiltrationKind filtration = FiltrationKind::kClosure;

  std::size_t dim() const { return ideals.empty() ? 0 : ideals.front().dim(); }
  std::size_t size() const noexcept { return ideals.size(); }

  /// Throws kEmptyGenerators, kDimensionMismatch, or kNotMPrimary.
  void validate() const;

  bool operator==(const IdealFamily&) const = default;
};

/// I_1^{n_1}...I_s^{n_s} for n >= 0 with |n| >= 1.
MonomialIdeal multiPower(const IdealFamily& family, const MultiIndex& n);

namespace detail {

/// Height function of a monomial ideal over the first d-1 coordinates:
/// height(a') is the least a_d with (a', a_d) in the ideal. The table spans
/// [0, corner_k] on each of those coordinates; entries may be kNoHeight.
class Staircase {
 public:
  static constexpr Exponent kNoHeight = INT64_MAX;

  Staircase(std::size_t dim, std::vector<Exponent> extent);

  static Staircase fromPoints(std::size_t dim, const std::vector<ExponentVector>& points);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t cells() const noexcept { return heights_.size(); }
  const std::vector<Exponent>& extent() const noexcept { return extent_; }

  /// Coordinates of cell `index` (length d-1).
  std::vector<Exponent> cell(std::size_t index) const;
  Exponent& at(std::size_t index) { return heights_[index]; }
  Exponent at(std::size_t index) const { return heights_[index]; }
  std::size_t stride(std::size_t axis) const { return strides_[axis]; }

  /// Replace every height by the minimum over all cells below it.
  void prefixMinimize();
  std::vector<ExponentVector> minimalGenerators() const;

  static std::optional<std::size_t> estimateCells(const std::vector<Exponent>& extent);

 private:
  std::size_t dim_;
  std::vector<Exponent> extent_;
  std::vector<std::size_t> strides_;
  std::vector<Exponent> heights_;
};

}  // namespace detail

}  // namespace powerclose
