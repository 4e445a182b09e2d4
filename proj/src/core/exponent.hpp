#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace powerclose {

using Exponent = std::int64_t;

inline Exponent checkedAdd(Exponent a, Exponent b) {
  Exponent out;
  if (__builtin_add_overflow(a, b, &out)) fail(ErrorCode::kOverflow, "exponent overflow in addition");
  return out;
}

inline Exponent checkedMul(Exponent a, Exponent b) {
  Exponent out;
  if (__builtin_mul_overflow(a, b, &out)) fail(ErrorCode::kOverflow, "exponent overflow in multiplication");
  return out;
}

/// Exponent of a monomial X_1^{a_1}...X_d^{a_d}. Entries are nonnegative.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t dim) : coords_(dim, 0) {}
  ExponentVector(std::initializer_list<Exponent> coords);
  explicit ExponentVector(std::vector<Exponent> coords);

  static ExponentVector unit(std::size_t dim, std::size_t axis);

  std::size_t dim() const noexcept { return coords_.size(); }
  Exponent operator[](std::size_t k) const { return coords_[k]; }
  Exponent& operator[](std::size_t k) { return coords_[k]; }
  std::span<const Exponent> coords() const noexcept { return coords_; }
  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }

  Exponent totalDegree() const;

  /// Componentwise a <= b, i.e. x^a divides x^b.
  bool divides(const ExponentVector& other) const;

  friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);
  ExponentVector scaled(Exponent k) const;

  auto operator<=>(const ExponentVector&) const = default;
  bool operator==(const ExponentVector&) const = default;

  std::string str() const;

 private:
  std::vector<Exponent> coords_;
};

/// A point of Z^s used as a multidegree n, a type q or a unit vector e_i.
/// Signs are checked by the operations that care.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t s) : entries_(s, 0) {}
  MultiIndex(std::initializer_list<Exponent> entries) : entries_(entries) {}
  explicit MultiIndex(std::vector<Exponent> entries) : entries_(std::move(entries)) {}

  static MultiIndex unit(std::size_t s, std::size_t i);
  static MultiIndex constant(std::size_t s, Exponent value);

  std::size_t size() const noexcept { return entries_.size(); }
  Exponent operator[](std::size_t i) const { return entries_[i]; }
  Exponent& operator[](std::size_t i) { return entries_[i]; }
  std::span<const Exponent> entries() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  Exponent total() const;
  bool nonnegative() const;
  MultiIndex positivePart() const;
  bool isZero() const;
  /// Componentwise >=.
  bool dominates(const MultiIndex& other) const;

  friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);
  friend MultiIndex operator-(const MultiIndex& a, const MultiIndex& b);

  auto operator<=>(const MultiIndex&) const = default;
  bool operator==(const MultiIndex&) const = default;

  std::string str() const;

 private:
  std::vector<Exponent> entries_;
};

inline std::ostream& operator<<(std::ostream& out, const ExponentVector& e) { return out << e.str(); }
inline std::ostream& operator<<(std::ostream& out, const MultiIndex& n) { return out << n.str(); }

/// All n with lo <= n <= hi, in lexicographic order.
std::vector<MultiIndex> boxPoints(const MultiIndex& lo, const MultiIndex& hi);

/// All n in N^s with |n| == total, in lexicographically decreasing order.
std::vector<MultiIndex> shell(std::size_t s, Exponent total);

}  // namespace powerclose
