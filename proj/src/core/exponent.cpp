#include "exponent.hpp"

#include <algorithm>
#include <sstream>

namespace powerclose {

namespace {

std::string joinEntries(std::span<const Exponent> xs) {
  std::ostringstream out;
  out << '(';
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k) out << ',';
    out << xs[k];
  }
  out << ')';
  return out.str();
}

void requireSameSize(std::size_t a, std::size_t b) {
  if (a != b) fail(ErrorCode::kDimensionMismatch, "dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

ExponentVector::ExponentVector(std::initializer_list<Exponent> coords) : ExponentVector(std::vector<Exponent>(coords)) {}

ExponentVector::ExponentVector(std::vector<Exponent> coords) : coords_(std::move(coords)) {
  for (Exponent c : coords_) {
    if (c < 0) fail(ErrorCode::kNegativeExponent, "negative exponent in monomial");
  }
}

ExponentVector ExponentVector::unit(std::size_t dim, std::size_t axis) {
  ExponentVector v(dim);
  v.coords_.at(axis) = 1;
  return v;
}

Exponent ExponentVector::totalDegree() const {
  Exponent sum = 0;
  for (Exponent c : coords_) sum = checkedAdd(sum, c);
  return sum;
}

bool ExponentVector::divides(const ExponentVector& other) const {
  requireSameSize(dim(), other.dim());
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (coords_[k] > other.coords_[k]) return false;
  }
  return true;
}

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
  requireSameSize(a.dim(), b.dim());
  ExponentVector out(a.dim());
  for (std::size_t k = 0; k < a.dim(); ++k) out.coords_[k] = checkedAdd(a.coords_[k], b.coords_[k]);
  return out;
}

ExponentVector ExponentVector::scaled(Exponent k) const {
  ExponentVector out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.coords_[i] = checkedMul(coords_[i], k);
  return out;
}

std::string ExponentVector::str() const { return joinEntries(coords_); }

MultiIndex MultiIndex::unit(std::size_t s, std::size_t i) {
  MultiIndex n(s);
  n.entries_.at(i) = 1;
  return n;
}

MultiIndex MultiIndex::constant(std::size_t s, Exponent value) {
  return MultiIndex(std::vector<Exponent>(s, value));
}

Exponent MultiIndex::total() const {
  Exponent sum = 0;
  for (Exponent c : entries_) sum = checkedAdd(sum, c);
  return sum;
}

bool MultiIndex::nonnegative() const {
  return std::all_of(entries_.begin(), entries_.end(), [](Exponent c) { return c >= 0; });
}

MultiIndex MultiIndex::positivePart() const {
  MultiIndex out(size());
  for (std::size_t i = 0; i < size(); ++i) out.entries_[i] = std::max<Exponent>(0, entries_[i]);
  return out;
}

bool MultiIndex::isZero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](Exponent c) { return c == 0; });
}

bool MultiIndex::dominates(const MultiIndex& other) const {
  requireSameSize(size(), other.size());
  for (std::size_t i = 0; i < size(); ++i) {
    if (entries_[i] < other.entries_[i]) return false;
  }
  return true;
}

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
  requireSameSize(a.size(), b.size());
  MultiIndex out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.entries_[i] = checkedAdd(a.entries_[i], b.entries_[i]);
  return out;
}

MultiIndex operator-(const MultiIndex& a, const MultiIndex& b) {
  requireSameSize(a.size(), b.size());
  MultiIndex out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (__builtin_sub_overflow(a.entries_[i], b.entries_[i], &out.entries_[i])) {
      fail(ErrorCode::kOverflow, "multi-index overflow in subtraction");
    }
  }
  return out;
}

std::string MultiIndex::str() const { return joinEntries(entries_); }

std::vector<MultiIndex> boxPoints(const MultiIndex& lo, const MultiIndex& hi) {
  requireSameSize(lo.size(), hi.size());
  std::vector<MultiIndex> out;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (lo[i] > hi[i]) return out;
  }
  MultiIndex cur = lo;
  while (true) {
    out.push_back(cur);
    std::size_t i = cur.size();
    while (i > 0) {
      --i;
      if (cur[i] < hi[i]) {
        ++cur[i];
        break;
      }
      cur[i] = lo[i];
      if (i == 0) return out;
    }
    if (cur.size() == 0) return out;
  }
}

std::vector<MultiIndex> shell(std::size_t s, Exponent total) {
  std::vector<MultiIndex> out;
  if (s == 0 || total < 0) return out;
  MultiIndex cur(s);
  // Recursive fill: entry i takes every value from the remaining budget downwards.
  auto fill = [&](auto&& self, std::size_t i, Exponent remaining) -> void {
    if (i + 1 == s) {
      cur[i] = remaining;
      out.push_back(cur);
      return;
    }
    for (Exponent v = remaining; v >= 0; --v) {
      cur[i] = v;
      self(self, i + 1, remaining - v);
    }
  };
  fill(fill, 0, total);
  return out;
}

}  // namespace powerclose
