#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace powerclose {

/// Exact field of rationals.
struct RationalField {
  using Element = Rational;
  static bool isZero(const Element& x) { return x == 0; }
  static Element mul(const Element& a, const Element& b) { return a * b; }
  static Element sub(const Element& a, const Element& b) { return a - b; }
  static Element inverse(const Element& a) { return 1 / a; }
};

/// Integers modulo the Mersenne prime 2^61 - 1.
struct MersenneField {
  using Element = std::uint64_t;
  static constexpr Element kPrime = (Element{1} << 61) - 1;

  static bool isZero(Element x) { return x == 0; }
  static Element reduce(unsigned __int128 x) {
    Element lo = static_cast<Element>(x & kPrime);
    Element hi = static_cast<Element>(x >> 61);
    Element r = lo + hi;
    while (r >= kPrime) r -= kPrime;
    return r;
  }
  static Element mul(Element a, Element b) { return reduce(static_cast<unsigned __int128>(a) * b); }
  static Element sub(Element a, Element b) { return a >= b ? a - b : a + kPrime - b; }
  static Element power(Element base, std::uint64_t e) {
    Element out = 1;
    while (e) {
      if (e & 1) out = mul(out, base);
      base = mul(base, base);
      e >>= 1;
    }
    return out;
  }
  static Element inverse(Element a) { return power(a, kPrime - 2); }

  /// Image of a rational, or nullopt when the denominator vanishes mod p.
  static std::optional<Element> fromRational(const Rational& q) {
    auto residue = [](const Integer& z) {
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), Integer(static_cast<unsigned long>(kPrime)).get_mpz_t());
      return static_cast<Element>(r.get_ui());
    };
    const Element den = residue(q.get_den());
    if (den == 0) return std::nullopt;
    return mul(residue(q.get_num()), inverse(den));
  }
};

/// Row echelon basis of a subspace of Field^n, with sparse rows sorted by
/// column and normalized so each leading coefficient is 1.
template <class Field>
class SparseEchelon {
 public:
  using Element = typename Field::Element;
  using Row = std::vector<std::pair<std::uint32_t, Element>>;

  std::size_t rank() const noexcept { return rows_.size(); }

  /// Reduce until the leading column has no pivot; empty means `row` was in the span.
  Row reduce(Row row) const {
    while (!row.empty()) {
      auto it = pivots_.find(row.front().first);
      if (it == pivots_.end()) break;
      row = subtractMultiple(row, row.front().second, rows_[it->second]);
    }
    return row;
  }

  bool inSpan(Row row) const { return reduce(std::move(row)).empty(); }

  /// Adds `row` to the span; returns true when the rank grew.
  bool insert(Row row) {
    row = reduce(std::move(row));
    if (row.empty()) return false;
    const Element scale = Field::inverse(row.front().second);
    for (auto& entry : row) entry.second = Field::mul(entry.second, scale);
    pivots_.emplace(row.front().first, rows_.size());
    rows_.push_back(std::move(row));
    return true;
  }

  /// Reduced row echelon form, rows ordered by pivot column.
  std::vector<Row> reducedRows() const {
    std::vector<Row> rows = rows_;
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.front().first < b.front().first; });
    std::unordered_map<std::uint32_t, std::size_t> where;
    for (std::size_t i = 0; i < rows.size(); ++i) where.emplace(rows[i].front().first, i);
    for (std::size_t i = rows.size(); i-- > 0;) {
      // Later rows are already reduced, so one pass over this row's pivot-column entries suffices.
      std::vector<std::pair<std::size_t, Element>> hits;
      for (std::size_t k = 1; k < rows[i].size(); ++k) {
        auto it = where.find(rows[i][k].first);
        if (it != where.end()) hits.emplace_back(it->second, rows[i][k].second);
      }
      for (const auto& [j, factor] : hits) rows[i] = subtractMultiple(rows[i], factor, rows[j]);
    }
    return rows;
  }

 private:
  static Row subtractMultiple(const Row& a, const Element& factor, const Row& b) {
    Row out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        Element v = Field::sub(Element(0), Field::mul(factor, b[j].second));
        out.emplace_back(b[j].first, std::move(v));
        ++j;
      } else {
        Element v = Field::sub(a[i].second, Field::mul(factor, b[j].second));
        if (!Field::isZero(v)) out.emplace_back(a[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::vector<Row> rows_;
  std::unordered_map<std::uint32_t, std::size_t> pivots_;
};

}  // namespace powerclose
