#include "monomial_ideal.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace powerclose {

namespace detail {

Staircase::Staircase(std::size_t dim, std::vector<Exponent> extent) : dim_(dim), extent_(std::move(extent)) {
  if (dim_ == 0 || extent_.size() + 1 != dim_) fail(ErrorCode::kInternal, "staircase extent does not match dimension");
  auto cells = estimateCells(extent_);
  if (!cells) fail(ErrorCode::kOverflow, "staircase table too large");
  strides_.assign(extent_.size(), 1);
  std::size_t stride = 1;
  for (std::size_t k = extent_.size(); k-- > 0;) {
    strides_[k] = stride;
    stride *= static_cast<std::size_t>(extent_[k] + 1);
  }
  heights_.assign(*cells, kNoHeight);
}

std::optional<std::size_t> Staircase::estimateCells(const std::vector<Exponent>& extent) {
  constexpr std::size_t kLimit = std::size_t{1} << 32;
  std::size_t cells = 1;
  for (Exponent e : extent) {
    auto width = static_cast<std::size_t>(e) + 1;
    if (e < 0 || cells > kLimit / width) return std::nullopt;
    cells *= width;
  }
  return cells;
}

Staircase Staircase::fromPoints(std::size_t dim, const std::vector<ExponentVector>& points) {
  std::vector<Exponent> extent(dim - 1, 0);
  for (const auto& p : points) {
    for (std::size_t k = 0; k + 1 < dim; ++k) extent[k] = std::max(extent[k], p[k]);
  }
  Staircase table(dim, std::move(extent));
  for (const auto& p : points) {
    std::size_t index = 0;
    for (std::size_t k = 0; k + 1 < dim; ++k) index += static_cast<std::size_t>(p[k]) * table.strides_[k];
    table.heights_[index] = std::min(table.heights_[index], p[dim - 1]);
  }
  table.prefixMinimize();
  return table;
}

std::vector<Exponent> Staircase::cell(std::size_t index) const {
  std::vector<Exponent> out(extent_.size());
  for (std::size_t k = 0; k < extent_.size(); ++k) {
    out[k] = static_cast<Exponent>(index / strides_[k]);
    index %= strides_[k];
  }
  return out;
}

void Staircase::prefixMinimize() {
  // One sweep per axis; after all sweeps each cell holds the minimum over its lower set.
  for (std::size_t k = 0; k < extent_.size(); ++k) {
    const std::size_t step = strides_[k];
    const auto width = static_cast<std::size_t>(extent_[k] + 1);
    for (std::size_t index = 0; index < heights_.size(); ++index) {
      if ((index / step) % width == 0) continue;
      heights_[index] = std::min(heights_[index], heights_[index - step]);
    }
  }
}

std::vector<ExponentVector> Staircase::minimalGenerators() const {
  std::vector<ExponentVector> out;
  for (std::size_t index = 0; index < heights_.size(); ++index) {
    const Exponent h = heights_[index];
    if (h == kNoHeight) continue;
    bool minimal = true;
    for (std::size_t k = 0; k < extent_.size() && minimal; ++k) {
      const auto width = static_cast<std::size_t>(extent_[k] + 1);
      if ((index / strides_[k]) % width == 0) continue;
      if (heights_[index - strides_[k]] <= h) minimal = false;
    }
    if (!minimal) continue;
    std::vector<Exponent> coords = cell(index);
    coords.push_back(h);
    out.emplace_back(std::move(coords));
  }
  return out;
}

}  // namespace detail

namespace {

std::vector<ExponentVector> minimalPairwise(std::vector<ExponentVector> gens) {
  std::sort(gens.begin(), gens.end(), [](const ExponentVector& a, const ExponentVector& b) {
    const Exponent da = a.totalDegree();
    const Exponent db = b.totalDegree();
    return da != db ? da < db : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<ExponentVector> kept;
  for (auto& g : gens) {
    const bool redundant = std::any_of(kept.begin(), kept.end(), [&](const ExponentVector& k) { return k.divides(g); });
    if (!redundant) kept.push_back(std::move(g));
  }
  return kept;
}

}  // namespace

MonomialIdeal MonomialIdeal::fromGenerators(std::vector<ExponentVector> gens) {
  if (gens.empty()) fail(ErrorCode::kEmptyGenerators, "an ideal needs at least one generator");
  const std::size_t dim = gens.front().dim();
  if (dim == 0) fail(ErrorCode::kDimensionMismatch, "ambient dimension must be at least 1");
  std::vector<Exponent> extent(dim - 1, 0);
  for (const auto& g : gens) {
    if (g.dim() != dim) fail(ErrorCode::kDimensionMismatch, "generators of different lengths");
    for (std::size_t k = 0; k + 1 < dim; ++k) extent[k] = std::max(extent[k], g[k]);
  }
  std::vector<ExponentVector> minimal;
  const auto cells = detail::Staircase::estimateCells(extent);
  const std::size_t n = gens.size();
  if (cells && *cells <= std::max<std::size_t>(4096, n * n / 4) && *cells <= (std::size_t{1} << 26)) {
    minimal = detail::Staircase::fromPoints(dim, gens).minimalGenerators();
  } else {
    minimal = minimalPairwise(std::move(gens));
  }
  std::sort(minimal.begin(), minimal.end());
  return MonomialIdeal(dim, std::move(minimal));
}

bool MonomialIdeal::contains(const ExponentVector& a) const {
  if (a.dim() != dim_) fail(ErrorCode::kDimensionMismatch, "monomial and ideal have different dimensions");
  return std::any_of(gens_.begin(), gens_.end(), [&](const ExponentVector& g) { return g.divides(a); });
}

std::optional<Exponent> MonomialIdeal::purePower(std::size_t axis) const {
  std::optional<Exponent> best;
  for (const auto& g : gens_) {
    bool pure = true;
    for (std::size_t k = 0; k < dim_ && pure; ++k) pure = (k == axis) || g[k] == 0;
    if (pure && (!best || g[axis] < *best)) best = g[axis];
  }
  return best;
}

bool MonomialIdeal::isMPrimary() const {
  for (std::size_t k = 0; k < dim_; ++k) {
    if (!purePower(k)) return false;
  }
  return true;
}

ExponentVector MonomialIdeal::boundingCorner() const {
  ExponentVector corner(dim_);
  for (const auto& g : gens_) {
    for (std::size_t k = 0; k < dim_; ++k) corner[k] = std::max(corner[k], g[k]);
  }
  return corner;
}

std::string MonomialIdeal::str() const {
  std::ostringstream out;
  out << '<';
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out << ", ";
    out << gens_[i].str();
  }
  out << '>';
  return out.str();
}

MonomialIdeal minimalize(std::vector<ExponentVector> gens) { return MonomialIdeal::fromGenerators(std::move(gens)); }

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.dim() != b.dim()) fail(ErrorCode::kDimensionMismatch, "product of ideals of different dimensions");
  std::vector<ExponentVector> sums;
  sums.reserve(a.size() * b.size());
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) sums.push_back(g + h);
  }
  return MonomialIdeal::fromGenerators(std::move(sums));
}

MonomialIdeal power(const MonomialIdeal& ideal, Exponent k) {
  if (k < 1) fail(ErrorCode::kInvalidArgument, "ideal power needs k >= 1");
  std::optional<MonomialIdeal> result;
  MonomialIdeal base = ideal;
  while (true) {
    if (k & 1) result = result ? product(*result, base) : base;
    k >>= 1;
    if (k == 0) break;
    base = product(base, base);
  }
  return *result;
}

bool contains(const MonomialIdeal& ideal, const ExponentVector& a) { return ideal.contains(a); }

bool isMPrimary(const MonomialIdeal& ideal) { return ideal.isMPrimary(); }

bool isSubset(const MonomialIdeal& a, const MonomialIdeal& b) {
  return std::all_of(a.generators().begin(), a.generators().end(), [&](const ExponentVector& g) { return b.contains(g); });
}

void requireMPrimary(const MonomialIdeal& ideal) {
  if (!ideal.isMPrimary()) fail(ErrorCode::kNotMPrimary, "ideal " + ideal.str() + " is not m-primary");
}

std::uint64_t colength(const MonomialIdeal& ideal) {
  requireMPrimary(ideal);
  const auto table = detail::Staircase::fromPoints(ideal.dim(), ideal.generators());
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < table.cells(); ++i) {
    if (__builtin_add_overflow(total, static_cast<std::uint64_t>(table.at(i)), &total)) {
      fail(ErrorCode::kOverflow, "colength overflow");
    }
  }
  return total;
}

std::vector<ExponentVector> standardMonomials(const MonomialIdeal& ideal) {
  requireMPrimary(ideal);
  const auto table = detail::Staircase::fromPoints(ideal.dim(), ideal.generators());
  std::vector<ExponentVector> out;
  for (std::size_t i = 0; i < table.cells(); ++i) {
    std::vector<Exponent> coords = table.cell(i);
    coords.push_back(0);
    for (Exponent top = 0; top < table.at(i); ++top) {
      coords.back() = top;
      out.emplace_back(coords);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Exponent adicInclusionDegree(const MonomialIdeal& ideal) {
  requireMPrimary(ideal);
  const auto table = detail::Staircase::fromPoints(ideal.dim(), ideal.generators());
  Exponent degree = 0;
  for (std::size_t i = 0; i < table.cells(); ++i) {
    if (table.at(i) == 0) continue;
    Exponent base = 0;
    for (Exponent c : table.cell(i)) base += c;
    degree = std::max(degree, base + table.at(i));
  }
  return degree;
}

std::string_view filtrationName(FiltrationKind kind) noexcept {
  return kind == FiltrationKind::kAdic ? "adic" : "closure";
}

void IdealFamily::validate() const {
  if (ideals.empty()) fail(ErrorCode::kEmptyGenerators, "a family needs at least one ideal");
  for (const auto& ideal : ideals) {
    if (ideal.dim() != dim()) fail(ErrorCode::kDimensionMismatch, "ideals of a family must share one ambient dimension");
    requireMPrimary(ideal);
  }
}

MonomialIdeal multiPower(const IdealFamily& family, const MultiIndex& n) {
  if (n.size() != family.size()) fail(ErrorCode::kDimensionMismatch, "multi-index length differs from family size");
  if (!n.nonnegative()) fail(ErrorCode::kNegativeExponent, "multiPower needs n >= 0, got " + n.str());
  if (n.isZero()) fail(ErrorCode::kZeroMultiIndex, "I^0 is the unit ideal, which has no generator antichain here");
  std::optional<MonomialIdeal> result;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (n[i] == 0) continue;
    MonomialIdeal factor = power(family.ideals[i], n[i]);
    result = result ? product(*result, factor) : std::move(factor);
  }
  return *result;
}

}  // namespace powerclose
