#include "membership.hpp"

#include <algorithm>
#include <deque>

namespace powerclose {

namespace {

void enumerateMonomials(std::size_t dim, Exponent budget, std::vector<Exponent>& prefix, std::vector<ExponentVector>& out) {
  if (prefix.size() == dim) {
    out.emplace_back(prefix);
    return;
  }
  for (Exponent v = 0; v <= budget; ++v) {
    prefix.push_back(v);
    enumerateMonomials(dim, budget - v, prefix, out);
    prefix.pop_back();
  }
}

void requireContained(const std::vector<PolynomialElement>& lhs, const MonomialIdeal& target) {
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (!termwiseContained(lhs[i], target)) {
      fail(ErrorCode::kNotContained, "left-hand element #" + std::to_string(i + 1) + " is not contained in the target ideal");
    }
  }
}

EqualityResult viaTruncatedRing(const std::vector<PolynomialElement>& lhs, const MonomialIdeal& target) {
  const Exponent degree = adicInclusionDegree(target);
  const TruncatedRing host(target.dim(), degree + 1);
  const StableSubspace span = stableClosure(host, lhs);
  EqualityResult result{true, std::nullopt};
  for (const auto& g : target.generators()) {
    if (!span.containsMonomial(g)) {
      result.equal = false;
      result.witness = g;
      break;
    }
  }
  return result;
}

EqualityResult viaGeneratorQuotient(const std::vector<PolynomialElement>& lhs, const MonomialIdeal& target) {
  const auto& gens = target.generators();
  std::map<ExponentVector, std::uint32_t> column;
  for (std::uint32_t j = 0; j < gens.size(); ++j) column.emplace(gens[j], j);

  // Image of each element in T/mT: terms at minimal generators; every other term lies in mT.
  std::vector<SparseEchelon<RationalField>::Row> images;
  images.reserve(lhs.size());
  for (const auto& p : lhs) {
    SparseEchelon<RationalField>::Row row;
    for (const auto& [e, c] : p.terms()) {
      if (auto it = column.find(e); it != column.end()) row.emplace_back(it->second, c);
    }
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    if (!row.empty()) images.push_back(std::move(row));
  }

  // Full rank modulo p implies full rank over Q, so a modular pass can settle "equal" exactly.
  SparseEchelon<MersenneField> modular;
  bool reducible = true;
  for (const auto& row : images) {
    SparseEchelon<MersenneField>::Row image;
    for (const auto& [j, c] : row) {
      auto v = MersenneField::fromRational(c);
      if (!v) {
        reducible = false;
        break;
      }
      if (*v != 0) image.emplace_back(j, *v);
    }
    if (!reducible) break;
    modular.insert(std::move(image));
    if (modular.rank() == gens.size()) return {true, std::nullopt};
  }

  SparseEchelon<RationalField> exact;
  for (auto& row : images) {
    exact.insert(std::move(row));
    if (exact.rank() == gens.size()) return {true, std::nullopt};
  }
  for (std::uint32_t j = 0; j < gens.size(); ++j) {
    if (!exact.inSpan({{j, Rational(1)}})) return {false, gens[j]};
  }
  fail(ErrorCode::kInternal, "rank deficient span contains every generator");
}

}  // namespace

TruncatedRing::TruncatedRing(std::size_t dim, Exponent order) : dim_(dim), order_(order) {
  if (dim == 0) fail(ErrorCode::kInvalidArgument, "truncated ring needs at least one variable");
  if (order < 1) fail(ErrorCode::kInvalidArgument, "truncation order must be positive");
  std::vector<Exponent> prefix;
  enumerateMonomials(dim, order - 1, prefix, basis_);
  if (basis_.size() > UINT32_MAX) fail(ErrorCode::kOverflow, "truncated ring too large");
  for (std::uint32_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
}

std::optional<std::uint32_t> TruncatedRing::indexOf(const ExponentVector& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

TruncatedRing::Vector TruncatedRing::truncate(const PolynomialElement& p) const {
  if (p.dim() != dim_) fail(ErrorCode::kDimensionMismatch, "polynomial and truncated ring have different dimensions");
  Vector v;
  for (const auto& [e, c] : p.terms()) {
    if (auto i = indexOf(e)) v.emplace_back(*i, c);
  }
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

TruncatedRing::Vector TruncatedRing::multiplyByVariable(const Vector& v, std::size_t axis) const {
  Vector out;
  const ExponentVector step = ExponentVector::unit(dim_, axis);
  for (const auto& [i, c] : v) {
    if (auto j = indexOf(basis_[i] + step)) out.emplace_back(*j, c);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

StableSubspace::StableSubspace(const TruncatedRing& host, std::vector<Vector> reducedBasis) : host_(&host), basis_(std::move(reducedBasis)) {
  for (const auto& row : basis_) echelon_.insert(row);
}

bool StableSubspace::contains(const Vector& v) const { return echelon_.inSpan(v); }

bool StableSubspace::containsMonomial(const ExponentVector& e) const {
  auto i = host_->indexOf(e);
  if (!i) return true;  // zero in the truncated ring
  return contains({{*i, Rational(1)}});
}

StableSubspace stableClosure(const TruncatedRing& host, const std::vector<PolynomialElement>& seeds) {
  SparseEchelon<RationalField> echelon;
  std::deque<TruncatedRing::Vector> work;
  for (const auto& seed : seeds) {
    auto v = host.truncate(seed);
    if (!v.empty() && echelon.insert(v)) work.push_back(std::move(v));
  }
  while (!work.empty()) {
    const auto v = std::move(work.front());
    work.pop_front();
    for (std::size_t axis = 0; axis < host.dim(); ++axis) {
      auto w = host.multiplyByVariable(v, axis);
      if (!w.empty() && echelon.insert(w)) work.push_back(std::move(w));
    }
  }
  return StableSubspace(host, echelon.reducedRows());
}

bool termwiseContained(const PolynomialElement& p, const MonomialIdeal& ideal) {
  if (p.dim() != ideal.dim()) fail(ErrorCode::kDimensionMismatch, "polynomial and ideal have different dimensions");
  return std::all_of(p.terms().begin(), p.terms().end(), [&](const auto& term) { return ideal.contains(term.first); });
}

EqualityResult verifyIdealEquality(const std::vector<PolynomialElement>& lhs, const MonomialIdeal& target, EqualityMethod method) {
  requireMPrimary(target);
  for (const auto& p : lhs) {
    if (p.dim() != target.dim()) fail(ErrorCode::kDimensionMismatch, "left-hand element and target have different dimensions");
  }
  requireContained(lhs, target);
  return method == EqualityMethod::kTruncatedRing ? viaTruncatedRing(lhs, target) : viaGeneratorQuotient(lhs, target);
}

}  // namespace powerclose
