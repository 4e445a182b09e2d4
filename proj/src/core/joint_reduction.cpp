#include "joint_reduction.hpp"

#include <algorithm>
#include <random>

namespace powerclose {

void JointReductionCandidate::validate(const IdealFamily& family) const {
  const std::size_t s = family.size();
  if (type.size() != s) fail(ErrorCode::kDimensionMismatch, "type has " + std::to_string(type.size()) + " entries for " + std::to_string(s) + " ideals");
  if (!type.nonnegative()) fail(ErrorCode::kNegativeExponent, "type must be nonnegative");
  if (type.total() != static_cast<Exponent>(family.dim())) {
    fail(ErrorCode::kInvalidArgument, "type " + type.str() + " does not sum to the dimension " + std::to_string(family.dim()));
  }
  if (elements.size() != s) fail(ErrorCode::kInvalidArgument, "candidate lists elements for " + std::to_string(elements.size()) + " ideals, expected " + std::to_string(s));
  for (std::size_t i = 0; i < s; ++i) {
    if (static_cast<Exponent>(elements[i].size()) != type[i]) {
      fail(ErrorCode::kInvalidArgument, "ideal " + std::to_string(i + 1) + " has " + std::to_string(elements[i].size()) + " elements but q_i = " + std::to_string(type[i]));
    }
    for (std::size_t j = 0; j < elements[i].size(); ++j) {
      if (!termwiseContained(elements[i][j], family.ideals[i])) {
        fail(ErrorCode::kNotContained, "element " + std::to_string(j + 1) + " of ideal " + std::to_string(i + 1) + " is not in the ideal");
      }
    }
  }
}

std::optional<MultiIndex> JointReductionReport::claimedReductionVector() const {
  if (claimedReductionVectors.empty()) return std::nullopt;
  return claimedReductionVectors.front();
}

const JrAttempt* JrNumberReport::bestAttempt() const {
  const JrAttempt* best = nullptr;
  for (const auto& a : attempts) {
    if (!best || a.passed > best->passed) best = &a;
  }
  return best;
}

EqualityResult verifyJointReductionAt(const Filtration& filtration, const JointReductionCandidate& candidate, const MultiIndex& n) {
  const std::size_t s = filtration.size();
  if (n.size() != s) fail(ErrorCode::kDimensionMismatch, "multi-index length does not match the family");
  if (!n.nonnegative()) fail(ErrorCode::kNegativeExponent, "multi-index must be nonnegative");
  if (n.isZero()) fail(ErrorCode::kZeroMultiIndex, "joint reduction identity needs |n| >= 1");
  if (candidate.elements.size() != s) fail(ErrorCode::kInvalidArgument, "candidate does not match the family");

  std::vector<PolynomialElement> lhs;
  for (std::size_t i = 0; i < s; ++i) {
    if (candidate.elements[i].empty()) continue;
    const auto base = filtration.ideal(n - MultiIndex::unit(s, i));
    for (const auto& a : candidate.elements[i]) {
      if (!base) {
        lhs.push_back(a);
        continue;
      }
      for (const auto& g : base->generators()) lhs.push_back(a.timesMonomial(g));
    }
  }
  return verifyIdealEquality(lhs, *filtration.ideal(n));
}

JointReductionReport verifyJointReductionGrid(const Filtration& filtration, const JointReductionCandidate& candidate,
                                              const MultiIndex& lo, const MultiIndex& hi) {
  const std::size_t s = filtration.size();
  if (lo.size() != s || hi.size() != s) fail(ErrorCode::kDimensionMismatch, "grid corners do not match the family");
  if (!lo.nonnegative() || !hi.dominates(lo)) fail(ErrorCode::kInvalidArgument, "grid needs 0 <= lo <= hi");

  JointReductionReport report{lo, hi, {}, {}, {}};
  const auto points = boxPoints(lo, hi);
  for (const auto& n : points) {
    if (n.isZero()) {
      // F(0) is the unit ideal, which elements of m cannot generate.
      report.failures.push_back({n, ExponentVector(filtration.dim())});
      continue;
    }
    auto result = verifyJointReductionAt(filtration, candidate, n);
    if (result.equal) {
      report.verified.push_back(n);
    } else {
      report.failures.push_back({n, *result.witness});
    }
  }

  auto valid = [&](const MultiIndex& m) {
    return std::none_of(report.failures.begin(), report.failures.end(), [&](const GridFailure& f) { return f.n.dominates(m); });
  };
  for (const auto& m : points) {
    if (!valid(m)) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < s && minimal; ++i) {
      if (m[i] > lo[i] && valid(m - MultiIndex::unit(s, i))) minimal = false;
    }
    if (minimal) report.claimedReductionVectors.push_back(m);
  }
  return report;
}

JrNumberReport jrNumber(const Filtration& filtration, const JointReductionCandidate& candidate, Exponent gridBound) {
  if (gridBound < 1) fail(ErrorCode::kInvalidArgument, "grid bound must be positive");
  candidate.validate(filtration.family());
  const std::size_t s = filtration.size();

  MultiIndex support(s);
  for (std::size_t k = 0; k < s; ++k) support[k] = candidate.type[k] != 0 ? 1 : 0;
  const auto offsets = boxPoints(MultiIndex(s), MultiIndex::constant(s, gridBound));

  JrNumberReport report;
  report.gridBound = gridBound;
  for (Exponent n = 0; n <= gridBound; ++n) {
    MultiIndex shift(s);
    for (std::size_t k = 0; k < s; ++k) shift[k] = support[k] * (n + 1);
    JrAttempt attempt;
    attempt.n = n;
    for (const auto& offset : offsets) {
      const MultiIndex point = shift + offset;
      ++attempt.tested;
      auto result = verifyJointReductionAt(filtration, candidate, point);
      if (result.equal) {
        ++attempt.passed;
      } else if (!attempt.firstFailure) {
        attempt.firstFailure = GridFailure{point, *result.witness};
      }
    }
    const bool passed = attempt.passed == attempt.tested;
    report.attempts.push_back(std::move(attempt));
    if (passed) {
      report.value = n;
      break;
    }
  }
  return report;
}

namespace {

// Uniform on [-bound, bound]; a plain modulus keeps the sequence identical across standard libraries.
Exponent drawCoefficient(std::mt19937_64& rng, Exponent bound) {
  const auto width = static_cast<std::uint64_t>(2 * bound + 1);
  return static_cast<Exponent>(rng() % width) - bound;
}

PolynomialElement drawElement(std::mt19937_64& rng, const MonomialIdeal& ideal, Exponent bound) {
  for (;;) {
    std::vector<std::pair<Rational, ExponentVector>> terms;
    for (const auto& g : ideal.generators()) {
      const Exponent c = drawCoefficient(rng, bound);
      if (c != 0) terms.emplace_back(Rational(static_cast<long>(c)), g);
    }
    if (!terms.empty()) return PolynomialElement::fromTerms(terms);
  }
}

}  // namespace

JointReductionSearchResult searchJointReduction(const Filtration& filtration, const MultiIndex& type,
                                                const JointReductionSearchOptions& options) {
  const std::size_t s = filtration.size();
  if (type.size() != s) fail(ErrorCode::kDimensionMismatch, "type does not match the family");
  if (!type.nonnegative()) fail(ErrorCode::kNegativeExponent, "type must be nonnegative");
  if (type.total() != static_cast<Exponent>(filtration.dim())) fail(ErrorCode::kInvalidArgument, "type must sum to the dimension");
  if (options.coeffBound < 1) fail(ErrorCode::kInvalidArgument, "coefficient bound must be positive");
  if (options.grid.size() != s || !options.grid.dominates(type)) fail(ErrorCode::kInvalidArgument, "grid must dominate the type");

  constexpr std::size_t kDrawsPerLevel = 4;
  std::mt19937_64 rng(options.seed);
  for (std::size_t draw = 0; draw < options.maxDraws; ++draw) {
    Exponent bound = 1;
    for (std::size_t level = draw / kDrawsPerLevel; level > 0 && bound < options.coeffBound; --level) bound *= 2;
    bound = std::min(bound, options.coeffBound);

    JointReductionCandidate candidate{type, std::vector<std::vector<PolynomialElement>>(s)};
    for (std::size_t i = 0; i < s; ++i) {
      for (Exponent j = 0; j < type[i]; ++j) candidate.elements[i].push_back(drawElement(rng, filtration.family().ideals[i], bound));
    }
    auto report = verifyJointReductionGrid(filtration, candidate, type, options.grid);
    if (report.failures.empty()) return {std::move(candidate), draw + 1, std::move(report)};
  }
  fail(ErrorCode::kSearchExhausted, "no joint reduction of type " + type.str() + " found in " + std::to_string(options.maxDraws) + " draws");
}

}  // namespace powerclose
