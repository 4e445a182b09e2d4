#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hilbert.hpp"
#include "membership.hpp"

namespace powerclose {

/// Elements a_ij of I_i, q_i of them for ideal i, with |q| = d.
struct JointReductionCandidate {
  MultiIndex type;
  std::vector<std::vector<PolynomialElement>> elements;

  /// Throws kInvalidArgument on a shape error, kNotContained if some a_ij is not in I_i.
  void validate(const IdealFamily& family) const;
};

struct GridFailure {
  MultiIndex n;
  ExponentVector witness;
};

/// Outcome of checking sum_ij a_ij F(n - e_i) = F(n) on every n of a box.
/// The claimed reduction vectors are heuristic: they only summarize the box.
struct JointReductionReport {
  MultiIndex lo;
  MultiIndex hi;
  std::vector<MultiIndex> verified;
  std::vector<GridFailure> failures;
  /// Componentwise-minimal m in the box such that every box point >= m verified.
  std::vector<MultiIndex> claimedReductionVectors;

  std::optional<MultiIndex> claimedReductionVector() const;
};

/// n >= 0, |n| >= 1. F(n - e_i) is read as F((n - e_i)^+); a unit factor contributes a_ij itself.
EqualityResult verifyJointReductionAt(const Filtration& filtration, const JointReductionCandidate& candidate, const MultiIndex& n);

JointReductionReport verifyJointReductionGrid(const Filtration& filtration, const JointReductionCandidate& candidate,
                                              const MultiIndex& lo, const MultiIndex& hi);

struct JrAttempt {
  Exponent n = 0;
  std::size_t passed = 0;
  std::size_t tested = 0;
  std::optional<GridFailure> firstFailure;
};

/// Smallest n <= gridBound such that the shifted identity holds at
/// sum_{k in A} (n+1) e_k + nbar for every offset nbar in [0, gridBound]^s,
/// where A = {i : q_i != 0}. value is empty when no n qualifies.
struct JrNumberReport {
  Exponent gridBound = 0;
  std::optional<Exponent> value;
  std::vector<JrAttempt> attempts;

  /// The attempt with the most passing offsets.
  const JrAttempt* bestAttempt() const;
};

JrNumberReport jrNumber(const Filtration& filtration, const JointReductionCandidate& candidate, Exponent gridBound);

struct JointReductionSearchOptions {
  std::uint64_t seed = 1;
  Exponent coeffBound = 8;
  /// Upper corner of the verification box [q, grid].
  MultiIndex grid;
  std::size_t maxDraws = 64;
};

struct JointReductionSearchResult {
  JointReductionCandidate candidate;
  std::size_t draws = 0;
  JointReductionReport gridReport;
};

/// Draws a_ij as random integer combinations of the generators of I_i, with
/// coefficient bounds 1, 2, 4, ... capped at coeffBound, and returns the first
/// candidate passing the whole box [q, grid]. Throws kSearchExhausted.
JointReductionSearchResult searchJointReduction(const Filtration& filtration, const MultiIndex& type,
                                                const JointReductionSearchOptions& options);

}  // namespace powerclose
