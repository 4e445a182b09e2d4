#pragma once

#include <vector>

#include "rational.hpp"

namespace powerclose {

/// minimize objective . x  subject to  rows,  x >= 0, over exact rationals.
struct LinearProgram {
  enum class Relation { kLessEqual, kEqual };

  struct Row {
    std::vector<Rational> coeffs;
    Relation relation = Relation::kLessEqual;
    Rational rhs;
  };

  std::size_t variables = 0;
  std::vector<Row> rows;
  /// Empty means pure feasibility.
  std::vector<Rational> objective;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<Rational> x;
  Rational value;
};

/// Two-phase tableau simplex with Bland's rule, so it always terminates.
LpSolution solve(const LinearProgram& program);

}  // namespace powerclose
