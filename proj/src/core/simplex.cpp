#include "simplex.hpp"

#include <optional>

namespace powerclose {

namespace {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t columns)
      : rows_(rows), columns_(columns), cells_(rows, std::vector<Rational>(columns + 1)), basis_(rows, 0) {}

  Rational& at(std::size_t r, std::size_t c) { return cells_[r][c]; }
  Rational& rhs(std::size_t r) { return cells_[r][columns_]; }
  std::size_t rows() const { return rows_; }
  std::size_t& basic(std::size_t r) { return basis_[r]; }

  void pivot(std::size_t pr, std::size_t pc) {
    const Rational inv = 1 / cells_[pr][pc];
    for (auto& v : cells_[pr]) v *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == pr || cells_[r][pc] == 0) continue;
      const Rational factor = cells_[r][pc];
      for (std::size_t c = 0; c <= columns_; ++c) {
        if (cells_[pr][c] != 0) cells_[r][c] -= factor * cells_[pr][c];
      }
    }
    basis_[pr] = pc;
  }

  void dropRow(std::size_t r) {
    cells_.erase(cells_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    --rows_;
  }

  /// Minimizes cost over columns < allowed. Returns false when unbounded.
  bool optimize(const std::vector<Rational>& cost, std::size_t allowed) {
    while (true) {
      std::optional<std::size_t> entering;
      for (std::size_t c = 0; c < allowed && !entering; ++c) {
        Rational reduced = cost[c];
        for (std::size_t r = 0; r < rows_; ++r) {
          if (cells_[r][c] != 0) reduced -= cost[basis_[r]] * cells_[r][c];
        }
        if (reduced < 0) entering = c;
      }
      if (!entering) return true;
      std::optional<std::size_t> leaving;
      Rational best;
      for (std::size_t r = 0; r < rows_; ++r) {
        const Rational& a = cells_[r][*entering];
        if (a <= 0) continue;
        Rational ratio = cells_[r][columns_] / a;
        if (!leaving || ratio < best || (ratio == best && basis_[r] < basis_[*leaving])) {
          leaving = r;
          best = std::move(ratio);
        }
      }
      if (!leaving) return false;
      pivot(*leaving, *entering);
    }
  }

 private:
  std::size_t rows_;
  std::size_t columns_;
  std::vector<std::vector<Rational>> cells_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpSolution solve(const LinearProgram& program) {
  const std::size_t n = program.variables;
  const std::size_t m = program.rows.size();
  std::size_t slacks = 0;
  for (const auto& row : program.rows) {
    if (row.coeffs.size() != n) fail(ErrorCode::kInternal, "LP row length differs from variable count");
    if (row.relation == LinearProgram::Relation::kLessEqual) ++slacks;
  }
  const std::size_t structural = n + slacks;
  const std::size_t columns = structural + m;
  Tableau t(m, columns);

  std::size_t slack = n;
  for (std::size_t r = 0; r < m; ++r) {
    const auto& row = program.rows[r];
    const int sign = row.rhs < 0 ? -1 : 1;
    for (std::size_t c = 0; c < n; ++c) t.at(r, c) = sign * row.coeffs[c];
    if (row.relation == LinearProgram::Relation::kLessEqual) t.at(r, slack++) = sign;
    t.rhs(r) = sign * row.rhs;
    t.at(r, structural + r) = 1;
    t.basic(r) = structural + r;
  }

  std::vector<Rational> phaseOne(columns);
  for (std::size_t c = structural; c < columns; ++c) phaseOne[c] = 1;
  t.optimize(phaseOne, columns);

  LpSolution solution;
  Rational infeasibility;
  for (std::size_t r = 0; r < t.rows(); ++r) {
    if (t.basic(r) >= structural) infeasibility += t.rhs(r);
  }
  if (infeasibility > 0) return solution;

  // Drive zero-valued artificials out of the basis; rows where that is impossible are redundant.
  for (std::size_t r = 0; r < t.rows();) {
    if (t.basic(r) < structural) {
      ++r;
      continue;
    }
    std::optional<std::size_t> replacement;
    for (std::size_t c = 0; c < structural && !replacement; ++c) {
      if (t.at(r, c) != 0) replacement = c;
    }
    if (replacement) {
      t.pivot(r, *replacement);
      ++r;
    } else {
      t.dropRow(r);
    }
  }

  std::vector<Rational> cost(columns);
  if (!program.objective.empty()) {
    if (program.objective.size() != n) fail(ErrorCode::kInternal, "LP objective length differs from variable count");
    for (std::size_t c = 0; c < n; ++c) cost[c] = program.objective[c];
    if (!t.optimize(cost, structural)) {
      solution.status = LpStatus::kUnbounded;
      return solution;
    }
  }

  solution.status = LpStatus::kOptimal;
  solution.x.assign(n, Rational(0));
  for (std::size_t r = 0; r < t.rows(); ++r) {
    if (t.basic(r) < n) solution.x[t.basic(r)] = t.rhs(r);
  }
  for (std::size_t c = 0; c < n; ++c) solution.value += cost[c] * solution.x[c];
  return solution;
}

}  // namespace powerclose
