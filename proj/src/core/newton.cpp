#include "newton.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "simplex.hpp"

namespace powerclose {

namespace {

Exponent dot(const std::vector<Exponent>& w, const ExponentVector& a) {
  Exponent sum = 0;
  for (std::size_t k = 0; k < w.size(); ++k) sum = checkedAdd(sum, checkedMul(w[k], a[k]));
  return sum;
}

// Fraction-free Gaussian elimination (Bareiss); the matrix is consumed.
Integer determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / previous;
      }
    }
    previous = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// Generalized cross product of d-1 vectors in Z^d.
std::vector<Integer> crossProduct(const std::vector<std::vector<Integer>>& rows, std::size_t dim) {
  std::vector<Integer> normal(dim);
  for (std::size_t skip = 0; skip < dim; ++skip) {
    std::vector<std::vector<Integer>> minor;
    minor.reserve(rows.size());
    for (const auto& row : rows) {
      std::vector<Integer> r;
      r.reserve(dim - 1);
      for (std::size_t c = 0; c < dim; ++c) {
        if (c != skip) r.push_back(row[c]);
      }
      minor.push_back(std::move(r));
    }
    Integer det = determinant(std::move(minor));
    normal[skip] = (skip % 2 == 0) ? det : Integer(-det);
  }
  return normal;
}

std::optional<std::vector<Exponent>> primitiveNonnegative(std::vector<Integer> w) {
  bool anyPositive = false;
  bool anyNegative = false;
  for (const auto& c : w) {
    anyPositive |= c > 0;
    anyNegative |= c < 0;
  }
  if (anyPositive == anyNegative) return std::nullopt;  // zero vector or mixed signs
  Integer g = 0;
  for (const auto& c : w) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Integer(abs(c)).get_mpz_t());
  std::vector<Exponent> out;
  out.reserve(w.size());
  for (auto& c : w) {
    Integer v = abs(c) / g;
    if (!v.fits_slong_p()) fail(ErrorCode::kOverflow, "facet normal too large");
    out.push_back(v.get_si());
  }
  return out;
}

Exponent supportValue(const std::vector<Exponent>& w, const std::vector<ExponentVector>& points) {
  Exponent best = INT64_MAX;
  for (const auto& p : points) best = std::min(best, dot(w, p));
  return best;
}

MonomialIdeal staircaseIdeal(const detail::Staircase& table) {
  return MonomialIdeal::fromGenerators(table.minimalGenerators());
}

std::uint64_t staircaseVolume(const detail::Staircase& table) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < table.cells(); ++i) {
    if (table.at(i) == detail::Staircase::kNoHeight) fail(ErrorCode::kNotMPrimary, "closure is not m-primary");
    if (__builtin_add_overflow(total, static_cast<std::uint64_t>(table.at(i)), &total)) {
      fail(ErrorCode::kOverflow, "colength overflow");
    }
  }
  return total;
}

}  // namespace

bool NewtonMembershipCertificate::verify(const MonomialIdeal& ideal, const ExponentVector& a) const {
  if (!verdict) return weights.empty();
  if (slack.size() != a.dim() || a.dim() != ideal.dim()) return false;
  Rational total = 0;
  std::vector<Rational> point(a.dim());
  for (const auto& [index, weight] : weights) {
    if (index >= ideal.size() || weight < 0) return false;
    total += weight;
    const auto& g = ideal.generators()[index];
    for (std::size_t k = 0; k < a.dim(); ++k) point[k] += weight * g[k];
  }
  if (total != 1) return false;
  for (std::size_t k = 0; k < a.dim(); ++k) {
    if (slack[k] < 0 || point[k] + slack[k] != a[k]) return false;
  }
  return true;
}

NewtonMembershipCertificate newtonMember(const MonomialIdeal& ideal, const ExponentVector& a) {
  if (a.dim() != ideal.dim()) fail(ErrorCode::kDimensionMismatch, "point and ideal have different dimensions");
  requireMPrimary(ideal);
  const auto& gens = ideal.generators();
  LinearProgram lp;
  lp.variables = gens.size();
  LinearProgram::Row convex;
  convex.coeffs.assign(gens.size(), Rational(1));
  convex.relation = LinearProgram::Relation::kEqual;
  convex.rhs = 1;
  lp.rows.push_back(std::move(convex));
  for (std::size_t k = 0; k < a.dim(); ++k) {
    LinearProgram::Row row;
    row.coeffs.reserve(gens.size());
    for (const auto& g : gens) row.coeffs.emplace_back(g[k]);
    row.rhs = a[k];
    lp.rows.push_back(std::move(row));
  }
  const LpSolution solution = solve(lp);
  NewtonMembershipCertificate cert;
  if (solution.status != LpStatus::kOptimal) return cert;
  cert.verdict = true;
  cert.slack.assign(a.dim(), Rational(0));
  for (std::size_t k = 0; k < a.dim(); ++k) cert.slack[k] = a[k];
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (solution.x[i] == 0) continue;
    cert.weights.emplace_back(i, solution.x[i]);
    for (std::size_t k = 0; k < a.dim(); ++k) cert.slack[k] -= solution.x[i] * gens[i][k];
  }
  if (!cert.verify(ideal, a)) fail(ErrorCode::kInternal, "Newton membership certificate failed re-verification");
  return cert;
}

std::vector<ExponentVector> newtonVertices(const MonomialIdeal& ideal) {
  const auto& gens = ideal.generators();
  if (gens.size() <= 1) return gens;
  std::vector<ExponentVector> out;
  for (std::size_t skip = 0; skip < gens.size(); ++skip) {
    LinearProgram lp;
    lp.variables = gens.size() - 1;
    LinearProgram::Row convex;
    convex.coeffs.assign(lp.variables, Rational(1));
    convex.relation = LinearProgram::Relation::kEqual;
    convex.rhs = 1;
    lp.rows.push_back(std::move(convex));
    for (std::size_t k = 0; k < ideal.dim(); ++k) {
      LinearProgram::Row row;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i != skip) row.coeffs.emplace_back(gens[i][k]);
      }
      row.rhs = gens[skip][k];
      lp.rows.push_back(std::move(row));
    }
    if (solve(lp).status != LpStatus::kOptimal) out.push_back(gens[skip]);
  }
  return out;
}

std::vector<std::vector<Exponent>> facetNormals(std::size_t dim, const std::vector<ExponentVector>& vertices) {
  std::set<std::vector<Exponent>> normals;
  if (dim == 1) return {{1}};
  const std::size_t points = vertices.size();
  const std::size_t elements = points + dim;  // vertices, then the coordinate rays
  if (points == 0 || elements < dim) return {};
  std::vector<std::size_t> pick(dim);
  std::iota(pick.begin(), pick.end(), 0);
  while (pick[0] < points) {
    const ExponentVector& base = vertices[pick[0]];
    std::vector<std::vector<Integer>> rows;
    rows.reserve(dim - 1);
    for (std::size_t j = 1; j < dim; ++j) {
      std::vector<Integer> row(dim);
      if (pick[j] < points) {
        for (std::size_t k = 0; k < dim; ++k) row[k] = Integer(vertices[pick[j]][k]) - Integer(base[k]);
      } else {
        row[pick[j] - points] = 1;
      }
      rows.push_back(std::move(row));
    }
    if (auto w = primitiveNonnegative(crossProduct(rows, dim))) {
      const Exponent level = dot(*w, base);
      const bool supporting = std::all_of(vertices.begin(), vertices.end(), [&](const ExponentVector& v) { return dot(*w, v) >= level; });
      if (supporting) normals.insert(std::move(*w));
    }
    // Advance to the next combination in lexicographic order.
    std::size_t i = dim;
    while (i > 0 && pick[i - 1] == elements - dim + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < dim; ++j) pick[j] = pick[j - 1] + 1;
  }
  return {normals.begin(), normals.end()};
}

NewtonPolyhedron NewtonPolyhedron::of(const MonomialIdeal& ideal) {
  NewtonPolyhedron out;
  out.vertices_ = newtonVertices(ideal);
  for (auto& w : facetNormals(ideal.dim(), out.vertices_)) {
    Facet f;
    f.offset = supportValue(w, out.vertices_);
    f.normal = std::move(w);
    out.facets_.push_back(std::move(f));
  }
  return out;
}

bool NewtonPolyhedron::contains(const ExponentVector& a) const {
  return std::all_of(facets_.begin(), facets_.end(), [&](const Facet& f) { return dot(f.normal, a) >= f.offset; });
}

namespace detail {

Staircase latticeStaircase(std::size_t dim, const std::vector<Facet>& facets, const std::vector<Exponent>& extent) {
  Staircase table(dim, extent);
  const std::size_t top = dim - 1;
  for (std::size_t index = 0; index < table.cells(); ++index) {
    const std::vector<Exponent> cell = table.cell(index);
    Exponent height = 0;
    bool feasible = true;
    for (const auto& f : facets) {
      Exponent partial = 0;
      for (std::size_t k = 0; k < top; ++k) partial = checkedAdd(partial, checkedMul(f.normal[k], cell[k]));
      const Exponent need = f.offset - partial;
      if (need <= 0) continue;
      if (f.normal[top] == 0) {
        feasible = false;
        break;
      }
      height = std::max(height, (need + f.normal[top] - 1) / f.normal[top]);
    }
    table.at(index) = feasible ? height : Staircase::kNoHeight;
  }
  return table;
}

}  // namespace detail

MonomialIdeal integralClosure(const MonomialIdeal& ideal) {
  requireMPrimary(ideal);
  const auto polyhedron = NewtonPolyhedron::of(ideal);
  std::vector<Exponent> extent(ideal.dim() - 1);
  for (std::size_t k = 0; k + 1 < ideal.dim(); ++k) extent[k] = *ideal.purePower(k);
  return staircaseIdeal(detail::latticeStaircase(ideal.dim(), polyhedron.facets(), extent));
}

bool isComplete(const MonomialIdeal& ideal) { return integralClosure(ideal) == ideal; }

bool powerOracleMember(const MonomialIdeal& ideal, const ExponentVector& a, Exponent kmax) {
  requireMPrimary(ideal);
  if (kmax < 1) fail(ErrorCode::kInvalidArgument, "kmax must be positive");
  MonomialIdeal current = ideal;
  for (Exponent k = 1; k <= kmax; ++k) {
    if (current.contains(a.scaled(k))) return true;
    if (k < kmax) current = product(current, ideal);
  }
  return false;
}

ProductClosure::ProductClosure(IdealFamily family) : family_(std::move(family)) { family_.validate(); }

const std::vector<std::vector<Exponent>>& ProductClosure::normalsFor(const std::vector<bool>& support) const {
  std::lock_guard lock(mutex_);
  auto it = normals_.find(support);
  if (it != normals_.end()) return it->second;
  std::optional<MonomialIdeal> combined;
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (!support[i]) continue;
    combined = combined ? product(*combined, family_.ideals[i]) : family_.ideals[i];
  }
  auto normals = facetNormals(family_.dim(), newtonVertices(*combined));
  return normals_.emplace(support, std::move(normals)).first->second;
}

ProductClosure::Inequalities ProductClosure::inequalities(const MultiIndex& n) const {
  if (n.size() != family_.size()) fail(ErrorCode::kDimensionMismatch, "multi-index length differs from family size");
  if (!n.nonnegative()) fail(ErrorCode::kNegativeExponent, "closure of I^n needs n >= 0, got " + n.str());
  if (n.isZero()) fail(ErrorCode::kZeroMultiIndex, "closure of I^0 is the unit ideal");
  std::vector<bool> support(n.size());
  for (std::size_t i = 0; i < n.size(); ++i) support[i] = n[i] > 0;
  Inequalities out;
  for (const auto& w : normalsFor(support)) {
    Facet f;
    f.normal = w;
    for (std::size_t i = 0; i < n.size(); ++i) {
      if (n[i] == 0) continue;
      f.offset = checkedAdd(f.offset, checkedMul(n[i], supportValue(w, family_.ideals[i].generators())));
    }
    out.facets.push_back(std::move(f));
  }
  const std::size_t d = family_.dim();
  out.extent.assign(d - 1, 0);
  for (std::size_t k = 0; k + 1 < d; ++k) {
    for (std::size_t i = 0; i < n.size(); ++i) {
      out.extent[k] = checkedAdd(out.extent[k], checkedMul(n[i], *family_.ideals[i].purePower(k)));
    }
  }
  return out;
}

MonomialIdeal ProductClosure::closure(const MultiIndex& n) const {
  const auto ineq = inequalities(n);
  return staircaseIdeal(detail::latticeStaircase(family_.dim(), ineq.facets, ineq.extent));
}

std::uint64_t ProductClosure::closureColength(const MultiIndex& n) const {
  const auto ineq = inequalities(n);
  return staircaseVolume(detail::latticeStaircase(family_.dim(), ineq.facets, ineq.extent));
}

bool ProductClosure::member(const MultiIndex& n, const ExponentVector& a) const {
  if (a.dim() != family_.dim()) fail(ErrorCode::kDimensionMismatch, "point and family have different dimensions");
  const auto ineq = inequalities(n);
  return std::all_of(ineq.facets.begin(), ineq.facets.end(), [&](const Facet& f) { return dot(f.normal, a) >= f.offset; });
}

}  // namespace powerclose
