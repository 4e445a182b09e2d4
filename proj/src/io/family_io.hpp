#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "joint_reduction.hpp"
#include "monomial_ideal.hpp"
#include "polynomial.hpp"

namespace powerclose::io {

/// ParseError carrying the 1-based location of the offending text.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(ErrorCode::kParseError, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A family file after parsing:
///
///   # comment
///   d = 2
///   vars: x, y            (optional; default X1..Xd, plus x,y,z and X,Y,Z when d <= 3)
///   filtration: closure   (optional; adic or closure, default closure)
///   I1: x, y^2
///   I2: (2,0), (0,1)
///
/// Statements end at a newline or ';'. Generators are monomials over the
/// variable names ('*' for product, '^' for power) or exponent tuples.
struct FamilyDocument {
  IdealFamily family;
  std::vector<std::string> names;
  std::vector<std::string> variables;
  /// True when `vars:` was given; only then are the names written back out.
  bool explicitVariables = false;
  std::vector<std::string> warnings;
};

/// Throws ParseError with a location, or kValidationError when
/// requireMPrimary is set and some ideal is not m-primary.
FamilyDocument parseFamily(std::string_view text, bool requireMPrimary = true);

/// x, y, z when dim <= 3, else X1..Xd.
std::vector<std::string> defaultVariableNames(std::size_t dim);
/// Document with names I1..Is and default variables.
FamilyDocument documentFor(IdealFamily family);

/// Canonical text; parseFamily(serializeFamily(doc)) reproduces the family.
std::string serializeFamily(const FamilyDocument& doc);

std::string formatMonomial(const ExponentVector& e, const std::vector<std::string>& variables);
std::string formatPolynomial(const PolynomialElement& p, const std::vector<std::string>& variables);
std::string formatIdeal(const MonomialIdeal& ideal, const std::vector<std::string>& variables);

PolynomialElement parsePolynomial(std::string_view text, const FamilyDocument& doc);

/// Either a file body with lines `Name: poly, poly` keyed by ideal name, or the
/// inline form `{a, b; c}` listing elements ideal by ideal. The type is read
/// off the element counts. The result is validated against the family.
JointReductionCandidate parseCandidate(std::string_view text, const FamilyDocument& doc);
std::string serializeCandidate(const JointReductionCandidate& candidate, const FamilyDocument& doc);

/// Lower-case hex SHA-256.
std::string sha256Hex(std::string_view data);

/// "sha256:<hex>" of the canonical family text plus any extra inputs.
std::string inputDigest(const FamilyDocument& doc, std::string_view extra = {});

}  // namespace powerclose::io
