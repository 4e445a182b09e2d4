#include "family_io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>

namespace powerclose::io {

namespace {

struct Statement {
  std::size_t line;
  std::size_t column;  // of text[0]
  std::string text;
};

bool isIdentStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool isIdentChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Splits on newlines and ';', drops '#' comments, keeps 1-based positions.
std::vector<Statement> splitStatements(std::string_view text) {
  std::vector<Statement> out;
  std::size_t line = 1;
  std::size_t column = 1;
  Statement current{1, 1, {}};
  bool comment = false;
  auto flush = [&] {
    const auto first = current.text.find_first_not_of(" \t\r");
    if (first != std::string::npos) {
      const auto last = current.text.find_last_not_of(" \t\r");
      out.push_back({current.line, current.column + first, current.text.substr(first, last - first + 1)});
    }
  };
  for (char c : text) {
    if (c == '\n') {
      flush();
      ++line;
      column = 1;
      current = {line, column, {}};
      comment = false;
      continue;
    }
    if (!comment && c == '#') comment = true;
    if (!comment && c == ';') {
      flush();
      current = {line, column + 1, {}};
    } else if (!comment) {
      current.text.push_back(c);
    }
    ++column;
  }
  flush();
  return out;
}

class Scanner {
 public:
  Scanner(std::string_view text, std::size_t line, std::size_t column) : text_(text), line_(line), column_(column) {}

  [[noreturn]] void error(const std::string& message) const { throw ParseError(line_, column_ + pos_, message); }

  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skipSpace();
    return pos_ >= text_.size();
  }
  char peek() {
    skipSpace();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }
  std::size_t position() const { return pos_; }
  void rewind(std::size_t pos) { pos_ = pos; }

  std::string identifier() {
    skipSpace();
    if (pos_ >= text_.size() || !isIdentStart(text_[pos_])) error("expected a name");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && isIdentChar(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  bool atDigit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  Integer natural() {
    skipSpace();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) error("expected a number");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Exponent exponent() {
    const std::size_t start = pos_;
    const Integer value = natural();
    if (!value.fits_slong_p()) {
      pos_ = start;
      error("exponent " + value.get_str() + " is too large");
    }
    return value.get_si();
  }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t column_;
  std::size_t pos_ = 0;
};

class VariableTable {
 public:
  VariableTable(std::size_t dim, const std::vector<std::string>& names, bool explicitNames) {
    if (explicitNames) {
      for (std::size_t k = 0; k < names.size(); ++k) index_.emplace(names[k], k);
      return;
    }
    for (std::size_t k = 0; k < dim; ++k) index_.emplace("X" + std::to_string(k + 1), k);
    if (dim <= 3) {
      for (std::size_t k = 0; k < dim; ++k) {
        index_.emplace(std::string(1, "xyz"[k]), k);
        index_.emplace(std::string(1, "XYZ"[k]), k);
      }
    }
  }

  std::optional<std::size_t> find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

 private:
  std::map<std::string, std::size_t> index_;
};

}  // namespace

std::vector<std::string> defaultVariableNames(std::size_t dim) {
  std::vector<std::string> names;
  for (std::size_t k = 0; k < dim; ++k) names.push_back(dim <= 3 ? std::string(1, "xyz"[k]) : "X" + std::to_string(k + 1));
  return names;
}

namespace {

// var[^k] ('*' var[^k])*
ExponentVector parseMonomial(Scanner& in, std::size_t dim, const VariableTable& vars) {
  std::vector<Exponent> e(dim, 0);
  do {
    in.skipSpace();
    const std::size_t start = in.position();
    const std::string name = in.identifier();
    auto axis = vars.find(name);
    if (!axis) {
      in.rewind(start);
      in.error("unknown variable '" + name + "'");
    }
    Exponent power = 1;
    if (in.accept('^')) power = in.exponent();
    e[*axis] = checkedAdd(e[*axis], power);
  } while (in.accept('*'));
  return ExponentVector(std::move(e));
}

ExponentVector parseGenerator(Scanner& in, std::size_t dim, const VariableTable& vars) {
  if (in.accept('(')) {
    std::vector<Exponent> e;
    do e.push_back(in.exponent());
    while (in.accept(','));
    if (e.size() != dim) in.error("tuple has " + std::to_string(e.size()) + " entries, expected " + std::to_string(dim));
    in.expect(')');
    return ExponentVector(std::move(e));
  }
  if (in.atDigit()) {
    const std::size_t start = in.position();
    if (in.natural() == 1) {
      in.rewind(start);
      in.skipSpace();
      in.error("the unit ideal is not allowed");
    }
    in.rewind(start);
    in.skipSpace();
    in.error("expected a monomial or an exponent tuple");
  }
  return parseMonomial(in, dim, vars);
}

// coefficient part: integer or fraction
Rational parseCoefficient(Scanner& in) {
  Rational q(in.natural());
  if (in.accept('/')) {
    const Integer den = in.natural();
    if (den == 0) in.error("zero denominator");
    q /= Rational(den);
  }
  return q;
}

PolynomialElement parsePolynomialScanner(Scanner& in, std::size_t dim, const VariableTable& vars) {
  std::vector<std::pair<Rational, ExponentVector>> terms;
  bool first = true;
  for (;;) {
    int sign = 1;
    if (in.accept('-')) {
      sign = -1;
    } else if (!in.accept('+') && !first) {
      break;
    }
    first = false;
    Rational coefficient(sign);
    ExponentVector monomial(dim);
    if (in.atDigit()) {
      coefficient *= parseCoefficient(in);
      if (in.accept('*')) monomial = parseMonomial(in, dim, vars);
      else if (isIdentStart(in.peek())) monomial = parseMonomial(in, dim, vars);
    } else {
      monomial = parseMonomial(in, dim, vars);
    }
    terms.emplace_back(std::move(coefficient), std::move(monomial));
    const char next = in.peek();
    if (next != '+' && next != '-') break;
  }
  try {
    return PolynomialElement::fromTerms(terms);
  } catch (const Error& e) {
    in.error(e.what());
  }
}

std::string joinNames(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? ", " : "") + names[i];
  return out;
}

}  // namespace

FamilyDocument parseFamily(std::string_view text, bool requireMPrimary) {
  struct IdealStatement {
    Statement where;
    std::string name;
    std::size_t valueOffset;
  };
  FamilyDocument doc;
  std::optional<std::size_t> dim;
  std::optional<Statement> dimWhere;
  std::vector<IdealStatement> idealStatements;
  std::set<std::string> seen;
  bool haveFiltration = false;

  for (const auto& st : splitStatements(text)) {
    Scanner in(st.text, st.line, st.column);
    const std::string key = in.identifier();
    if (!in.accept(':') && !in.accept('=')) in.error("expected ':' or '=' after '" + key + "'");
    const std::size_t valueStart = in.position();
    if (key == "d") {
      if (dim) in.error("dimension given twice");
      const Exponent d = in.exponent();
      if (d < 1) in.error("dimension must be at least 1");
      if (!in.done()) in.error("unexpected text after the dimension");
      dim = static_cast<std::size_t>(d);
      dimWhere = st;
    } else if (key == "vars" || key == "variables") {
      if (doc.explicitVariables) in.error("variables given twice");
      std::set<std::string> unique;
      do {
        in.skipSpace();
        const std::size_t at = in.position();
        std::string name = in.identifier();
        if (!unique.insert(name).second) {
          in.rewind(at);
          in.error("variable '" + name + "' listed twice");
        }
        doc.variables.push_back(std::move(name));
      } while (in.accept(','));
      if (!in.done()) in.error("expected ',' between variable names");
      doc.explicitVariables = true;
    } else if (key == "filtration") {
      if (haveFiltration) in.error("filtration given twice");
      in.skipSpace();
      const std::size_t at = in.position();
      const std::string kind = in.identifier();
      if (kind == "adic") doc.family.filtration = FiltrationKind::kAdic;
      else if (kind == "closure") doc.family.filtration = FiltrationKind::kClosure;
      else {
        in.rewind(at);
        in.error("filtration must be 'adic' or 'closure'");
      }
      if (!in.done()) in.error("unexpected text after the filtration");
      haveFiltration = true;
    } else {
      if (!seen.insert(key).second) in.error("ideal '" + key + "' defined twice");
      idealStatements.push_back({st, key, valueStart});
    }
  }

  if (doc.explicitVariables) {
    if (dim && *dim != doc.variables.size()) {
      throw ParseError(dimWhere->line, dimWhere->column,
                       "d = " + std::to_string(*dim) + " but " + std::to_string(doc.variables.size()) + " variables are listed");
    }
    dim = doc.variables.size();
  }
  if (!dim) throw ParseError(1, 1, "missing dimension: add 'd = <n>' or a 'vars:' line");
  if (idealStatements.empty()) throw ParseError(1, 1, "no ideals defined");
  if (!doc.explicitVariables) doc.variables = defaultVariableNames(*dim);

  const VariableTable vars(*dim, doc.variables, doc.explicitVariables);
  for (const auto& st : idealStatements) {
    Scanner in(st.where.text, st.where.line, st.where.column);
    in.rewind(st.valueOffset);
    if (in.done()) in.error("ideal '" + st.name + "' has no generators");
    std::vector<ExponentVector> gens;
    do gens.push_back(parseGenerator(in, *dim, vars));
    while (in.accept(','));
    if (!in.done()) in.error("expected ',' between generators");
    const std::size_t listed = gens.size();
    auto ideal = MonomialIdeal::fromGenerators(std::move(gens));
    if (ideal.size() < listed) {
      doc.warnings.push_back(st.name + ": removed " + std::to_string(listed - ideal.size()) + " redundant generator(s)");
    }
    if (requireMPrimary && !ideal.isMPrimary()) fail(ErrorCode::kValidationError, "ideal '" + st.name + "' is not m-primary");
    doc.names.push_back(st.name);
    doc.family.ideals.push_back(std::move(ideal));
  }
  return doc;
}

std::string formatMonomial(const ExponentVector& e, const std::vector<std::string>& variables) {
  std::string out;
  for (std::size_t k = 0; k < e.dim(); ++k) {
    if (e[k] == 0) continue;
    if (!out.empty()) out += '*';
    out += variables.at(k);
    if (e[k] != 1) out += '^' + std::to_string(e[k]);
  }
  return out.empty() ? "1" : out;
}

std::string formatPolynomial(const PolynomialElement& p, const std::vector<std::string>& variables) {
  std::string out;
  // highest terms first reads more naturally
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const Rational magnitude = abs(c);
    if (out.empty()) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    const bool unit = e.totalDegree() == 0;
    if (magnitude != 1 || unit) {
      out += magnitude.get_str();
      if (!unit) out += '*';
    }
    if (!unit) out += formatMonomial(e, variables);
  }
  return out;
}

std::string formatIdeal(const MonomialIdeal& ideal, const std::vector<std::string>& variables) {
  std::string out;
  for (const auto& g : ideal.generators()) out += (out.empty() ? "" : ", ") + formatMonomial(g, variables);
  return out;
}

FamilyDocument documentFor(IdealFamily family) {
  FamilyDocument doc;
  for (std::size_t i = 0; i < family.size(); ++i) doc.names.push_back("I" + std::to_string(i + 1));
  doc.variables = defaultVariableNames(family.dim());
  doc.family = std::move(family);
  return doc;
}

std::string serializeFamily(const FamilyDocument& doc) {
  std::string out = "d = " + std::to_string(doc.family.dim()) + "\n";
  if (doc.explicitVariables) out += "vars: " + joinNames(doc.variables) + "\n";
  out += "filtration: " + std::string(filtrationName(doc.family.filtration)) + "\n";
  for (std::size_t i = 0; i < doc.family.size(); ++i) out += doc.names.at(i) + ": " + formatIdeal(doc.family.ideals[i], doc.variables) + "\n";
  return out;
}

PolynomialElement parsePolynomial(std::string_view text, const FamilyDocument& doc) {
  const VariableTable vars(doc.family.dim(), doc.variables, doc.explicitVariables);
  Scanner in(text, 1, 1);
  auto p = parsePolynomialScanner(in, doc.family.dim(), vars);
  if (!in.done()) in.error("unexpected text after the polynomial");
  return p;
}

JointReductionCandidate parseCandidate(std::string_view text, const FamilyDocument& doc) {
  const std::size_t s = doc.family.size();
  const std::size_t dim = doc.family.dim();
  const VariableTable vars(dim, doc.variables, doc.explicitVariables);
  JointReductionCandidate candidate{MultiIndex(s), std::vector<std::vector<PolynomialElement>>(s)};

  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    Scanner in(text, 1, 1);
    in.expect('{');
    std::size_t ideal = 0;
    while (!in.accept('}')) {
      if (in.accept(';')) {
        if (++ideal >= s) in.error("more ideal groups than ideals in the family");
        continue;
      }
      if (ideal >= s) in.error("more ideal groups than ideals in the family");
      candidate.elements[ideal].push_back(parsePolynomialScanner(in, dim, vars));
      if (!in.accept(',') && in.peek() != ';' && in.peek() != '}') in.error("expected ',', ';' or '}'");
    }
    if (!in.done()) in.error("unexpected text after '}'");
  } else {
    std::map<std::string, std::size_t> byName;
    for (std::size_t i = 0; i < s; ++i) byName.emplace(doc.names[i], i);
    for (const auto& st : splitStatements(text)) {
      Scanner in(st.text, st.line, st.column);
      const std::string name = in.identifier();
      auto it = byName.find(name);
      if (it == byName.end()) in.error("unknown ideal '" + name + "'");
      in.expect(':');
      do candidate.elements[it->second].push_back(parsePolynomialScanner(in, dim, vars));
      while (in.accept(','));
      if (!in.done()) in.error("expected ',' between elements");
    }
  }
  for (std::size_t i = 0; i < s; ++i) candidate.type[i] = static_cast<Exponent>(candidate.elements[i].size());
  candidate.validate(doc.family);
  return candidate;
}

std::string serializeCandidate(const JointReductionCandidate& candidate, const FamilyDocument& doc) {
  std::string out;
  for (std::size_t i = 0; i < candidate.elements.size(); ++i) {
    if (candidate.elements[i].empty()) continue;
    out += doc.names.at(i) + ": ";
    for (std::size_t j = 0; j < candidate.elements[i].size(); ++j) out += (j ? ", " : "") + formatPolynomial(candidate.elements[i][j], doc.variables);
    out += "\n";
  }
  return out;
}

std::string sha256Hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1) fail(ErrorCode::kInternal, "SHA-256 failed");
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < length; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 15];
  }
  return out;
}

std::string inputDigest(const FamilyDocument& doc, std::string_view extra) {
  std::string data = serializeFamily(doc);
  if (!extra.empty()) {
    data += "--\n";
    data += extra;
  }
  return "sha256:" + sha256Hex(data);
}

}  // namespace powerclose::io
