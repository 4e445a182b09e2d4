// powerclose command-line front end. Talks to the library only through the C API.

#include <powerclose/powerclose.h>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

using Json = nlohmann::ordered_json;

namespace {

constexpr const char* kSchema = "powerclose.report/1";

enum Exit : int { kPositive = 0, kNegative = 1, kUsage = 2, kInternal = 3 };

// Thrown for failures that should still produce a report.
struct CliFailure {
  pc_status status;
  std::string message;
};

struct Handles {
  pc_session* session = nullptr;
  pc_family* family = nullptr;
  pc_candidate* candidate = nullptr;
  ~Handles() {
    pc_candidate_destroy(candidate);
    pc_family_destroy(family);
    pc_session_destroy(session);
  }
};

std::string takeString(char* s) {
  std::string out = s ? s : "";
  pc_string_free(s);
  return out;
}

void check(pc_status status) {
  if (status != PC_OK) throw CliFailure{status, pc_last_error_message()};
}

std::string readInput(const std::string& path) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliFailure{PC_ERR_IO, "cannot read " + path};
    buffer << in.rdbuf();
  }
  return buffer.str();
}

// "2" broadcasts to every coordinate; "1,2" is taken literally.
std::vector<int64_t> parseIndex(const std::string& text, std::size_t s, const std::string& flag) {
  std::vector<int64_t> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stoll(item, &used));
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw CliFailure{PC_ERR_INVALID_ARGUMENT, flag + ": '" + text + "' is not a comma-separated list of integers"};
    }
  }
  if (values.size() == 1 && s > 1) values.assign(s, values.front());
  if (values.size() != s) {
    throw CliFailure{PC_ERR_DIMENSION_MISMATCH, flag + " needs " + std::to_string(s) + " entries, got " + std::to_string(values.size())};
  }
  return values;
}

std::pair<std::vector<int64_t>, std::vector<int64_t>> parseRange(const std::string& text, std::size_t s, const std::string& flag) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw CliFailure{PC_ERR_INVALID_ARGUMENT, flag + " expects LO..HI"};
  return {parseIndex(text.substr(0, dots), s, flag), parseIndex(text.substr(dots + 2), s, flag)};
}

// Aligned text rendering of a report: scalars as key/value rows, arrays of
// objects as tables.
std::string cell(const Json& v) {
  if (!v.is_string()) return v.dump();
  std::string text = v.get<std::string>();
  while (!text.empty() && text.back() == '\n') text.pop_back();
  for (std::size_t at = text.find('\n'); at != std::string::npos; at = text.find('\n', at)) text.replace(at, 1, "; ");
  return text;
}

// Two-space indented JSON with arrays of scalars kept on one line.
bool flat(const Json& v) {
  if (v.is_object()) return v.empty();
  if (!v.is_array()) return true;
  return std::all_of(v.begin(), v.end(), [](const Json& x) { return !x.is_structured() || (x.is_array() && flat(x) && x.size() <= 8); });
}

void writeJson(std::ostream& out, const Json& v, int depth) {
  if (flat(v)) {
    out << v.dump();
    return;
  }
  const std::string pad(2 * (depth + 1), ' ');
  const bool object = v.is_object();
  out << (object ? '{' : '[') << '\n';
  std::size_t i = 0;
  for (const auto& [key, value] : v.items()) {
    out << pad;
    if (object) out << Json(key).dump() << ": ";
    writeJson(out, value, depth + 1);
    out << (++i < v.size() ? ",\n" : "\n");
  }
  out << std::string(2 * depth, ' ') << (object ? '}' : ']');
}

void renderObject(std::ostream& out, const Json& object, const std::string& indent);

void renderTable(std::ostream& out, const Json& rows, const std::string& indent) {
  std::vector<std::string> columns;
  for (const auto& row : rows) {
    for (const auto& [key, value] : row.items()) {
      if (std::find(columns.begin(), columns.end(), key) == columns.end()) columns.push_back(key);
    }
  }
  std::vector<std::size_t> width(columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    width[c] = columns[c].size();
    for (const auto& row : rows) width[c] = std::max(width[c], row.contains(columns[c]) ? cell(row[columns[c]]).size() : 1);
  }
  auto line = [&](auto&& value) {
    out << indent;
    for (std::size_t c = 0; c < columns.size(); ++c) out << std::left << std::setw(static_cast<int>(width[c] + 2)) << value(c);
    out << '\n';
  };
  line([&](std::size_t c) { return columns[c]; });
  for (const auto& row : rows) line([&](std::size_t c) { return row.contains(columns[c]) ? cell(row[columns[c]]) : std::string("-"); });
}

void renderObject(std::ostream& out, const Json& object, const std::string& indent) {
  std::size_t keyWidth = 0;
  for (const auto& [key, value] : object.items()) keyWidth = std::max(keyWidth, key.size());
  for (const auto& [key, value] : object.items()) {
    const bool rows = value.is_array() && !value.empty() && value.front().is_object();
    if (value.is_object() && !value.empty()) {
      out << indent << key << ":\n";
      renderObject(out, value, indent + "  ");
    } else if (rows) {
      out << indent << key << ":\n";
      renderTable(out, value, indent + "  ");
    } else {
      out << indent << std::left << std::setw(static_cast<int>(keyWidth + 2)) << key << cell(value) << '\n';
    }
  }
}

int exitFor(pc_status status) {
  switch (status) {
    case PC_OK:
      return kPositive;
    case PC_ERR_NONE_FOUND:
    case PC_ERR_SEARCH_EXHAUSTED:
    case PC_ERR_VALIDATION_FAILURE:
      return kNegative;
    case PC_ERR_SINGULAR_SYSTEM:
    case PC_ERR_INTERNAL:
      return kInternal;
    default:
      return kUsage;
  }
}

struct Options {
  std::string family = "-";
  std::string out;
  std::string cache;
  std::string format = "json";
  uint64_t seed = 1;
  bool timings = false;

  std::string grid;
  std::string window;
  std::string alpha;
  bool overrideGate = false;
  std::string bound;
  std::string candidate;
  std::string type;
  int64_t coeffBound = 8;
  uint64_t maxDraws = 64;
  std::size_t dimension = 2;
  std::size_t ideals = 2;
  uint64_t budget = 2000;
};

class Runner {
 public:
  explicit Runner(const Options& options) : opt_(options) {}

  int run(const std::string& operation) {
    report_ = Json{{"schema", kSchema},
                   {"tool", {{"name", "powerclose"}, {"version", pc_version()}}},
                   {"operation", operation},
                   {"input_digest", nullptr},
                   {"seed", opt_.seed},
                   {"parameters", Json::object()},
                   {"status", nullptr},
                   {"result", nullptr},
                   {"warnings", Json::array()}};
    int code = kInternal;
    const auto start = std::chrono::steady_clock::now();
    try {
      check(pc_session_create(&h_.session));
      if (!opt_.cache.empty()) check(pc_session_set_cache_dir(h_.session, opt_.cache.c_str()));
      code = dispatch(operation);
    } catch (const CliFailure& failure) {
      code = exitFor(failure.status);
      report_["status"] = pc_status_name(failure.status);
      report_["error"] = Json{{"code", pc_status_name(failure.status)}, {"message", failure.message}};
      std::cerr << "powerclose " << operation << ": " << failure.message << '\n';
    }
    if (opt_.timings) {
      const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      report_["timings"] = Json{{"total_ms", elapsed}};
    }
    if (!emit()) return kUsage;
    return code;
  }

 private:
  int dispatch(const std::string& op) {
    if (op == "search-incomplete") return searchIncomplete();
    loadFamily(op != "closure" && op != "is-complete");
    const auto s = pc_family_size(h_.family);
    char* out = nullptr;
    auto& params = report_["parameters"];

    if (op == "closure") return finish(pc_closure(h_.session, h_.family, &out), out);
    if (op == "is-complete") return finish(pc_is_complete(h_.session, h_.family, &out), out);
    if (op == "colength") return finish(pc_colength(h_.session, h_.family, &out), out);
    if (op == "certify") return finish(pc_certify(h_.session, h_.family, &out), out);
    if (op == "hilbert") {
      const auto [lo, hi] = parseRange(opt_.grid, s, "--grid");
      params = Json{{"lo", lo}, {"hi", hi}};
      return finish(pc_hilbert(h_.session, h_.family, lo.data(), hi.data(), &out), out);
    }
    if (op == "poly-fit") {
      const auto window = parseIndex(opt_.window, s, "--window");
      params = Json{{"window", window}};
      return finish(pc_poly_fit(h_.session, h_.family, window.data(), &out), out);
    }
    if (op == "mixed-mult") {
      std::optional<std::vector<int64_t>> alpha;
      if (!opt_.alpha.empty()) alpha = parseIndex(opt_.alpha, s, "--alpha");
      params = Json{{"alpha", alpha ? Json(*alpha) : Json(nullptr)}, {"override_hyry", opt_.overrideGate}};
      return finish(pc_mixed_mult(h_.session, h_.family, alpha ? alpha->data() : nullptr, opt_.overrideGate, &out), out);
    }
    if (op == "check-p-eq-h") {
      const auto bound = parseIndex(opt_.bound, s, "--bound");
      const auto window = parseIndex(opt_.window.empty() ? "1" : opt_.window, s, "--window");
      params = Json{{"window", window}, {"bound", bound}};
      return finish(pc_check_p_eq_h(h_.session, h_.family, window.data(), bound.data(), &out), out);
    }
    if (op == "audit") {
      const auto bound = parseScalar(opt_.bound, "--bound");
      params = Json{{"bound", bound}};
      const int code = finish(pc_audit(h_.session, h_.family, bound, &out), out);
      // a violation means the certifier was wrong: report it as an invariant failure
      return code == kNegative ? kInternal : code;
    }
    if (op == "jr verify") {
      loadCandidate();
      const auto [lo, hi] = parseRange(opt_.grid, s, "--grid");
      params = Json{{"candidate", candidateText_}, {"lo", lo}, {"hi", hi}};
      return finish(pc_jr_verify(h_.session, h_.family, h_.candidate, lo.data(), hi.data(), &out), out);
    }
    if (op == "jr number") {
      loadCandidate();
      const auto bound = parseScalar(opt_.bound, "--bound");
      params = Json{{"candidate", candidateText_}, {"bound", bound}};
      return finish(pc_jr_number(h_.session, h_.family, h_.candidate, bound, &out), out);
    }
    if (op == "jr search") {
      const auto type = parseIndex(opt_.type, s, "--type");
      const auto grid = parseIndex(opt_.grid, s, "--grid");
      params = Json{{"type", type}, {"grid", grid}, {"coeff_bound", opt_.coeffBound}, {"max_draws", opt_.maxDraws}};
      return finish(pc_jr_search(h_.session, h_.family, type.data(), grid.data(), opt_.seed, opt_.coeffBound, opt_.maxDraws, &out), out);
    }
    throw CliFailure{PC_ERR_INVALID_ARGUMENT, "unknown operation " + op};
  }

  int searchIncomplete() {
    const auto bound = parseScalar(opt_.bound, "--bound");
    report_["parameters"] = Json{{"d", opt_.dimension}, {"ideals", opt_.ideals}, {"bound", bound}, {"budget", opt_.budget}};
    setDigest(report_["parameters"].dump());
    char* out = nullptr;
    return finish(pc_search_incomplete(h_.session, opt_.dimension, opt_.ideals, bound, opt_.seed, opt_.budget, &out), out);
  }

  static int64_t parseScalar(const std::string& text, const std::string& flag) {
    return parseIndex(text, 1, flag).front();
  }

  void loadFamily(bool requirePrimary) {
    const std::string text = readInput(opt_.family);
    char* warnings = nullptr;
    check(pc_family_parse(text.c_str(), requirePrimary, &h_.family, &warnings));
    report_["warnings"] = Json::parse(takeString(warnings));
    char* canonical = nullptr;
    check(pc_family_serialize(h_.family, &canonical));
    familyText_ = takeString(canonical);
    setDigest(familyText_);
  }

  void loadCandidate() {
    if (opt_.candidate.empty()) throw CliFailure{PC_ERR_INVALID_ARGUMENT, "--candidate is required"};
    const auto first = opt_.candidate.find_first_not_of(" \t");
    const bool inline_ = first != std::string::npos && opt_.candidate[first] == '{';
    const std::string text = inline_ ? opt_.candidate : readInput(opt_.candidate);
    check(pc_candidate_parse(h_.family, text.c_str(), &h_.candidate));
    char* canonical = nullptr;
    check(pc_candidate_serialize(h_.candidate, &canonical));
    candidateText_ = takeString(canonical);
    setDigest(familyText_ + "\n--\n" + candidateText_);
  }

  void setDigest(const std::string& text) {
    char* digest = nullptr;
    check(pc_digest(text.data(), text.size(), &digest));
    report_["input_digest"] = takeString(digest);
  }

  // out by reference: it is filled by the call in the other argument
  int finish(pc_status status, char*& out) {
    const std::string text = takeString(out);
    if (text.empty()) throw CliFailure{status == PC_OK ? PC_ERR_INTERNAL : status, pc_last_error_message()};
    Json result = Json::parse(text);
    const bool positive = result.value("positive", false);
    report_["status"] = positive ? "positive" : "negative";
    report_["result"] = std::move(result);
    if (status != PC_OK) report_["error"] = Json{{"code", pc_status_name(status)}, {"message", pc_last_error_message()}};
    return positive ? kPositive : kNegative;
  }

  bool emit() const {
    std::ostringstream body;
    if (opt_.format == "text") {
      renderObject(body, report_, "");
    } else {
      writeJson(body, report_, 0);
      body << '\n';
    }
    if (opt_.out.empty()) {
      std::cout << body.str();
      return static_cast<bool>(std::cout.flush());
    }
    std::ofstream file(opt_.out, std::ios::binary);
    file << body.str();
    if (!file.flush()) {
      std::cerr << "powerclose: cannot write " << opt_.out << '\n';
      return false;
    }
    return true;
  }

  const Options& opt_;
  Handles h_;
  Json report_;
  std::string familyText_;
  std::string candidateText_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integral closures, mixed multiplicities and joint reductions of monomial ideal families"};
  app.set_version_flag("--version", pc_version());
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  if (const char* dir = std::getenv("POWERCLOSE_CACHE_DIR")) opt.cache = dir;
  app.add_option("--out", opt.out, "Write the report to PATH instead of standard output");
  app.add_option("--cache", opt.cache, "Result cache directory (default $POWERCLOSE_CACHE_DIR)");
  app.add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", opt.seed, "Seed for every randomized step");
  app.add_flag("--timings", opt.timings, "Add wall-clock timings to the report");

  std::string operation;
  auto command = [&](CLI::App* parent, const std::string& name, const std::string& description, bool family = true) {
    auto* sub = parent->add_subcommand(name, description);
    sub->fallthrough();
    if (family) sub->add_option("family", opt.family, "Family file, '-' for standard input")->required();
    sub->callback([&operation, sub, parent] {
      operation = parent->get_parent() ? parent->get_name() + " " + sub->get_name() : sub->get_name();
    });
    return sub;
  };

  command(&app, "closure", "Integral closure of every ideal");
  command(&app, "is-complete", "Whether every ideal is integrally closed");
  command(&app, "colength", "Colength of every ideal");
  command(&app, "hilbert", "Multigraded Hilbert function on a box")->add_option("--grid", opt.grid, "LO..HI")->required();
  command(&app, "poly-fit", "Fit the Hilbert polynomial")->add_option("--window", opt.window, "Fit window W")->required();
  auto* mixed = command(&app, "mixed-mult", "Mixed multiplicities by the difference formula");
  mixed->add_option("--alpha", opt.alpha, "Single alpha with |alpha| = d (default: all)");
  mixed->add_flag("--override-hyry", opt.overrideGate, "Skip the validity gate");
  auto* peq = command(&app, "check-p-eq-h", "Compare the fitted polynomial with H on [0, B]");
  peq->add_option("--bound", opt.bound, "Upper corner B")->required();
  peq->add_option("--window", opt.window, "Fit window (default 1)");

  auto* jr = app.add_subcommand("jr", "Joint reductions");
  jr->require_subcommand(1);
  jr->fallthrough();
  auto* verify = command(jr, "verify", "Check the joint reduction identity on a grid");
  verify->add_option("--candidate", opt.candidate, "Candidate FILE or inline {a, b; c}")->required();
  verify->add_option("--grid", opt.grid, "LO..HI")->required();
  auto* number = command(jr, "number", "Smallest n whose shifted identity holds on every tested offset");
  number->add_option("--candidate", opt.candidate, "Candidate FILE or inline {a, b; c}")->required();
  number->add_option("--bound", opt.bound, "Largest n and offset tried")->required();
  auto* search = command(jr, "search", "Random search for a joint reduction of a type");
  search->add_option("--type", opt.type, "Type q with |q| = d")->required();
  search->add_option("--grid", opt.grid, "Upper corner of the verification grid")->required();
  search->add_option("--coeff-bound", opt.coeffBound, "Largest coefficient magnitude");
  search->add_option("--max-draws", opt.maxDraws, "Draw budget");

  command(&app, "certify", "Certify completeness of all products");
  command(&app, "audit", "Brute-force audit of a certificate")->add_option("--bound", opt.bound, "Largest |n|")->required();
  auto* incomplete = command(&app, "search-incomplete", "Random search for a family that fails certification", false);
  incomplete->add_option("--d", opt.dimension, "Number of variables")->required();
  incomplete->add_option("--ideals", opt.ideals, "Number of ideals");
  incomplete->add_option("--bound", opt.bound, "Exponent bound E")->required();
  incomplete->add_option("--budget", opt.budget, "Maximum number of draws");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }
  return Runner(opt).run(operation);
}
