#include "powerclose/powerclose.h"

#include <cstring>
#include <memory>
#include <optional>
#include <string>

#include <json.hpp>

#include "cache.hpp"
#include "family_io.hpp"
#include "hilbert.hpp"
#include "joint_reduction.hpp"
#include "newton.hpp"
#include "rrv.hpp"

using Json = nlohmann::ordered_json;
using namespace powerclose;

struct pc_session {
  std::optional<io::ResultCache> cache;
};

struct pc_family {
  io::FamilyDocument doc;
  mutable std::shared_ptr<Filtration> filtration;

  const Filtration& filtrationRef() const {
    if (!filtration) filtration = std::make_shared<Filtration>(doc.family);
    return *filtration;
  }
};

struct pc_candidate {
  JointReductionCandidate candidate;
  std::string text;
};

namespace {

thread_local std::string lastError;

// Thrown inside an operation to return a non-OK status together with a partial result.
struct PartialResult {
  pc_status status;
  Json result;
  std::string message;
};

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class Fn>
pc_status guarded(char** out, Fn&& fn) {
  if (out) *out = nullptr;
  try {
    Json result = fn();
    if (out) *out = duplicate(result.dump());
    lastError.clear();
    return PC_OK;
  } catch (PartialResult& partial) {
    if (out) *out = duplicate(partial.result.dump());
    lastError = partial.message;
    return partial.status;
  } catch (const Error& e) {
    lastError = e.what();
    return static_cast<pc_status>(e.code());
  } catch (const std::bad_alloc&) {
    lastError = "out of memory";
    return PC_ERR_INTERNAL;
  } catch (const std::exception& e) {
    lastError = e.what();
    return PC_ERR_INTERNAL;
  }
}

template <class Fn>
pc_status guardedVoid(Fn&& fn) {
  return guarded(nullptr, [&] {
    fn();
    return Json();
  });
}

void requireArg(const void* p, const char* what) {
  if (!p) fail(ErrorCode::kInvalidArgument, std::string(what) + " must not be NULL");
}

MultiIndex readIndex(const int64_t* data, std::size_t size, const char* what) {
  requireArg(data, what);
  return MultiIndex(std::vector<Exponent>(data, data + size));
}

Json toJson(const MultiIndex& n) { return Json(std::vector<Exponent>(n.begin(), n.end())); }
Json toJson(const ExponentVector& e) { return Json(std::vector<Exponent>(e.begin(), e.end())); }

Json toJson(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

Json monomialJson(const ExponentVector& e, const io::FamilyDocument& doc) {
  return Json{{"exponent", toJson(e)}, {"monomial", io::formatMonomial(e, doc.variables)}};
}

Json generatorsJson(const MonomialIdeal& ideal, const io::FamilyDocument& doc) {
  Json out = Json::array();
  for (const auto& g : ideal.generators()) out.push_back(io::formatMonomial(g, doc.variables));
  return out;
}

std::string tupleText(const MonomialIdeal& ideal) {
  std::string out;
  for (const auto& g : ideal.generators()) out += g.str();
  return out;
}

MonomialIdeal readTuples(const std::string& text, std::size_t dim) {
  // inverse of tupleText: "(a,b)(c,d)..."
  std::vector<ExponentVector> gens;
  std::size_t pos = 0;
  while ((pos = text.find('(', pos)) != std::string::npos) {
    const auto close = text.find(')', pos);
    if (close == std::string::npos) fail(ErrorCode::kIoError, "corrupt cache entry");
    std::vector<Exponent> e;
    std::size_t start = pos + 1;
    while (start < close) {
      auto comma = text.find(',', start);
      if (comma == std::string::npos || comma > close) comma = close;
      e.push_back(std::stoll(text.substr(start, comma - start)));
      start = comma + 1;
    }
    if (e.size() != dim) fail(ErrorCode::kIoError, "corrupt cache entry");
    gens.emplace_back(std::move(e));
    pos = close + 1;
  }
  return MonomialIdeal::fromGenerators(std::move(gens));
}

MonomialIdeal cachedClosure(pc_session* session, const MonomialIdeal& ideal) {
  const std::string key = "closure/1 " + tupleText(ideal);
  if (session && session->cache) {
    if (auto hit = session->cache->load(key)) return readTuples(*hit, ideal.dim());
  }
  auto closure = integralClosure(ideal);
  if (session && session->cache) session->cache->store(key, tupleText(closure));
  return closure;
}

std::uint64_t cachedColength(pc_session* session, const MonomialIdeal& ideal) {
  const std::string key = "colength/1 " + tupleText(ideal);
  if (session && session->cache) {
    if (auto hit = session->cache->load(key)) return std::stoull(*hit);
  }
  const auto value = colength(ideal);
  if (session && session->cache) session->cache->store(key, std::to_string(value));
  return value;
}

Json closureResult(pc_session* session, const pc_family* family) {
  const auto& doc = family->doc;
  Json ideals = Json::array();
  bool allComplete = true;
  for (std::size_t i = 0; i < doc.family.size(); ++i) {
    const auto& ideal = doc.family.ideals[i];
    const auto closure = cachedClosure(session, ideal);
    const bool complete = closure == ideal;
    allComplete = allComplete && complete;
    Json added = Json::array();
    for (const auto& g : closure.generators()) {
      if (!ideal.contains(g)) added.push_back(monomialJson(g, doc));
    }
    ideals.push_back(Json{{"name", doc.names[i]},
                          {"generators", generatorsJson(ideal, doc)},
                          {"closure", generatorsJson(closure, doc)},
                          {"complete", complete},
                          {"new_generators", added}});
  }
  return Json{{"ideals", ideals}, {"all_complete", allComplete}};
}

Json failureJson(const GridFailure& f, const io::FamilyDocument& doc) {
  return Json{{"n", toJson(f.n)}, {"witness", monomialJson(f.witness, doc)}};
}

Json candidateJson(const JointReductionCandidate& c, const io::FamilyDocument& doc) {
  Json elements = Json::object();
  for (std::size_t i = 0; i < c.elements.size(); ++i) {
    if (c.elements[i].empty()) continue;
    Json list = Json::array();
    for (const auto& p : c.elements[i]) list.push_back(io::formatPolynomial(p, doc.variables));
    elements[doc.names[i]] = list;
  }
  return Json{{"type", toJson(c.type)}, {"elements", elements}};
}

Json gridReportJson(const JointReductionReport& report, const io::FamilyDocument& doc) {
  Json verified = Json::array();
  for (const auto& n : report.verified) verified.push_back(toJson(n));
  Json failures = Json::array();
  for (const auto& f : report.failures) failures.push_back(failureJson(f, doc));
  Json claimed = Json::array();
  for (const auto& m : report.claimedReductionVectors) claimed.push_back(toJson(m));
  auto first = report.claimedReductionVector();
  return Json{{"lo", toJson(report.lo)},
              {"hi", toJson(report.hi)},
              {"verified", verified},
              {"failures", failures},
              {"claimed_reduction_vector", first ? toJson(*first) : Json(nullptr)},
              {"claimed_reduction_vectors", claimed},
              {"claim_basis", "heuristic: summarizes the tested box only; the identity for all n >= m is not certified"}};
}

Json witnessJson(const CompletenessWitness& w, const io::FamilyDocument& doc) {
  return Json{{"n", toJson(w.n)}, {"exponent", toJson(w.monomial)}, {"monomial", io::formatMonomial(w.monomial, doc.variables)}};
}

Json fitJson(const PolynomialFit& fit) {
  Json coefficients = Json::array();
  for (const auto& [alpha, e] : fit.polynomial.coefficients()) coefficients.push_back(Json{{"alpha", toJson(alpha)}, {"e", toJson(e)}});
  return Json{{"coefficients", coefficients},
              {"interpolation_points", fit.interpolationPoints.size()},
              {"validation_points", fit.validationPoints.size()}};
}

PolynomialFit fitOrReport(const Filtration& filtration, const MultiIndex& window) {
  try {
    return fitHilbertPolynomial(filtration, window);
  } catch (const FitValidationError& e) {
    Json result{{"positive", false}, {"window", toJson(window)}, {"error", e.what()}};
    if (e.point()) result["point"] = toJson(*e.point());
    result["fitted"] = e.fitted().get_str();
    result["actual"] = toJson(e.actual());
    throw PartialResult{PC_ERR_VALIDATION_FAILURE, std::move(result), e.what()};
  }
}

}  // namespace

extern "C" {

const char* pc_version(void) { return POWERCLOSE_VERSION; }

const char* pc_status_name(pc_status status) {
  if (status == PC_OK) return "Ok";
  return errorCodeName(static_cast<ErrorCode>(status)).data();
}

const char* pc_last_error_message(void) { return lastError.c_str(); }

void pc_string_free(char* s) { std::free(s); }

pc_status pc_digest(const char* data, size_t size, char** out) {
  if (out) *out = nullptr;
  return guardedVoid([&] {
    requireArg(out, "out");
    if (size) requireArg(data, "data");
    *out = duplicate("sha256:" + io::sha256Hex(std::string_view(data ? data : "", size)));
  });
}

pc_status pc_session_create(pc_session** out) {
  return guardedVoid([&] {
    requireArg(out, "out");
    *out = new pc_session();
    if (auto dir = io::cacheDirectoryFromEnvironment()) (*out)->cache.emplace(*dir);
  });
}

void pc_session_destroy(pc_session* session) { delete session; }

pc_status pc_session_set_cache_dir(pc_session* session, const char* directory) {
  return guardedVoid([&] {
    requireArg(session, "session");
    if (!directory || !*directory) {
      session->cache.reset();
    } else {
      session->cache.emplace(directory);
    }
  });
}

pc_status pc_family_parse(const char* text, int require_m_primary, pc_family** out, char** warnings) {
  if (warnings) *warnings = nullptr;
  return guardedVoid([&] {
    requireArg(text, "text");
    requireArg(out, "out");
    *out = nullptr;
    auto family = std::make_unique<pc_family>();
    family->doc = io::parseFamily(text, require_m_primary != 0);
    if (warnings) *warnings = duplicate(Json(family->doc.warnings).dump());
    *out = family.release();
  });
}

void pc_family_destroy(pc_family* family) { delete family; }

pc_status pc_family_serialize(const pc_family* family, char** out) {
  if (out) *out = nullptr;
  return guardedVoid([&] {
    requireArg(family, "family");
    requireArg(out, "out");
    *out = duplicate(io::serializeFamily(family->doc));
  });
}

pc_status pc_family_digest(const pc_family* family, char** out) {
  if (out) *out = nullptr;
  return guardedVoid([&] {
    requireArg(family, "family");
    requireArg(out, "out");
    *out = duplicate(io::inputDigest(family->doc));
  });
}

pc_status pc_family_describe(const pc_family* family, char** out) {
  return guarded(out, [&] {
    requireArg(family, "family");
    const auto& doc = family->doc;
    Json ideals = Json::array();
    for (std::size_t i = 0; i < doc.family.size(); ++i) {
      ideals.push_back(Json{{"name", doc.names[i]}, {"generators", generatorsJson(doc.family.ideals[i], doc)}});
    }
    return Json{{"dimension", doc.family.dim()},
                {"variables", doc.variables},
                {"filtration", std::string(filtrationName(doc.family.filtration))},
                {"ideals", ideals}};
  });
}

size_t pc_family_dimension(const pc_family* family) { return family ? family->doc.family.dim() : 0; }
size_t pc_family_size(const pc_family* family) { return family ? family->doc.family.size() : 0; }

pc_status pc_family_set_filtration(pc_family* family, pc_filtration filtration) {
  return guardedVoid([&] {
    requireArg(family, "family");
    if (filtration != PC_FILTRATION_ADIC && filtration != PC_FILTRATION_CLOSURE) fail(ErrorCode::kInvalidArgument, "unknown filtration");
    family->doc.family.filtration = filtration == PC_FILTRATION_ADIC ? FiltrationKind::kAdic : FiltrationKind::kClosure;
    family->filtration.reset();
  });
}

pc_status pc_candidate_parse(const pc_family* family, const char* text, pc_candidate** out) {
  return guardedVoid([&] {
    requireArg(family, "family");
    requireArg(text, "text");
    requireArg(out, "out");
    *out = nullptr;
    auto candidate = std::make_unique<pc_candidate>();
    candidate->candidate = io::parseCandidate(text, family->doc);
    candidate->text = io::serializeCandidate(candidate->candidate, family->doc);
    *out = candidate.release();
  });
}

void pc_candidate_destroy(pc_candidate* candidate) { delete candidate; }

pc_status pc_candidate_serialize(const pc_candidate* candidate, char** out) {
  if (out) *out = nullptr;
  return guardedVoid([&] {
    requireArg(candidate, "candidate");
    requireArg(out, "out");
    *out = duplicate(candidate->text);
  });
}

pc_status pc_closure(pc_session* session, const pc_family* family, char** out) {
  return guarded(out, [&] {
    requireArg(family, "family");
    Json result = closureResult(session, family);
    result["positive"] = true;
    return result;
  });
}

pc_status pc_is_complete(pc_session* session, const pc_family* family, char** out) {
  return guarded(out, [&] {
    requireArg(family, "family");
    Json result = closureResult(session, family);
    result["positive"] = result["all_complete"];
    return result;
  });
}

pc_status pc_colength(pc_session* session, const pc_family* family, char** out) {
  return guarded(out, [&] {
    requireArg(family, "family");
    const auto& doc = family->doc;
    Json ideals = Json::array();
    for (std::size_t i = 0; i < doc.family.size(); ++i) {
      ideals.push_back(Json{{"name", doc.names[i]}, {"colength", cachedColength(session, doc.family.ideals[i])}});
    }
    return Json{{"ideals", ideals}, {"positive", true}};
  });
}

pc_status pc_hilbert(pc_session*, const pc_family* family, const int64_t* lo, const int64_t* hi, char** out) {
  return guarded(out, [&] {
    requireArg(family, "family");
    const auto s = family->doc.family.size();
    const MultiIndex low = readIndex(lo, s, "lo");
    const MultiIndex high = readIndex(hi, s, "hi");
    if (!low.nonnegative()) fail(ErrorCode::kNegativeExponent, "grid must be nonnegative");
    if (!high.dominates(low)) fail(ErrorCode::kInvalidArgument, "grid needs lo <= hi");
    const auto& F = family->filtrationRef();
    Json values = Json::array();
    for (const auto& n : boxPoints(low, high)) values.push_back(Json{{"n", toJson(n)}, {"h", hilbertFunction(F, n)}});
    return Json{{"filtration", std::string(filtrationName(F.kind()))}, {"lo", toJson(low)}, {"hi", toJson(high)}, {"values", values}, {"positive", true}};
  });
}

pc_status pc_poly_fit(pc_session*, const pc_family* family, const int64_t* window, char** out) {
  return guarded(out, [&] {
    requireArg(family, "family");
    const MultiIndex w = readIndex(window, family->doc.family.size(), "window");
    const auto fit = fitOrReport(family->filtrationRef(), w);
    Json result{{"filtration", std::string(filtrationName(family->doc.family.filtration))}, {"window", toJson(w)}};
    result.update(fitJson(fit));
    result["positive"] = true;
    return result;
  });
}

pc_status pc_mixed_mult(pc_session*, const pc_family* family, const int64_t* alpha, int override_gate, char** out) {
  return guarded(out, [&] {
    requireArg(family, "family");
    const auto& F = family->filtrationRef();
    Json values = Json::array();
    if (alpha) {
      const MultiIndex a = readIndex(alpha, family->doc.family.size(), "alpha");
      values.push_back(Json{{"alpha", toJson(a)}, {"e", toJson(mixedMultiplicity(F, a, override_gate != 0))}});
    } else {
      for (const auto& [a, e] : mixedMultiplicities(F, override_gate != 0).values) values.push_back(Json{{"alpha", toJson(a)}, {"e", toJson(e)}});
    }
    return Json{{"method", "difference_formula"},
                {"filtration", std::string(filtrationName(F.kind()))},
                {"override_gate", override_gate != 0},
                {"values", values},
                {"positive", true}};
  });
}

pc_status pc_check_p_eq_h(pc_session*, const pc_family* family, const int64_t* window, const int64_t* bound, char** out) {
  return guarded(out, [&] {
    requireArg(family, "family");
    const auto s = family->doc.family.size();
    const MultiIndex w = readIndex(window, s, "window");
    const MultiIndex b = readIndex(bound, s, "bound");
    const auto& F = family->filtrationRef();
    const auto fit = fitOrReport(F, w);
    const auto report = checkPEqualsH(F, fit.polynomial, b);
    Json mismatches = Json::array();
    for (const auto& m : report.mismatches) {
      mismatches.push_back(Json{{"n", toJson(m.n)}, {"polynomial", toJson(m.polynomial)}, {"hilbert", m.hilbert}});
    }
    return Json{{"filtration", std::string(filtrationName(F.kind()))},
                {"window", toJson(w)},
                {"bound", toJson(b)},
                {"fit", fitJson(fit)},
                {"checked", report.checked},
                {"mismatches", mismatches},
                {"positive", report.mismatches.empty()}};
  });
}

pc_status pc_jr_verify(pc_session*, const pc_family* family, const pc_candidate* candidate, const int64_t* lo, const int64_t* hi, char** out) {
  return guarded(out, [&] {
    requireArg(family, "family");
    requireArg(candidate, "candidate");
    const auto s = family->doc.family.size();
    const auto report = verifyJointReductionGrid(family->filtrationRef(), candidate->candidate, readIndex(lo, s, "lo"), readIndex(hi, s, "hi"));
    Json result{{"candidate", candidateJson(candidate->candidate, family->doc)}};
    result.update(gridReportJson(report, family->doc));
    result["positive"] = report.failures.empty();
    return result;
  });
}

pc_status pc_jr_number(pc_session*, const pc_family* family, const pc_candidate* candidate, int64_t bound, char** out) {
  return guarded(out, [&] {
    requireArg(family, "family");
    requireArg(candidate, "candidate");
    const auto report = jrNumber(family->filtrationRef(), candidate->candidate, bound);
    Json attempts = Json::array();
    for (const auto& a : report.attempts) {
      attempts.push_back(Json{{"n", a.n},
                              {"passed", a.passed},
                              {"tested", a.tested},
                              {"first_failure", a.firstFailure ? failureJson(*a.firstFailure, family->doc) : Json(nullptr)}});
    }
    Json result{{"candidate", candidateJson(candidate->candidate, family->doc)},
                {"grid_bound", bound},
                {"value", report.value ? Json(*report.value) : Json(nullptr)},
                {"attempts", attempts},
                {"claim_basis", "offsets tested in [0, grid_bound]^s only"},
                {"positive", report.value.has_value()}};
    if (!report.value) {
      const auto* best = report.bestAttempt();
      result["best_attempt"] = best ? Json(best->n) : Json(nullptr);
      throw PartialResult{PC_ERR_NONE_FOUND, std::move(result), "no n <= " + std::to_string(bound) + " passes every tested offset"};
    }
    return result;
  });
}

pc_status pc_jr_search(pc_session*, const pc_family* family, const int64_t* type, const int64_t* grid, uint64_t seed, int64_t coeff_bound,
                       uint64_t max_draws, char** out) {
  return guarded(out, [&] {
    requireArg(family, "family");
    const auto s = family->doc.family.size();
    JointReductionSearchOptions options;
    options.seed = seed;
    options.coeffBound = coeff_bound;
    options.grid = readIndex(grid, s, "grid");
    options.maxDraws = static_cast<std::size_t>(max_draws);
    const MultiIndex q = readIndex(type, s, "type");
    Json result{{"type", toJson(q)}, {"grid", toJson(options.grid)}, {"seed", seed}, {"coeff_bound", coeff_bound}, {"max_draws", max_draws}};
    try {
      const auto found = searchJointReduction(family->filtrationRef(), q, options);
      result["draws"] = found.draws;
      result["candidate"] = candidateJson(found.candidate, family->doc);
      result["candidate_text"] = io::serializeCandidate(found.candidate, family->doc);
      result["grid_report"] = gridReportJson(found.gridReport, family->doc);
      result["positive"] = true;
      return result;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kSearchExhausted) throw;
      result["draws"] = max_draws;
      result["positive"] = false;
      throw PartialResult{PC_ERR_SEARCH_EXHAUSTED, std::move(result), e.what()};
    }
  });
}

pc_status pc_certify(pc_session*, const pc_family* family, char** out) {
  return guarded(out, [&] {
    requireArg(family, "family");
    const auto cert = certifyRRV(family->doc.family);
    Json checked = Json::array();
    for (const auto& [n, ok] : cert.checked) checked.push_back(Json{{"n", toJson(n)}, {"complete", ok}});
    Json witnesses = Json::array();
    for (const auto& w : cert.failureWitnesses) witnesses.push_back(witnessJson(w, family->doc));
    return Json{{"verdict", std::string(verdictName(cert.verdict))},
                {"basis", cert.basis},
                {"checked", checked},
                {"failure_witnesses", witnesses},
                {"positive", cert.verdict == CertificateVerdict::kCertifiedAll}};
  });
}

pc_status pc_audit(pc_session*, const pc_family* family, int64_t bound, char** out) {
  return guarded(out, [&] {
    requireArg(family, "family");
    const auto cert = certifyRRV(family->doc.family);
    if (cert.verdict != CertificateVerdict::kCertifiedAll) fail(ErrorCode::kInvalidArgument, "audit needs a family that certifies; certify reports FAILED");
    const auto report = auditRRV(cert, bound);
    Json violations = Json::array();
    for (const auto& w : report.violations) violations.push_back(witnessJson(w, family->doc));
    return Json{{"bound", bound},
                {"checked", report.checked},
                {"violations", violations},
                {"soundness_alarm", !report.violations.empty()},
                {"positive", report.violations.empty()}};
  });
}

pc_status pc_search_incomplete(pc_session*, size_t dimension, size_t ideals, int64_t exponent_bound, uint64_t seed, uint64_t budget, char** out) {
  return guarded(out, [&] {
    const auto found = searchIncomplete(dimension, ideals, exponent_bound, seed, static_cast<std::size_t>(budget));
    Json result{{"d", dimension}, {"ideals", ideals}, {"exponent_bound", exponent_bound}, {"seed", seed}, {"budget", budget}};
    result["found"] = found.has_value();
    if (found) {
      const auto doc = io::documentFor(found->family);
      result["draws"] = found->draws;
      result["family"] = io::serializeFamily(doc);
      result["witness"] = witnessJson(found->witness, doc);
    }
    result["positive"] = found.has_value();
    return result;
  });
}

pc_status pc_check_witness(const pc_family* family, const int64_t* n, const int64_t* monomial, int* in_closure, int* in_product) {
  return guardedVoid([&] {
    requireArg(family, "family");
    requireArg(in_closure, "in_closure");
    requireArg(in_product, "in_product");
    const auto& doc = family->doc;
    const MultiIndex index = readIndex(n, doc.family.size(), "n");
    requireArg(monomial, "monomial");
    const ExponentVector a(std::vector<Exponent>(monomial, monomial + doc.family.dim()));
    const auto power = multiPower(doc.family, index);
    const auto cert = newtonMember(power, a);
    *in_closure = cert.verdict && cert.verify(power, a);
    *in_product = power.contains(a);
  });
}

}  // extern "C"
