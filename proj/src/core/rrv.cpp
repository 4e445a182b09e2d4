#include "rrv.hpp"

#include "newton.hpp"
#include "sampling.hpp"

namespace powerclose {

namespace {

constexpr const char* kBasis =
    "monomial family: the multi-Rees algebra of the closure filtration is Cohen-Macaulay, "
    "so completeness for 1 <= |n| <= d-1 implies completeness for all |n| >= 1";

std::optional<CompletenessWitness> incompleteness(const ProductClosure& closures, const MultiIndex& n) {
  const MonomialIdeal product = multiPower(closures.family(), n);
  const MonomialIdeal closure = closures.closure(n);
  if (closure == product) return std::nullopt;
  for (const auto& g : closure.generators()) {
    if (!product.contains(g)) return CompletenessWitness{n, g};
  }
  fail(ErrorCode::kInternal, "closure differs from product but every closure generator is in the product");
}

}  // namespace

std::string_view verdictName(CertificateVerdict verdict) noexcept {
  return verdict == CertificateVerdict::kCertifiedAll ? "CERTIFIED_ALL" : "FAILED";
}

bool witnessHolds(const IdealFamily& family, const CompletenessWitness& witness) {
  const MonomialIdeal product = multiPower(family, witness.n);
  if (product.contains(witness.monomial)) return false;
  const auto certificate = newtonMember(product, witness.monomial);
  return certificate.verdict && certificate.verify(product, witness.monomial);
}

CompletenessCertificate certifyRRV(const IdealFamily& family) {
  family.validate();
  CompletenessCertificate cert{family, CertificateVerdict::kCertifiedAll, {}, {}, kBasis};
  const auto d = static_cast<Exponent>(family.dim());
  if (d == 1) {
    cert.basis = "d = 1: the ring is a principal ideal domain, so every ideal is complete";
    return cert;
  }
  const ProductClosure closures(family);
  for (Exponent total = 1; total <= d - 1; ++total) {
    for (const auto& n : shell(family.size(), total)) {
      auto witness = incompleteness(closures, n);
      cert.checked.emplace_back(n, !witness);
      if (!witness) continue;
      if (!witnessHolds(family, *witness)) fail(ErrorCode::kInternal, "completeness witness failed to re-verify at n = " + n.str());
      cert.failureWitnesses.push_back(std::move(*witness));
    }
    if (!cert.failureWitnesses.empty()) {
      cert.verdict = CertificateVerdict::kFailed;
      break;
    }
  }
  return cert;
}

AuditReport auditRRV(const CompletenessCertificate& certificate, Exponent bound) {
  if (certificate.verdict != CertificateVerdict::kCertifiedAll) fail(ErrorCode::kInvalidArgument, "audit needs a CERTIFIED_ALL certificate");
  AuditReport report;
  report.bound = bound;
  const auto& family = certificate.family;
  const ProductClosure closures(family);
  for (Exponent total = std::max<Exponent>(1, static_cast<Exponent>(family.dim())); total <= bound; ++total) {
    for (const auto& n : shell(family.size(), total)) {
      ++report.checked;
      if (auto witness = incompleteness(closures, n)) report.violations.push_back(std::move(*witness));
    }
  }
  return report;
}

std::optional<IncompleteFamily> searchIncomplete(std::size_t d, std::size_t s, Exponent exponentBound, std::uint64_t seed, std::size_t budget) {
  if (d < 3) fail(ErrorCode::kInvalidArgument, "incomplete products with complete factors need d >= 3");
  if (s < 1) fail(ErrorCode::kInvalidArgument, "family needs at least one ideal");
  if (exponentBound < 1) fail(ErrorCode::kInvalidArgument, "exponent bound must be positive");

  IdealSampler sampler(seed);
  for (std::size_t draw = 1; draw <= budget; ++draw) {
    IdealFamily family;
    for (std::size_t i = 0; i < s; ++i) family.ideals.push_back(sampler.complete(d, exponentBound));
    const ProductClosure closures(family);
    for (Exponent total = 2; total <= static_cast<Exponent>(d) - 1; ++total) {
      for (const auto& n : shell(s, total)) {
        if (auto witness = incompleteness(closures, n)) return IncompleteFamily{std::move(family), std::move(*witness), draw};
      }
    }
  }
  return std::nullopt;
}

}  // namespace powerclose
