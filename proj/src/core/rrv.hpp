#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monomial_ideal.hpp"

namespace powerclose {

enum class CertificateVerdict { kCertifiedAll, kFailed };

std::string_view verdictName(CertificateVerdict verdict) noexcept;

/// x^monomial lies in closure(I^n) but not in I^n.
struct CompletenessWitness {
  MultiIndex n;
  ExponentVector monomial;

  bool operator==(const CompletenessWitness&) const = default;
};

/// Completeness of every I^n, |n| >= 1, decided from the shells 1 <= |n| <= d-1.
/// The claim is made only for monomial families, where the Rees-algebra
/// hypothesis behind it always holds; `basis` records that provenance.
struct CompletenessCertificate {
  IdealFamily family;
  CertificateVerdict verdict = CertificateVerdict::kFailed;
  std::vector<std::pair<MultiIndex, bool>> checked;
  std::vector<CompletenessWitness> failureWitnesses;
  std::string basis;
};

/// Shells run in increasing |n|; a failing shell is finished before stopping.
CompletenessCertificate certifyRRV(const IdealFamily& family);

/// Re-check one witness from scratch: in the closure by an LP certificate, not in the product.
bool witnessHolds(const IdealFamily& family, const CompletenessWitness& witness);

struct AuditReport {
  Exponent bound = 0;
  std::size_t checked = 0;
  std::vector<CompletenessWitness> violations;
};

/// Brute-force completeness of I^n for d <= |n| <= bound. Needs a CERTIFIED_ALL certificate.
AuditReport auditRRV(const CompletenessCertificate& certificate, Exponent bound);

struct IncompleteFamily {
  IdealFamily family;
  CompletenessWitness witness;
  std::size_t draws = 0;
};

/// Samples families of s complete ideals in d >= 3 variables with exponents
/// <= exponentBound until some I^n with 2 <= |n| <= d-1 is incomplete.
std::optional<IncompleteFamily> searchIncomplete(std::size_t d, std::size_t s, Exponent exponentBound, std::uint64_t seed,
                                                 std::size_t budget = 2000);

}  // namespace powerclose
