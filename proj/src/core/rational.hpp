#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "exponent.hpp"

namespace powerclose {

using Rational = mpq_class;
using Integer = mpz_class;

inline Integer toInteger(std::uint64_t v) { return Integer(static_cast<unsigned long>(v)); }

inline std::string toString(const Rational& q) { return q.get_str(); }

/// Smallest integer >= q, as a machine exponent. Throws kOverflow.
inline Exponent ceilToExponent(const Rational& q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  if (!out.fits_slong_p()) fail(ErrorCode::kOverflow, "rational value does not fit an exponent");
  return out.get_si();
}

}  // namespace powerclose
