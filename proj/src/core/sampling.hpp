#pragma once

#include <cstdint>
#include <random>

#include "monomial_ideal.hpp"

namespace powerclose {

/// Seeded source of random m-primary monomial ideals. Draws use only the
/// raw engine output, so a seed gives the same ideals on every platform.
class IdealSampler {
 public:
  explicit IdealSampler(std::uint64_t seed) : rng_(seed) {}

  /// Uniform on [lo, hi].
  Exponent uniform(Exponent lo, Exponent hi);

  /// Pure powers X_k^{p_k} with 1 <= p_k <= bound plus up to `bound` random
  /// mixed generators with coordinates in [0, bound].
  MonomialIdeal mPrimary(std::size_t dim, Exponent bound);
  /// The integral closure of an mPrimary draw.
  MonomialIdeal complete(std::size_t dim, Exponent bound);

  std::mt19937_64& engine() noexcept { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace powerclose
