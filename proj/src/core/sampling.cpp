#include "sampling.hpp"

#include "newton.hpp"

namespace powerclose {

Exponent IdealSampler::uniform(Exponent lo, Exponent hi) {
  const auto width = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<Exponent>(rng_() % width);
}

MonomialIdeal IdealSampler::mPrimary(std::size_t dim, Exponent bound) {
  std::vector<ExponentVector> gens;
  for (std::size_t k = 0; k < dim; ++k) gens.push_back(ExponentVector::unit(dim, k).scaled(uniform(1, bound)));
  const Exponent extra = uniform(0, bound);
  for (Exponent j = 0; j < extra; ++j) {
    ExponentVector g(dim);
    for (std::size_t k = 0; k < dim; ++k) g[k] = uniform(0, bound);
    if (g.totalDegree() > 0) gens.push_back(std::move(g));
  }
  return MonomialIdeal::fromGenerators(std::move(gens));
}

MonomialIdeal IdealSampler::complete(std::size_t dim, Exponent bound) { return integralClosure(mPrimary(dim, bound)); }

}  // namespace powerclose
