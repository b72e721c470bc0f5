#pragma once

// Seeded random polynomials and words for the relation suites, round trips
// and tests.

#include <cstdint>
#include <random>

#include "chev/words.hpp"

namespace chev {

struct PolyShape {
  int nvars = 1;
  int max_degree = 2;
  int coeff_bound = 9;  // coefficients in [-bound, bound]
  int max_terms = 3;
};

using Rng = std::mt19937_64;

// Independent stream for trial `index` of a run seeded with `master`.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index);

Poly random_poly(Rng& rng, const BaseRing& ring, const PolyShape& shape);
// Length uniform in [1, max_length]; roots uniform.
ElemWord random_word(Rng& rng, const RootSystemPtr& rs, const BaseRing& ring, int max_length, const PolyShape& shape);

}  // namespace chev
