#include "chev/sampling.hpp"

namespace chev {

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) {
  // splitmix64 of the pair
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Poly random_poly(Rng& rng, const BaseRing& ring, const PolyShape& shape) {
  std::uniform_int_distribution<int> terms(1, shape.max_terms), degree(0, shape.max_degree),
      var(0, std::max(0, shape.nvars - 1)), coeff(1, shape.coeff_bound), sign(0, 1);
  std::vector<Term> out;
  const int k = terms(rng);
  for (int i = 0; i < k; ++i) {
    Term t;
    const int d = shape.nvars > 0 ? degree(rng) : 0;
    for (int e = 0; e < d; ++e) ++t.mono.exp[var(rng)];
    const int c = coeff(rng);
    t.coeff = sign(rng) ? c : -c;
    out.push_back(std::move(t));
  }
  return Poly::from_terms(ring, shape.nvars, std::move(out));
}

ElemWord random_word(Rng& rng, const RootSystemPtr& rs, const BaseRing& ring, int max_length, const PolyShape& shape) {
  std::uniform_int_distribution<int> length(1, std::max(1, max_length)), root(0, rs->size() - 1);
  ElemWord w(rs, ring, shape.nvars);
  const int n = length(rng);
  for (int i = 0; i < n; ++i) {
    const int r = root(rng);
    w.push(r, random_poly(rng, ring, shape));
  }
  return w;
}

}  // namespace chev
