#include "chev/relations.hpp"

namespace chev {

namespace {

std::string pair_name(const RootSystem& rs, int a, int b) {
  return root_to_string(rs.root(a)) + ", " + root_to_string(rs.root(b));
}

}  // namespace

RelationReport run_relation_suite(const RootSystemPtr& rs, int trials, std::uint64_t seed, const PolyShape& shape) {
  RelationReport rep;
  const BaseRing zr = BaseRing::integers(), qr = BaseRing::rationals();
  const int nr = rs->size();
  for (int a = 0; a < nr; ++a)
    for (int b = 0; b < nr; ++b) {
      if (rs->proportional(a, b)) continue;
      Rng rng(trial_seed(seed, static_cast<std::uint64_t>(a * nr + b)));
      for (int t = 0; t < trials; ++t) {
        const Poly s = random_poly(rng, zr, shape), u = random_poly(rng, zr, shape);
        const PolyMatrix lhs = eval_word(commutator_word(rs, a, b, s, u));
        const PolyMatrix rhs = multiply(multiply(elem_unipotent(*rs, a, s), elem_unipotent(*rs, b, u)),
                                        multiply(elem_unipotent(*rs, a, -s), elem_unipotent(*rs, b, -u)));
        ++rep.commutator_checks;
        if (!equal(lhs, rhs)) rep.failures.push_back("commutator " + pair_name(*rs, a, b) + " at " + to_string(s) + ", " + to_string(u));
      }
    }
  for (int a = 0; a < nr; ++a) {
    Rng rng(trial_seed(seed ^ 0xadd, static_cast<std::uint64_t>(a)));
    for (int t = 0; t < trials; ++t) {
      const Poly s = random_poly(rng, zr, shape), u = random_poly(rng, zr, shape);
      ++rep.additivity_checks;
      if (!equal(multiply(elem_unipotent(*rs, a, s), elem_unipotent(*rs, a, u)), elem_unipotent(*rs, a, s + u)))
        rep.failures.push_back("additivity " + root_to_string(rs->root(a)));
    }
  }
  std::uniform_int_distribution<int> unit(1, 3), sign(0, 1);
  for (int a = 0; a < nr; ++a)
    for (int b = 0; b < nr; ++b) {
      Rng rng(trial_seed(seed ^ 0x70405, static_cast<std::uint64_t>(a * nr + b)));
      for (int t = 0; t < trials; ++t) {
        const int uv = sign(rng) ? unit(rng) : -unit(rng);
        const Poly u = Poly::constant(qr, shape.nvars, uv);
        const Poly arg = random_poly(rng, qr, shape);
        const PolyMatrix h = weyl_and_torus(*rs, a, u).h;
        const PolyMatrix h_inv = weyl_and_torus(*rs, a, Poly::constant(qr, shape.nvars, mpq_class(mpq_class(1) / uv))).h;
        mpq_class scale = 1;
        const int c = rs->cartan(b, a);
        for (int i = 0; i < std::abs(c); ++i) scale *= c > 0 ? mpq_class(uv) : mpq_class(mpq_class(1) / uv);
        ++rep.torus_checks;
        if (!equal(multiply(multiply(h, elem_unipotent(*rs, b, arg)), h_inv), elem_unipotent(*rs, b, arg.scaled(scale))))
          rep.failures.push_back("torus " + pair_name(*rs, a, b) + " at u = " + std::to_string(uv));
      }
    }
  return rep;
}

}  // namespace chev
