#include "doctest.h"
#include "helpers.hpp"

using namespace testing;

namespace {

PolyMatrix at_scaled(const PolyMatrix& g, int var, const mpq_class& c) {
  const Poly& ref = g(0, 0);
  return substitute(g, Assignment{{var, Poly::variable(ref.ring(), ref.nvars(), var).scaled(c)}}, ref.nvars());
}

// x21(1/2) x12(4 x1) x21(-1/2) = diag([[1 - 2x1, 4x1], [-x1, 1 + 2x1]], 1)
ElemWord half_conjugate(const RootSystemPtr& a2) {
  const BaseRing z2 = BaseRing::localized(2);
  const int e12 = find_root(*a2, {1, -1, 0}), e21 = find_root(*a2, {-1, 1, 0});
  return ElemWord(a2, z2, 1, {{e21, P("1/2", z2)}, {e12, P("4*x1", z2)}, {e21, P("-1/2", z2)}});
}

}  // namespace

TEST_SUITE("localglobal") {

TEST_CASE("dilation equalizer") {
  const BaseRing z4 = BaseRing::integers_mod(4), z8 = BaseRing::integers_mod(8);
  CHECK(dilation_equalizer(M({{"1+2*x1"}}, z4), M({{"1"}}, z4), 2, 0) == 1);
  CHECK(dilation_equalizer(M({{"1+4*x1+2*x1^2"}}, z8), M({{"1"}}, z8), 2, 0) == 1);
  CHECK(dilation_equalizer(M({{"1+x1"}}, z8), M({{"1+x1"}}, z8), 2, 0) == 0);
  CHECK(dilation_equalizer(M({{"1+4*x1"}}, z8), M({{"1"}}, z8), 2, 0) == 1);
  CHECK(dilation_equalizer(M({{"3+x1^2"}}), M({{"3+x1^2"}}), 5, 0) == 0);
  CHECK_THROWS_AS(dilation_equalizer(M({{"1+x1"}}), M({{"1"}}), 2, 0), Error);
  CHECK_THROWS_AS(dilation_equalizer(M({{"2+x1"}}, z8), M({{"1+x1"}}, z8), 2, 0), Error);
  // brute force over Z/2^e
  for (int e = 2; e <= 5; ++e) {
    const BaseRing r = BaseRing::integers_mod(1 << e);
    for (int c = 0; c < (1 << e); c += 2) {
      const PolyMatrix g = M({{"1+" + std::to_string(c) + "*x1"}}, r);
      int expect = 0;
      while (((static_cast<long>(c) << expect) % (1 << e)) != 0) ++expect;
      CHECK(dilation_equalizer(g, M({{"1"}}, r), 2, 0) == expect);
    }
  }
}

TEST_CASE("descent of congruence words") {
  auto a2 = build_root_system(RootType::A, 2);
  const BaseRing z2 = BaseRing::localized(2);
  const ElemWord w = half_conjugate(a2);
  REQUIRE(congruence_check(w, 0).holds);
  const Descent d = descend_word(w, 0);
  CHECK(d.h.ring() == BaseRing::integers());
  CHECK(d.k >= 0);
  CHECK(same(change_ring(eval_word(d.h), z2), at_scaled(eval_word(w), 0, mpq_class(mpz_class(1) << d.k))));

  const int e12 = find_root(*a2, {1, -1, 0});
  const ElemWord integral(a2, z2, 1, {{e12, P("3*x1", z2)}});
  CHECK(descend_word(integral, 0).k == 0);
  CHECK_THROWS_AS(descend_word(ElemWord(a2, z2, 1, {{e12, P("1/2+x1", z2)}}), 0), Error);
  CHECK_THROWS_AS(descend_word(ElemWord(a2, BaseRing::rationals(), 1, {{e12, P("1/2*x1", BaseRing::rationals())}}), 0), Error);
}

TEST_CASE("descent in Sp4") {
  auto c2 = build_root_system(RootType::C, 2);
  const BaseRing z3 = BaseRing::localized(3);
  const int a = find_root(*c2, {1, -1}), b = find_root(*c2, {0, 2}), na = c2->negative(a);
  const ElemWord w(c2, z3, 1, {{na, P("1/3", z3)}, {b, P("x1", z3)}, {a, P("2/9*x1", z3)}, {na, P("-1/3", z3)}});
  REQUIRE(congruence_check(w, 0).holds);
  const Descent d = descend_word(w, 0);
  mpz_class sk = 1;
  for (int i = 0; i < d.k; ++i) sk *= 3;
  CHECK(same(change_ring(eval_word(d.h), z3), at_scaled(eval_word(w), 0, mpq_class(sk))));
}

TEST_CASE("dilation certificates") {
  auto a2 = build_root_system(RootType::A, 2);
  const ElemWord w = half_conjugate(a2);
  const PolyMatrix g = change_ring(eval_word(w), BaseRing::integers());
  const DilationCert cert = dilation_factor(g, w, 0);
  CHECK(cert.s() == 2);
  const mpz_class step = mpz_class(1) << cert.k();
  const BaseRing z = BaseRing::integers();
  for (long b : {0L, 1L, -3L}) {
    const mpz_class a = mpz_class(b) + 3 * step;
    const ElemWord out = cert.generate(Poly::constant(z, 1, mpq_class(a)), Poly::constant(z, 1, b));
    CHECK(same(naive_eval(out), multiply(at_scaled(g, 0, mpq_class(a)), group_inverse(at_scaled(g, 0, b), *a2))));
  }
  if (cert.k() > 0) CHECK_THROWS_AS(cert.generate(Poly::constant(z, 1, 1), Poly::constant(z, 1, 0)), Error);

  // over Z itself the certificate needs no descent
  const int e12 = find_root(*a2, {1, -1, 0});
  const ElemWord wz(a2, z, 1, {{e12, P("x1^2+1")}});
  const DilationCert plain = dilation_factor(eval_word(wz), wz, 0);
  CHECK(plain.k() == 0);
  CHECK(same(eval_word(plain.generate(Poly::constant(z, 1, 5), Poly::constant(z, 1, 2))),
             multiply(at_scaled(eval_word(wz), 0, 5), group_inverse(at_scaled(eval_word(wz), 0, 2), *a2))));
  CHECK_THROWS_AS(dilation_factor(eval_word(wz), w, 0), Error);
}

TEST_CASE("coverings") {
  const CoveringData c = make_covering({2, 3});
  CHECK(c.coeffs[0] * 2 + c.coeffs[1] * 3 == 1);
  const CoveringData fixed{{2, 3}, {-1, 1}, {1, 1}};
  CHECK(telescoping_chain(fixed) == std::vector<mpz_class>{1, -2, 0});
  CHECK_THROWS_AS(make_covering({2, 4}), Error);
  CHECK_THROWS_AS(check_covering(CoveringData{{2, 3}, {1, 1}, {1, 1}}), Error);
  CHECK_THROWS_AS(check_covering(CoveringData{{2, 3}, {-1, 1}, {0, 1}}), Error);
  const CoveringData raised{{2, 3}, {-1, 1}, {3, 2}};
  const auto rc = raise_covering(raised);
  CHECK(rc[0] * 8 + rc[1] * 9 == 1);
  const auto chain = telescoping_chain(raised);
  CHECK(chain.front() == 1);
  CHECK(chain.back() == 0);
}

TEST_CASE("telescoping product equals g g(0)^-1") {
  const BaseRing z = BaseRing::integers();
  Rng rng(trial_seed(41, 0));
  for (auto rs : {build_root_system(RootType::A, 2), build_root_system(RootType::C, 2)})
    for (const auto& elems : {std::vector<std::int64_t>{2, 3}, std::vector<std::int64_t>{2, 3, 5}})
      for (int t = 0; t < 5; ++t) {
        CoveringData cov = make_covering(elems);
        for (auto& k : cov.exponents) k = 1 + static_cast<int>(rng() % 3);
        const PolyMatrix g = eval_word(random_word(rng, rs, z, 6, {1, 2, 9, 3}));
        const PolyMatrix g0 = substitute(g, Assignment{{0, Poly::constant(z, 1, 0)}}, 1);
        CHECK(same(telescoping_product(g, *rs, telescoping_chain(cov), 0), multiply(g, group_inverse(g0, *rs))));
      }
}

TEST_CASE("patching local certificates") {
  auto a2 = build_root_system(RootType::A, 2);
  const ElemWord w2 = half_conjugate(a2);
  const PolyMatrix g = change_ring(eval_word(w2), BaseRing::integers());
  const FactorizationCertificate global = factor_polynomial(g, a2);
  REQUIRE(is_identity(global.residual_constant));
  const ElemWord w3 = change_ring(global.word, BaseRing::localized(3));
  std::vector<DilationCert> certs{dilation_factor(g, w2, 0), dilation_factor(g, w3, 0)};
  CoveringData cov{{2, 3}, {-1, 1}, {1, 1}};
  for (std::size_t i = 0; i < certs.size(); ++i) cov.exponents[i] = std::max(1, certs[i].k());
  const ElemWord out = patch(g, a2, certs, cov, 0);
  CHECK(same(naive_eval(out), g));  // g(0) = I here

  CoveringData short_exp{{2, 3}, {-1, 1}, {1, 1}};
  if (certs[0].k() > 1) CHECK_THROWS_AS(patch(g, a2, certs, short_exp, 0), Error);
  CHECK_THROWS_AS(patch(g, a2, {certs[0]}, make_covering({2, 3}), 0), Error);
}

}  // TEST_SUITE
