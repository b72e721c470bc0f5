#include "doctest.h"
#include "helpers.hpp"

using namespace testing;

TEST_SUITE("exactring") {

TEST_CASE("polynomial arithmetic") {
  const BaseRing z = BaseRing::integers();
  CHECK(poly_op(PolyOpKind::Add, P("x1+1"), P("x1-1")) == P("2*x1"));
  CHECK(poly_op(PolyOpKind::Mul, P("1+2*x1"), P("1-2*x1")) == P("1-4*x1^2"));
  CHECK(poly_op(PolyOpKind::Neg, P("x1-3")) == P("3-x1"));
  const BaseRing z4 = BaseRing::integers_mod(4);
  CHECK(poly_op(PolyOpKind::Mul, P("2*x1", z4), P("2*x1", z4)).is_zero());
  CHECK_THROWS_AS(poly_op(PolyOpKind::Add, P("x1"), P("x1", z4)), Error);
  CHECK_THROWS_AS(poly_op(PolyOpKind::Add, P("x1"), P("x1", z, 2)), Error);
}

TEST_CASE("substitution") {
  const BaseRing z = BaseRing::integers();
  CHECK(substitute(P("x1^2+1"), {{0, P("2*x1")}}) == P("4*x1^2+1"));
  CHECK(substitute(P("x1^2+x1+5"), {{0, P("0")}}) == P("5"));
  const BaseRing z8 = BaseRing::integers_mod(8);
  CHECK(substitute(P("4*x1+2*x1^2", z8), {{0, P("2*x1", z8)}}).is_zero());
  // x1 -> x1 + x2 into two variables
  CHECK(substitute(P("x1^2"), {{0, P("x1+x2", z, 2)}}, 2) == P("x1^2+2*x1*x2+x2^2", z, 2));
}

TEST_CASE("annihilator exponent") {
  auto brute = [](std::int64_t m, std::int64_t d, std::int64_t s) -> std::optional<int> {
    std::int64_t v = d % m;
    for (int n = 0; n <= 64; ++n) {
      if (v == 0) return n;
      v = (v * s) % m;
    }
    return std::nullopt;
  };
  CHECK(annihilator_exponent(BaseRing::integers_mod(4), 2, 2) == std::optional<int>(1));
  CHECK(annihilator_exponent(BaseRing::integers(), 3, 2) == std::nullopt);
  CHECK(annihilator_exponent(BaseRing::integers_mod(12), 3, 2) == brute(12, 3, 2));
  CHECK(*annihilator_exponent(BaseRing::integers_mod(12), 3, 2) == 2);
  CHECK(annihilator_exponent(BaseRing::integers_mod(12), 5, 3) == std::nullopt);
  CHECK(annihilator_exponent(BaseRing::rationals(), 1, 5) == std::nullopt);
  CHECK(annihilator_exponent(BaseRing::prime_field(7), 0, 3) == std::optional<int>(0));
  for (std::int64_t m : {8, 12, 18, 30, 64})
    for (std::int64_t d = 0; d < m; ++d)
      for (std::int64_t s : {2, 3, 6})
        CHECK(annihilator_exponent(BaseRing::integers_mod(m), d, s) == brute(m, d, s));
}

TEST_CASE("equality after localization") {
  const BaseRing z4 = BaseRing::integers_mod(4), z12 = BaseRing::integers_mod(12);
  CHECK(localize_eq(P("2*x1", z4), P("0", z4), 2));
  CHECK_FALSE(localize_eq(P("x1"), P("0"), 2));
  CHECK(localize_eq(P("3*x1^2", z12), P("0", z12), 2));
  CHECK_FALSE(localize_eq(P("3*x1^2", z12), P("0", z12), 5));
}

TEST_CASE("division by monic polynomials") {
  auto [q1, r1] = monic_divrem(P("x1^2+1"), P("x1"));
  CHECK(q1 == P("x1"));
  CHECK(r1 == P("1"));
  auto [q0, r0] = monic_divrem(P("0"), P("x1^3+7"));
  CHECK(q0.is_zero());
  CHECK(r0.is_zero());
  const Poly g = P("x1^3+2*x1+1"), f = P("x1^2+1");
  auto [q, r] = monic_divrem(g, f);
  CHECK(q * f + r == g);
  CHECK(r.degree_in(0) < f.degree_in(0));
  CHECK(q == P("x1"));
  CHECK(r == P("x1+1"));
  CHECK_THROWS_AS(monic_divrem(g, P("2*x1+1")), Error);
}

TEST_CASE("rings and normal forms") {
  const BaseRing z6 = BaseRing::localized(6);
  CHECK(z6.contains(mpq_class(1, 4)));
  CHECK(z6.contains(mpq_class(5, 18)));
  CHECK_FALSE(z6.contains(mpq_class(1, 5)));
  CHECK(z6.is_unit(mpq_class(2, 3)));
  CHECK_FALSE(z6.is_unit(5));
  CHECK(BaseRing::prime_field(5).inverse(2) == 3);
  CHECK_THROWS_AS(BaseRing::integers().inverse(2), Error);
  CHECK(BaseRing::integers_mod(7).normalize(-1) == 6);
  CHECK_THROWS_AS(BaseRing::integers_mod(4).normalize(mpq_class(1, 2)), Error);
  CHECK(BaseRing::at_prime(5).contains(mpq_class(1, 3)));
  CHECK_FALSE(BaseRing::at_prime(5).contains(mpq_class(1, 10)));
  for (const char* name : {"Z", "Q", "Z/12", "F5", "Z[1/6]", "Z_(5)"}) CHECK(BaseRing::parse(name).name() == name);
  CHECK_THROWS_AS(BaseRing::parse("F6"), Error);
  CHECK_THROWS_AS(BaseRing::parse("Z/1"), Error);
}

TEST_CASE("text form") {
  CHECK(to_string(P("1+4*x1^2")) == "4*x1^2 + 1");
  CHECK(to_string(P("x2*x1 - x1^2 + 3", BaseRing::integers(), 2)) == "-x1^2 + x1*x2 + 3");
  CHECK(P("(x1+1)^3") == P("x1^3+3*x1^2+3*x1+1"));
  CHECK(P("-(2*x1-1)*(x1+1)") == P("-2*x1^2-x1+1"));
  CHECK(to_string(P("1/2*x1", BaseRing::localized(2))) == "1/2*x1");
  CHECK_THROWS_AS(P("x3"), Error);
  CHECK_THROWS_AS(P("1/3", BaseRing::integers()), Error);
  CHECK_THROWS_AS(P("x1 +"), Error);
  CHECK_THROWS_AS(P("x1^"), Error);
}

TEST_CASE("monic localization") {
  const Poly f = P("x1^2+1");
  MonicLocElem a(P("x1"), f, 1), b(P("x1^3+x1"), f, 2);
  CHECK(a == b);
  CHECK(a * MonicLocElem(f) == MonicLocElem(P("x1")));
  CHECK(MonicLocElem(P("x1+2")).is_unit());
  CHECK_FALSE(MonicLocElem(P("2*x1+1")).is_unit());
  const MonicLocElem u(P("x1+2"));
  CHECK(u * u.inverse() == MonicLocElem(1));
  CHECK_THROWS_AS(MonicLocElem(P("1"), P("2*x1"), 1), Error);
}

TEST_CASE("ring axioms on random triples") {
  const std::vector<BaseRing> rings{BaseRing::integers(),    BaseRing::integers_mod(12), BaseRing::prime_field(7),
                                    BaseRing::rationals(),   BaseRing::localized(6),     BaseRing::at_prime(5)};
  for (const auto& ring : rings) {
    Rng rng(trial_seed(11, static_cast<std::uint64_t>(ring.kind())));
    const PolyShape shape{2, 3, 9, 4};
    for (int t = 0; t < 40; ++t) {
      const Poly half = ring.contains(mpq_class(1, 2)) ? Poly::constant(ring, 2, mpq_class(1, 2)) : Poly::constant(ring, 2, 1);
      const Poly a = random_poly(rng, ring, shape) * half, b = random_poly(rng, ring, shape),
                 c = random_poly(rng, ring, shape);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a + b == b + a);
      CHECK((a - a).is_zero());
    }
  }
}

TEST_CASE("substitution is a ring homomorphism") {
  Rng rng(trial_seed(12, 0));
  const BaseRing z = BaseRing::integers();
  const PolyShape shape{2, 3, 9, 4};
  for (int t = 0; t < 50; ++t) {
    const Poly p = random_poly(rng, z, shape), q = random_poly(rng, z, shape);
    const Assignment a{{0, random_poly(rng, z, shape)}, {1, random_poly(rng, z, shape)}};
    CHECK(substitute(p * q, a) == substitute(p, a) * substitute(q, a));
    CHECK(substitute(p + q, a) == substitute(p, a) + substitute(q, a));
  }
}

TEST_CASE("monic division round trip") {
  Rng rng(trial_seed(13, 0));
  const BaseRing z = BaseRing::integers();
  for (int t = 0; t < 50; ++t) {
    const Poly g = random_poly(rng, z, {1, 6, 9, 5});
    const Poly f = P("x1^3") + random_poly(rng, z, {1, 2, 9, 3});
    auto [q, r] = monic_divrem(g, f);
    CHECK(q * f + r == g);
    CHECK(r.degree_in(0) < 3);
  }
}

TEST_CASE("text round trip") {
  Rng rng(trial_seed(14, 0));
  for (const auto& ring : {BaseRing::integers(), BaseRing::localized(10), BaseRing::integers_mod(9)}) {
    for (int t = 0; t < 30; ++t) {
      Poly p = random_poly(rng, ring, {3, 3, 20, 5});
      if (ring.kind() == RingKind::IntegersLocalized) p = p.scaled(mpq_class(3, 20));
      CHECK(parse_poly(to_string(p), ring, 3) == p);
    }
  }
}

}  // TEST_SUITE
