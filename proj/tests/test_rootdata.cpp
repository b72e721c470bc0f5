#include <algorithm>
#include <set>

#include "doctest.h"
#include "helpers.hpp"

using namespace testing;

namespace {

// <e_i, e_i*> = 1 with coordinates 1..n, n*..1*, built by hand.
PolyMatrix form(int n) {
  PolyMatrix j(2 * n, 2 * n);
  for (int r = 0; r < 2 * n; ++r)
    for (int c = 0; c < 2 * n; ++c) j(r, c) = Poly::constant(BaseRing::integers(), 1, 0);
  for (int i = 1; i <= n; ++i) {
    j(i - 1, 2 * n - i) = Poly::constant(BaseRing::integers(), 1, 1);
    j(2 * n - i, i - 1) = Poly::constant(BaseRing::integers(), 1, -1);
  }
  return j;
}

PolyMatrix transpose(const PolyMatrix& m) {
  PolyMatrix t(m.cols(), m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

bool preserves_form(const PolyMatrix& m, int n) {
  const PolyMatrix j = form(n);
  return same(naive_product(naive_product(transpose(m), j), m), j);
}

PolyMatrix commutator_matrix(const RootSystem& rs, int a, int b, const Poly& s, const Poly& t) {
  return naive_product(naive_product(letter_matrix(rs, a, s), letter_matrix(rs, b, t)),
                       naive_product(letter_matrix(rs, a, -s), letter_matrix(rs, b, -t)));
}

int dot(const RootVector& a, const RootVector& b) {
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

TEST_SUITE("rootdata") {

TEST_CASE("root lists") {
  auto a2 = build_root_system(RootType::A, 2);
  CHECK(a2->size() == 6);
  std::set<RootVector> want_a;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) {
        RootVector v(3, 0);
        v[i] = 1;
        v[j] = -1;
        want_a.insert(v);
      }
  CHECK(std::set<RootVector>(a2->roots().begin(), a2->roots().end()) == want_a);

  auto c2 = build_root_system(RootType::C, 2);
  const std::set<RootVector> want_c{{2, 0}, {-2, 0}, {0, 2}, {0, -2}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
  CHECK(std::set<RootVector>(c2->roots().begin(), c2->roots().end()) == want_c);

  CHECK_THROWS_WITH_AS(build_root_system(RootType::A, 1), doctest::Contains("RankTooLow"), Error);
  CHECK_THROWS_AS(build_root_system(RootType::C, 1), Error);
}

TEST_CASE("root counts, negation and Cartan integers") {
  for (int n = 2; n <= 5; ++n)
    for (RootType type : {RootType::A, RootType::C}) {
      if (type == RootType::C && n > 4) continue;
      auto rs = build_root_system(type, n);
      CHECK(rs->size() == (type == RootType::A ? n * (n + 1) : 2 * n * n));
      for (int a = 0; a < rs->size(); ++a) {
        RootVector neg = rs->root(a);
        for (int& c : neg) c = -c;
        CHECK(rs->root(rs->negative(a)) == neg);
        for (int b = 0; b < rs->size(); ++b) {
          const int expect = 2 * dot(rs->root(b), rs->root(a)) / dot(rs->root(a), rs->root(a));
          CHECK(rs->cartan(b, a) == expect);
          CHECK(std::abs(rs->cartan(b, a)) <= 2);
          if (rs->proportional(a, b)) continue;
          for (const auto& term : rs->commutator_terms(a, b)) {
            if (type == RootType::A) CHECK(std::abs(term.constant) == 1);
            if (type == RootType::C) CHECK((std::abs(term.constant) == 1 || std::abs(term.constant) == 2));
          }
        }
      }
    }
}

TEST_CASE("elementary unipotents") {
  auto a2 = build_root_system(RootType::A, 2);
  const int a12 = find_root(*a2, {1, -1, 0});
  CHECK(same(elem_unipotent(*a2, a12, P("5")), M({{"1", "5", "0"}, {"0", "1", "0"}, {"0", "0", "1"}})));
  for (int r = 0; r < a2->size(); ++r) CHECK(is_identity(elem_unipotent(*a2, r, P("0"))));

  auto c2 = build_root_system(RootType::C, 2);
  const int long1 = find_root(*c2, {2, 0});
  const PolyMatrix m = elem_unipotent(*c2, long1, P("x1"));
  int off = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j && !m(i, j).is_zero()) {
        ++off;
        CHECK(i == c2->pos(1));
        CHECK(j == c2->pos_star(1));
        CHECK((m(i, j) == P("x1") || m(i, j) == P("-x1")));
      }
  CHECK(off == 1);
  CHECK(preserves_form(m, 2));
  CHECK(membership_check(m, *c2));
}

TEST_CASE("every generator lies in the group") {
  Rng rng(trial_seed(21, 0));
  for (auto rs : {build_root_system(RootType::A, 3), build_root_system(RootType::C, 2), build_root_system(RootType::C, 3)})
    for (int r = 0; r < rs->size(); ++r) {
      const Poly t = random_poly(rng, BaseRing::integers(), {1, 2, 9, 3});
      const PolyMatrix m = elem_unipotent(*rs, r, t);
      CHECK(same(m, letter_matrix(*rs, r, t)));
      CHECK(membership_check(m, *rs));
      if (rs->type() == RootType::C) CHECK(preserves_form(m, rs->rank()));
    }
}

TEST_CASE("commutator expansion against the matrix commutator") {
  auto a2 = build_root_system(RootType::A, 2);
  const Poly s = P("x1+2"), t = P("3*x1-1");
  const int e12 = find_root(*a2, {1, -1, 0}), e23 = find_root(*a2, {0, 1, -1}), e13 = find_root(*a2, {1, 0, -1});
  auto w = commutator_expand(*a2, e12, e23, s, t);
  REQUIRE(w.size() == 1);
  CHECK(w[0].root == e13);
  CHECK((w[0].arg == s * t || w[0].arg == -(s * t)));
  CHECK(same(naive_eval(*a2, BaseRing::integers(), 1, w), commutator_matrix(*a2, e12, e23, s, t)));
  CHECK(commutator_expand(*a2, e12, e13, s, t).empty());
  CHECK(is_identity(commutator_matrix(*a2, e12, e13, s, t)));
  CHECK_THROWS_AS(commutator_expand(*a2, e12, a2->negative(e12), s, t), Error);

  auto c2 = build_root_system(RootType::C, 2);
  const int a = find_root(*c2, {1, -1}), b = find_root(*c2, {0, 2});
  auto wc = commutator_expand(*c2, a, b, s, t);
  CHECK(wc.size() == 2);
  // short with short into long carries the factor 2
  const int c = find_root(*c2, {1, 1});
  bool has_two = false;
  for (const auto& term : c2->commutator_terms(a, c)) has_two = has_two || std::abs(term.constant) == 2;
  CHECK(has_two);
  CHECK(same(naive_eval(*c2, BaseRing::integers(), 1, wc), commutator_matrix(*c2, a, b, s, t)));
  CHECK(same(naive_eval(*c2, BaseRing::integers(), 1, commutator_expand(*c2, a, c, s, t)), commutator_matrix(*c2, a, c, s, t)));
}

TEST_CASE("commutator soundness on random arguments") {
  for (auto rs : {build_root_system(RootType::A, 3), build_root_system(RootType::C, 2), build_root_system(RootType::C, 3)}) {
    Rng rng(trial_seed(22, static_cast<std::uint64_t>(rs->size())));
    for (int a = 0; a < rs->size(); ++a)
      for (int b = 0; b < rs->size(); ++b) {
        if (rs->proportional(a, b)) continue;
        const Poly s = random_poly(rng, BaseRing::integers(), {2, 2, 9, 3});
        const Poly t = random_poly(rng, BaseRing::integers(), {2, 2, 9, 3});
        CHECK(same(naive_eval(*rs, BaseRing::integers(), 2, commutator_expand(*rs, a, b, s, t)),
                   commutator_matrix(*rs, a, b, s, t)));
      }
  }
}

TEST_CASE("additivity of root subgroups") {
  Rng rng(trial_seed(23, 0));
  for (auto rs : {build_root_system(RootType::A, 2), build_root_system(RootType::C, 3)})
    for (int r = 0; r < rs->size(); ++r) {
      const Poly s = random_poly(rng, BaseRing::integers(), {2, 2, 9, 3});
      const Poly t = random_poly(rng, BaseRing::integers(), {2, 2, 9, 3});
      CHECK(same(naive_product(letter_matrix(*rs, r, s), letter_matrix(*rs, r, t)), letter_matrix(*rs, r, s + t)));
    }
}

TEST_CASE("Weyl and torus elements") {
  auto a2 = build_root_system(RootType::A, 2);
  const int e12 = find_root(*a2, {1, -1, 0});
  auto one = weyl_and_torus(*a2, e12, P("1"));
  CHECK(same(one.w, M({{"0", "1", "0"}, {"-1", "0", "0"}, {"0", "0", "1"}})));
  CHECK(is_identity(one.h));
  CHECK(same(weyl_and_torus(*a2, e12, P("-1")).h, M({{"-1", "0", "0"}, {"0", "-1", "0"}, {"0", "0", "1"}})));
  const BaseRing f5 = BaseRing::prime_field(5);
  CHECK(same(weyl_and_torus(*a2, e12, P("2", f5)).h, M({{"2", "0", "0"}, {"0", "3", "0"}, {"0", "0", "1"}}, f5)));
  CHECK_THROWS_AS(weyl_and_torus(*a2, e12, P("2")), Error);
}

TEST_CASE("torus action on root subgroups") {
  const BaseRing q = BaseRing::rationals();
  Rng rng(trial_seed(24, 0));
  for (auto rs : {build_root_system(RootType::A, 2), build_root_system(RootType::C, 2)})
    for (int a = 0; a < rs->size(); ++a)
      for (int b = 0; b < rs->size(); ++b) {
        const mpq_class u = 3;
        const PolyMatrix h = weyl_and_torus(*rs, a, Poly::constant(q, 1, u)).h;
        const PolyMatrix hi = weyl_and_torus(*rs, a, Poly::constant(q, 1, 1 / u)).h;
        const Poly t = random_poly(rng, q, {1, 2, 9, 3});
        mpq_class scale = 1;
        const int c = 2 * dot(rs->root(b), rs->root(a)) / dot(rs->root(a), rs->root(a));
        for (int i = 0; i < std::abs(c); ++i) scale *= c > 0 ? u : 1 / u;
        CHECK(same(naive_product(naive_product(h, letter_matrix(*rs, b, t)), hi), letter_matrix(*rs, b, t.scaled(scale))));
        CHECK(membership_check(h, *rs));
      }
}

TEST_CASE("group membership") {
  auto a2 = build_root_system(RootType::A, 2);
  CHECK(membership_check(M({{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}}), *a2));
  CHECK(membership_check(M({{"1+2*x1", "x1^2"}, {"-4", "1-2*x1"}}), *build_rank_one_system()));
  CHECK_FALSE(membership_check(M({{"2", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}}), *a2));
  CHECK_THROWS_AS(membership_check(M({{"1", "0"}, {"0", "1"}}), *a2), Error);
  auto c2 = build_root_system(RootType::C, 2);
  CHECK_FALSE(membership_check(M({{"1", "1", "0", "0"}, {"0", "1", "0", "0"}, {"0", "0", "1", "0"}, {"0", "0", "0", "1"}}), *c2));
}

}  // TEST_SUITE
