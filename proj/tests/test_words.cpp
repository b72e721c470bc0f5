#include "doctest.h"
#include "helpers.hpp"

using namespace testing;

TEST_SUITE("words") {

TEST_CASE("evaluation") {
  auto a2 = build_root_system(RootType::A, 2);
  const BaseRing z = BaseRing::integers();
  const int e12 = find_root(*a2, {1, -1, 0}), e21 = find_root(*a2, {-1, 1, 0});
  CHECK(is_identity(eval_word(ElemWord(a2, z, 1))));
  ElemWord w(a2, z, 1);
  w.push(e12, P("1"));
  w.push(e21, P("-1"));
  w.push(e12, P("1"));
  const PolyMatrix expect = M({{"0", "1", "0"}, {"-1", "0", "0"}, {"0", "0", "1"}});
  CHECK(same(naive_eval(w), expect));
  CHECK(same(eval_word(w), expect));
  ElemWord pair(a2, z, 1);
  pair.push(e12, P("x1"));
  pair.push(e12, P("-x1"));
  CHECK(is_identity(eval_word(pair)));
}

TEST_CASE("inversion and free reduction") {
  auto a2 = build_root_system(RootType::A, 2);
  const BaseRing z = BaseRing::integers();
  const int e12 = find_root(*a2, {1, -1, 0});
  ElemWord one(a2, z, 1, {{e12, P("x1")}});
  const ElemWord inv = invert_word(one);
  REQUIRE(inv.length() == 1);
  CHECK(inv.letters()[0].arg == P("-x1"));
  ElemWord two(a2, z, 1, {{e12, P("x1")}, {e12, P("3")}});
  const ElemWord merged = free_reduce(two);
  REQUIRE(merged.length() == 1);
  CHECK(merged.letters()[0].arg == P("x1+3"));
  CHECK(free_reduce(ElemWord(a2, z, 1, {{e12, P("x1")}, {e12, P("-x1")}})).empty());
  // cancellation cascades
  const int e23 = find_root(*a2, {0, 1, -1});
  CHECK(free_reduce(ElemWord(a2, z, 1, {{e12, P("1")}, {e23, P("x1")}, {e23, P("-x1")}, {e12, P("-1")}})).empty());
}

TEST_CASE("random words: inverse and reduction preserve the value") {
  const BaseRing z = BaseRing::integers();
  for (auto rs : {build_root_system(RootType::A, 2), build_root_system(RootType::C, 2)}) {
    Rng rng(trial_seed(31, static_cast<std::uint64_t>(rs->size())));
    for (int t = 0; t < 40; ++t) {
      const ElemWord w = random_word(rng, rs, z, 8, {2, 2, 9, 3});
      CHECK(same(eval_word(w), naive_eval(w)));
      CHECK(is_identity(multiply(eval_word(invert_word(w)), eval_word(w))));
      CHECK(same(eval_word(free_reduce(w)), eval_word(w)));
      CHECK(same(eval_word(free_reduce(concat(w, invert_word(w)))), eval_word(ElemWord(rs, z, 2))));
      CHECK(membership_check(eval_word(w), *rs));
    }
  }
}

TEST_CASE("transport along ring maps") {
  auto a2 = build_root_system(RootType::A, 2);
  const BaseRing z = BaseRing::integers(), z2 = BaseRing::localized(2);
  const int e12 = find_root(*a2, {1, -1, 0});
  const ElemWord w(a2, z, 1, {{e12, P("x1")}});
  const ElemWord d = map_word(w, Substitute{{{0, P("2*x1")}}, 1});
  CHECK(d.letters()[0].arg == P("2*x1"));
  const ElemWord l = map_word(ElemWord(a2, z, 1, {{e12, P("3")}}), Localize{2});
  CHECK(l.ring() == z2);
  CHECK(l.letters()[0].arg == P("3", z2));
  CHECK(map_word(l, Localize{3}).ring() == BaseRing::localized(6));
  CHECK_THROWS_AS(map_word(ElemWord(a2, BaseRing::rationals(), 1), Localize{3}), Error);

  Rng rng(trial_seed(32, 0));
  for (int t = 0; t < 100; ++t) {
    const ElemWord r = random_word(rng, a2, z, 6, {2, 2, 9, 3});
    const Assignment a{{0, random_poly(rng, z, {2, 2, 5, 2})}};
    CHECK(same(eval_word(map_word(r, Substitute{a, 2})), substitute(eval_word(r), a, 2)));
    CHECK(same(eval_word(map_word(r, Localize{6})), change_ring(eval_word(r), BaseRing::localized(6))));
  }
}

TEST_CASE("congruence check") {
  auto a2 = build_root_system(RootType::A, 2);
  const BaseRing z = BaseRing::integers();
  const int a = find_root(*a2, {1, -1, 0}), b = find_root(*a2, {0, 1, -1});
  CHECK(congruence_check(ElemWord(a2, z, 1, {{a, P("3*x1")}}), 0).holds);
  CHECK_FALSE(congruence_check(ElemWord(a2, z, 1, {{a, P("1")}}), 0).holds);
  CHECK(congruence_check(ElemWord(a2, z, 1, {{a, P("x1")}, {b, P("1")}, {a, P("-x1")}, {b, P("-1")}}), 0).holds);
}

}  // TEST_SUITE
