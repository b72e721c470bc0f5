#include "doctest.h"
#include "helpers.hpp"

using namespace testing;

namespace {

PolyMatrix cohn3() { return M({{"1+2*x1", "x1^2", "0"}, {"-4", "1-2*x1", "0"}, {"0", "0", "1"}}); }

void check_certificate(const FactorizationCertificate& c, const RootSystem& rs) {
  CHECK(c.verified);
  CHECK(is_constant(c.residual_constant));
  CHECK(membership_check(c.residual_constant, rs));
  CHECK(same(naive_product(naive_eval(c.word), c.residual_constant), c.target));
}

}  // namespace

TEST_SUITE("factorize") {

TEST_CASE("integer matrices") {
  const PolyMatrix g = M({{"2", "3", "0"}, {"1", "2", "0"}, {"0", "0", "1"}});
  CHECK(same(naive_eval(factor_integer_sl(g)), g));
  const PolyMatrix h = M({{"0", "-1", "0"}, {"1", "0", "0"}, {"0", "0", "1"}});
  CHECK(same(naive_eval(factor_integer_sl(h)), h));
  CHECK(factor_integer_sl(M({{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}})).empty());
  CHECK_THROWS_AS(factor_integer_sl(M({{"2", "0"}, {"0", "1"}})), Error);
  CHECK_THROWS_AS(factor_integer_sl(M({{"1", "x1"}, {"0", "1"}})), Error);

  auto c2 = build_root_system(RootType::C, 2);
  Rng rng(trial_seed(51, 0));
  for (int t = 0; t < 20; ++t) {
    const PolyMatrix s = eval_word(random_word(rng, c2, BaseRing::integers(), 10, {1, 0, 9, 1}));
    CHECK(same(naive_eval(factor_integer_sp(s, c2)), s));
  }
  auto a3 = build_root_system(RootType::A, 3);
  for (int t = 0; t < 20; ++t) {
    const PolyMatrix s = eval_word(random_word(rng, a3, BaseRing::integers(), 10, {1, 0, 9, 1}));
    CHECK(same(naive_eval(factor_integer_sl(s)), s));
    CHECK(same(naive_eval(factor_constant(s, a3)), s));
  }
}

TEST_CASE("constant matrices over fields") {
  auto a2 = build_root_system(RootType::A, 2);
  const BaseRing q = BaseRing::rationals(), f5 = BaseRing::prime_field(5);
  const PolyMatrix d = M({{"2", "0", "0"}, {"0", "1/2", "0"}, {"0", "0", "1"}}, q);
  CHECK(same(naive_eval(factor_constant(d, a2)), d));
  const PolyMatrix e = M({{"2", "1", "0"}, {"0", "3", "0"}, {"0", "0", "1"}}, f5);
  CHECK(same(naive_eval(factor_constant(e, a2)), e));
}

TEST_CASE("univariate Euclidean reduction over fields") {
  auto a2 = build_root_system(RootType::A, 2);
  const BaseRing q = BaseRing::rationals(), f5 = BaseRing::prime_field(5);
  const PolyMatrix g = M({{"1+2*x1", "x1^2", "0"}, {"-4", "1-2*x1", "0"}, {"0", "0", "1"}}, q);
  CHECK(same(naive_eval(factor_univar_euclidean(g, a2)), g));
  const PolyMatrix gf = M({{"1+2*x1", "x1^2", "0"}, {"1", "1-2*x1", "0"}, {"0", "0", "1"}}, f5);
  CHECK(same(naive_eval(factor_univar_euclidean(gf, a2)), gf));
  // Cohn's matrix is elementary over Q[x] even in rank one
  auto a1 = build_rank_one_system();
  const PolyMatrix c = M({{"1+2*x1", "x1^2"}, {"-4", "1-2*x1"}}, q);
  CHECK(same(naive_eval(factor_univar_euclidean(c, a1)), c));
  CHECK_THROWS_AS(factor_univar_euclidean(M({{"x1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}}, q), a2), Error);

  Rng rng(trial_seed(52, 0));
  auto c2 = build_root_system(RootType::C, 2);
  for (int t = 0; t < 15; ++t) {
    const PolyMatrix r = eval_word(random_word(rng, c2, f5, 6, {1, 2, 4, 3}));
    CHECK(same(naive_eval(factor_univar_euclidean(r, c2)), r));
  }
}

TEST_CASE("monic localization") {
  auto a2 = build_root_system(RootType::A, 2);
  const BaseRing z2 = BaseRing::localized(2);
  const PolyMatrix g = M({{"1+2*x1", "x1^2", "0"}, {"-4", "1-2*x1", "0"}, {"0", "0", "1"}}, z2);
  const LocMatrix lg = to_loc_matrix(g);
  const LocWord w = factor_monic_localized(lg, a2);
  const LocMatrix back = eval_word(w);
  for (Eigen::Index i = 0; i < lg.size(); ++i) CHECK(back(i) == lg(i));

  const ElemWord down = descend_monic(g, a2, w, 20000);
  CHECK(same(naive_eval(down), g));
  // budget zero only accepts denominator-free words
  bool has_denominator = false;
  for (const auto& l : w.letters) has_denominator = has_denominator || !l.arg.is_polynomial();
  if (has_denominator) CHECK_THROWS_AS(descend_monic(g, a2, w, 0), Error);
}

TEST_CASE("greedy reduction") {
  auto a2 = build_root_system(RootType::A, 2);
  const Reduction id = heuristic_reduce(M({{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}}), a2);
  CHECK(id.word.empty());
  CHECK(is_identity(id.residual));

  const Reduction c = heuristic_reduce(cohn3(), a2);
  CHECK(same(naive_product(naive_eval(c.word), c.residual), cohn3()));

  const PolyMatrix u = M({{"1", "x1^3-2", "5*x1"}, {"0", "1", "x1+7"}, {"0", "0", "1"}});
  const Reduction ru = heuristic_reduce(u, a2);
  CHECK(is_identity(ru.residual));
  CHECK(same(naive_eval(ru.word), u));
}

TEST_CASE("full pipeline") {
  auto a2 = build_root_system(RootType::A, 2);
  const FactorizationCertificate c = factor_polynomial(cohn3(), a2);
  check_certificate(c, *a2);
  CHECK_FALSE(c.stages.empty());
  CHECK_THROWS_WITH_AS(factor_polynomial(M({{"1+2*x1", "x1^2"}, {"-4", "1-2*x1"}}), build_rank_one_system()),
                       doctest::Contains("RankTooLow"), Error);
  CHECK_THROWS_AS(factor_polynomial(M({{"2", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}}), a2), Error);
  CHECK_THROWS_AS(factor_polynomial(cohn3(), a2, Budget{0, 64, 8192, 20000}), Error);

  Rng rng(trial_seed(53, 0));
  for (auto rs : {a2, build_root_system(RootType::A, 3), build_root_system(RootType::C, 2)})
    for (int t = 0; t < 10; ++t) {
      const PolyMatrix g = eval_word(random_word(rng, rs, BaseRing::integers(), 8, {2, 2, 9, 3}));
      check_certificate(factor_polynomial(g, rs), *rs);
    }
}

TEST_CASE("local-global path without greedy shortcuts") {
  auto a2 = build_root_system(RootType::A, 2);
  PipelineOptions opt;
  opt.greedy_first = false;
  opt.conjugation_attempts = 0;
  const FactorizationCertificate c = factor_polynomial(cohn3(), a2, {}, opt);
  check_certificate(c, *a2);
  bool patched = false;
  for (const auto& s : c.stages) patched = patched || s.stage.find("local-global") != std::string::npos;
  CHECK(patched);

  opt.allow_local_global = false;
  CHECK_THROWS_WITH_AS(factor_polynomial(cohn3(), a2, {}, opt), doctest::Contains("NotFactored"), Error);
}

}  // TEST_SUITE
