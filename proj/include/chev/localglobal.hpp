#pragma once

// Local-global machinery over R = Z: dilation equalizers, descent of
// congruence words from R_s[z] to R[z], dilation certificates and the
// telescoping patch over a unimodular covering.

#include <memory>
#include <vector>

#include "chev/words.hpp"

namespace chev {

// Smallest n with g(s^n z) = h(s^n z). Requires g(0) = h(0) and F_s(g) = F_s(h)
// entrywise; throws PreconditionViolated otherwise. Zero over a domain.
int dilation_equalizer(const PolyMatrix& g, const PolyMatrix& h, const mpq_class& s, int z);

struct DescentBudget {
  std::size_t max_letters = 200000;
  int max_exponent = 64;
};

struct Descent {
  ElemWord h;  // over Z, same variables as the input
  int k;
};

// Input: a word over Z[1/s] whose value is the identity at z = 0. Output: h
// over Z[z, ...] with F_s(eval h) = eval(w)(s^k z). Throws DescentBudgetExceeded
// rather than return anything unverified.
Descent descend_word(const ElemWord& w, int z, const DescentBudget& budget = {});

// Certificate that g(a x) g(b x)^{-1} is elementary over Z whenever
// a = b mod s^k.
class DilationCert {
 public:
  DilationCert(PolyMatrix g, RootSystemPtr rs, int x, std::int64_t s, Descent descent);

  std::int64_t s() const { return s_; }
  int k() const { return k_; }
  int variable() const { return x_; }
  const ElemWord& descended() const { return h_; }

  // a, b: constants or polynomials in the variables other than x. Throws
  // PreconditionViolated when s^k does not divide a - b.
  ElemWord generate(const Poly& a, const Poly& b) const;

 private:
  PolyMatrix g_;
  RootSystemPtr rs_;
  int x_;
  std::int64_t s_;
  int k_;
  ElemWord h_;  // over Z with two extra variables y, z
};

// g over Z[x1..xn]; w_s over Z[1/s] with eval(w_s) = F_s(g). Descends
// f(z) = g(x(y+z)) g(xy)^{-1} in auxiliary variables y = x_{n+1}, z = x_{n+2}.
DilationCert dilation_factor(const PolyMatrix& g, const ElemWord& w_s, int x, const DescentBudget& budget = {});

struct CoveringData {
  std::vector<std::int64_t> elems;
  std::vector<mpz_class> coeffs;
  std::vector<int> exponents;  // >= 1
};

// Coefficients from the extended gcd; exponents all 1. Throws
// CoveringInconsistent when the elements do not generate the unit ideal.
CoveringData make_covering(const std::vector<std::int64_t>& elems);
// Checks sum c_i s_i = 1 and the shape; throws CoveringInconsistent.
void check_covering(const CoveringData& cov);
// New coefficients with sum c'_i s_i^{k_i} = 1.
std::vector<mpz_class> raise_covering(const CoveringData& cov);
// a_0 = 1, a_j = sum_{i <= N-j} c_i s_i^{k_i}, a_N = 0 (using raised coefficients).
std::vector<mpz_class> telescoping_chain(const CoveringData& cov);
// prod_j g(a_j x) g(a_{j+1} x)^{-1}, computed directly on matrices.
PolyMatrix telescoping_product(const PolyMatrix& g, const RootSystem& rs, const std::vector<mpz_class>& chain, int x);

// Word for g * g(x -> 0)^{-1}. Each cert must match one covering element and
// have k no larger than that element's exponent. Throws CoveringInconsistent.
ElemWord patch(const PolyMatrix& g, const RootSystemPtr& rs, const std::vector<DilationCert>& certs,
               const CoveringData& covering, int x);

}  // namespace chev
