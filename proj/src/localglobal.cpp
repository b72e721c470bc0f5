#include "chev/localglobal.hpp"

#include <algorithm>
#include <stdexcept>

namespace chev {

namespace {

mpz_class mpz_pow(const mpz_class& base, unsigned e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Poly var_of(const BaseRing& ring, int nvars, int i) { return Poly::variable(ring, nvars, i); }

// z -> s^k z
Poly dilate(const Poly& p, int z, const mpz_class& s, int k) {
  if (k == 0 || !p.bound() || !p.depends_on(z)) return p;
  Poly image = var_of(p.ring(), p.nvars(), z).scaled(mpq_class(mpz_pow(s, static_cast<unsigned>(k))));
  return substitute(p, Assignment{{z, image}}, p.nvars());
}

Poly at_zero(const Poly& p, int z) {
  if (!p.bound() || !p.depends_on(z)) return p;
  return substitute(p, Assignment{{z, Poly::constant(p.ring(), p.nvars(), 0)}}, p.nvars());
}

int valuation(const Poly& p, const mpz_class& s) {
  auto v = s_valuation(p, s);
  return v ? *v : 0;
}

int coeff_valuation(const mpq_class& c, const mpz_class& s) {
  return valuation(Poly::constant(BaseRing::rationals(), 0, c), s);
}

bool all_integral(const std::vector<Letter>& letters) {
  return std::all_of(letters.begin(), letters.end(), [](const Letter& l) { return is_integral(l.arg); });
}

// ---------------------------------------------------------------------------
// Conjugation through a transvection (type A, dim >= 3).
//
// P x_pq(t) P^{-1} = I + t v w^T with v = P e_p, w^T = e_q^T P^{-1}, and
// u^T = e_p^T P^{-1} satisfies u^T v = 1. Then w = sum_{a<b} c_ab r_ab with
// c_ab = w_a u_b - w_b u_a and r_ab = v_b e_a - v_a e_b, the summands commute,
// and each I + v q^T (q = t c_ab r_ab, q_k = 0 for k outside {a, b}) equals
// [I + λ v' e_k^T, I + λ^{-1} e_k q^T] (I + v_k e_k q^T) with v' = v - v_k e_k.
void conjugate_transvection(const RootSystem& rs, const PolyMatrix& P, const PolyMatrix& Pinv, int root, const Poly& t,
                            const mpz_class& s, std::vector<Letter>& out) {
  const GeneratorEntry& e = rs.generator(root).front();
  const Poly T = t.scaled(e.coeff);
  const int n = rs.dim();
  std::vector<Poly> v(n), w(n), u(n);
  for (int i = 0; i < n; ++i) {
    v[i] = P(i, e.row);
    w[i] = Pinv(e.col, i);
    u[i] = Pinv(e.row, i);
  }
  auto emit = [&](int row, int col, const Poly& a) {
    if (a.is_zero()) return;
    auto [r, c] = rs.root_at(row, col);
    out.push_back({r, a.scaled(c)});
  };
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      Poly cab = w[a] * u[b] - w[b] * u[a];
      if (cab.is_zero()) continue;
      const Poly tc = T * cab;
      const Poly qa = tc * v[b];
      const Poly qb = -(tc * v[a]);
      int k = -1;
      for (int i = 0; i < n; ++i) {
        if (i == a || i == b) continue;
        if (k < 0 || (v[i].is_zero() && !v[k].is_zero())) k = i;
      }
      int m = 0;
      for (int i = 0; i < n; ++i)
        if (i != k && !v[i].is_zero()) m = std::max(m, -valuation(v[i], s));
      const mpq_class lam(mpz_pow(s, static_cast<unsigned>(m)));
      const mpq_class lam_inv = 1 / lam;
      for (int i = 0; i < n; ++i)
        if (i != k) emit(i, k, v[i].scaled(lam));
      emit(k, a, qa.scaled(lam_inv));
      emit(k, b, qb.scaled(lam_inv));
      for (int i = 0; i < n; ++i)
        if (i != k) emit(i, k, v[i].scaled(-lam));
      emit(k, a, qa.scaled(-lam_inv));
      emit(k, b, qb.scaled(-lam_inv));
      emit(k, a, v[k] * qa);
      emit(k, b, v[k] * qb);
    }
}

// Minimal k making every z-dependent term integral after z -> s^k z.
int required_dilation(const std::vector<Letter>& letters, int z, const mpz_class& s) {
  int k = 0;
  for (const auto& l : letters)
    for (const auto& term : l.arg.terms()) {
      const int ez = term.mono.exp[z];
      const int v = coeff_valuation(term.coeff, s);
      if (v >= 0) continue;
      if (ez == 0) return -1;  // a constant letter that no dilation clears
      k = std::max(k, (-v + ez - 1) / ez);
    }
  return k;
}

// ---------------------------------------------------------------------------
// Conjugation letter by letter (any type).

struct OppositeSplit {
  int gamma = -1;
  int delta = -1;
  int i = 0;  // the target is the x_{iγ+jδ}(N u^i v^j) term of [x_γ(u), x_δ(v)]
  int j = 0;
  int constant = 0;
  std::size_t terms = 0;
};

OppositeSplit find_split(const RootSystem& rs, int alpha) {
  OppositeSplit best;
  for (int g = 0; g < rs.size(); ++g)
    for (int d = 0; d < rs.size(); ++d) {
      if (rs.proportional(g, d)) continue;
      const auto& terms = rs.commutator_terms(g, d);
      for (const auto& t : terms) {
        if (t.root != alpha || (t.constant != 1 && t.constant != -1) || t.j != 1) continue;
        if (best.gamma < 0 || terms.size() < best.terms || (terms.size() == best.terms && t.i < best.i))
          best = {g, d, t.i, t.j, t.constant, terms.size()};
      }
    }
  if (best.gamma < 0) throw std::logic_error("no commutator presentation of root " + root_to_string(rs.root(alpha)));
  return best;
}

class Conjugator {
 public:
  Conjugator(const RootSystem& rs, mpz_class s, std::size_t max_letters)
      : rs_(rs), s_(std::move(s)), max_letters_(max_letters), splits_(rs.size()) {}

  // x_β(c) W x_β(-c), letterwise.
  std::vector<Letter> conjugate(int beta, const Poly& c, const std::vector<Letter>& word) {
    std::vector<Letter> out;
    for (const auto& y : word) one(beta, c, y, out);
    if (out.size() > max_letters_)
      throw Error(ErrorKind::DescentBudgetExceeded, "descent exceeded " + std::to_string(max_letters_) + " letters");
    return out;
  }

 private:
  void one(int beta, const Poly& c, const Letter& y, std::vector<Letter>& out) {
    if (y.arg.is_zero()) return;
    if (c.is_zero() || y.root == beta) {
      out.push_back(y);
      return;
    }
    if (rs_.negative(beta) != y.root) {
      for (auto& l : commutator_expand(rs_, beta, y.root, c, y.arg)) out.push_back(std::move(l));
      out.push_back(y);
      return;
    }
    for (const auto& d : split(y)) one(beta, c, d, out);
  }

  // x_α(a) as letters on roots other than ±α, via
  // x_α(a) = (T_<p)^{-1} [x_γ(u), x_δ(v)] (T_>p)^{-1} with u = s^m.
  std::vector<Letter> split(const Letter& y) {
    if (!splits_[y.root]) splits_[y.root] = find_split(rs_, y.root);
    const OppositeSplit& sp = *splits_[y.root];
    const int val = std::max(0, valuation(y.arg, s_));
    const int m = val / (sp.i + 1);
    const mpq_class um(mpz_pow(s_, static_cast<unsigned>(m)));
    const Poly u = Poly::constant(y.arg.ring(), y.arg.nvars(), um);
    const Poly v = y.arg.scaled(mpq_class(sp.constant) / mpq_class(mpz_pow(s_, static_cast<unsigned>(m * sp.i))));
    std::vector<Letter> comm = commutator_expand(rs_, sp.gamma, sp.delta, u, v);
    std::size_t p = 0;
    while (p < comm.size() && comm[p].root != y.root) ++p;
    std::vector<Letter> out;
    for (std::size_t q = p; q-- > 0;) out.push_back({comm[q].root, -comm[q].arg});
    out.push_back({sp.gamma, u});
    out.push_back({sp.delta, v});
    out.push_back({sp.gamma, -u});
    out.push_back({sp.delta, -v});
    for (std::size_t q = comm.size(); q-- > p + 1;) out.push_back({comm[q].root, -comm[q].arg});
    return out;
  }

  const RootSystem& rs_;
  mpz_class s_;
  std::size_t max_letters_;
  std::vector<std::optional<OppositeSplit>> splits_;
};

std::vector<Letter> reduce_letters(const RootSystemPtr& rs, const BaseRing& ring, int nvars, std::vector<Letter> letters) {
  return free_reduce(ElemWord(rs, ring, nvars, std::move(letters))).letters();
}

struct Split {
  std::vector<Letter> constants;  // l_j = x_{α_j}(a_j(z = 0))
  std::vector<Poly> moving;       // z b_j
};

Split split_word(const ElemWord& w, int z) {
  Split sp;
  for (const auto& l : w.letters()) {
    Poly c = at_zero(l.arg, z);
    sp.moving.push_back(l.arg - c);
    sp.constants.push_back({l.root, std::move(c)});
  }
  return sp;
}

std::optional<ElemWord> finish(const ElemWord& w, int z, const mpz_class& s, int k, std::vector<Letter> letters,
                               const PolyMatrix& target) {
  for (auto& l : letters) l.arg = dilate(l.arg, z, s, k);
  if (!all_integral(letters)) return std::nullopt;
  ElemWord local(w.rs(), w.ring(), w.nvars(), letters);
  local = free_reduce(local);
  if (!equal(eval_word(local), target)) throw std::logic_error("descended word does not evaluate to the dilated input");
  return change_ring(local, BaseRing::integers());
}

PolyMatrix dilated_target(const ElemWord& w, int z, const mpz_class& s, int k) {
  PolyMatrix m = eval_word(w);
  return m.unaryExpr([&](const Poly& p) { return dilate(p, z, s, k); });
}

Descent descend_transvection(const ElemWord& w, int z, const mpz_class& s, const DescentBudget& budget) {
  const RootSystem& rs = w.system();
  Split sp = split_word(w, z);
  PolyMatrix P = identity_matrix(w.ring(), w.nvars(), rs.dim());
  PolyMatrix Pinv = P;
  std::vector<Letter> letters;
  for (std::size_t j = 0; j < sp.constants.size(); ++j) {
    const Letter& l = sp.constants[j];
    if (!l.arg.is_zero()) {
      apply_right(P, rs, l.root, l.arg);
      apply_left(Pinv, rs, l.root, Poly(-l.arg));
    }
    if (sp.moving[j].is_zero()) continue;
    if (is_identity(P))
      letters.push_back({l.root, sp.moving[j]});
    else
      conjugate_transvection(rs, P, Pinv, l.root, sp.moving[j], s, letters);
    if (letters.size() > budget.max_letters)
      throw Error(ErrorKind::DescentBudgetExceeded, "descent exceeded " + std::to_string(budget.max_letters) + " letters");
  }
  if (!is_identity(P)) throw Error(ErrorKind::PreconditionViolated, "word is not the identity at z = 0");
  letters = reduce_letters(w.rs(), w.ring(), w.nvars(), std::move(letters));
  const int k = required_dilation(letters, z, s);
  if (k < 0 || k > budget.max_exponent)
    throw Error(ErrorKind::DescentBudgetExceeded, "dilation exponent beyond " + std::to_string(budget.max_exponent));
  auto h = finish(w, z, s, k, std::move(letters), dilated_target(w, z, s, k));
  if (!h) throw std::logic_error("dilation did not clear denominators");
  return {*h, k};
}

std::vector<int> exponent_schedule(int max_exponent) {
  std::vector<int> ks;
  for (int k = 0; k <= std::min(4, max_exponent); ++k) ks.push_back(k);
  for (int k = 6; k <= max_exponent; k = k * 3 / 2 + (k % 2)) ks.push_back(k);
  if (ks.back() != max_exponent && max_exponent > 4) ks.push_back(max_exponent);
  return ks;
}

Descent descend_recursive(const ElemWord& w, int z, const mpz_class& s, const DescentBudget& budget) {
  Split sp = split_word(w, z);
  {
    PolyMatrix prod = eval_word(ElemWord(w.rs(), w.ring(), w.nvars(), sp.constants));
    if (!is_identity(prod)) throw Error(ErrorKind::PreconditionViolated, "word is not the identity at z = 0");
  }
  Conjugator conj(w.system(), s, budget.max_letters);
  for (int k : exponent_schedule(budget.max_exponent)) {
    // W_j = l_j (u_j W_{j+1}) l_j^{-1}
    std::vector<Letter> inner;
    for (std::size_t j = sp.constants.size(); j-- > 0;) {
      if (sp.moving[j].is_zero() && inner.empty()) continue;
      std::vector<Letter> body;
      if (!sp.moving[j].is_zero()) body.push_back({sp.constants[j].root, dilate(sp.moving[j], z, s, k)});
      body.insert(body.end(), inner.begin(), inner.end());
      inner = conj.conjugate(sp.constants[j].root, sp.constants[j].arg, body);
      inner = reduce_letters(w.rs(), w.ring(), w.nvars(), std::move(inner));
    }
    if (!all_integral(inner)) continue;
    auto h = finish(w, z, s, 0, std::move(inner), dilated_target(w, z, s, k));
    return {*h, k};
  }
  throw Error(ErrorKind::DescentBudgetExceeded, "no dilation up to s^" + std::to_string(budget.max_exponent) +
                                                    " clears the denominators");
}

}  // namespace

int dilation_equalizer(const PolyMatrix& g, const PolyMatrix& h, const mpq_class& s, int z) {
  if (g.rows() != h.rows() || g.cols() != h.cols()) throw Error(ErrorKind::SizeMismatch, "matrices of different shapes");
  int bound = 0;
  for (Eigen::Index i = 0; i < g.size(); ++i) {
    if (at_zero(g(i), z) != at_zero(h(i), z)) throw Error(ErrorKind::PreconditionViolated, "g(0) != h(0)");
    const Poly diff = g(i) - h(i);
    const BaseRing ring = diff.bound() ? diff.ring() : BaseRing::integers();
    for (const auto& t : diff.terms()) {
      auto n = annihilator_exponent(ring, t.coeff, s);
      if (!n) throw Error(ErrorKind::PreconditionViolated, "localizations differ");
      bound = std::max(bound, *n);
    }
  }
  for (int n = 0; n <= bound; ++n) {
    bool same = true;
    for (Eigen::Index i = 0; i < g.size() && same; ++i) {
      if (!g(i).bound() && !h(i).bound()) {
        same = g(i) == h(i);
        continue;
      }
      const Poly& ref = g(i).bound() ? g(i) : h(i);
      mpq_class sn = 1;
      for (int r = 0; r < n; ++r) sn *= s;
      Assignment a{{z, var_of(ref.ring(), ref.nvars(), z).scaled(sn)}};
      same = substitute(g(i), a, ref.nvars()) == substitute(h(i), a, ref.nvars());
    }
    if (same) return n;
  }
  throw std::logic_error("dilation search ended without a solution");
}

Descent descend_word(const ElemWord& w, int z, const DescentBudget& budget) {
  if (z < 0 || z >= w.nvars()) throw Error(ErrorKind::PreconditionViolated, "descent variable out of range");
  if (w.ring().kind() == RingKind::Integers) return {w, 0};
  if (w.ring().kind() != RingKind::IntegersLocalized)
    throw Error(ErrorKind::BaseMismatch, "descent runs from Z[1/s], not " + w.ring().name());
  if (all_integral(w.letters())) {
    if (!congruence_check(w, z).holds) throw Error(ErrorKind::PreconditionViolated, "word is not the identity at z = 0");
    return {change_ring(w, BaseRing::integers()), 0};
  }
  const mpz_class s(static_cast<long>(w.ring().param()));
  if (w.system().type() == RootType::A && w.system().dim() >= 3) return descend_transvection(w, z, s, budget);
  if (w.system().rank() < 2) throw Error(ErrorKind::RankTooLow, "descent needs rank >= 2");
  return descend_recursive(w, z, s, budget);
}

// ---------------------------------------------------------------------------

DilationCert::DilationCert(PolyMatrix g, RootSystemPtr rs, int x, std::int64_t s, Descent descent)
    : g_(std::move(g)), rs_(std::move(rs)), x_(x), s_(s), k_(descent.k), h_(std::move(descent.h)) {}

ElemWord DilationCert::generate(const Poly& a, const Poly& b) const {
  const int n = h_.nvars() - 2;
  const BaseRing zr = BaseRing::integers();
  const Poly ab = a.bind(zr, n);
  const Poly bb = b.bind(zr, n);
  if (ab.depends_on(x_) || bb.depends_on(x_))
    throw Error(ErrorKind::PreconditionViolated, "dilation factors may not involve the dilated variable");
  const mpq_class sk(mpz_pow(mpz_class(static_cast<long>(s_)), static_cast<unsigned>(k_)));
  const Poly e = (ab - bb).scaled(1 / sk);
  if (!is_integral(e))
    throw Error(ErrorKind::PreconditionViolated,
                to_string(ab) + " and " + to_string(bb) + " differ by a non-multiple of " + sk.get_str());
  Assignment yz{{n, resize_vars(bb, n + 2)}, {n + 1, resize_vars(change_ring(e, zr), n + 2)}};
  ElemWord word = map_word(h_, Substitute{yz, n + 2});
  ElemWord out(rs_, zr, n);
  for (const auto& l : word.letters()) out.push(l.root, resize_vars(l.arg, n));
  out = free_reduce(out);

  auto scaled_x = [&](const Poly& c) {
    return Assignment{{x_, Poly::variable(zr, n, x_) * c}};
  };
  PolyMatrix ga = substitute(g_, scaled_x(ab), n);
  PolyMatrix gb = substitute(g_, scaled_x(bb), n);
  if (!equal(eval_word(out), multiply(ga, group_inverse(gb, *rs_))))
    throw std::logic_error("dilation certificate produced a word that does not verify");
  return out;
}

DilationCert dilation_factor(const PolyMatrix& g, const ElemWord& w_s, int x, const DescentBudget& budget) {
  const int n = w_s.nvars();
  const BaseRing ring = w_s.ring();
  if (ring.kind() != RingKind::IntegersLocalized && ring.kind() != RingKind::Integers)
    throw Error(ErrorKind::BaseMismatch, "dilation certificates need a word over Z[1/s]");
  if (x < 0 || x >= n) throw Error(ErrorKind::PreconditionViolated, "dilation variable out of range");
  if (!equal(eval_word(w_s), change_ring(g, ring)))
    throw Error(ErrorKind::PreconditionViolated, "local word does not evaluate to g");
  const std::int64_t s = ring.kind() == RingKind::Integers ? 1 : ring.param();

  ElemWord wide = map_word(w_s, Substitute{{}, n + 2});
  const Poly xv = Poly::variable(ring, n + 2, x);
  const Poly y = Poly::variable(ring, n + 2, n);
  const Poly z = Poly::variable(ring, n + 2, n + 1);
  ElemWord wyz = map_word(wide, Substitute{{{x, xv * (y + z)}}, n + 2});
  ElemWord wy = map_word(wide, Substitute{{{x, xv * y}}, n + 2});
  ElemWord f = concat(wyz, invert_word(wy));
  Descent d = s == 1 ? Descent{change_ring(f, BaseRing::integers()), 0} : descend_word(f, n + 1, budget);
  return DilationCert(g, w_s.rs(), x, s, std::move(d));
}

// ---------------------------------------------------------------------------

void check_covering(const CoveringData& cov) {
  const std::size_t n = cov.elems.size();
  if (n == 0 || cov.coeffs.size() != n || cov.exponents.size() != n)
    throw Error(ErrorKind::CoveringInconsistent, "covering lists differ in length or are empty");
  mpz_class sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (cov.exponents[i] < 1) throw Error(ErrorKind::CoveringInconsistent, "covering exponents must be >= 1");
    sum += cov.coeffs[i] * mpz_class(static_cast<long>(cov.elems[i]));
  }
  if (sum != 1) throw Error(ErrorKind::CoveringInconsistent, "sum c_i s_i = " + sum.get_str() + ", not 1");
}

namespace {

std::vector<mpz_class> unit_combination(const std::vector<mpz_class>& values) {
  std::vector<mpz_class> coeffs{1};
  mpz_class acc = values.front();
  for (std::size_t i = 1; i < values.size(); ++i) {
    ExtGcd eg = ext_gcd(acc, values[i]);
    for (auto& c : coeffs) c *= eg.x;
    coeffs.push_back(eg.y);
    acc = eg.g;
  }
  if (acc == -1)
    for (auto& c : coeffs) c = -c;
  else if (acc != 1)
    throw Error(ErrorKind::CoveringInconsistent, "elements generate the ideal (" + acc.get_str() + ")");
  return coeffs;
}

}  // namespace

CoveringData make_covering(const std::vector<std::int64_t>& elems) {
  if (elems.empty()) throw Error(ErrorKind::CoveringInconsistent, "empty covering");
  std::vector<mpz_class> values;
  for (auto s : elems) values.emplace_back(static_cast<long>(s));
  CoveringData cov{elems, unit_combination(values), std::vector<int>(elems.size(), 1)};
  check_covering(cov);
  return cov;
}

std::vector<mpz_class> raise_covering(const CoveringData& cov) {
  check_covering(cov);
  if (std::all_of(cov.exponents.begin(), cov.exponents.end(), [](int k) { return k == 1; })) return cov.coeffs;
  std::vector<mpz_class> powers;
  for (std::size_t i = 0; i < cov.elems.size(); ++i)
    powers.push_back(mpz_pow(mpz_class(static_cast<long>(cov.elems[i])), static_cast<unsigned>(cov.exponents[i])));
  return unit_combination(powers);
}

std::vector<mpz_class> telescoping_chain(const CoveringData& cov) {
  std::vector<mpz_class> c = raise_covering(cov);
  const std::size_t n = cov.elems.size();
  std::vector<mpz_class> chain(n + 1, 0);
  for (std::size_t j = 0; j <= n; ++j)
    for (std::size_t i = 0; i + j < n; ++i)
      chain[j] += c[i] * mpz_pow(mpz_class(static_cast<long>(cov.elems[i])), static_cast<unsigned>(cov.exponents[i]));
  return chain;
}

PolyMatrix telescoping_product(const PolyMatrix& g, const RootSystem& rs, const std::vector<mpz_class>& chain, int x) {
  const Poly& ref = g(0, 0);
  const BaseRing ring = ref.bound() ? ref.ring() : BaseRing::integers();
  const int n = ref.bound() ? ref.nvars() : 0;
  auto at = [&](const mpz_class& a) {
    return substitute(g, Assignment{{x, Poly::variable(ring, n, x).scaled(mpq_class(a))}}, n);
  };
  PolyMatrix prod = identity_matrix(ring, n, rs.dim());
  for (std::size_t j = 0; j + 1 < chain.size(); ++j)
    prod = multiply(multiply(prod, at(chain[j])), group_inverse(at(chain[j + 1]), rs));
  return prod;
}

ElemWord patch(const PolyMatrix& g, const RootSystemPtr& rs, const std::vector<DilationCert>& certs,
               const CoveringData& covering, int x) {
  check_covering(covering);
  const std::size_t N = covering.elems.size();
  std::vector<const DilationCert*> by_elem(N, nullptr);
  for (std::size_t i = 0; i < N; ++i) {
    for (const auto& c : certs)
      if (c.s() == covering.elems[i] && c.variable() == x) by_elem[i] = &c;
    if (!by_elem[i])
      throw Error(ErrorKind::CoveringInconsistent, "no certificate for s = " + std::to_string(covering.elems[i]));
    if (by_elem[i]->k() > covering.exponents[i])
      throw Error(ErrorKind::CoveringInconsistent, "certificate for s = " + std::to_string(covering.elems[i]) +
                                                       " needs exponent " + std::to_string(by_elem[i]->k()));
  }
  const std::vector<mpz_class> chain = telescoping_chain(covering);
  const int n = g(0, 0).bound() ? g(0, 0).nvars() : 0;
  const BaseRing zr = BaseRing::integers();
  ElemWord out(rs, zr, n);
  for (std::size_t j = 0; j < N; ++j) {
    const DilationCert& cert = *by_elem[N - 1 - j];
    out.append(cert.generate(Poly::constant(zr, n, mpq_class(chain[j])), Poly::constant(zr, n, mpq_class(chain[j + 1]))));
  }
  out = free_reduce(out);
  PolyMatrix g0 = substitute(g, Assignment{{x, Poly::constant(zr, n, 0)}}, n);
  if (!equal(eval_word(out), multiply(g, group_inverse(g0, *rs))))
    throw std::logic_error("patched word does not verify");
  return out;
}

}  // namespace chev
