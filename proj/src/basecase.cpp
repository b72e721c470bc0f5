// Dimension <= 1 base cases: constant matrices over Euclidean coefficient
// rings, univariate matrices over a field, and the monic localization.

#include <utility>

#include "chev/factorize.hpp"
#include "euclid.hpp"

namespace chev {

namespace {

mpz_class strip(mpz_class n, const mpz_class& s) {
  if (n == 0) return n;
  for (;;) {
    mpz_class g = gcd(n, s);
    if (g == 1) return n;
    while (n % g == 0) n /= g;
  }
}

mpz_class round_div(const mpq_class& q) {
  mpq_class h = q + mpq_class(1, 2);
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), h.get_num_mpz_t(), h.get_den_mpz_t());
  return f;
}

// Size of c modulo units: smaller is closer to a unit; 1 exactly for units.
mpz_class unit_free_size(const BaseRing& ring, const mpq_class& c) {
  if (c == 0) return 0;
  switch (ring.kind()) {
    case RingKind::Integers: return abs(c.get_num());
    case RingKind::IntegersLocalized: return abs(strip(c.get_num(), mpz_class(static_cast<long>(ring.param()))));
    case RingKind::IntegersAtPrime: {
      mpz_class n = abs(c.get_num()), p(static_cast<long>(ring.param())), out = 1;
      while (n % p == 0) {
        n /= p;
        out *= p;
      }
      return out;
    }
    case RingKind::Rationals:
    case RingKind::PrimeField: return 1;
    case RingKind::IntegersMod: break;
  }
  throw Error(ErrorKind::UnsupportedType, "no division with remainder over " + ring.name());
}

// q with size(a - q b) < size(b), or 0.
mpq_class coeff_quotient(const BaseRing& ring, const mpq_class& a, const mpq_class& b) {
  switch (ring.kind()) {
    case RingKind::Integers: return round_div(a / b);
    case RingKind::IntegersLocalized: {
      const mpz_class s(static_cast<long>(ring.param()));
      const mpz_class sa = strip(a.get_num(), s), sb = strip(b.get_num(), s);
      const mpq_class ua = a / sa, ub = b / sb;
      return ring.normalize(mpq_class(round_div(mpq_class(sa) / sb)) * ua / ub);
    }
    default: {
      const mpq_class q = a / b;
      return ring.contains(q) ? ring.normalize(q) : mpq_class(0);
    }
  }
}

struct ConstTraits {
  BaseRing ring;
  mpz_class norm(const Poly& a) const { return unit_free_size(ring, a.constant_term()); }
  bool is_unit(const Poly& a) const { return ring.is_unit(a.constant_term()); }
  Poly inverse(const Poly& a) const { return Poly::constant(ring, a.nvars(), ring.inverse(a.constant_term())); }
  Poly quotient(const Poly& a, const Poly& b) const {
    return Poly::constant(ring, a.nvars(), coeff_quotient(ring, a.constant_term(), b.constant_term()));
  }
};

struct FieldPolyTraits {
  int var;
  int norm(const Poly& a) const { return a.degree_in(var); }
  bool is_unit(const Poly& a) const { return a.is_constant() && !a.is_zero(); }
  Poly inverse(const Poly& a) const {
    return Poly::constant(a.ring(), a.nvars(), a.ring().inverse(a.constant_term()));
  }
  Poly quotient(const Poly& a, const Poly& b) const { return unit_lc_divrem(a, b, var).quotient; }
};

Poly var_power(const Poly& like, int var, int e) {
  Monomial m;
  m.exp[var] = static_cast<std::uint16_t>(e);
  return Poly::monomial(like.ring(), like.nvars(), m, 1);
}

struct LocTraits {
  BaseRing ring;
  int var;
  std::pair<mpz_class, int> norm(const MonicLocElem& a) const {
    const Poly& n = a.numerator();
    return {unit_free_size(ring, coefficients_in(n, var).back().constant_term()), n.degree_in(var)};
  }
  bool is_unit(const MonicLocElem& a) const { return a.is_unit(); }
  MonicLocElem inverse(const MonicLocElem& a) const { return a.inverse(); }
  // Cancels the leading term of a's numerator against b's, allowing a power
  // of the monic x in the denominator.
  MonicLocElem quotient(const MonicLocElem& a, const MonicLocElem& b) const {
    const Poly& na = a.numerator();
    const Poly& nb = b.numerator();
    const mpq_class c =
        coeff_quotient(ring, coefficients_in(na, var).back().constant_term(), coefficients_in(nb, var).back().constant_term());
    if (c == 0) return MonicLocElem(0);
    const int j = na.degree_in(var) - nb.degree_in(var);
    Poly num = b.denominator().bind(ring, na.nvars()).scaled(c);
    Poly den = a.denominator().bind(ring, na.nvars());
    if (j >= 0)
      num *= var_power(na, var, j);
    else
      den *= var_power(na, var, -j);
    return MonicLocElem(num, den, 1, var);
  }
};

template <class Scalar>
std::vector<Letter> inverse_ops(const std::vector<std::pair<int, Scalar>>& ops) {
  std::vector<Letter> out;
  out.reserve(ops.size());
  for (const auto& [root, t] : ops) out.push_back({root, -t});
  return out;
}

const BaseRing& ring_of(const PolyMatrix& g) {
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j)
      if (g(i, j).bound()) return g(i, j).ring();
  throw Error(ErrorKind::PreconditionViolated, "matrix carries no ring");
}

int nvars_of(const PolyMatrix& g) {
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j)
      if (g(i, j).bound()) return g(i, j).nvars();
  return 0;
}

void check_shape(const PolyMatrix& g, const RootSystem& rs) {
  if (g.rows() != rs.dim() || g.cols() != rs.dim())
    throw Error(ErrorKind::SizeMismatch, "matrix size does not match " + rs.name());
}

ElemWord verified(ElemWord w, const PolyMatrix& g) {
  if (!equal(eval_word(w), g)) throw std::logic_error("factorization does not multiply back");
  return w;
}

}  // namespace

void check_budget(const Budget& b) {
  if (b.max_letters == 0 || b.max_degree <= 0 || b.max_coeff_bits == 0 || b.max_steps == 0)
    throw Error(ErrorKind::PreconditionViolated, "budget fields must be positive");
}

std::size_t max_coeff_bits(const PolyMatrix& m) {
  std::size_t bits = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      for (const auto& t : m(i, j).terms()) {
        bits = std::max(bits, mpz_sizeinbase(t.coeff.get_num_mpz_t(), 2));
        bits = std::max(bits, mpz_sizeinbase(t.coeff.get_den_mpz_t(), 2));
      }
  return bits;
}

ElemWord factor_constant(const PolyMatrix& g, const RootSystemPtr& rs) {
  check_shape(g, *rs);
  if (!is_constant(g)) throw Error(ErrorKind::PreconditionViolated, "entries must be constant");
  const BaseRing ring = ring_of(g);
  const int nvars = nvars_of(g);
  PolyMatrix m = g.unaryExpr([&](const Poly& p) { return p.bind(ring, nvars); });
  detail::RowOps<Poly> ro(m, *rs, std::size_t(-1), ErrorKind::NotInGroup);
  detail::reduce(ro, ConstTraits{ring});
  return verified(ElemWord(rs, ring, nvars, inverse_ops(ro.ops())), g);
}

ElemWord factor_integer_sl(const PolyMatrix& g) {
  if (g.rows() != g.cols() || g.rows() < 2) throw Error(ErrorKind::SizeMismatch, "expected a square matrix, N >= 2");
  if (ring_of(g).kind() != RingKind::Integers) throw Error(ErrorKind::PreconditionViolated, "entries must be integers");
  auto rs = make_root_system(RootType::A, static_cast<int>(g.rows()) - 1, true);
  if (!membership_check(g, *rs)) throw Error(ErrorKind::NotInGroup, "determinant is not 1");
  return factor_constant(g, rs);
}

ElemWord factor_integer_sp(const PolyMatrix& g, const RootSystemPtr& rs) {
  if (rs->type() != RootType::C) throw Error(ErrorKind::PreconditionViolated, "expected a symplectic root system");
  check_shape(g, *rs);
  if (ring_of(g).kind() != RingKind::Integers) throw Error(ErrorKind::PreconditionViolated, "entries must be integers");
  if (!membership_check(g, *rs)) throw Error(ErrorKind::NotInGroup, "matrix is not symplectic");
  return factor_constant(g, rs);
}

ElemWord factor_univar_euclidean(const PolyMatrix& g, const RootSystemPtr& rs, int var) {
  check_shape(g, *rs);
  const BaseRing ring = ring_of(g);
  const int nvars = nvars_of(g);
  if (!ring.is_field()) throw Error(ErrorKind::PreconditionViolated, "coefficients must lie in a field");
  if (var < 0 || var >= std::max(nvars, 1)) throw Error(ErrorKind::PreconditionViolated, "variable out of range");
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j)
      for (int v = 0; v < nvars; ++v)
        if (v != var && g(i, j).depends_on(v))
          throw Error(ErrorKind::PreconditionViolated, "entries must be univariate");
  if (!membership_check(g, *rs)) throw Error(ErrorKind::NotInGroup, "not in " + rs->name());
  PolyMatrix m = g.unaryExpr([&](const Poly& p) { return p.bind(ring, nvars); });
  detail::RowOps<Poly> ro(m, *rs, std::size_t(-1), ErrorKind::NotInGroup);
  detail::reduce(ro, FieldPolyTraits{var});
  return verified(ElemWord(rs, ring, nvars, inverse_ops(ro.ops())), g);
}

LocWord factor_monic_localized(const LocMatrix& g, const RootSystemPtr& rs, std::size_t max_steps) {
  if (rs->type() != RootType::A) throw Error(ErrorKind::UnsupportedType, "monic localization is implemented for type A");
  if (g.rows() != rs->dim() || g.cols() != rs->dim()) throw Error(ErrorKind::SizeMismatch, "matrix size");
  std::optional<BaseRing> ring;
  int var = 0;
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j) {
      const Poly& n = g(i, j).numerator();
      if (!n.bound()) continue;
      if (!ring) {
        ring = n.ring();
        var = g(i, j).var();
      }
      for (int v = 0; v < n.nvars(); ++v)
        if (v != var && n.depends_on(v)) throw Error(ErrorKind::PreconditionViolated, "entries must be univariate");
    }
  if (!ring) ring = BaseRing::integers();
  if (determinant(g) != MonicLocElem(1)) throw Error(ErrorKind::NotInGroup, "determinant is not 1");
  LocMatrix m = g;
  detail::RowOps<MonicLocElem> ro(m, *rs, max_steps, ErrorKind::DescentBudgetExceeded);
  detail::reduce(ro, LocTraits{*ring, var});
  LocWord w{rs, {}};
  for (const auto& [root, t] : ro.ops()) w.letters.push_back({root, -t});
  if (!equal(eval_word(w), g)) throw std::logic_error("localized factorization does not multiply back");
  return w;
}

ElemWord descend_monic(const PolyMatrix& g, const RootSystemPtr& rs, const LocWord& w_f, std::size_t max_steps) {
  check_shape(g, *rs);
  const BaseRing ring = ring_of(g);
  const int nvars = nvars_of(g);
  int var = 0;
  bool polynomial = true;
  for (const auto& l : w_f.letters) {
    polynomial = polynomial && l.arg.is_polynomial();
    var = l.arg.var();
  }
  if (!equal(eval_word(w_f), to_loc_matrix(g, var)))
    throw Error(ErrorKind::PreconditionViolated, "localized word does not evaluate to g");
  if (polynomial) {
    ElemWord w(rs, ring, nvars);
    for (const auto& l : w_f.letters) w.push(l.root, l.arg.numerator());
    return verified(std::move(w), g);
  }
  if (is_identity(g)) return ElemWord(rs, ring, nvars);
  if (max_steps == 0) throw Error(ErrorKind::DescentBudgetExceeded, "no budget for descent");
  // The localized word only certifies the class of g; rebuild over A[x]
  // directly within the step budget.
  Budget b;
  b.max_steps = max_steps;
  Reduction r = heuristic_reduce(g, rs, b);
  if (!is_identity(r.residual))
    throw Error(ErrorKind::DescentBudgetExceeded, "descent did not finish within " + std::to_string(max_steps) + " steps");
  return verified(std::move(r.word), g);
}

}  // namespace chev
