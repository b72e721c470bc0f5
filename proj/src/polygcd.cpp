// Exact division and gcd of multivariate polynomials, by recursion on the
// main variable with primitive pseudo-remainder sequences.

#include "chev/exactring.hpp"

namespace chev {

std::optional<Poly> exact_divide(const Poly& p, const Poly& q) {
  if (q.is_zero()) throw Error(ErrorKind::PreconditionViolated, "division by zero");
  if (p.is_zero()) return p;
  const BaseRing ring = q.bound() ? q.ring() : (p.bound() ? p.ring() : BaseRing::integers());
  const int nvars = q.bound() ? q.nvars() : p.nvars();
  Poly r = p.bind(ring, nvars);
  Poly quotient(ring, nvars);
  const Term lq = q.leading();
  while (!r.is_zero()) {
    const Term& lr = r.leading();
    if (!lq.mono.divides(lr.mono)) return std::nullopt;
    const mpq_class c = lr.coeff / lq.coeff;
    if (!ring.contains(c)) return std::nullopt;
    Poly t = Poly::monomial(ring, nvars, lr.mono.quotient(lq.mono), c);
    r -= t * q;
    quotient += t;
  }
  return quotient;
}

std::vector<Poly> coefficients_in(const Poly& p, int var) {
  const int deg = p.degree_in(var);
  if (deg < 0) return {};
  std::vector<std::vector<Term>> buckets(deg + 1);
  for (const auto& t : p.terms()) {
    Term c = t;
    const int e = c.mono.exp[var];
    c.mono.exp[var] = 0;
    buckets[e].push_back(std::move(c));
  }
  std::vector<Poly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(Poly::from_terms(p.ring(), p.nvars(), std::move(b)));
  return out;
}

namespace {

Poly normalize_sign(const Poly& p) {
  if (p.is_zero()) return p;
  if (p.ring().is_field()) return p.scaled(1 / p.leading().coeff);
  return p.leading().coeff < 0 ? -p : p;
}

int main_variable(const Poly& a, const Poly& b) {
  for (int v = a.nvars() - 1; v >= 0; --v)
    if (a.depends_on(v) || b.depends_on(v)) return v;
  return -1;
}

Poly gcd_rec(const Poly& a, const Poly& b);

Poly content_in(const Poly& p, int var) {
  Poly c(p.ring(), p.nvars());
  for (const auto& coeff : coefficients_in(p, var)) {
    if (coeff.is_zero()) continue;
    c = gcd_rec(c, coeff);
    if (c.is_constant() && (p.ring().is_field() || abs(c.constant_term()) == 1)) break;
  }
  return c;
}

Poly divide_or_throw(const Poly& p, const Poly& q) {
  auto r = exact_divide(p, q);
  if (!r) throw std::logic_error("gcd: inexact division");
  return *r;
}

Poly primitive_in(const Poly& p, int var) {
  if (p.is_zero()) return p;
  return divide_or_throw(p, content_in(p, var));
}

Poly var_power(const Poly& like, int var, int e) {
  Monomial m;
  m.exp[var] = static_cast<std::uint16_t>(e);
  return Poly::monomial(like.ring(), like.nvars(), m, 1);
}

// lc(b)^* a reduced below deg_var(b).
Poly pseudo_remainder(Poly a, const Poly& b, int var) {
  const int db = b.degree_in(var);
  const Poly lb = coefficients_in(b, var).back();
  while (!a.is_zero() && a.degree_in(var) >= db) {
    const int da = a.degree_in(var);
    const Poly la = coefficients_in(a, var).back();
    a = lb * a - la * var_power(a, var, da - db) * b;
  }
  return a;
}

Poly gcd_rec(const Poly& a, const Poly& b) {
  if (a.is_zero()) return normalize_sign(b);
  if (b.is_zero()) return normalize_sign(a);
  const int v = main_variable(a, b);
  if (v < 0) {
    if (a.ring().is_field()) return Poly::constant(a.ring(), a.nvars(), 1);
    mpz_class g = gcd(a.constant_term().get_num(), b.constant_term().get_num());
    return Poly::constant(a.ring(), a.nvars(), mpq_class(g));
  }
  const Poly ca = content_in(a, v);
  const Poly cb = content_in(b, v);
  const Poly c = gcd_rec(ca, cb);
  Poly x = divide_or_throw(a, ca);
  Poly y = divide_or_throw(b, cb);
  if (x.degree_in(v) < y.degree_in(v)) std::swap(x, y);
  while (!y.is_zero() && y.degree_in(v) > 0) {
    Poly r = pseudo_remainder(x, y, v);
    x = std::move(y);
    y = primitive_in(r, v);
  }
  if (!y.is_zero()) return normalize_sign(c);  // coprime in v
  return normalize_sign(c * primitive_in(x, v));
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
  const Poly& ref = a.bound() ? a : b;
  if (!ref.bound()) {
    mpz_class g = gcd(a.constant_term().get_num(), b.constant_term().get_num());
    return Poly(g.get_si());
  }
  const BaseRing ring = ref.ring();
  if (ring.kind() != RingKind::Integers && !ring.is_field())
    throw Error(ErrorKind::UnsupportedType, "gcd over " + ring.name());
  return gcd_rec(a.bind(ring, ref.nvars()), b.bind(ring, ref.nvars()));
}

}  // namespace chev
