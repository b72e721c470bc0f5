#include "chev/exactring.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <sstream>

namespace chev {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BaseMismatch: return "BaseMismatch";
    case ErrorKind::NotInRing: return "NotInRing";
    case ErrorKind::SearchBoundExceeded: return "SearchBoundExceeded";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::RankTooLow: return "RankTooLow";
    case ErrorKind::UnsupportedType: return "UnsupportedType";
    case ErrorKind::UnknownRoot: return "UnknownRoot";
    case ErrorKind::ProportionalRoots: return "ProportionalRoots";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::DescentBudgetExceeded: return "DescentBudgetExceeded";
    case ErrorKind::CoveringInconsistent: return "CoveringInconsistent";
    case ErrorKind::NotInGroup: return "NotInGroup";
    case ErrorKind::NotFactored: return "NotFactored";
  }
  return "Error";
}

// ---------------------------------------------------------------------------
// integers

ExtGcd ext_gcd(const mpz_class& a, const mpz_class& b) {
  ExtGcd r;
  mpz_gcdext(r.g.get_mpz_t(), r.x.get_mpz_t(), r.y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  mpz_class z(static_cast<long>(n));
  return mpz_probab_prime_p(z.get_mpz_t(), 40) > 0;
}

namespace {

// Strips from |value| every prime factor shared with s; returns what is left.
mpz_class strip_factors_of(mpz_class value, const mpz_class& s) {
  value = abs(value);
  if (value == 0) return value;
  for (;;) {
    mpz_class g = gcd(value, s);
    if (g == 1) break;
    while (value % g == 0) value /= g;
  }
  return value;
}

int max_prime_exponent(std::int64_t m) {
  int best = 0;
  std::int64_t n = m;
  for (std::int64_t q = 2; q * q <= n; ++q) {
    int e = 0;
    while (n % q == 0) {
      n /= q;
      ++e;
    }
    best = std::max(best, e);
  }
  if (n > 1) best = std::max(best, 1);
  return best;
}

}  // namespace

// ---------------------------------------------------------------------------
// BaseRing

BaseRing BaseRing::integers_mod(std::int64_t m) {
  if (m < 2) throw Error(ErrorKind::PreconditionViolated, "modulus must be >= 2");
  return BaseRing(RingKind::IntegersMod, m);
}

BaseRing BaseRing::prime_field(std::int64_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::PreconditionViolated, "F_p needs a prime p, got " + std::to_string(p));
  return BaseRing(RingKind::PrimeField, p);
}

BaseRing BaseRing::localized(std::int64_t s) {
  if (s == 0) throw Error(ErrorKind::PreconditionViolated, "cannot localize at 0");
  return BaseRing(RingKind::IntegersLocalized, s);
}

BaseRing BaseRing::at_prime(std::int64_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::PreconditionViolated, "Z_(p) needs a prime p, got " + std::to_string(p));
  return BaseRing(RingKind::IntegersAtPrime, p);
}

BaseRing BaseRing::parse(std::string_view text) {
  auto number = [&](std::string_view digits) -> std::int64_t {
    if (digits.empty()) throw Error(ErrorKind::ParseError, "bad ring: " + std::string(text));
    std::string str(digits);
    char* end = nullptr;
    long long v = std::strtoll(str.c_str(), &end, 10);
    if (*end != '\0') throw Error(ErrorKind::ParseError, "bad ring: " + std::string(text));
    return v;
  };
  if (text == "Z") return integers();
  if (text == "Q") return rationals();
  if (text.starts_with("Z/")) return integers_mod(number(text.substr(2)));
  if (text.starts_with("F")) return prime_field(number(text.substr(1)));
  if (text.starts_with("Z[1/") && text.ends_with("]")) return localized(number(text.substr(4, text.size() - 5)));
  if (text.starts_with("Z_(") && text.ends_with(")")) return at_prime(number(text.substr(3, text.size() - 4)));
  throw Error(ErrorKind::ParseError, "unknown ring: " + std::string(text));
}

std::string BaseRing::name() const {
  switch (kind_) {
    case RingKind::Integers: return "Z";
    case RingKind::Rationals: return "Q";
    case RingKind::IntegersMod: return "Z/" + std::to_string(param_);
    case RingKind::PrimeField: return "F" + std::to_string(param_);
    case RingKind::IntegersLocalized: return "Z[1/" + std::to_string(param_) + "]";
    case RingKind::IntegersAtPrime: return "Z_(" + std::to_string(param_) + ")";
  }
  return "?";
}

mpq_class BaseRing::normalize(const mpq_class& value) const {
  mpq_class v = value;
  v.canonicalize();
  switch (kind_) {
    case RingKind::Integers:
      if (v.get_den() != 1) throw Error(ErrorKind::NotInRing, v.get_str() + " is not an integer");
      return v;
    case RingKind::Rationals:
      return v;
    case RingKind::IntegersLocalized: {
      mpz_class s(static_cast<long>(param_));
      if (strip_factors_of(v.get_den(), s) != 1)
        throw Error(ErrorKind::NotInRing, v.get_str() + " is not in " + name());
      return v;
    }
    case RingKind::IntegersAtPrime:
      if (v.get_den() % param_ == 0) throw Error(ErrorKind::NotInRing, v.get_str() + " is not in " + name());
      return v;
    case RingKind::IntegersMod:
    case RingKind::PrimeField: {
      mpz_class m(static_cast<long>(param_));
      mpz_class num = v.get_num();
      if (v.get_den() != 1) {
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), v.get_den().get_mpz_t(), m.get_mpz_t()) == 0)
          throw Error(ErrorKind::NotInRing, v.get_str() + " has no image in " + name());
        num *= inv;
      }
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), m.get_mpz_t());
      return mpq_class(r);
    }
  }
  return v;
}

bool BaseRing::contains(const mpq_class& value) const {
  try {
    normalize(value);
    return true;
  } catch (const Error&) {
    return false;
  }
}

bool BaseRing::is_unit(const mpq_class& value) const {
  mpq_class v = normalize(value);
  if (v == 0) return false;
  switch (kind_) {
    case RingKind::Integers: return abs(v) == 1;
    case RingKind::Rationals: return true;
    case RingKind::IntegersLocalized:
      return strip_factors_of(v.get_num(), mpz_class(static_cast<long>(param_))) == 1;
    case RingKind::IntegersAtPrime:
      return v.get_num() % param_ != 0;
    case RingKind::IntegersMod:
    case RingKind::PrimeField:
      return gcd(v.get_num(), mpz_class(static_cast<long>(param_))) == 1;
  }
  return false;
}

mpq_class BaseRing::inverse(const mpq_class& value) const {
  if (!is_unit(value)) throw Error(ErrorKind::NotAUnit, normalize(value).get_str() + " in " + name());
  mpq_class v = normalize(value);
  if (is_finite()) {
    mpz_class inv;
    mpz_class m(static_cast<long>(param_));
    mpz_invert(inv.get_mpz_t(), v.get_num().get_mpz_t(), m.get_mpz_t());
    return mpq_class(inv);
  }
  return normalize(1 / v);
}

// ---------------------------------------------------------------------------
// Monomial

int Monomial::degree() const {
  int d = 0;
  for (auto e : exp) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (int i = 0; i < kMaxVars; ++i)
    if (exp[i] > other.exp[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::uint16_t>(exp[i] + other.exp[i]);
  return r;
}

Monomial Monomial::quotient(const Monomial& other) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::uint16_t>(exp[i] - other.exp[i]);
  return r;
}

bool grlex_greater(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  for (int i = 0; i < kMaxVars; ++i)
    if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i];
  return false;
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(long value) {
  if (value != 0) terms_.push_back({Monomial{}, mpq_class(value)});
}

Poly::Poly(const BaseRing& ring, int nvars) : ring_(ring), nvars_(nvars), bound_(true) {
  if (nvars < 0 || nvars > kMaxVars) throw Error(ErrorKind::PreconditionViolated, "variable count out of range");
}

Poly Poly::constant(const BaseRing& ring, int nvars, const mpq_class& value) {
  Poly p(ring, nvars);
  mpq_class v = ring.normalize(value);
  if (v != 0) p.terms_.push_back({Monomial{}, v});
  return p;
}

Poly Poly::variable(const BaseRing& ring, int nvars, int index) {
  if (index < 0 || index >= nvars) throw Error(ErrorKind::PreconditionViolated, "variable index out of range");
  Monomial m;
  m.exp[index] = 1;
  return monomial(ring, nvars, m, 1);
}

Poly Poly::monomial(const BaseRing& ring, int nvars, const Monomial& mono, const mpq_class& coeff) {
  Poly p(ring, nvars);
  mpq_class v = ring.normalize(coeff);
  if (v != 0) p.terms_.push_back({mono, v});
  return p;
}

Poly Poly::from_terms(const BaseRing& ring, int nvars, std::vector<Term> terms) {
  Poly p(ring, nvars);
  p.terms_ = std::move(terms);
  p.canonicalize();
  return p;
}

void Poly::canonicalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return grlex_greater(a.mono, b.mono); });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().mono == t.mono)
      merged.back().coeff += t.coeff;
    else
      merged.push_back(std::move(t));
  }
  terms_.clear();
  for (auto& t : merged) {
    if (bound_) t.coeff = ring_.normalize(t.coeff);
    if (t.coeff != 0) terms_.push_back(std::move(t));
  }
}

Poly Poly::bind(const BaseRing& ring, int nvars) const {
  if (bound_) {
    if (!(ring_ == ring) || nvars_ != nvars)
      throw Error(ErrorKind::BaseMismatch, "expected " + ring.name() + " in " + std::to_string(nvars) +
                                               " vars, got " + ring_.name() + " in " + std::to_string(nvars_));
    return *this;
  }
  Poly p(ring, nvars);
  p.terms_ = terms_;
  p.canonicalize();
  return p;
}

void Poly::unify(const Poly& other) {
  if (!other.bound_) return;
  if (!bound_) {
    *this = bind(other.ring_, other.nvars_);
    return;
  }
  if (!(ring_ == other.ring_) || nvars_ != other.nvars_)
    throw Error(ErrorKind::BaseMismatch, ring_.name() + "[" + std::to_string(nvars_) + "] vs " +
                                             other.ring_.name() + "[" + std::to_string(other.nvars_) + "]");
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.degree() == 0); }

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.degree() == 0 && terms_[0].coeff == 1;
}

mpq_class Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.degree() == 0) return terms_.back().coeff;
  return 0;
}

mpq_class Poly::coeff(const Monomial& mono) const {
  for (const auto& t : terms_)
    if (t.mono == mono) return t.coeff;
  return 0;
}

int Poly::degree() const { return terms_.empty() ? -1 : terms_.front().mono.degree(); }

int Poly::degree_in(int var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.exp[var]));
  return d;
}

bool Poly::depends_on(int var) const {
  for (const auto& t : terms_)
    if (t.mono.exp[var] != 0) return true;
  return false;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  if (bound_)
    for (auto& t : r.terms_) t.coeff = ring_.normalize(t.coeff);
  return r;
}

namespace {

std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract,
                              const BaseRing& ring, bool bound) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  auto push = [&](const Monomial& m, mpq_class c) {
    if (bound) c = ring.normalize(c);
    if (c != 0) out.push_back({m, std::move(c)});
  };
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grlex_greater(a[i].mono, b[j].mono))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || grlex_greater(b[j].mono, a[i].mono)) {
      push(b[j].mono, subtract ? mpq_class(-b[j].coeff) : b[j].coeff);
      ++j;
    } else {
      push(a[i].mono, subtract ? mpq_class(a[i].coeff - b[j].coeff) : mpq_class(a[i].coeff + b[j].coeff));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& other) {
  unify(other);
  terms_ = merge_terms(terms_, other.terms_, false, ring_, bound_);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  unify(other);
  terms_ = merge_terms(terms_, other.terms_, true, ring_, bound_);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r = a;
  r.unify(b);
  if (a.terms_.empty() || b.terms_.empty()) {
    r.terms_.clear();
    return r;
  }
  if (b.is_constant()) return r.scaled(b.terms_[0].coeff);
  if (a.is_constant()) {
    Poly s = b;
    s.unify(r);
    return s.scaled(a.terms_[0].coeff);
  }
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) prod.push_back({ta.mono * tb.mono, ta.coeff * tb.coeff});
  r.terms_ = std::move(prod);
  r.canonicalize();
  return r;
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly Poly::scaled(const mpq_class& factor) const {
  Poly r = *this;
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    mpq_class c = t.coeff * factor;
    if (bound_) c = ring_.normalize(c);
    if (c != 0) out.push_back({t.mono, std::move(c)});
  }
  r.terms_ = std::move(out);
  return r;
}

Poly Poly::pow(unsigned exponent) const {
  Poly result = bound_ ? constant(ring_, nvars_, 1) : Poly(1);
  Poly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.bound_ && b.bound_ && (!(a.ring_ == b.ring_) || a.nvars_ != b.nvars_)) return false;
  if (a.bound_ != b.bound_) {
    const Poly& bound = a.bound_ ? a : b;
    const Poly& free = a.bound_ ? b : a;
    return bound == free.bind(bound.ring_, bound.nvars_);
  }
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

Poly poly_op(PolyOpKind kind, const Poly& p, const std::optional<Poly>& q) {
  switch (kind) {
    case PolyOpKind::Neg: return -p;
    case PolyOpKind::Add:
      if (!q) throw Error(ErrorKind::PreconditionViolated, "add needs two operands");
      return p + *q;
    case PolyOpKind::Mul:
      if (!q) throw Error(ErrorKind::PreconditionViolated, "mul needs two operands");
      return p * *q;
  }
  return p;
}

// ---------------------------------------------------------------------------
// homomorphisms

Poly substitute(const Poly& p, const Assignment& assignment, int target_nvars) {
  if (!p.bound()) return p;
  for (const auto& [var, image] : assignment) {
    if (var < 0 || var >= p.nvars()) throw Error(ErrorKind::PreconditionViolated, "substitution of unknown variable");
    if (image.bound() && !(image.ring() == p.ring()))
      throw Error(ErrorKind::BaseMismatch, "substitution image over " + image.ring().name());
  }
  const BaseRing& ring = p.ring();
  std::map<std::pair<int, int>, Poly> powers;
  auto power_of = [&](int var, int e) -> const Poly& {
    auto key = std::make_pair(var, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    Poly image;
    auto found = assignment.find(var);
    if (found != assignment.end())
      image = found->second.bind(ring, target_nvars);
    else
      image = Poly::variable(ring, target_nvars, var);
    return powers.emplace(key, image.pow(static_cast<unsigned>(e))).first->second;
  };
  Poly result(ring, target_nvars);
  for (const auto& t : p.terms()) {
    Poly term = Poly::constant(ring, target_nvars, t.coeff);
    for (int v = 0; v < p.nvars(); ++v)
      if (t.mono.exp[v] != 0) term *= power_of(v, t.mono.exp[v]);
    result += term;
  }
  return result;
}

Poly substitute(const Poly& p, const Assignment& assignment) {
  int target = p.nvars();
  for (const auto& [var, image] : assignment)
    if (image.bound()) target = image.nvars();
  return substitute(p, assignment, target);
}

Poly change_ring(const Poly& p, const BaseRing& ring) {
  if (!p.bound()) return p;
  std::vector<Term> terms = p.terms();
  return Poly::from_terms(ring, p.nvars(), std::move(terms));
}

Poly resize_vars(const Poly& p, int nvars) {
  if (!p.bound()) return p;
  for (int v = nvars; v < p.nvars(); ++v)
    if (p.depends_on(v)) throw Error(ErrorKind::PreconditionViolated, "cannot drop a variable that occurs");
  std::vector<Term> terms = p.terms();
  return Poly::from_terms(p.ring(), nvars, std::move(terms));
}

// ---------------------------------------------------------------------------
// localization

std::optional<int> annihilator_exponent(const BaseRing& ring, const mpq_class& d, const mpq_class& s,
                                        std::optional<int> search_bound) {
  mpq_class dn = ring.normalize(d);
  mpq_class sn = ring.normalize(s);
  if (dn == 0) return 0;
  if (ring.is_domain()) {
    if (sn == 0) return 1;
    return std::nullopt;
  }
  const std::int64_t m = ring.param();
  const int exact = max_prime_exponent(m);
  const int limit = search_bound ? std::min(*search_bound, exact) : exact;
  mpz_class mod(static_cast<long>(m));
  mpz_class acc = dn.get_num();
  for (int n = 0; n <= limit; ++n) {
    if (acc % mod == 0) return n;
    acc = (acc * sn.get_num()) % mod;
  }
  if (search_bound && *search_bound < exact)
    throw Error(ErrorKind::SearchBoundExceeded, "annihilator search stopped at " + std::to_string(*search_bound));
  return std::nullopt;
}

bool localize_eq(const Poly& a, const Poly& b, const mpq_class& s, std::optional<int> search_bound) {
  Poly diff = a - b;
  const BaseRing ring = diff.bound() ? diff.ring() : BaseRing::integers();
  for (const auto& t : diff.terms())
    if (!annihilator_exponent(ring, t.coeff, s, search_bound)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// division

namespace {

// Terms of p whose var-degree equals deg, with that power of var removed.
Poly top_coefficient(const Poly& p, int var, int deg) {
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    if (t.mono.exp[var] == deg) {
      Term c = t;
      c.mono.exp[var] = 0;
      out.push_back(std::move(c));
    }
  }
  if (!p.bound()) return deg == 0 ? p : Poly(0);
  return Poly::from_terms(p.ring(), p.nvars(), std::move(out));
}

Poly var_power(const Poly& like, int var, int e) {
  Monomial m;
  m.exp[var] = static_cast<std::uint16_t>(e);
  return Poly::monomial(like.ring(), like.nvars(), m, 1);
}

DivRem divide_by_top(const Poly& g, const Poly& f, int var, const mpq_class& lc_inverse) {
  const int d = f.degree_in(var);
  Poly r = g.bind(f.ring(), f.nvars());
  Poly q(f.ring(), f.nvars());
  while (!r.is_zero()) {
    const int D = r.degree_in(var);
    if (D < d) break;
    Poly t = top_coefficient(r, var, D).scaled(lc_inverse) * var_power(f, var, D - d);
    q += t;
    r -= t * f;
  }
  return {q, r};
}

}  // namespace

bool is_monic_in(const Poly& f, int var) {
  if (f.is_zero()) return false;
  const int d = f.degree_in(var);
  return top_coefficient(f, var, d).is_one();
}

DivRem monic_divrem(const Poly& g, const Poly& f, int var) {
  if (!is_monic_in(f, var)) throw Error(ErrorKind::NotMonic, to_string(f));
  if (!f.bound()) return {g, Poly(0)};
  return divide_by_top(g, f, var, 1);
}

DivRem unit_lc_divrem(const Poly& g, const Poly& f, int var) {
  if (f.is_zero()) throw Error(ErrorKind::NotAUnit, "division by zero");
  Poly lc = top_coefficient(f, var, f.degree_in(var));
  if (!lc.is_constant()) throw Error(ErrorKind::NotAUnit, "leading coefficient is not a constant");
  const BaseRing ring = f.bound() ? f.ring() : (g.bound() ? g.ring() : BaseRing::integers());
  mpq_class inv = ring.inverse(lc.constant_term());
  Poly fb = f.bound() ? f : f.bind(ring, g.bound() ? g.nvars() : 0);
  return divide_by_top(g, fb, var, inv);
}

std::optional<int> s_valuation(const Poly& p, const mpz_class& s) {
  if (p.is_zero()) return std::nullopt;
  const mpz_class as = abs(s);
  if (as <= 1) throw Error(ErrorKind::PreconditionViolated, "s-adic valuation needs |s| > 1");
  int best = 0;
  bool first = true;
  for (const auto& t : p.terms()) {
    mpq_class c = t.coeff;
    int k = 0;
    mpz_class den = c.get_den();
    mpz_class num = c.get_num();
    while (den != 1) {
      mpz_class g = gcd(den, as);
      if (g == 1) throw Error(ErrorKind::NotInRing, c.get_str() + " has a denominator coprime to s");
      // multiply by s once
      num *= as / g;
      den /= g;
      ++k;
    }
    int v = -k;
    if (k == 0) {
      while (num != 0 && num % as == 0) {
        num /= as;
        ++v;
      }
    }
    if (first || v < best) best = v;
    first = false;
  }
  return best;
}

bool is_integral(const Poly& p) {
  for (const auto& t : p.terms())
    if (t.coeff.get_den() != 1) return false;
  return true;
}

// ---------------------------------------------------------------------------
// text

namespace {

class Parser {
 public:
  Parser(std::string_view text, const BaseRing& ring, int nvars) : text_(text), ring_(ring), nvars_(nvars) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p.bind(ring_, nvars_);
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::ParseError, msg + " at column " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  void skip() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  mpz_class integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Poly expr() {
    Poly acc = unary();
    for (;;) {
      if (accept('+'))
        acc += unary();
      else if (accept('-'))
        acc -= unary();
      else
        return acc;
    }
  }

  Poly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    Poly acc = power();
    while (accept('*')) acc *= power();
    return acc;
  }

  Poly power() {
    Poly base = primary();
    if (accept('^')) {
      mpz_class e = integer();
      if (e > 4096) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  Poly primary() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == 'x') {
      ++pos_;
      mpz_class idx = integer();
      if (idx < 1 || idx > nvars_) fail("variable x" + idx.get_str() + " out of range");
      return Poly::variable(ring_, nvars_, static_cast<int>(idx.get_si()) - 1);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpq_class value(integer());
      if (accept('/')) {
        mpz_class den = integer();
        if (den == 0) fail("division by zero");
        value /= mpq_class(den);
      }
      try {
        return Poly::constant(ring_, nvars_, value);
      } catch (const Error& e) {
        fail(e.what());
      }
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  BaseRing ring_;
  int nvars_;
  std::size_t pos_ = 0;
};

std::string monomial_text(const Monomial& m) {
  std::string out;
  for (int i = 0; i < kMaxVars; ++i) {
    if (m.exp[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (m.exp[i] > 1) out += '^' + std::to_string(m.exp[i]);
  }
  return out;
}

}  // namespace

Poly parse_poly(std::string_view text, const BaseRing& ring, int nvars) { return Parser(text, ring, nvars).parse(); }

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = t.coeff < 0;
    mpq_class mag = abs(t.coeff);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    const std::string mono = monomial_text(t.mono);
    if (mono.empty())
      out += mag.get_str();
    else if (mag == 1)
      out += mono;
    else
      out += mag.get_str() + "*" + mono;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << to_string(p); }

// ---------------------------------------------------------------------------
// monic localization

MonicLocElem::MonicLocElem(long value) : num_(value) {}

MonicLocElem::MonicLocElem(Poly numerator, int var) : num_(std::move(numerator)), var_(var) {}

MonicLocElem::MonicLocElem(Poly numerator, Poly denom_monic, int power, int var)
    : num_(std::move(numerator)), den_(std::move(denom_monic)), power_(power), var_(var) {
  if (power_ < 0) throw Error(ErrorKind::PreconditionViolated, "negative denominator power");
  if (!is_monic_in(den_, var_)) throw Error(ErrorKind::NotMonic, to_string(den_));
  reduce();
}

void MonicLocElem::reduce() {
  if (den_.is_one() || power_ == 0) {
    den_ = Poly(1);
    power_ = 0;
    return;
  }
  if (num_.is_zero()) {
    den_ = Poly(1);
    power_ = 0;
    return;
  }
  while (power_ > 0) {
    DivRem qr = monic_divrem(num_, den_.bind(num_.bound() ? num_.ring() : den_.ring(),
                                             num_.bound() ? num_.nvars() : den_.nvars()),
                             var_);
    if (!qr.remainder.is_zero()) break;
    num_ = qr.quotient;
    --power_;
  }
  if (power_ == 0) den_ = Poly(1);
}

MonicLocElem MonicLocElem::operator-() const {
  MonicLocElem r = *this;
  r.num_ = -r.num_;
  return r;
}

MonicLocElem& MonicLocElem::operator+=(const MonicLocElem& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  const int var = is_polynomial() ? other.var_ : var_;
  if (den_ == other.den_) {
    const int p = std::max(power_, other.power_);
    num_ = num_ * den_.pow(static_cast<unsigned>(p - power_)) +
           other.num_ * other.den_.pow(static_cast<unsigned>(p - other.power_));
    power_ = p;
  } else {
    Poly da = denominator(), db = other.denominator();
    num_ = num_ * db + other.num_ * da;
    den_ = da * db;
    power_ = 1;
  }
  var_ = var;
  reduce();
  return *this;
}

MonicLocElem& MonicLocElem::operator-=(const MonicLocElem& other) { return *this += -other; }

MonicLocElem& MonicLocElem::operator*=(const MonicLocElem& other) {
  const int var = is_polynomial() ? other.var_ : var_;
  if (den_ == other.den_) {
    num_ *= other.num_;
    power_ += other.power_;
  } else {
    Poly da = denominator(), db = other.denominator();
    num_ *= other.num_;
    den_ = da * db;
    power_ = 1;
  }
  var_ = var;
  reduce();
  return *this;
}

bool operator==(const MonicLocElem& a, const MonicLocElem& b) {
  return a.num_ * b.denominator() == b.num_ * a.denominator();
}

bool MonicLocElem::is_unit() const {
  if (num_.is_zero()) return false;
  for (int v = 0; v < num_.nvars(); ++v)
    if (v != var_ && num_.depends_on(v)) return false;
  const BaseRing ring = num_.bound() ? num_.ring() : BaseRing::integers();
  Poly lc = top_coefficient(num_, var_, num_.degree_in(var_));
  return lc.is_constant() && ring.is_unit(lc.constant_term());
}

MonicLocElem MonicLocElem::inverse() const {
  if (!is_unit()) throw Error(ErrorKind::NotAUnit, to_string(*this));
  const BaseRing ring = num_.bound() ? num_.ring() : BaseRing::integers();
  mpq_class c = top_coefficient(num_, var_, num_.degree_in(var_)).constant_term();
  mpq_class ci = ring.inverse(c);
  Poly monic = num_.scaled(ci);
  Poly numerator = denominator().scaled(ci);
  if (numerator.bound() != monic.bound()) {
    if (monic.bound())
      numerator = numerator.bind(monic.ring(), monic.nvars());
    else
      monic = monic.bind(numerator.ring(), numerator.nvars());
  }
  return MonicLocElem(numerator, monic, 1, var_);
}

std::string to_string(const MonicLocElem& e) {
  if (e.is_polynomial()) return to_string(e.numerator());
  std::string den = "(" + to_string(e.denom_monic()) + ")";
  if (e.denom_power() > 1) den += "^" + std::to_string(e.denom_power());
  return "(" + to_string(e.numerator()) + ")/" + den;
}

std::ostream& operator<<(std::ostream& os, const MonicLocElem& e) { return os << to_string(e); }

}  // namespace chev
