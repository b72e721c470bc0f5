#pragma once

// Exact coefficient rings, multivariate polynomials over them, and the
// monic localization R[x]_S (S = monic polynomials in one variable).
//
// Coefficients of every supported ring are carried as GMP rationals in a
// canonical representative:
//   Z, Z[1/s], Q     the rational number itself (lowest terms),
//   Z/m, F_p         the integer residue in [0, m).

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chev/error.hpp"

namespace chev {

enum class RingKind { Integers, IntegersMod, PrimeField, Rationals, IntegersLocalized, IntegersAtPrime };

class BaseRing {
 public:
  static BaseRing integers() { return BaseRing(RingKind::Integers, 0); }
  static BaseRing rationals() { return BaseRing(RingKind::Rationals, 0); }
  static BaseRing integers_mod(std::int64_t m);
  static BaseRing prime_field(std::int64_t p);
  // Z[1/s]
  static BaseRing localized(std::int64_t s);
  // Z_(p): rationals whose denominator is prime to p.
  static BaseRing at_prime(std::int64_t p);
  // Accepts "Z", "Q", "Z/12", "F5", "Z[1/6]", "Z_(5)".
  static BaseRing parse(std::string_view text);

  RingKind kind() const { return kind_; }
  // m, p or s; 0 for Z and Q.
  std::int64_t param() const { return param_; }

  bool is_domain() const { return kind_ != RingKind::IntegersMod; }
  bool is_field() const { return kind_ == RingKind::Rationals || kind_ == RingKind::PrimeField; }
  bool is_finite() const { return kind_ == RingKind::IntegersMod || kind_ == RingKind::PrimeField; }

  // Maps a rational into the canonical representative; throws NotInRing when
  // the value has no image (e.g. 1/3 in Z, or 1/2 in Z/4).
  mpq_class normalize(const mpq_class& value) const;
  bool contains(const mpq_class& value) const;
  bool is_unit(const mpq_class& value) const;
  // Throws NotAUnit.
  mpq_class inverse(const mpq_class& value) const;

  std::string name() const;

  friend bool operator==(const BaseRing&, const BaseRing&) = default;

 private:
  BaseRing(RingKind kind, std::int64_t param) : kind_(kind), param_(param) {}

  RingKind kind_;
  std::int64_t param_;
};

inline constexpr int kMaxVars = 16;

struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};

  int degree() const;
  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  // Requires divides(other).
  Monomial quotient(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Graded lexicographic, x1 > x2 > ...
bool grlex_greater(const Monomial& a, const Monomial& b);

struct Term {
  Monomial mono;
  mpq_class coeff;
};

// Polynomial in nvars variables over a BaseRing. Terms are kept sorted
// grlex-descending with no zero coefficients.
//
// A default- or integer-constructed Poly is an *unbound* integer constant: it
// carries no ring and adopts the ring and variable count of whatever bound
// operand it is combined with. This is what lets dense matrix code build
// zeros and ones generically.
class Poly {
 public:
  Poly() = default;
  Poly(long value);  // NOLINT(google-explicit-constructor)

  Poly(const BaseRing& ring, int nvars);
  static Poly constant(const BaseRing& ring, int nvars, const mpq_class& value);
  static Poly variable(const BaseRing& ring, int nvars, int index);
  static Poly monomial(const BaseRing& ring, int nvars, const Monomial& mono, const mpq_class& coeff);
  // Terms need not be sorted or merged.
  static Poly from_terms(const BaseRing& ring, int nvars, std::vector<Term> terms);

  bool bound() const { return bound_; }
  const BaseRing& ring() const { return ring_; }
  int nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  mpq_class constant_term() const;
  // Coefficient of a monomial (zero if absent).
  mpq_class coeff(const Monomial& mono) const;
  // Total degree; -1 for the zero polynomial.
  int degree() const;
  int degree_in(int var) const;
  bool depends_on(int var) const;
  const Term& leading() const { return terms_.front(); }

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly pow(unsigned exponent) const;
  Poly scaled(const mpq_class& factor) const;

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Bound copy over `ring` with `nvars` variables (an unbound constant just
  // adopts them; a bound poly must already match).
  Poly bind(const BaseRing& ring, int nvars) const;

 private:
  void canonicalize();
  void unify(const Poly& other);

  BaseRing ring_ = BaseRing::integers();
  int nvars_ = 0;
  bool bound_ = false;
  std::vector<Term> terms_;
};

enum class PolyOpKind { Add, Mul, Neg };

Poly poly_op(PolyOpKind kind, const Poly& p, const std::optional<Poly>& q = std::nullopt);

// Ring homomorphism fixing coefficients: variable i goes to assignment[i],
// unassigned variables stay themselves. Images share `target_nvars`.
using Assignment = std::map<int, Poly>;
Poly substitute(const Poly& p, const Assignment& assignment);
Poly substitute(const Poly& p, const Assignment& assignment, int target_nvars);

// Scalar extension / reduction along Z -> Z[1/s], Z -> Q, Z -> Z/m, ...
Poly change_ring(const Poly& p, const BaseRing& ring);
// Adds (or, when the dropped variables are absent, removes) trailing variables.
Poly resize_vars(const Poly& p, int nvars);

// Smallest n >= 0 with s^n * d = 0 in the ring, or nullopt when none exists.
// Over the domains this is decided without searching; over Z/m the exact
// bound is the largest prime exponent of m. `search_bound`, when given and
// smaller than the exact bound, caps the search and raises
// SearchBoundExceeded if it is hit undecided.
std::optional<int> annihilator_exponent(const BaseRing& ring, const mpq_class& d, const mpq_class& s,
                                        std::optional<int> search_bound = std::nullopt);

// F_s(a) == F_s(b) in R_s[x1..xn].
bool localize_eq(const Poly& a, const Poly& b, const mpq_class& s,
                 std::optional<int> search_bound = std::nullopt);

struct DivRem {
  Poly quotient;
  Poly remainder;
};

// Division by a polynomial monic in `var` (its leading coefficient in `var`
// is the constant 1). Throws NotMonic.
DivRem monic_divrem(const Poly& g, const Poly& f, int var = 0);
bool is_monic_in(const Poly& f, int var);
// Univariate-in-var division by f whose leading coefficient (a constant) is a
// unit of the base ring. Throws NotAUnit otherwise.
DivRem unit_lc_divrem(const Poly& g, const Poly& f, int var = 0);

// s-adic valuation of a polynomial over Z / Z[1/s] / Q: the largest m with
// p / s^m having integer coefficients (may be negative). nullopt for zero.
std::optional<int> s_valuation(const Poly& p, const mpz_class& s);
// True when every coefficient is an integer.
bool is_integral(const Poly& p);

// p / q when q divides p exactly (leading-term division), else nullopt.
std::optional<Poly> exact_divide(const Poly& p, const Poly& q);
// Greatest common divisor in Z[x1..xn] with positive leading coefficient;
// over a field the result is monic. Throws UnsupportedType for other rings.
Poly poly_gcd(const Poly& a, const Poly& b);
// Coefficients of p in powers of var, index = exponent.
std::vector<Poly> coefficients_in(const Poly& p, int var);

// ---------------------------------------------------------------------------
// Polynomial text: integer literals, x1..x9, + - * ^ and parentheses. A '/'
// between integer literals is also accepted so that coefficients of Q and
// Z[1/s] round-trip.

Poly parse_poly(std::string_view text, const BaseRing& ring, int nvars);
std::string to_string(const Poly& p);
std::ostream& operator<<(std::ostream& os, const Poly& p);

// ---------------------------------------------------------------------------
// Monic localization: num / monic^power with the monic taken in `var`.

class MonicLocElem {
 public:
  MonicLocElem() = default;
  MonicLocElem(long value);  // NOLINT(google-explicit-constructor)
  MonicLocElem(Poly numerator, int var = 0);
  // Throws NotMonic.
  MonicLocElem(Poly numerator, Poly denom_monic, int power, int var = 0);

  const Poly& numerator() const { return num_; }
  const Poly& denom_monic() const { return den_; }
  int denom_power() const { return power_; }
  int var() const { return var_; }
  Poly denominator() const { return den_.pow(static_cast<unsigned>(power_)); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return power_ == 0 || den_.is_one(); }
  // Invertible in R[x]_monic: nonzero with a numerator whose leading
  // coefficient in var is a unit of R (requires the numerator to be
  // univariate in var).
  bool is_unit() const;
  // Throws NotAUnit.
  MonicLocElem inverse() const;

  MonicLocElem operator-() const;
  MonicLocElem& operator+=(const MonicLocElem& other);
  MonicLocElem& operator-=(const MonicLocElem& other);
  MonicLocElem& operator*=(const MonicLocElem& other);
  friend MonicLocElem operator+(MonicLocElem a, const MonicLocElem& b) { return a += b; }
  friend MonicLocElem operator-(MonicLocElem a, const MonicLocElem& b) { return a -= b; }
  friend MonicLocElem operator*(MonicLocElem a, const MonicLocElem& b) { return a *= b; }
  // Cross-multiplication.
  friend bool operator==(const MonicLocElem& a, const MonicLocElem& b);
  friend bool operator!=(const MonicLocElem& a, const MonicLocElem& b) { return !(a == b); }

 private:
  void reduce();

  Poly num_;
  Poly den_ = Poly(1);
  int power_ = 0;
  int var_ = 0;
};

std::string to_string(const MonicLocElem& e);
std::ostream& operator<<(std::ostream& os, const MonicLocElem& e);

// Integer helpers shared by the factorizers.
struct ExtGcd {
  mpz_class g, x, y;  // g = x*a + y*b, g >= 0
};
ExtGcd ext_gcd(const mpz_class& a, const mpz_class& b);
bool is_prime(std::int64_t n);

}  // namespace chev
