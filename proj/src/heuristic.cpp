// Greedy elementary reduction: left and right root operations that cancel a
// leading term, accepted while a size score strictly decreases, with unit
// clearing, an adjugate spare-row move and a closed form for rank-one
// transvections when the greedy step stalls.

#include <algorithm>
#include <tuple>
#include <utility>

#include "chev/factorize.hpp"

namespace chev {

namespace {

struct Score {
  long deg = 0;
  long bits = 0;
  long terms = 0;
  Score& operator+=(const Score& o) {
    deg += o.deg;
    bits += o.bits;
    terms += o.terms;
    return *this;
  }
  Score& operator-=(const Score& o) {
    deg -= o.deg;
    bits -= o.bits;
    terms -= o.terms;
    return *this;
  }
  friend bool operator<(const Score& a, const Score& b) {
    return std::tie(a.deg, a.bits, a.terms) < std::tie(b.deg, b.bits, b.terms);
  }
};

Score entry_score(const Poly& p) {
  Score s;
  if (p.is_zero()) return s;
  s.deg = p.degree() + 1;
  for (const auto& t : p.terms())
    s.bits += static_cast<long>(mpz_sizeinbase(t.coeff.get_num_mpz_t(), 2) + mpz_sizeinbase(t.coeff.get_den_mpz_t(), 2));
  s.terms = static_cast<long>(p.terms().size());
  return s;
}

Score matrix_score(const PolyMatrix& m) {
  Score s;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) s += entry_score(m(i, j));
  return s;
}

mpz_class round_div(const mpq_class& q) {
  mpq_class h = q + mpq_class(1, 2);
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), h.get_num_mpz_t(), h.get_den_mpz_t());
  return f;
}

// Multiplier c with a - c b having a smaller leading coefficient, or 0.
mpq_class lead_quotient(const BaseRing& ring, const mpq_class& a, const mpq_class& b) {
  const mpq_class q = a / b;
  if (ring.contains(q)) return ring.normalize(q);
  if (ring.kind() == RingKind::Integers) return round_div(q);
  if (ring.kind() == RingKind::IntegersLocalized) {
    // round the s-free parts, keep the s-part exact
    const mpz_class s(static_cast<long>(ring.param()));
    auto strip = [&](mpz_class v) {
      mpz_class g;
      while (v != 0 && (g = gcd(v, s)) > 1) v /= g;
      return v;
    };
    const mpz_class sa = strip(a.get_num()), sb = strip(b.get_num());
    return ring.normalize(mpq_class(round_div(mpq_class(sa) / sb)) * (a / sa) / (b / sb));
  }
  return 0;
}

// t with lt(a) + t lt(b) = 0 (or a smaller remainder), 0 when none.
std::optional<Poly> cancel_lead(const Poly& a, const Poly& b, int sign) {
  if (a.is_zero() || b.is_zero()) return std::nullopt;
  const Term& la = a.leading();
  const Term& lb = b.leading();
  if (!lb.mono.divides(la.mono)) return std::nullopt;
  const mpq_class c = lead_quotient(a.ring(), la.coeff, lb.coeff);
  if (c == 0) return std::nullopt;
  return Poly::monomial(a.ring(), a.nvars(), la.mono.quotient(lb.mono), sign == 1 ? mpq_class(-c) : c);
}

bool is_unit_entry(const Poly& p) { return p.is_constant() && !p.is_zero() && p.ring().is_unit(p.constant_term()); }

// The only variable m's column j depends on, -1 when constant, -2 when several.
int column_variable(const PolyMatrix& m, int j) {
  int var = -1;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (int v = 0; v < m(i, j).nvars(); ++v)
      if (m(i, j).depends_on(v)) {
        if (var >= 0 && var != v) return -2;
        var = v;
      }
  return var;
}

bool unit_lead_in(const Poly& p, int var) {
  if (p.is_zero()) return false;
  const Poly lc = coefficients_in(p, var).back();
  return lc.is_constant() && p.ring().is_unit(lc.constant_term());
}

// s with s g = 1 mod f over the base ring, f with unit leading coefficient in var.
std::optional<Poly> inverse_mod(const Poly& g, const Poly& f, int var) {
  const BaseRing q = BaseRing::rationals();
  const Poly fq = change_ring(f, q);
  Poly r0 = fq, r1 = change_ring(unit_lc_divrem(g, f, var).remainder, q);
  Poly s0(q, f.nvars()), s1 = Poly::constant(q, f.nvars(), 1);
  while (!r1.is_zero()) {
    DivRem qr = unit_lc_divrem(r0, r1, var);
    r0 = std::exchange(r1, qr.remainder);
    s0 = std::exchange(s1, s0 - qr.quotient * s1);
  }
  if (!r0.is_constant()) return std::nullopt;
  Poly s = unit_lc_divrem(s0.scaled(1 / r0.constant_term()), fq, var).remainder;
  for (const auto& t : s.terms())
    if (!f.ring().contains(t.coeff)) return std::nullopt;
  return change_ring(s, f.ring());
}

struct Move {
  bool left;
  int root;
  Poly arg;
};

class Reducer {
 public:
  Reducer(const PolyMatrix& g, RootSystemPtr rs, const Budget& budget)
      : rs_(std::move(rs)), budget_(budget), m_(g), score_(matrix_score(g)) {
    for (Eigen::Index i = 0; i < g.rows() && !bound_; ++i)
      for (Eigen::Index j = 0; j < g.cols(); ++j)
        if (g(i, j).bound()) {
          ring_ = g(i, j).ring();
          nvars_ = g(i, j).nvars();
          bound_ = true;
          break;
        }
  }

  Reduction run();

 private:
  void apply(const Move& mv) {
    if (mv.left)
      apply_left(m_, *rs_, mv.root, mv.arg);
    else
      apply_right(m_, *rs_, mv.root, mv.arg);
    (mv.left ? left_ : right_).push_back(mv);
    ++letters_;
  }
  std::size_t used() const { return left_.size() + right_.size() + middle_.size(); }
  bool over_budget() const {
    return used() > budget_.max_letters || steps_ >= budget_.max_steps || max_degree(m_) > budget_.max_degree ||
           max_coeff_bits(m_) > budget_.max_coeff_bits;
  }

  std::vector<Move> candidates() const;
  Score score_after(const Move& mv) const;
  std::optional<std::pair<Move, Score>> best_greedy() const;
  bool escape();
  void loop();
  bool clear_unit();
  bool finish_unitriangular();
  bool spare_row();
  bool monic_move();
  bool column_euclid();
  void add_row(int p, int q, const Poly& t) {
    if (t.is_zero()) return;
    auto [root, c] = rs_->root_at(p, q);
    apply({true, root, c == 1 ? t : Poly(-t)});
  }
  bool finish_rank_one();
  bool finish_constant();
  Reduction result() const;

  RootSystemPtr rs_;
  Budget budget_;
  BaseRing ring_ = BaseRing::integers();
  int nvars_ = 0;
  bool bound_ = false;
  PolyMatrix m_;
  Score score_;
  std::vector<Move> left_, right_;
  std::vector<Letter> middle_;  // eval(middle_) = m_ once finished
  std::size_t steps_ = 0;
  std::size_t letters_ = 0;
  int spare_used_ = 0;
  int monic_used_ = 0;
  int column_used_ = 0;
  int escapes_ = 0;
  bool finished_ = false;
  static constexpr int kMaxEscapes = 8;
};

std::vector<Move> Reducer::candidates() const {
  const int n = static_cast<int>(m_.rows());
  std::vector<Move> out;
  for (int root = 0; root < rs_->size(); ++root) {
    for (const auto& e : rs_->generator(root)) {
      // left: row e.row += coeff t row e.col
      for (int c = 0; c < n; ++c)
        if (auto t = cancel_lead(m_(e.row, c), m_(e.col, c), e.coeff)) out.push_back({true, root, *t});
      // right: col e.col += coeff t col e.row
      for (int r = 0; r < n; ++r)
        if (auto t = cancel_lead(m_(r, e.col), m_(r, e.row), e.coeff)) out.push_back({false, root, *t});
    }
  }
  return out;
}

Score Reducer::score_after(const Move& mv) const {
  const int n = static_cast<int>(m_.rows());
  PolyMatrix trial = m_;
  std::vector<int> touched;
  for (const auto& e : rs_->generator(mv.root)) touched.push_back(mv.left ? e.row : e.col);
  Score s = score_;
  for (int k : touched)
    for (int c = 0; c < n; ++c) s -= entry_score(mv.left ? m_(k, c) : m_(c, k));
  if (mv.left)
    apply_left(trial, *rs_, mv.root, mv.arg);
  else
    apply_right(trial, *rs_, mv.root, mv.arg);
  for (int k : touched)
    for (int c = 0; c < n; ++c) s += entry_score(mv.left ? trial(k, c) : trial(c, k));
  return s;
}

std::optional<std::pair<Move, Score>> Reducer::best_greedy() const {
  std::optional<std::pair<Move, Score>> best;
  for (auto& mv : candidates()) {
    Score s = score_after(mv);
    if (s < (best ? best->second : score_)) best = std::make_pair(std::move(mv), s);
  }
  return best;
}

// Stalled: try every candidate move, even a worsening one, followed by a
// plain greedy run, and keep the best end state if it beats the stall.
bool Reducer::escape() {
  if (escapes_ >= kMaxEscapes) return false;
  ++escapes_;
  std::optional<Reducer> best;
  for (const auto& mv : candidates()) {
    Reducer r = *this;
    r.apply(mv);
    r.score_ = matrix_score(r.m_);
    r.escapes_ = kMaxEscapes;
    r.loop();
    if (r.finished_) {
      *this = std::move(r);
      return true;
    }
    if (r.score_ < (best ? best->score_ : score_)) best = std::move(r);
  }
  if (!best) return false;
  const int escapes = escapes_;
  *this = std::move(*best);
  escapes_ = escapes;
  return true;
}

// Uses a unit entry to clear its column (left) and row (right). In type C a
// short-root operation also touches the partner row i* (column j*), so that
// one is cleared last, by a long root.
bool Reducer::clear_unit() {
  const int n = static_cast<int>(m_.rows());
  std::optional<std::pair<Score, std::pair<int, int>>> best;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!is_unit_entry(m_(i, j))) continue;
      int others = 0;
      for (int k = 0; k < n; ++k) others += (k != i && !m_(k, j).is_zero()) + (k != j && !m_(i, k).is_zero());
      if (others == 0) continue;
      Score s = score_;
      for (int k = 0; k < n; ++k) {
        if (k != i) s -= entry_score(m_(k, j));
        if (k != j) s -= entry_score(m_(i, k));
      }
      if (!best || s < best->first) best = std::make_pair(s, std::make_pair(i, j));
    }
  if (!best) return false;
  const auto [i, j] = best->second;
  const Poly inv = Poly::constant(ring_, nvars_, ring_.inverse(m_(i, j).constant_term()));
  const bool sp = rs_->type() == RootType::C;
  auto order = [&](int skip) {
    std::vector<int> out;
    for (int k = 0; k < n; ++k)
      if (k != skip && !(sp && k == n - 1 - skip)) out.push_back(k);
    if (sp && n - 1 - skip != skip) out.push_back(n - 1 - skip);
    return out;
  };
  for (int r : order(i)) {
    if (m_(r, j).is_zero()) continue;
    auto [root, c] = rs_->root_at(r, i);
    Poly t = -(m_(r, j) * inv);
    apply({true, root, c == 1 ? t : -t});
  }
  for (int l : order(j)) {
    if (m_(i, l).is_zero()) continue;
    auto [root, c] = rs_->root_at(j, l);
    Poly t = -(inv * m_(i, l));
    apply({false, root, c == 1 ? t : -t});
  }
  score_ = matrix_score(m_);
  return true;
}

// Upper or lower unitriangular: peel one diagonal at a time.
bool Reducer::finish_unitriangular() {
  const int n = static_cast<int>(m_.rows());
  bool upper = true, lower = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j && !m_(i, j).is_one()) return false;
      if (i > j && !m_(i, j).is_zero()) upper = false;
      if (i < j && !m_(i, j).is_zero()) lower = false;
    }
  if (!upper && !lower) return false;
  PolyMatrix save = m_;
  const std::size_t mark = left_.size();
  for (int d = 1; d < n; ++d)
    for (int i = 0; i + d < n; ++i) {
      const int r = upper ? i : i + d, c = upper ? i + d : i;
      if (m_(r, c).is_zero()) continue;
      auto [root, k] = rs_->root_at(r, c);
      Poly t = -m_(r, c);
      apply({true, root, k == 1 ? t : -t});
    }
  if (!is_identity(m_)) {
    m_ = save;
    left_.resize(mark);
    return false;
  }
  score_ = matrix_score(m_);
  return true;
}

// Type A: puts a 1 into an empty slot of a column with row operations
// taken from the adjugate, u^T M = e_j^T.
bool Reducer::spare_row() {
  if (rs_->type() != RootType::A) return false;
  const int n = static_cast<int>(m_.rows());
  if (n < 3 || spare_used_ >= 3 * n) return false;
  const PolyMatrix adj = adjugate(m_);
  std::optional<std::tuple<Score, int, int>> best;
  for (int j = 0; j < n; ++j) {
    int nz = 0;
    for (int r = 0; r < n; ++r) nz += !m_(r, j).is_zero();
    if (nz < 2) continue;
    for (int k = 0; k < n; ++k) {
      if (!m_(k, j).is_zero()) continue;
      Score s = score_;
      for (int c = 0; c < n; ++c) {
        Poly v = m_(k, c);
        for (int i = 0; i < n; ++i)
          if (i != k) v += adj(j, i) * m_(i, c);
        s -= entry_score(m_(k, c));
        s += entry_score(v);
      }
      if (!best || s < std::get<0>(*best)) best = std::make_tuple(s, j, k);
    }
  }
  if (!best) return false;
  const auto [s, j, k] = *best;
  for (int i = 0; i < n; ++i) {
    if (i == k || adj(j, i).is_zero()) continue;
    auto [root, c] = rs_->root_at(k, i);
    apply({true, root, c == 1 ? adj(j, i) : Poly(-adj(j, i))});
  }
  ++spare_used_;
  score_ = matrix_score(m_);
  return true;
}

// Type A, a column in one variable with an entry f of unit leading
// coefficient: reduce the column mod f, find g invertible mod f and turn a
// third entry into 1 (h + t g = 1 mod f, then subtract a multiple of f).
bool Reducer::monic_move() {
  if (rs_->type() != RootType::A) return false;
  if (ring_.kind() != RingKind::Integers && ring_.kind() != RingKind::IntegersLocalized) return false;
  const int n = static_cast<int>(m_.rows());
  if (n < 3 || monic_used_ >= 4 * n) return false;
  for (int j = 0; j < n; ++j) {
    const int var = column_variable(m_, j);
    if (var < 0) continue;
    // pivot: lowest-degree entry with unit leading coefficient
    int r = -1;
    for (int i = 0; i < n; ++i)
      if (unit_lead_in(m_(i, j), var) && m_(i, j).degree_in(var) > 0 &&
          (r < 0 || m_(i, j).degree_in(var) < m_(r, j).degree_in(var)))
        r = i;
    if (r < 0) {
      // a row combination with unit leading coefficient
      std::optional<std::tuple<int, int, Poly, int>> best;
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
          if (i == k || m_(k, j).is_zero()) continue;
          for (int e = 0; e <= 2; ++e)
            for (int c = -3; c <= 3; ++c) {
              if (c == 0) continue;
              Monomial mono;
              mono.exp[var] = static_cast<std::uint16_t>(e);
              Poly t = Poly::monomial(ring_, nvars_, mono, c);
              Poly v = m_(i, j) + t * m_(k, j);
              if (!unit_lead_in(v, var) || v.degree_in(var) == 0) continue;
              if (!best || v.degree_in(var) < std::get<3>(*best)) best = std::make_tuple(i, k, t, v.degree_in(var));
            }
        }
      if (!best) continue;
      add_row(std::get<0>(*best), std::get<1>(*best), std::get<2>(*best));
      r = std::get<0>(*best);
    }
    const Poly f = m_(r, j);
    for (int i = 0; i < n; ++i)
      if (i != r) add_row(i, r, -unit_lc_divrem(m_(i, j), f, var).quotient);
    for (int a = 0; a < n; ++a) {
      if (a == r || m_(a, j).is_zero()) continue;
      auto u = inverse_mod(m_(a, j), f, var);
      if (!u) continue;
      for (int b = 0; b < n; ++b) {
        if (b == r || b == a) continue;
        const Poly h = m_(b, j);
        add_row(b, a, unit_lc_divrem((Poly::constant(ring_, nvars_, 1) - h) * *u, f, var).remainder);
        add_row(b, r, -unit_lc_divrem(m_(b, j) - Poly::constant(ring_, nvars_, 1), f, var).quotient);
        ++monic_used_;
        score_ = matrix_score(m_);
        return true;
      }
    }
    score_ = matrix_score(m_);
  }
  return false;
}

// Type A: Euclid on one column by leading terms, scoring only that column,
// until it has a unit or a zero entry. Other columns are free to grow.
bool Reducer::column_euclid() {
  if (rs_->type() != RootType::A) return false;
  const int n = static_cast<int>(m_.rows());
  if (n < 3 || column_used_ >= 2 * n) return false;
  auto col_score = [&](const PolyMatrix& m, int j) {
    Score s;
    for (int i = 0; i < n; ++i) s += entry_score(m(i, j));
    return s;
  };
  auto done = [&](int j) {
    for (int i = 0; i < n; ++i)
      if (m_(i, j).is_zero() || is_unit_entry(m_(i, j))) return true;
    return false;
  };
  std::optional<std::pair<Score, int>> pick;
  for (int j = 0; j < n; ++j) {
    if (done(j)) continue;
    Score s = col_score(m_, j);
    if (!pick || s < pick->first) pick = std::make_pair(s, j);
  }
  if (!pick) return false;
  ++column_used_;
  const int j = pick->second;
  const PolyMatrix save = m_;
  const std::size_t mark = left_.size();
  for (int step = 0; step < 64 && !done(j); ++step) {
    std::optional<std::tuple<Score, int, int, Poly>> best;
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        if (i == k) continue;
        auto t = cancel_lead(m_(i, j), m_(k, j), 1);
        if (!t) continue;
        Score s = col_score(m_, j);
        s -= entry_score(m_(i, j));
        s += entry_score(m_(i, j) + *t * m_(k, j));
        if (s < (best ? std::get<0>(*best) : col_score(m_, j))) best = std::make_tuple(s, i, k, *t);
      }
    if (!best) break;
    add_row(std::get<1>(*best), std::get<2>(*best), std::get<3>(*best));
  }
  if (!done(j) || over_budget()) {
    m_ = save;
    left_.resize(mark);
    return false;
  }
  score_ = matrix_score(m_);
  return true;
}

// Type A over Z or a field: M = I + p q^T with q^T p = 0 is a product of
// at most two commutators of root-group products.
bool Reducer::finish_rank_one() {
  if (rs_->type() != RootType::A) return false;
  if (ring_.kind() != RingKind::Integers && !ring_.is_field()) return false;
  const int n = static_cast<int>(m_.rows());
  PolyMatrix d = m_;
  for (int i = 0; i < n; ++i) d(i, i) -= Poly(1);
  int r0 = -1, c0 = -1;
  for (int i = 0; i < n && r0 < 0; ++i)
    for (int j = 0; j < n; ++j)
      if (!d(i, j).is_zero()) {
        r0 = i;
        c0 = j;
        break;
      }
  if (r0 < 0) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (d(i, j) * d(r0, c0) != d(i, c0) * d(r0, j)) return false;
  Poly g(ring_, nvars_);
  for (int i = 0; i < n; ++i) g = poly_gcd(g, d(i, c0));
  std::vector<Poly> p(n), q(n);
  for (int i = 0; i < n; ++i) p[i] = *exact_divide(d(i, c0), g);
  for (int j = 0; j < n; ++j) {
    auto v = exact_divide(d(r0, j), p[r0]);
    if (!v) return false;
    q[j] = *v;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p[i] * q[j] != d(i, j)) return false;
  int k = -1, kind = 0;
  for (int want = 0; want < 3 && k < 0; ++want)
    for (int i = 0; i < n; ++i) {
      const bool pz = p[i].is_zero(), qz = q[i].is_zero();
      if ((want == 0 && pz && qz) || (want == 1 && pz) || (want == 2 && qz)) {
        k = i;
        kind = want;
        break;
      }
    }
  if (k < 0) return false;
  std::vector<Letter> out;
  auto push = [&](int row, int col, const Poly& t) {
    if (t.is_zero()) return;
    auto [root, c] = rs_->root_at(row, col);
    out.push_back({root, c == 1 ? t : -t});
  };
  // [I + a e_k^T, I + e_k b^T] with a_k = b_k = 0 is I + a b^T.
  auto commutator = [&](const std::vector<Poly>& a, const std::vector<Poly>& b) {
    for (int i = 0; i < n; ++i)
      if (i != k) push(i, k, a[i]);
    for (int l = 0; l < n; ++l)
      if (l != k) push(k, l, b[l]);
    for (int i = 0; i < n; ++i)
      if (i != k) push(i, k, -a[i]);
    for (int l = 0; l < n; ++l)
      if (l != k) push(k, l, -b[l]);
  };
  if (kind == 0) {
    commutator(p, q);
  } else if (kind == 1) {
    // I + p q^T = (I + q_k p e_k^T)(I + p q'^T), q' = q with q'_k = 0
    for (int i = 0; i < n; ++i)
      if (i != k) push(i, k, q[k] * p[i]);
    std::vector<Poly> qq = q;
    qq[k] = Poly(ring_, nvars_);
    commutator(p, qq);
  } else {
    // I + p q^T = (I + p' q^T)(I + p_k e_k q^T), p' = p with p'_k = 0
    std::vector<Poly> pp = p;
    pp[k] = Poly(ring_, nvars_);
    commutator(pp, q);
    for (int l = 0; l < n; ++l)
      if (l != k) push(k, l, p[k] * q[l]);
  }
  ElemWord w(rs_, ring_, nvars_, out);
  if (!equal(eval_word(w), m_)) return false;
  middle_ = w.letters();
  m_ = identity_matrix(ring_, nvars_, n);
  score_ = matrix_score(m_);
  return true;
}

bool Reducer::finish_constant() {
  if (!is_constant(m_)) return false;
  if (ring_.kind() == RingKind::IntegersMod) return false;
  try {
    middle_ = factor_constant(m_, rs_).letters();
  } catch (const Error&) {
    return false;
  }
  m_ = identity_matrix(ring_, nvars_, static_cast<int>(m_.rows()));
  score_ = matrix_score(m_);
  return true;
}

Reduction Reducer::result() const {
  // g = L1^-1 ... Lk^-1 * m * Rj^-1 ... R1^-1
  ElemWord word(rs_, ring_, nvars_);
  for (const auto& mv : left_) word.push(mv.root, -mv.arg);
  const bool done = is_identity(m_);
  for (const auto& l : middle_) word.push(l.root, l.arg);
  PolyMatrix residual = m_;
  if (done) {
    for (auto it = right_.rbegin(); it != right_.rend(); ++it) word.push(it->root, -it->arg);
  } else {
    for (auto it = right_.rbegin(); it != right_.rend(); ++it) apply_right(residual, *rs_, it->root, Poly(-it->arg));
  }
  return {free_reduce(word), residual};
}

void Reducer::loop() {
  while (!is_identity(m_) && !over_budget()) {
    ++steps_;
    if (finish_constant() || finish_unitriangular()) break;
    if (auto best = best_greedy()) {
      apply(best->first);
      score_ = best->second;
      continue;
    }
    if (clear_unit()) continue;
    if (finish_rank_one()) break;
    if (monic_move()) continue;
    if (spare_row()) continue;
    if (column_euclid()) continue;
    if (escape()) continue;
    break;
  }
  finished_ = is_identity(m_);
}

Reduction Reducer::run() {
  if (!bound_) return {ElemWord(rs_, ring_, nvars_), m_};
  loop();
  return result();
}

}  // namespace

Reduction heuristic_reduce(const PolyMatrix& g, const RootSystemPtr& rs, const Budget& budget) {
  check_budget(budget);
  if (g.rows() != rs->dim() || g.cols() != rs->dim())
    throw Error(ErrorKind::SizeMismatch, "matrix size does not match " + rs->name());
  Reduction r = Reducer(g, rs, budget).run();
  if (!equal(multiply(eval_word(r.word), r.residual), g)) throw std::logic_error("heuristic reduction lost the invariant");
  return r;
}

}  // namespace chev
