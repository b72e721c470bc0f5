#pragma once

// Row reduction to the identity by elementary root operations, generic over
// the scalar type and a Euclidean-style traits object:
//
//   norm(a)        comparable size, smaller is better
//   quotient(a, b) q with a - q b smaller than a (zero when none is found)
//   is_unit(a), inverse(a)

#include <string>
#include <utility>
#include <vector>

#include "chev/rootdata.hpp"

namespace chev::detail {

template <class Scalar>
class RowOps {
 public:
  RowOps(Matrix<Scalar>& m, const RootSystem& rs, std::size_t max_steps, ErrorKind on_budget)
      : m_(m), rs_(rs), max_steps_(max_steps), on_budget_(on_budget) {}

  Matrix<Scalar>& m() { return m_; }
  const RootSystem& rs() const { return rs_; }
  const std::vector<std::pair<int, Scalar>>& ops() const { return ops_; }

  // row_p += t row_q, together with the partner entry of the root.
  void add_row(int p, int q, const Scalar& t) {
    if (t.is_zero()) return;
    auto [root, c] = rs_.root_at(p, q);
    Scalar arg = c == 1 ? t : Scalar(-t);
    apply_left(m_, rs_, root, arg);
    ops_.emplace_back(root, std::move(arg));
    if (ops_.size() > max_steps_)
      throw Error(on_budget_, "row reduction exceeded " + std::to_string(max_steps_) + " operations");
  }

 private:
  Matrix<Scalar>& m_;
  const RootSystem& rs_;
  std::size_t max_steps_;
  ErrorKind on_budget_;
  std::vector<std::pair<int, Scalar>> ops_;
};

[[noreturn]] inline void not_in_group(const std::string& why) { throw Error(ErrorKind::NotInGroup, why); }

// Euclid among `rows` in column `col` until at most one entry is nonzero;
// returns that row or -1.
template <class Tr, class Scalar>
int euclid_rows(RowOps<Scalar>& ro, const Tr& tr, const std::vector<int>& rows, int col) {
  auto& m = ro.m();
  for (;;) {
    std::vector<int> nz;
    for (int r : rows)
      if (!m(r, col).is_zero()) nz.push_back(r);
    if (nz.empty()) return -1;
    if (nz.size() == 1) return nz.front();
    int p = nz.front();
    auto best = tr.norm(m(p, col));
    for (int r : nz) {
      auto n = tr.norm(m(r, col));
      if (n < best) {
        best = n;
        p = r;
      }
    }
    const Scalar a = m(p, col);
    if (tr.is_unit(a)) {
      const Scalar inv = tr.inverse(a);
      for (int r : nz)
        if (r != p) ro.add_row(r, p, Scalar(-(m(r, col) * inv)));
      return p;
    }
    bool moved = false;
    for (int r : nz) {
      if (r == p) continue;
      Scalar q = tr.quotient(m(r, col), a);
      if (q.is_zero()) continue;
      ro.add_row(r, p, Scalar(-q));
      moved = true;
    }
    if (!moved) not_in_group("column reduction made no progress");
  }
}

// Zero out m(b, col) with operations between rows a and b only.
template <class Tr, class Scalar>
void euclid_pair(RowOps<Scalar>& ro, const Tr& tr, int a, int b, int col) {
  auto& m = ro.m();
  for (;;) {
    const Scalar x = m(a, col);
    const Scalar y = m(b, col);
    if (y.is_zero()) return;
    if (x.is_zero()) {
      ro.add_row(a, b, Scalar(1));
      ro.add_row(b, a, Scalar(-1));
      return;
    }
    if (!(tr.norm(y) < tr.norm(x))) {
      Scalar q = tr.is_unit(x) ? Scalar(y * tr.inverse(x)) : tr.quotient(y, x);
      if (q.is_zero()) not_in_group("pair reduction made no progress");
      ro.add_row(b, a, Scalar(-q));
    } else {
      Scalar q = tr.is_unit(y) ? Scalar(x * tr.inverse(y)) : tr.quotient(x, y);
      if (q.is_zero()) not_in_group("pair reduction made no progress");
      ro.add_row(a, b, Scalar(-q));
    }
  }
}

// After reduction, the column holds a single entry at `p`; bring it to `target`
// as 1. `spare` is a row with a zero entry in the column, used to fix a unit
// already in place.
template <class Tr, class Scalar>
void settle_pivot(RowOps<Scalar>& ro, const Tr& tr, int p, int target, int spare, int col) {
  auto& m = ro.m();
  const Scalar a = m(p, col);
  if (!tr.is_unit(a)) not_in_group("pivot is not a unit");
  if (p != target) {
    ro.add_row(target, p, tr.inverse(a));
    ro.add_row(p, target, Scalar(-a));
    return;
  }
  if (a == Scalar(1)) return;
  if (spare < 0) not_in_group("determinant is not 1");
  ro.add_row(spare, target, tr.inverse(a));
  ro.add_row(target, spare, Scalar(Scalar(1) - a));
  ro.add_row(spare, target, Scalar(-1));
}

// Type A: Lm ... L1 g = I.
template <class Tr, class Scalar>
void reduce_sl(RowOps<Scalar>& ro, const Tr& tr) {
  auto& m = ro.m();
  const int n = static_cast<int>(m.rows());
  for (int c = 0; c < n; ++c) {
    std::vector<int> rows;
    for (int r = c; r < n; ++r) rows.push_back(r);
    const int p = euclid_rows(ro, tr, rows, c);
    if (p < 0) not_in_group("singular matrix");
    settle_pivot(ro, tr, p, c, c + 1 < n ? c + 1 : -1, c);
    for (int r = 0; r < n; ++r)
      if (r != c && !m(r, c).is_zero()) ro.add_row(r, c, Scalar(-m(r, c)));
  }
  if (!is_identity(m)) not_in_group("reduction did not reach the identity");
}

// Type C, one hyperbolic pair (L, L*) per level: Euclid on the pairs
// (i, i*) with long roots, then among i >= L with short roots, then clear
// column L* against the pivot row L*.
template <class Tr, class Scalar>
void reduce_sp(RowOps<Scalar>& ro, const Tr& tr) {
  auto& m = ro.m();
  const RootSystem& rs = ro.rs();
  const int n = rs.rank();
  for (int L = 1; L <= n; ++L) {
    const int pl = rs.pos(L);
    const int psl = rs.pos_star(L);
    const int col = pl;
    for (int i = L; i <= n; ++i) euclid_pair(ro, tr, rs.pos(i), rs.pos_star(i), col);
    std::vector<int> rows;
    for (int i = L; i <= n; ++i) rows.push_back(rs.pos(i));
    const int p = euclid_rows(ro, tr, rows, col);
    if (p < 0) not_in_group("singular matrix");
    settle_pivot(ro, tr, p, pl, psl, col);
    const int cs = psl;
    for (int i = L + 1; i <= n; ++i)
      if (!m(rs.pos_star(i), cs).is_zero()) ro.add_row(rs.pos_star(i), psl, Scalar(-m(rs.pos_star(i), cs)));
    for (int i = L + 1; i <= n; ++i)
      if (!m(rs.pos(i), cs).is_zero()) ro.add_row(rs.pos(i), psl, Scalar(-m(rs.pos(i), cs)));
    if (!m(pl, cs).is_zero()) ro.add_row(pl, psl, Scalar(-m(pl, cs)));
    if (m(psl, cs) != Scalar(1)) not_in_group("matrix is not symplectic");
  }
  if (!is_identity(m)) not_in_group("reduction did not reach the identity");
}

template <class Tr, class Scalar>
void reduce(RowOps<Scalar>& ro, const Tr& tr) {
  if (ro.rs().type() == RootType::A)
    reduce_sl(ro, tr);
  else
    reduce_sp(ro, tr);
}

}  // namespace chev::detail
