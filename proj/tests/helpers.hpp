#pragma once

// Shared fixtures and independent oracles for the tests: dense products
// built directly from generator entries, brute-force searches.

#include <vector>

#include "chev/factorize.hpp"
#include "chev/sampling.hpp"

namespace testing {

using namespace chev;

inline Poly P(const std::string& text, const BaseRing& ring = BaseRing::integers(), int nvars = 1) {
  return parse_poly(text, ring, nvars);
}

inline PolyMatrix M(const std::vector<std::vector<std::string>>& rows, const BaseRing& ring = BaseRing::integers(),
                    int nvars = 1) {
  PolyMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = parse_poly(rows[i][j], ring, nvars);
  return m;
}

// I + t X_alpha from the generator's entries; no library products involved.
inline PolyMatrix letter_matrix(const RootSystem& rs, int root, const Poly& t) {
  const int n = rs.dim();
  PolyMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Poly::constant(t.ring(), t.nvars(), i == j ? 1 : 0);
  for (const auto& e : rs.generator(root)) m(e.row, e.col) += t.scaled(e.coeff);
  return m;
}

inline PolyMatrix naive_product(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix out(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      Poly acc = a(i, 0) * b(0, j);
      for (Eigen::Index k = 1; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      out(i, j) = acc;
    }
  return out;
}

// Product of the letters, evaluated without eval_word.
inline PolyMatrix naive_eval(const RootSystem& rs, const BaseRing& ring, int nvars, const std::vector<Letter>& letters) {
  PolyMatrix m = letter_matrix(rs, 0, Poly::constant(ring, nvars, 0));
  for (const auto& l : letters) m = naive_product(m, letter_matrix(rs, l.root, l.arg));
  return m;
}

inline PolyMatrix naive_eval(const ElemWord& w) { return naive_eval(w.system(), w.ring(), w.nvars(), w.letters()); }

inline bool same(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

inline int find_root(const RootSystem& rs, const RootVector& v) { return rs.index_of(v); }

}  // namespace testing
