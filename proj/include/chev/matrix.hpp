#pragma once

// Dense matrices over the exact scalar types, as Eigen matrices.

#include <Eigen/Core>

#include <cstdint>
#include <vector>

#include "chev/exactring.hpp"

namespace Eigen {

template <>
struct NumTraits<chev::Poly> : GenericNumTraits<chev::Poly> {
  using Real = chev::Poly;
  using NonInteger = chev::Poly;
  using Nested = chev::Poly;
  using Literal = chev::Poly;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 64
  };
  static constexpr int digits10() { return 0; }
};

template <>
struct NumTraits<chev::MonicLocElem> : GenericNumTraits<chev::MonicLocElem> {
  using Real = chev::MonicLocElem;
  using NonInteger = chev::MonicLocElem;
  using Nested = chev::MonicLocElem;
  using Literal = chev::MonicLocElem;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 64,
    MulCost = 256
  };
  static constexpr int digits10() { return 0; }
};

}  // namespace Eigen

namespace chev {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using PolyMatrix = Matrix<Poly>;
using LocMatrix = Matrix<MonicLocElem>;

PolyMatrix identity_matrix(const BaseRing& ring, int nvars, int n);

// Entrywise exact equality.
template <class Scalar>
bool equal(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

template <class Scalar>
bool is_identity(const Matrix<Scalar>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != Scalar(i == j ? 1 : 0)) return false;
  return true;
}

// Exact product without relying on Eigen's blocked kernels (entries are not
// trivially copyable, and the triple loop is what we want anyway).
template <class Scalar>
Matrix<Scalar> multiply(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  Matrix<Scalar> out(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      Scalar acc(0);
      for (Eigen::Index k = 0; k < a.cols(); ++k)
        if (!a(i, k).is_zero() && !b(k, j).is_zero()) acc += a(i, k) * b(k, j);
      out(i, j) = acc;
    }
  return out;
}

// Division-free determinant by expansion over column subsets; O(2^n n).
template <class Scalar>
Scalar determinant(const Matrix<Scalar>& m) {
  const int n = static_cast<int>(m.rows());
  if (n == 0) return Scalar(1);
  // minors[mask] = det of rows [n-popcount(mask), n) x columns in mask
  std::vector<Scalar> minors(std::size_t{1} << n, Scalar(0));
  minors[0] = Scalar(1);
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    const int rows_used = __builtin_popcount(mask);
    const int row = n - rows_used;
    Scalar acc(0);
    int sign_pos = 0;
    for (int col = 0; col < n; ++col) {
      if (!(mask & (1U << col))) continue;
      const Scalar& entry = m(row, col);
      if (!entry.is_zero()) {
        Scalar term = entry * minors[mask & ~(1U << col)];
        if (sign_pos % 2 == 0)
          acc += term;
        else
          acc -= term;
      }
      ++sign_pos;
    }
    minors[mask] = acc;
  }
  return minors[(1U << n) - 1];
}

template <class Scalar>
Matrix<Scalar> adjugate(const Matrix<Scalar>& m) {
  const Eigen::Index n = m.rows();
  Matrix<Scalar> adj(n, n);
  if (n == 1) {
    adj(0, 0) = Scalar(1);
    return adj;
  }
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      Matrix<Scalar> minor(n - 1, n - 1);
      for (Eigen::Index r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (Eigen::Index c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(rr, cc++) = m(r, c);
        }
        ++rr;
      }
      Scalar d = determinant(minor);
      adj(j, i) = ((i + j) % 2 == 0) ? d : Scalar(-d);
    }
  return adj;
}

PolyMatrix substitute(const PolyMatrix& m, const Assignment& assignment, int target_nvars);
PolyMatrix change_ring(const PolyMatrix& m, const BaseRing& ring);
PolyMatrix resize_vars(const PolyMatrix& m, int nvars);
bool is_constant(const PolyMatrix& m);
int max_degree(const PolyMatrix& m);

}  // namespace chev
