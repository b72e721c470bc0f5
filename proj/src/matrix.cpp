#include "chev/matrix.hpp"

#include <algorithm>

namespace chev {

PolyMatrix identity_matrix(const BaseRing& ring, int nvars, int n) {
  PolyMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Poly::constant(ring, nvars, i == j ? 1 : 0);
  return m;
}

PolyMatrix substitute(const PolyMatrix& m, const Assignment& assignment, int target_nvars) {
  return m.unaryExpr([&](const Poly& p) { return substitute(p, assignment, target_nvars); });
}

PolyMatrix change_ring(const PolyMatrix& m, const BaseRing& ring) {
  return m.unaryExpr([&](const Poly& p) { return change_ring(p, ring); });
}

PolyMatrix resize_vars(const PolyMatrix& m, int nvars) {
  return m.unaryExpr([&](const Poly& p) { return resize_vars(p, nvars); });
}

bool is_constant(const PolyMatrix& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i)
    if (!m(i).is_constant()) return false;
  return true;
}

int max_degree(const PolyMatrix& m) {
  int d = -1;
  for (Eigen::Index i = 0; i < m.size(); ++i) d = std::max(d, m(i).degree());
  return d;
}

}  // namespace chev
