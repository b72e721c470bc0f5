#include "chev/rootdata.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace chev {

namespace {

int dot(const RootVector& a, const RootVector& b) { return std::inner_product(a.begin(), a.end(), b.begin(), 0); }

RootVector combine(int i, const RootVector& a, int j, const RootVector& b) {
  RootVector r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = i * a[k] + j * b[k];
  return r;
}

RootVector negate(const RootVector& a) { return combine(-1, a, 0, a); }

}  // namespace

std::string root_to_string(const RootVector& root) {
  std::string out = "[";
  for (std::size_t i = 0; i < root.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(root[i]);
  }
  return out + "]";
}

std::string RootSystem::name() const { return (type_ == RootType::A ? "A" : "C") + std::to_string(rank_); }

int RootSystem::index_of(const RootVector& root) const {
  for (int k = 0; k < size(); ++k)
    if (roots_[k] == root) return k;
  throw Error(ErrorKind::UnknownRoot, root_to_string(root) + " is not a root of " + name());
}

bool RootSystem::is_long(int index) const {
  if (type_ == RootType::A) return true;
  return dot(roots_[index], roots_[index]) == 4;
}

std::pair<int, int> RootSystem::root_at(int row, int col) const {
  auto owner = position_owner_.at(row).at(col);
  if (owner.first < 0) throw Error(ErrorKind::UnknownRoot, "no root at a diagonal position");
  return owner;
}

const std::vector<CommutatorTerm>& RootSystem::commutator_terms(int a, int b) const {
  if (proportional(a, b))
    throw Error(ErrorKind::ProportionalRoots, root_to_string(roots_[a]) + ", " + root_to_string(roots_[b]));
  return structure_[a][b];
}

RootVector RootSystem::weight(int pos) const {
  if (type_ == RootType::A) {
    RootVector w(dim_, 0);
    w[pos] = 1;
    return w;
  }
  RootVector w(rank_, 0);
  if (pos < rank_)
    w[pos] = 1;
  else
    w[dim_ - pos - 1] = -1;
  return w;
}

void RootSystem::build_roots() {
  const int n = rank_;
  if (type_ == RootType::A) {
    dim_ = n + 1;
    for (int sign : {1, -1})
      for (int i = 0; i < dim_; ++i)
        for (int j = i + 1; j < dim_; ++j) {
          RootVector r(dim_, 0);
          r[i] = sign;
          r[j] = -sign;
          roots_.push_back(r);
        }
  } else {
    dim_ = 2 * n;
    for (int sign : {1, -1}) {
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          RootVector r(n, 0);
          r[i] = sign;
          r[j] = -sign;
          roots_.push_back(r);
        }
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          RootVector r(n, 0);
          r[i] = sign;
          r[j] = sign;
          roots_.push_back(r);
        }
      for (int i = 0; i < n; ++i) {
        RootVector r(n, 0);
        r[i] = 2 * sign;
        roots_.push_back(r);
      }
    }
  }
  negative_.resize(roots_.size());
  for (int k = 0; k < size(); ++k) negative_[k] = index_of(negate(roots_[k]));
  cartan_.assign(roots_.size(), std::vector<int>(roots_.size()));
  for (int b = 0; b < size(); ++b)
    for (int a = 0; a < size(); ++a) cartan_[b][a] = 2 * dot(roots_[b], roots_[a]) / dot(roots_[a], roots_[a]);
}

void RootSystem::build_generators() {
  generators_.assign(roots_.size(), {});
  const int half = size() / 2;
  if (type_ == RootType::A) {
    for (int k = 0; k < size(); ++k) {
      int row = -1, col = -1;
      for (int c = 0; c < dim_; ++c) {
        if (roots_[k][c] == 1) row = c;
        if (roots_[k][c] == -1) col = c;
      }
      generators_[k] = {{row, col, 1}};
    }
  } else {
    // J as an integer matrix, to fix the sign of the second entry of each
    // short-root generator.
    Eigen::MatrixXi J = Eigen::MatrixXi::Zero(dim_, dim_);
    for (int i = 1; i <= rank_; ++i) {
      J(pos(i), pos_star(i)) = 1;
      J(pos_star(i), pos(i)) = -1;
    }
    auto in_lie_algebra = [&](const std::vector<GeneratorEntry>& gen) {
      Eigen::MatrixXi X = Eigen::MatrixXi::Zero(dim_, dim_);
      for (const auto& e : gen) X(e.row, e.col) += e.coeff;
      return (X.transpose() * J + J * X).isZero();
    };
    for (int k = 0; k < half; ++k) {
      const RootVector& r = roots_[k];
      std::vector<int> plus, minus;
      for (int c = 0; c < rank_; ++c) {
        for (int m = 0; m < r[c]; ++m) plus.push_back(c + 1);
        for (int m = 0; m < -r[c]; ++m) minus.push_back(c + 1);
      }
      std::vector<GeneratorEntry> candidate;
      if (plus.size() == 2 && plus[0] == plus[1]) {
        candidate = {{pos(plus[0]), pos_star(plus[0]), 1}};
        if (!in_lie_algebra(candidate)) throw std::logic_error("long root generator not symplectic");
      } else {
        int row1, col1, row2, col2;
        if (minus.size() == 1) {  // e_i - e_j
          row1 = pos(plus[0]), col1 = pos(minus[0]);
          row2 = pos_star(minus[0]), col2 = pos_star(plus[0]);
        } else {  // e_i + e_j
          row1 = pos(plus[0]), col1 = pos_star(plus[1]);
          row2 = pos(plus[1]), col2 = pos_star(plus[0]);
        }
        bool found = false;
        for (int c : {1, -1}) {
          candidate = {{row1, col1, 1}, {row2, col2, c}};
          if (in_lie_algebra(candidate)) {
            found = true;
            break;
          }
        }
        if (!found) throw std::logic_error("no symplectic sign for a short root");
      }
      generators_[k] = candidate;
      std::vector<GeneratorEntry> transposed;
      for (const auto& e : candidate) transposed.push_back({e.col, e.row, e.coeff});
      generators_[negative_[k]] = transposed;
    }
  }
  position_owner_.assign(dim_, std::vector<std::pair<int, int>>(dim_, {-1, 0}));
  for (int k = 0; k < size(); ++k)
    for (const auto& e : generators_[k]) {
      if (combine(1, weight(e.row), -1, weight(e.col)) != roots_[k])
        throw std::logic_error("generator weight does not match its root");
      if (position_owner_[e.row][e.col].first >= 0) throw std::logic_error("two roots share a matrix position");
      position_owner_[e.row][e.col] = {k, e.coeff};
    }
}

void RootSystem::build_structure_constants() {
  // Commutators with indeterminate arguments s = x1, t = x2 over Z.
  const BaseRing Z = BaseRing::integers();
  const Poly s = Poly::variable(Z, 2, 0);
  const Poly t = Poly::variable(Z, 2, 1);
  const PolyMatrix I = identity_matrix(Z, 2, dim_);
  structure_.assign(roots_.size(), std::vector<std::vector<CommutatorTerm>>(roots_.size()));
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b) {
      if (proportional(a, b)) continue;
      PolyMatrix C = I;
      apply_right(C, *this, a, s);
      apply_right(C, *this, b, t);
      apply_right(C, *this, a, Poly(-s));
      apply_right(C, *this, b, Poly(-t));
      if (is_identity(C)) continue;
      std::vector<CommutatorTerm> terms;
      for (int deg = 2; deg <= 6; ++deg)
        for (int i = deg - 1; i >= 1; --i) {
          const int j = deg - i;
          RootVector gamma = combine(i, roots_[a], j, roots_[b]);
          int g = -1;
          for (int k = 0; k < size(); ++k)
            if (roots_[k] == gamma) g = k;
          if (g < 0) continue;
          const GeneratorEntry& lead = generators_[g].front();
          Monomial m;
          m.exp[0] = static_cast<std::uint16_t>(i);
          m.exp[1] = static_cast<std::uint16_t>(j);
          mpq_class c = C(lead.row, lead.col).coeff(m) * lead.coeff;
          if (c != 0) terms.push_back({i, j, g, static_cast<int>(c.get_num().get_si())});
        }
      PolyMatrix check = I;
      for (const auto& term : terms)
        apply_right(check, *this, term.root,
                    Poly(s.pow(term.i) * t.pow(term.j)).scaled(term.constant));
      if (!equal(check, C))
        throw std::logic_error("commutator of " + root_to_string(roots_[a]) + ", " + root_to_string(roots_[b]) +
                               " is not a product of root elements in " + name());
      structure_[a][b] = std::move(terms);
    }
}

RootSystemPtr make_root_system(RootType type, int rank, bool allow_rank_one) {
  if (type != RootType::A && type != RootType::C) throw Error(ErrorKind::UnsupportedType, "only types A and C");
  if (rank < 1 || (rank < 2 && !(allow_rank_one && type == RootType::A)))
    throw Error(ErrorKind::RankTooLow, "rank " + std::to_string(rank) +
                                           " is below isotropic rank 2; SL_2(Z[x]) != E_2(Z[x])");
  static std::mutex mutex;
  static std::map<std::pair<int, int>, RootSystemPtr> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(static_cast<int>(type), rank);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto rs = std::shared_ptr<RootSystem>(new RootSystem());
  rs->type_ = type;
  rs->rank_ = rank;
  rs->build_roots();
  rs->build_generators();
  rs->build_structure_constants();
  cache.emplace(key, rs);
  return rs;
}

RootSystemPtr build_root_system(RootType type, int rank) { return make_root_system(type, rank, false); }

RootSystemPtr build_rank_one_system() { return make_root_system(RootType::A, 1, true); }

PolyMatrix symplectic_form(const RootSystem& rs, const BaseRing& ring, int nvars) {
  PolyMatrix J = identity_matrix(ring, nvars, rs.dim());
  for (int i = 0; i < rs.dim(); ++i) J(i, i) = Poly::constant(ring, nvars, 0);
  for (int i = 1; i <= rs.rank(); ++i) {
    J(rs.pos(i), rs.pos_star(i)) = Poly::constant(ring, nvars, 1);
    J(rs.pos_star(i), rs.pos(i)) = Poly::constant(ring, nvars, -1);
  }
  return J;
}

PolyMatrix elem_unipotent(const RootSystem& rs, int root, const Poly& t) {
  if (root < 0 || root >= rs.size()) throw Error(ErrorKind::UnknownRoot, "root index " + std::to_string(root));
  const BaseRing ring = t.bound() ? t.ring() : BaseRing::integers();
  PolyMatrix m = identity_matrix(ring, t.bound() ? t.nvars() : 0, rs.dim());
  apply_left(m, rs, root, t);
  return m;
}

std::vector<Letter> commutator_expand(const RootSystem& rs, int a, int b, const Poly& s, const Poly& t) {
  std::vector<Letter> out;
  for (const auto& term : rs.commutator_terms(a, b))
    out.push_back({term.root, Poly(s.pow(term.i) * t.pow(term.j)).scaled(term.constant)});
  return out;
}

WeylTorus weyl_and_torus(const RootSystem& rs, int root, const Poly& u) {
  const BaseRing ring = u.bound() ? u.ring() : BaseRing::integers();
  const int nvars = u.bound() ? u.nvars() : 0;
  if (!u.is_constant() || !ring.is_unit(u.constant_term()))
    throw Error(ErrorKind::NotAUnit, to_string(u) + " in " + ring.name());
  const Poly ub = u.bind(ring, nvars);
  const Poly uinv = Poly::constant(ring, nvars, ring.inverse(u.constant_term()));
  const Poly one = Poly::constant(ring, nvars, 1);
  auto w_of = [&](const Poly& v, const Poly& vinv) {
    PolyMatrix w = identity_matrix(ring, nvars, rs.dim());
    apply_right(w, rs, root, v);
    apply_right(w, rs, rs.negative(root), Poly(-vinv));
    apply_right(w, rs, root, v);
    return w;
  };
  PolyMatrix w = w_of(ub, uinv);
  PolyMatrix w1 = w_of(one, one);
  return {w, multiply(w, group_inverse(w1, rs))};
}

bool membership_check(const PolyMatrix& m, const RootSystem& rs) {
  if (m.rows() != rs.dim() || m.cols() != rs.dim())
    throw Error(ErrorKind::SizeMismatch, std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix for " +
                                             rs.name() + " (size " + std::to_string(rs.dim()) + ")");
  if (rs.type() == RootType::A) return determinant(m) == Poly(1);
  BaseRing ring = BaseRing::integers();
  int nvars = 0;
  for (Eigen::Index i = 0; i < m.size(); ++i)
    if (m(i).bound()) {
      ring = m(i).ring();
      nvars = m(i).nvars();
      break;
    }
  PolyMatrix J = symplectic_form(rs, ring, nvars);
  PolyMatrix mt = m.transpose();
  return equal(multiply(multiply(mt, J), m), J);
}

PolyMatrix group_inverse(const PolyMatrix& m, const RootSystem& rs) {
  if (rs.type() == RootType::A) return adjugate(m);
  BaseRing ring = BaseRing::integers();
  int nvars = 0;
  for (Eigen::Index i = 0; i < m.size(); ++i)
    if (m(i).bound()) {
      ring = m(i).ring();
      nvars = m(i).nvars();
      break;
    }
  PolyMatrix J = symplectic_form(rs, ring, nvars);
  PolyMatrix mt = m.transpose();
  PolyMatrix r = multiply(multiply(J, mt), J);
  return r.unaryExpr([](const Poly& p) { return Poly(-p); });
}

}  // namespace chev
