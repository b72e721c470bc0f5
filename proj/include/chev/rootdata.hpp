#pragma once

// Root systems A_n, C_n (n >= 2) in their simply connected matrix models
// SL_{n+1} and Sp_{2n}, with elementary root unipotents and Chevalley
// commutator constants derived from the model itself.
//
// Symplectic model: coordinates ordered 1..n, n*..1*; the form is
// <e_i, e_i*> = 1 = -<e_i*, e_i>.

#include <memory>
#include <utility>
#include <vector>

#include "chev/exactring.hpp"
#include "chev/matrix.hpp"

namespace chev {

enum class RootType { A, C };

using RootVector = std::vector<int>;

// One nonzero entry of a root's nilpotent generator X_alpha.
struct GeneratorEntry {
  int row;
  int col;
  int coeff;  // +-1
};

// x_{iα+jβ}(N s^i t^j) term of a commutator [x_α(s), x_β(t)].
struct CommutatorTerm {
  int i;
  int j;
  int root;
  int constant;
};

struct Letter {
  int root;
  Poly arg;
};

class RootSystem;
using RootSystemPtr = std::shared_ptr<const RootSystem>;

class RootSystem {
 public:
  RootType type() const { return type_; }
  int rank() const { return rank_; }
  // Size of the model's matrices: rank+1 (A) or 2*rank (C).
  int dim() const { return dim_; }
  int size() const { return static_cast<int>(roots_.size()); }
  const RootVector& root(int index) const { return roots_.at(index); }
  const std::vector<RootVector>& roots() const { return roots_; }
  // Throws UnknownRoot.
  int index_of(const RootVector& root) const;
  int negative(int index) const { return negative_.at(index); }
  bool is_long(int index) const;
  // Cartan integer <beta, alpha> = 2(beta, alpha)/(alpha, alpha).
  int cartan(int beta, int alpha) const { return cartan_[beta][alpha]; }
  bool proportional(int a, int b) const { return a == b || negative_[a] == b; }

  const std::vector<GeneratorEntry>& generator(int index) const { return generators_.at(index); }
  // The root whose generator has an entry at (row, col), and that entry.
  // Every off-diagonal position belongs to exactly one root in both models.
  std::pair<int, int> root_at(int row, int col) const;

  // Ordered terms of [x_a(s), x_b(t)] for non-proportional a, b; empty when
  // the two root subgroups commute.
  const std::vector<CommutatorTerm>& commutator_terms(int a, int b) const;

  // Ambient-basis weight of matrix coordinate `pos`.
  RootVector weight(int pos) const;
  // Position of coordinate i (1-based) and its partner i* in type C.
  int pos(int i) const { return i - 1; }
  int pos_star(int i) const { return dim_ - i; }

  std::string name() const;

 private:
  friend RootSystemPtr make_root_system(RootType, int, bool);
  RootSystem() = default;
  void build_roots();
  void build_generators();
  void build_structure_constants();

  RootType type_ = RootType::A;
  int rank_ = 0;
  int dim_ = 0;
  std::vector<RootVector> roots_;
  std::vector<int> negative_;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<GeneratorEntry>> generators_;
  std::vector<std::vector<std::pair<int, int>>> position_owner_;
  std::vector<std::vector<std::vector<CommutatorTerm>>> structure_;
};

// Throws RankTooLow for rank < 2: below isotropic rank 2 the elementary
// subgroup of a polynomial ring is in general smaller than the group.
RootSystemPtr build_root_system(RootType type, int rank);
// The SL_2 / A_1 model, used only by base-case factorizers of constant
// matrices where SL_2(Z) = E_2(Z) does hold.
RootSystemPtr build_rank_one_system();
RootSystemPtr make_root_system(RootType type, int rank, bool allow_rank_one);

// J in the chosen coordinates (type C only).
PolyMatrix symplectic_form(const RootSystem& rs, const BaseRing& ring, int nvars);

PolyMatrix elem_unipotent(const RootSystem& rs, int root, const Poly& t);

// Letters evaluating to x_a(s) x_b(t) x_a(-s) x_b(-t). Throws ProportionalRoots.
std::vector<Letter> commutator_expand(const RootSystem& rs, int a, int b, const Poly& s, const Poly& t);

struct WeylTorus {
  PolyMatrix w;  // w_α(u) = x_α(u) x_{-α}(-u^{-1}) x_α(u)
  PolyMatrix h;  // h_α(u) = w_α(u) w_α(1)^{-1}
};
// u must be a constant unit of its ring. Throws NotAUnit.
WeylTorus weyl_and_torus(const RootSystem& rs, int root, const Poly& u);

// det = 1 (A) or MᵀJM = J (C), exactly. Throws SizeMismatch.
bool membership_check(const PolyMatrix& m, const RootSystem& rs);

// Inverse of a group element: adjugate (A) or -J Mᵀ J (C).
PolyMatrix group_inverse(const PolyMatrix& m, const RootSystem& rs);

// Left multiplication by x_root(t), i.e. the row operations of X_root.
template <class Scalar>
void apply_left(Matrix<Scalar>& m, const RootSystem& rs, int root, const Scalar& t) {
  const auto& gen = rs.generator(root);
  std::vector<Eigen::Matrix<Scalar, 1, Eigen::Dynamic>> sources;
  sources.reserve(gen.size());
  for (const auto& e : gen) sources.push_back(m.row(e.col));
  for (std::size_t k = 0; k < gen.size(); ++k) {
    const Scalar factor = gen[k].coeff == 1 ? t : Scalar(-t);
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      if (!sources[k](c).is_zero()) m(gen[k].row, c) += factor * sources[k](c);
  }
}

// Right multiplication by x_root(t), i.e. the column operations of X_root.
template <class Scalar>
void apply_right(Matrix<Scalar>& m, const RootSystem& rs, int root, const Scalar& t) {
  const auto& gen = rs.generator(root);
  std::vector<Eigen::Matrix<Scalar, Eigen::Dynamic, 1>> sources;
  sources.reserve(gen.size());
  for (const auto& e : gen) sources.push_back(m.col(e.row));
  for (std::size_t k = 0; k < gen.size(); ++k) {
    const Scalar factor = gen[k].coeff == 1 ? t : Scalar(-t);
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      if (!sources[k](r).is_zero()) m(r, gen[k].col) += sources[k](r) * factor;
  }
}

std::string root_to_string(const RootVector& root);

}  // namespace chev
