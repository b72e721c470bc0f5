#include "chev/words.hpp"

#include <algorithm>

namespace chev {

ElemWord::ElemWord(RootSystemPtr rs, BaseRing ring, int nvars, std::vector<Letter> letters)
    : rs_(std::move(rs)), ring_(ring), nvars_(nvars) {
  letters_.reserve(letters.size());
  for (auto& l : letters) push(l.root, l.arg);
}

void ElemWord::push(int root, const Poly& arg) {
  if (root < 0 || root >= rs_->size()) throw Error(ErrorKind::UnknownRoot, "root index " + std::to_string(root));
  letters_.push_back({root, arg.bind(ring_, nvars_)});
}

void ElemWord::append(const ElemWord& other) {
  if (other.rs_ != rs_ && other.rs_->name() != rs_->name())
    throw Error(ErrorKind::BaseMismatch, "words over different root systems");
  if (!(other.ring_ == ring_) || other.nvars_ != nvars_)
    throw Error(ErrorKind::BaseMismatch, "words over different rings");
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
}

int ElemWord::max_degree() const {
  int d = -1;
  for (const auto& l : letters_) d = std::max(d, l.arg.degree());
  return d;
}

ElemWord concat(ElemWord a, const ElemWord& b) {
  a.append(b);
  return a;
}

PolyMatrix eval_word(const ElemWord& w) {
  PolyMatrix m = identity_matrix(w.ring(), w.nvars(), w.system().dim());
  for (const auto& l : w.letters()) apply_right(m, w.system(), l.root, l.arg);
  return m;
}

ElemWord invert_word(const ElemWord& w) {
  ElemWord out(w.rs(), w.ring(), w.nvars());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push(it->root, -it->arg);
  return out;
}

ElemWord free_reduce(const ElemWord& w) {
  std::vector<Letter> stack;
  for (const auto& l : w.letters()) {
    if (l.arg.is_zero()) continue;
    if (!stack.empty() && stack.back().root == l.root) {
      stack.back().arg += l.arg;
      if (stack.back().arg.is_zero()) stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return ElemWord(w.rs(), w.ring(), w.nvars(), std::move(stack));
}

ElemWord map_word(const ElemWord& w, const RingHom& hom) {
  if (const auto* loc = std::get_if<Localize>(&hom)) {
    BaseRing target = BaseRing::integers();
    switch (w.ring().kind()) {
      case RingKind::Integers: target = BaseRing::localized(loc->s); break;
      case RingKind::IntegersLocalized: target = BaseRing::localized(w.ring().param() * loc->s); break;
      default: throw Error(ErrorKind::BaseMismatch, "cannot localize a word over " + w.ring().name());
    }
    return change_ring(w, target);
  }
  const auto& sub = std::get<Substitute>(hom);
  ElemWord out(w.rs(), w.ring(), sub.target_nvars);
  for (const auto& l : w.letters()) out.push(l.root, substitute(l.arg, sub.assignment, sub.target_nvars));
  return out;
}

ElemWord change_ring(const ElemWord& w, const BaseRing& ring) {
  ElemWord out(w.rs(), ring, w.nvars());
  for (const auto& l : w.letters()) out.push(l.root, change_ring(l.arg, ring));
  return out;
}

CongruenceTag congruence_check(const ElemWord& w, int z) {
  if (z < 0 || z >= w.nvars()) throw Error(ErrorKind::PreconditionViolated, "congruence variable out of range");
  PolyMatrix m = eval_word(w);
  Assignment zero{{z, Poly::constant(w.ring(), w.nvars(), 0)}};
  return {z, is_identity(substitute(m, zero, w.nvars()))};
}

ElemWord commutator_word(const RootSystemPtr& rs, int a, int b, const Poly& s, const Poly& t) {
  const Poly& ref = s.bound() ? s : t;
  const BaseRing ring = ref.bound() ? ref.ring() : BaseRing::integers();
  const int nvars = ref.bound() ? ref.nvars() : 0;
  return ElemWord(rs, ring, nvars, commutator_expand(*rs, a, b, s, t));
}

LocMatrix eval_word(const LocWord& w) {
  const int n = w.rs->dim();
  LocMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = MonicLocElem(i == j ? 1 : 0);
  for (const auto& l : w.letters) apply_right(m, *w.rs, l.root, l.arg);
  return m;
}

LocMatrix to_loc_matrix(const PolyMatrix& m, int var) {
  return m.unaryExpr([var](const Poly& p) { return MonicLocElem(p, var); });
}

}  // namespace chev
