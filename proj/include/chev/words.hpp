#pragma once

// Elementary words: formal products x_{α1}(t1) ... x_{αm}(tm). A word is the
// only accepted witness that a matrix lies in the elementary subgroup.

#include <variant>
#include <vector>

#include "chev/rootdata.hpp"

namespace chev {

class ElemWord {
 public:
  ElemWord(RootSystemPtr rs, BaseRing ring, int nvars, std::vector<Letter> letters = {});

  const RootSystemPtr& rs() const { return rs_; }
  const RootSystem& system() const { return *rs_; }
  const BaseRing& ring() const { return ring_; }
  int nvars() const { return nvars_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  // Appends x_root(arg); the arg is bound to the word's ring.
  void push(int root, const Poly& arg);
  void append(const ElemWord& other);

  int max_degree() const;

 private:
  RootSystemPtr rs_;
  BaseRing ring_;
  int nvars_;
  std::vector<Letter> letters_;
};

ElemWord concat(ElemWord a, const ElemWord& b);

PolyMatrix eval_word(const ElemWord& w);
ElemWord invert_word(const ElemWord& w);
// Merges adjacent letters on the same root and drops zero arguments until
// nothing changes.
ElemWord free_reduce(const ElemWord& w);

struct Localize {
  std::int64_t s;
};
struct Substitute {
  Assignment assignment;
  int target_nvars;
};
using RingHom = std::variant<Localize, Substitute>;

// Letterwise image along Z -> Z[1/s] or a substitution. Throws BaseMismatch.
ElemWord map_word(const ElemWord& w, const RingHom& hom);
// Ring change by coefficient reinterpretation (e.g. Z[1/s] -> Q, Z -> Q).
ElemWord change_ring(const ElemWord& w, const BaseRing& ring);

struct CongruenceTag {
  int variable;
  bool holds;
};
// holds iff eval(w) is the identity after z -> 0.
CongruenceTag congruence_check(const ElemWord& w, int z);

ElemWord commutator_word(const RootSystemPtr& rs, int a, int b, const Poly& s, const Poly& t);

// Words over a monic localization R[x]_monic.
struct LocLetter {
  int root;
  MonicLocElem arg;
};

struct LocWord {
  RootSystemPtr rs;
  std::vector<LocLetter> letters;
};

LocMatrix eval_word(const LocWord& w);
LocMatrix to_loc_matrix(const PolyMatrix& m, int var = 0);

}  // namespace chev
