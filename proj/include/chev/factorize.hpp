#pragma once

// Factorization of group elements into elementary words: Euclidean base
// cases, monic localization, a greedy reducer and the local-global pipeline.

#include <string>
#include <vector>

#include "chev/localglobal.hpp"

namespace chev {

struct Budget {
  std::size_t max_letters = 200000;
  int max_degree = 64;
  std::size_t max_coeff_bits = 8192;
  std::size_t max_steps = 20000;
};
// Throws PreconditionViolated unless every field is positive.
void check_budget(const Budget& b);

// Size of the working matrix after a pipeline stage.
struct StageLog {
  std::string stage;
  std::size_t letters = 0;
  int max_degree = 0;
  std::size_t max_coeff_bits = 0;
};

struct FactorizationCertificate {
  PolyMatrix target;
  ElemWord word;
  PolyMatrix residual_constant;  // eval(word) * residual_constant = target
  bool verified = false;
  std::vector<StageLog> stages;
};

std::size_t max_coeff_bits(const PolyMatrix& m);

// SL_N(Z), N >= 2, by Euclidean row reduction. Throws NotInGroup.
ElemWord factor_integer_sl(const PolyMatrix& g);
// Sp_2N(Z) in the model of `rs`. Throws NotInGroup.
ElemWord factor_integer_sp(const PolyMatrix& g, const RootSystemPtr& rs);
// Constant matrices over Z, Q or F_p.
ElemWord factor_constant(const PolyMatrix& g, const RootSystemPtr& rs);
// Entries univariate in `var` over Q or F_p. Throws NotInGroup.
ElemWord factor_univar_euclidean(const PolyMatrix& g, const RootSystemPtr& rs, int var = 0);

// Entries in V[x]_monic with V = Z_(p), Z[1/s], Q or F_p; type A only.
// Throws NotInGroup or DescentBudgetExceeded.
LocWord factor_monic_localized(const LocMatrix& g, const RootSystemPtr& rs, std::size_t max_steps = 2000);

// A word over A[x] for g, given one over A[x]_f whose value is the image of g.
// max_steps = 0 refuses any work beyond the denominator-free case.
ElemWord descend_monic(const PolyMatrix& g, const RootSystemPtr& rs, const LocWord& w_f, std::size_t max_steps);

struct Reduction {
  ElemWord word;
  PolyMatrix residual;  // eval(word) * residual = g
};

// Greedy left/right elementary reduction. Never fails: the residual may be g.
Reduction heuristic_reduce(const PolyMatrix& g, const RootSystemPtr& rs, const Budget& budget = {});

struct PipelineOptions {
  std::vector<int> variable_order;  // default x1, x2, ...
  bool greedy_first = true;
  // Per variable: greedy runs on conjugates over Z, then over Z[1/s] for
  // pairwise coprime s patched together.
  int conjugation_attempts = 12;
  int local_attempts = 12;
  bool allow_local_global = true;
};

// Throws RankTooLow, NotInGroup, or NotFactored (budget exhausted; not a
// statement about membership).
FactorizationCertificate factor_polynomial(const PolyMatrix& g, const RootSystemPtr& rs, const Budget& budget = {},
                                           const PipelineOptions& options = {});

}  // namespace chev
