// End-to-end factorization over Z[x1..xn]: greedy reduction first, then the
// local-global backstop one variable at a time, then the constant part.

#include <chrono>
#include <numeric>
#include <optional>
#include <random>

#include "chev/factorize.hpp"

namespace chev {

namespace {

[[noreturn]] void not_factored(const std::string& why) {
  throw Error(ErrorKind::NotFactored, why + " (budget exhausted; not a statement about membership)");
}

StageLog log_stage(const std::string& name, const ElemWord& w, const PolyMatrix& m) {
  return {name, w.length(), max_degree(m), max_coeff_bits(m)};
}

// Random product of root elements with small constant or linear arguments,
// for conjugating a stalled
// matrix before another greedy attempt.
ElemWord random_conjugator(const RootSystemPtr& rs, int nvars, int var, std::uint64_t seed) {
  const BaseRing zr = BaseRing::integers();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> root(0, rs->size() - 1), arg(-2, 2), lin(-1, 1);
  ElemWord p(rs, zr, nvars);
  for (int i = 0; i < 2 * rs->dim(); ++i) {
    Poly a = Poly::constant(zr, nvars, arg(rng));
    if (var >= 0 && seed % 2 == 0) a += Poly::variable(zr, nvars, var).scaled(lin(rng));
    if (!a.is_zero()) p.push(root(rng), a);
  }
  return p;
}

// Products of consecutive primes, pairwise coprime: 2*3*5*7*11*13, 17*19*23*29, ...
std::vector<std::int64_t> localizing_elements(int count) {
  std::vector<std::int64_t> out;
  std::int64_t acc = 1, p = 2;
  while (static_cast<int>(out.size()) < count) {
    bool prime = true;
    for (std::int64_t d = 2; d * d <= p; ++d) prime = prime && p % d != 0;
    if (prime) {
      acc *= p;
      if (acc > 100000) {
        out.push_back(acc);
        acc = 1;
      }
    }
    ++p;
  }
  return out;
}

class Backstop {
 public:
  Backstop(RootSystemPtr rs, int nvars, const Budget& budget, const PipelineOptions& options)
      : rs_(std::move(rs)), nvars_(nvars), budget_(budget), options_(options) {}

  // c = I mod x_v.
  ElemWord congruence_word(const PolyMatrix& c, int v) const {
    const BaseRing zr = BaseRing::integers();
    for (int attempt = 0; attempt < options_.conjugation_attempts; ++attempt) {
      const ElemWord p = attempt == 0 ? ElemWord(rs_, zr, nvars_)
                                      : random_conjugator(rs_, nvars_, v, 0x5eed0000u + static_cast<unsigned>(attempt));
      const PolyMatrix conj = multiply(multiply(eval_word(p), c), eval_word(invert_word(p)));
      Reduction r = heuristic_reduce(conj, rs_, budget_);
      if (is_identity(r.residual)) return concat(concat(invert_word(p), r.word), p);
    }
    // Local words over Z[1/s] for pairwise coprime s, patched over Z.
    std::vector<DilationCert> certs;
    std::int64_t g = 0;
    for (std::int64_t s : localizing_elements(options_.local_attempts)) {
      const BaseRing loc = BaseRing::localized(s);
      std::optional<ElemWord> w;
      for (int attempt = 0; attempt < 4 && !w; ++attempt) {
        const ElemWord p = attempt == 0 ? ElemWord(rs_, zr, nvars_)
                                        : random_conjugator(rs_, nvars_, v, 0x10c00000u + static_cast<unsigned>(attempt));
        const PolyMatrix conj = multiply(multiply(eval_word(p), c), eval_word(invert_word(p)));
        Reduction r = heuristic_reduce(change_ring(conj, loc), rs_, budget_);
        if (is_identity(r.residual))
          w = concat(concat(change_ring(invert_word(p), loc), r.word), change_ring(p, loc));
      }
      if (!w) continue;
      try {
        certs.push_back(dilation_factor(c, *w, v, DescentBudget{budget_.max_letters, budget_.max_degree}));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::DescentBudgetExceeded) throw;
        continue;
      }
      g = std::gcd(g, s);
      if (g == 1) break;
    }
    if (g != 1) not_factored("no covering of Z found in " + std::to_string(options_.local_attempts) + " local attempts");
    std::vector<std::int64_t> elems;
    for (const auto& cert : certs) elems.push_back(cert.s());
    CoveringData cov = make_covering(elems);
    for (std::size_t i = 0; i < certs.size(); ++i) cov.exponents[i] = std::max(1, certs[i].k());
    return patch(c, rs_, certs, cov, v);
  }

 private:
  RootSystemPtr rs_;
  int nvars_;
  Budget budget_;
  PipelineOptions options_;
};

}  // namespace

FactorizationCertificate factor_polynomial(const PolyMatrix& g, const RootSystemPtr& rs, const Budget& budget,
                                           const PipelineOptions& options) {
  check_budget(budget);
  if (rs->rank() < 2) throw Error(ErrorKind::RankTooLow, rs->name() + " has rank 1; the elementary subgroup is smaller");
  if (g.rows() != rs->dim() || g.cols() != rs->dim())
    throw Error(ErrorKind::SizeMismatch, "matrix size does not match " + rs->name());
  int nvars = 0;
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j)
      if (g(i, j).bound()) {
        if (g(i, j).ring().kind() != RingKind::Integers)
          throw Error(ErrorKind::PreconditionViolated, "entries must lie in Z[x1..xn]");
        nvars = g(i, j).nvars();
      }
  const BaseRing zr = BaseRing::integers();
  const PolyMatrix target = g.unaryExpr([&](const Poly& p) { return p.bind(zr, nvars); });
  if (!membership_check(target, *rs)) throw Error(ErrorKind::NotInGroup, "not in " + rs->name());

  std::vector<int> order = options.variable_order;
  if (order.empty())
    for (int v = 0; v < nvars; ++v) order.push_back(v);
  for (int v : order)
    if (v < 0 || v >= nvars) throw Error(ErrorKind::PreconditionViolated, "variable order out of range");

  FactorizationCertificate cert{target, ElemWord(rs, zr, nvars), identity_matrix(zr, nvars, rs->dim()), false, {}};
  cert.stages.push_back(log_stage("input", cert.word, target));

  PolyMatrix rest = target;
  if (options.greedy_first) {
    Reduction r = heuristic_reduce(target, rs, budget);
    cert.word = r.word;
    rest = r.residual;
    cert.stages.push_back(log_stage("heuristic", cert.word, rest));
  }

  if (!is_identity(rest) && !is_constant(rest)) {
    if (!options.allow_local_global) not_factored("greedy reduction stalled");
    Backstop back(rs, nvars, budget, options);
    // rest = c_1 c_2 ... c_m rest(0, ..., 0), c_i = I mod x_{v_i}
    for (int v : order) {
      if (is_constant(rest)) break;
      const PolyMatrix base = substitute(rest, Assignment{{v, Poly::constant(zr, nvars, 0)}}, nvars);
      const PolyMatrix c = multiply(rest, group_inverse(base, *rs));
      if (!is_identity(c)) cert.word.append(back.congruence_word(c, v));
      rest = base;
      cert.stages.push_back(log_stage("local-global x" + std::to_string(v + 1), cert.word, rest));
    }
  }
  if (!is_identity(rest)) {
    cert.word.append(factor_constant(rest, rs));
    cert.stages.push_back(log_stage("constant", cert.word, identity_matrix(zr, nvars, rs->dim())));
  }
  if (cert.word.length() > budget.max_letters)
    not_factored("word of " + std::to_string(cert.word.length()) + " letters exceeds the letter budget");
  if (!equal(eval_word(cert.word), target)) throw std::logic_error("factorization does not multiply back");
  cert.verified = true;
  return cert;
}

}  // namespace chev
