#include "chev/cli.hpp"

#include <chrono>
#include <ostream>

#include "chev/relations.hpp"

namespace chev::cli {

namespace {

using io::Json;

int invalid(std::ostream& err, const std::string& why) {
  err << "error: " << why << "\n";
  return kInvalid;
}

RootSystemPtr group_of(const GroupOptions& g) {
  if (g.type != "A" && g.type != "C") throw Error(ErrorKind::UnsupportedType, "group type '" + g.type + "' (expected A or C)");
  return build_root_system(g.type == "A" ? RootType::A : RootType::C, g.rank);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void emit(const Json& j, const std::string& path, std::ostream& out) {
  if (path.empty())
    out << io::dump(j);
  else
    io::write_json(path, j);
}

}  // namespace

int cmd_factor(const FactorOptions& opt, std::ostream& out, std::ostream& err) {
  io::MatrixFile in{};
  try {
    in = io::read_matrix_file(io::read_json(opt.in));
    check_budget(opt.budget);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::RankTooLow)
      return invalid(err, std::string(e.what()) + " (rank 1 groups over polynomial rings are not generated by "
                                                  "elementary matrices; rank >= 2 is required)");
    return invalid(err, e.what());
  }
  const auto t0 = std::chrono::steady_clock::now();
  try {
    FactorizationCertificate cert = factor_polynomial(in.matrix, in.header.rs, opt.budget);
    const std::optional<double> wall = opt.timing ? std::optional<double>(seconds_since(t0)) : std::nullopt;
    emit(io::certificate_json(cert, *in.header.rs, wall), opt.out, out);
    err << "factored: " << cert.word.length() << " letters\n";
    return kOk;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotFactored) {
      err << "not factored: " << e.what() << "\n";
      return kNotFactored;
    }
    return invalid(err, e.what());
  }
}

int verify_certificate(const Json& j, std::ostream& out, std::ostream& err) {
  std::optional<io::CertificateFile> c;
  try {
    c = io::read_certificate(j);
  } catch (const Error& e) {
    return invalid(err, e.what());
  }
  const RootSystem& rs = *c->header.rs;
  auto reject = [&](const std::string& why) {
    out << "REJECTED: " << why << "\n";
    return kMismatch;
  };
  if (!c->verified) return reject("certificate is not marked verified");
  if (c->word_length != c->word.length()) return reject("word_length does not match the word");
  if (!is_constant(c->residual)) return reject("residual is not constant");
  if (!membership_check(c->residual, rs)) return reject("residual is not in " + rs.name());
  if (!equal(multiply(eval_word(c->word), c->residual), c->target))
    return reject("word times residual does not equal the target");
  out << "OK: " << c->word.length() << " letters reproduce the target in " << rs.name() << "\n";
  return kOk;
}

int cmd_verify(const std::string& in, std::ostream& out, std::ostream& err) {
  Json j;
  try {
    j = io::read_json(in);
  } catch (const Error& e) {
    return invalid(err, e.what());
  }
  return verify_certificate(j, out, err);
}

int cmd_relations(const RelationsOptions& opt, std::ostream& out, std::ostream& err) {
  RootSystemPtr rs;
  try {
    rs = group_of(opt.group);
    if (opt.trials < 1 || opt.vars < 1 || opt.vars > 9) throw Error(ErrorKind::PreconditionViolated, "trials >= 1 and vars in 1..9 required");
  } catch (const Error& e) {
    return invalid(err, e.what());
  }
  const RelationReport rep = run_relation_suite(rs, opt.trials, opt.seed, PolyShape{opt.vars, 2, 9, 3});
  Json j;
  j["group"] = rs->name();
  j["trials"] = opt.trials;
  j["seed"] = opt.seed;
  j["commutator_checks"] = rep.commutator_checks;
  j["additivity_checks"] = rep.additivity_checks;
  j["torus_checks"] = rep.torus_checks;
  j["failures"] = rep.failures;
  out << io::dump(j);
  return rep.ok() ? kOk : kMismatch;
}

int cmd_roundtrip(const RoundtripOptions& opt, std::ostream& out, std::ostream& err) {
  RootSystemPtr rs;
  try {
    rs = group_of(opt.group);
    check_budget(opt.budget);
    if (opt.trials < 1 || opt.length < 1 || opt.vars < 1 || opt.vars > 9)
      throw Error(ErrorKind::PreconditionViolated, "trials, length >= 1 and vars in 1..9 required");
  } catch (const Error& e) {
    return invalid(err, e.what());
  }
  const BaseRing zr = BaseRing::integers();
  const PolyShape shape{opt.vars, 2, 9, 3};
  Json trials = Json::array();
  int verified = 0, not_factored = 0, mismatched = 0;
  for (int t = 0; t < opt.trials; ++t) {
    const std::uint64_t seed = trial_seed(opt.seed, static_cast<std::uint64_t>(t));
    Rng rng(seed);
    const ElemWord w = random_word(rng, rs, zr, opt.length, shape);
    const PolyMatrix g = eval_word(w);
    Json row;
    row["trial"] = t;
    row["seed"] = seed;
    row["input_letters"] = w.length();
    const auto t0 = std::chrono::steady_clock::now();
    try {
      const FactorizationCertificate cert = factor_polynomial(g, rs, opt.budget);
      const bool ok = cert.verified && equal(multiply(eval_word(cert.word), cert.residual_constant), g);
      row["status"] = ok ? "verified" : "mismatch";
      row["word_length"] = cert.word.length();
      (ok ? verified : mismatched)++;
    } catch (const Error& e) {
      row["status"] = e.kind() == ErrorKind::NotFactored ? "not_factored" : "error";
      row["message"] = e.what();
      (e.kind() == ErrorKind::NotFactored ? not_factored : mismatched)++;
    }
    if (opt.timing) row["wall_time_s"] = seconds_since(t0);
    trials.push_back(std::move(row));
  }
  Json j;
  j["group"] = rs->name();
  j["nvars"] = opt.vars;
  j["max_length"] = opt.length;
  j["seed"] = opt.seed;
  j["trials"] = std::move(trials);
  j["verified"] = verified;
  j["not_factored"] = not_factored;
  j["failed"] = mismatched;
  out << io::dump(j);
  err << verified << "/" << opt.trials << " verified\n";
  if (mismatched > 0) return kMismatch;
  return not_factored > 0 ? kNotFactored : kOk;
}

int cmd_demo(std::ostream& out, std::ostream& err) {
  const BaseRing zr = BaseRing::integers();
  const Poly x = Poly::variable(zr, 1, 0);
  const Poly one = Poly::constant(zr, 1, 1);
  const Poly a = one + x.scaled(2), b = x * x, c = Poly::constant(zr, 1, -4), d = one - x.scaled(2);
  out << "Cohn matrix [[1 + 2*x1, x1^2], [-4, 1 - 2*x1]] over Z[x1]\n";
  try {
    build_root_system(RootType::A, 1);
  } catch (const Error& e) {
    out << "  in SL_2: refused (" << e.what() << ")\n";
  }
  const RootSystemPtr rs = build_root_system(RootType::A, 2);
  PolyMatrix g(3, 3);
  g << a, b, Poly(0), c, d, Poly(0), Poly(0), Poly(0), one;
  g = g.unaryExpr([&](const Poly& p) { return p.bind(zr, 1); });
  try {
    const FactorizationCertificate cert = factor_polynomial(g, rs);
    out << "  in SL_3 as diag(Cohn, 1): " << cert.word.length() << " elementary letters\n";
    for (const auto& l : cert.word.letters()) out << "    x" << root_to_string(rs->root(l.root)) << "(" << l.arg << ")\n";
    out << "  multiply-back check: " << (equal(eval_word(cert.word), g) ? "exact" : "FAILED") << "\n";
    return equal(eval_word(cert.word), g) ? kOk : kMismatch;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return e.kind() == ErrorKind::NotFactored ? kNotFactored : kInvalid;
  }
}

}  // namespace chev::cli
