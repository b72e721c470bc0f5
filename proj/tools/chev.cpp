// chev: factor polynomial matrices into elementary root unipotents and check
// the resulting certificates.

#include <iostream>

#include "CLI11.hpp"

#include "chev/cli.hpp"

int main(int argc, char** argv) {
  using namespace chev::cli;
  CLI::App app{"Elementary factorization of SL_n and Sp_2n over Z[x1..xn]"};
  app.require_subcommand(1);

  FactorOptions fo;
  auto* factor = app.add_subcommand("factor", "factor a matrix file into a certificate");
  factor->add_option("--in", fo.in, "matrix JSON file")->required();
  factor->add_option("--out", fo.out, "certificate path (default: stdout)");
  factor->add_option("--budget-letters", fo.budget.max_letters, "maximum word length");
  factor->add_option("--budget-degree", fo.budget.max_degree, "maximum entry degree during reduction");
  factor->add_flag("--timing", fo.timing, "record wall time in the certificate");

  std::string verify_in;
  auto* verify = app.add_subcommand("verify", "re-check a certificate by exact multiplication");
  verify->add_option("--in", verify_in, "certificate JSON file")->required();

  RelationsOptions ro;
  auto* relations = app.add_subcommand("relations", "check commutator, additivity and torus relations");
  relations->add_option("--type", ro.group.type, "A or C")->check(CLI::IsMember({"A", "C"}));
  relations->add_option("--rank", ro.group.rank, "rank of the root system");
  relations->add_option("--trials", ro.trials, "random argument pairs per case");
  relations->add_option("--seed", ro.seed, "master seed");
  relations->add_option("--vars", ro.vars, "variables in random arguments");

  RoundtripOptions rt;
  auto* roundtrip = app.add_subcommand("roundtrip", "factor random elementary words and re-check them");
  roundtrip->add_option("--type", rt.group.type, "A or C")->check(CLI::IsMember({"A", "C"}));
  roundtrip->add_option("--rank", rt.group.rank, "rank of the root system");
  roundtrip->add_option("--trials", rt.trials, "number of words");
  roundtrip->add_option("--seed", rt.seed, "master seed");
  roundtrip->add_option("--vars", rt.vars, "number of polynomial variables");
  roundtrip->add_option("--length", rt.length, "maximum word length");
  roundtrip->add_option("--budget-letters", rt.budget.max_letters, "maximum word length");
  roundtrip->add_option("--budget-degree", rt.budget.max_degree, "maximum entry degree during reduction");
  roundtrip->add_flag("--timing", rt.timing, "record per-trial wall time");

  auto* demo = app.add_subcommand("demo", "Cohn's matrix in SL_2 and SL_3");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInvalid;  // help is not an error
  }

  if (*factor) return cmd_factor(fo, std::cout, std::cerr);
  if (*verify) return cmd_verify(verify_in, std::cout, std::cerr);
  if (*relations) return cmd_relations(ro, std::cout, std::cerr);
  if (*roundtrip) return cmd_roundtrip(rt, std::cout, std::cerr);
  if (*demo) return cmd_demo(std::cout, std::cerr);
  return kInvalid;
}
