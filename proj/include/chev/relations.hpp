#pragma once

// Exact checks of the Steinberg-type relations in the matrix model:
// commutator expansion against the literal commutator, additivity of root
// subgroups, and conjugation by torus elements.

#include <cstdint>
#include <string>
#include <vector>

#include "chev/sampling.hpp"

namespace chev {

struct RelationReport {
  std::size_t commutator_checks = 0;
  std::size_t additivity_checks = 0;
  std::size_t torus_checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// `trials` argument pairs per ordered non-proportional root pair (commutators),
// per root (additivity) and per root pair (torus, over Q with small integer u).
RelationReport run_relation_suite(const RootSystemPtr& rs, int trials, std::uint64_t seed, const PolyShape& shape = {2, 2, 9, 3});

}  // namespace chev
