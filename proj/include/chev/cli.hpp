#pragma once

// The command-line verbs as library functions. Each returns the process exit
// code: 0 success, 1 mismatch or relation failure, 2 not factored within
// budget, 3 invalid input (including rank 1).

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "chev/io.hpp"

namespace chev::cli {

enum Exit : int { kOk = 0, kMismatch = 1, kNotFactored = 2, kInvalid = 3 };

struct FactorOptions {
  std::string in;
  std::string out;  // empty: stdout
  Budget budget;
  bool timing = false;
};
int cmd_factor(const FactorOptions& opt, std::ostream& out, std::ostream& err);

// Re-evaluates the word from scratch; shares nothing with factorization
// beyond eval_word.
int cmd_verify(const std::string& in, std::ostream& out, std::ostream& err);
int verify_certificate(const io::Json& cert, std::ostream& out, std::ostream& err);

struct GroupOptions {
  std::string type = "A";
  int rank = 2;
};

struct RelationsOptions {
  GroupOptions group;
  int trials = 100;
  std::uint64_t seed = 1;
  int vars = 2;
};
int cmd_relations(const RelationsOptions& opt, std::ostream& out, std::ostream& err);

struct RoundtripOptions {
  GroupOptions group;
  int trials = 20;
  std::uint64_t seed = 1;
  int vars = 1;
  int length = 10;
  Budget budget;
  bool timing = false;
};
int cmd_roundtrip(const RoundtripOptions& opt, std::ostream& out, std::ostream& err);

// Cohn's matrix: rejected in SL_2, factored after embedding in SL_3.
int cmd_demo(std::ostream& out, std::ostream& err);

}  // namespace chev::cli
