// Agreement harness: oracle versus every applicable solver route.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gixsat/formula.hpp"

namespace gixsat {

struct VerifyConfig {
  std::uint64_t count = 1000;
  Var n_max = 12;
  std::uint64_t seed = 1;
  bool planted_only = false;
};

struct VerifyReport {
  std::uint64_t instances = 0;
  std::uint64_t sat = 0;
  std::uint64_t witnesses_checked = 0;
  std::vector<std::string> mismatches;  // ordered by instance index
};

// Instance `index` of the seeded corpus.
Formula corpus_instance(const VerifyConfig& cfg, std::uint64_t index);

struct InstanceCheck {
  bool sat = false;
  std::uint64_t witnesses_checked = 0;
  std::optional<std::string> problem;  // first disagreement or bad witness
};

// Runs the serial oracle, solve_g2/g3/g4 where the targets allow, solve_auto
// and solve_mitm (serial sweep).
InstanceCheck check_instance(const Formula& f);

// Shards instances across OpenMP threads.
VerifyReport run_verify_corpus(const VerifyConfig& cfg);

}  // namespace gixsat
