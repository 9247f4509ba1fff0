// Seeded random and planted instance generation.

#pragma once

#include <cstdint>
#include <optional>

#include "gixsat/formula.hpp"

namespace gixsat {

struct GenSpec {
  Var n = 10;
  std::size_t m = 8;
  int k_min = 3;
  int k_max = 6;
  int max_target = 2;
  double neg_prob = 0.5;
  int max_repeat = 1;  // occurrences allowed per variable inside one clause
  bool planted = false;
  std::uint64_t seed = 1;
};

struct Generated {
  Formula formula;
  std::optional<Assignment> planted;
};

// Throws std::invalid_argument for infeasible specs.
void validate(const GenSpec& spec);
Generated generate(const GenSpec& spec);

}  // namespace gixsat
