// Branching factors, nonstandard measures, binomial branching tables and the
// multi-occurrence counting recurrences.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gixsat/formula.hpp"

namespace gixsat {

using BranchingVector = std::vector<double>;

// Unique root x > 1 of sum_i x^{-t_i} = 1.  Needs at least two entries, all
// positive; throws std::invalid_argument otherwise.
double branching_factor(const BranchingVector& v, double tol = 1e-9);

// Replaces entry `index` (value u) of `parent` by u + c for each c in `child`,
// keeping the replacement in place of the original entry.
BranchingVector combine_vectors(std::size_t index, const BranchingVector& parent,
                                const BranchingVector& child);

enum class Scheme { G2, G3, G4 };

struct MeasureWeights {
  Scheme scheme;
  // G2: {c1, c2_long}; G3: {j=1, j=2, j=3}; G4: {j=1..4}.
  std::vector<double> weight;
  // Linking deltas p, q (, r): w_j - (1 - w_j).
  std::vector<double> delta;
};

const MeasureWeights& weights(Scheme s);
Scheme scheme_for_target(int max_target);  // <=2 -> G2, 3 -> G3, 4 -> G4
std::string to_string(Scheme s);

double variable_weight(const Formula& f, Var v, Scheme s);
// Sum of weights over the variables that occur in some clause.
double measure(const Formula& f, Scheme s);

// Multi-occurrence counting.  A profile lists how many variables occur once,
// twice, three and four times in a clause.
struct OccurrenceProfile {
  int l = 0, a = 0, b = 0, c = 0, d = 0;
};

std::uint64_t binomial(int n, int k);

std::uint64_t F2(int l, int a, int b);
std::uint64_t F3(int l, int a, int b, int c);
std::uint64_t F4(int l, int a, int b, int c, int d);
// F_j evaluated at a profile (j = 1 counts the single-occurrence variables).
std::uint64_t F_j(int j, const OccurrenceProfile& p);
// Maximum number of ways to satisfy a C^j clause, j <= h, on l variables.
// F(0, h) = 1.
std::uint64_t F(int l, int h);
// max { C(l, j) : j <= h }.
std::uint64_t G(int l, int h);

struct CountingReport {
  bool ok = true;
  std::uint64_t profiles_checked = 0;
  std::uint64_t oracle_checked = 0;
  std::vector<std::string> failures;
};

// F(l,h) <= G(l,h) over every profile with l <= l_max and h <= 4; F_j matches
// brute-force clause counts for every profile with l <= min(l_max, 8).
CountingReport verify_F_le_G(int l_max);

// C(k, h)^{1/k}.
double binom_branching(int k, int h);

struct AlphaBase {
  double alpha;
  double base;
};
// Balances c^alpha = 2^{1 - alpha}.
AlphaBase alpha_for(double c);

struct BinomBoundReport {
  bool ok = true;
  int k_max = 0;
  double max_pair_term = 0;    // max over k of (k(k-1)/2)^{1/k}
  double max_single_term = 0;  // max over k of k^{1/k}
  int first_violation = 0;     // 0 when ok
};
inline constexpr double kG2BinomBound = 1.5849;
BinomBoundReport max_binom_branching_bound(int k_max, double bound = kG2BinomBound);

}  // namespace gixsat
