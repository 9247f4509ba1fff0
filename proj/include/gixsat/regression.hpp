// Published τ, α, binomial and counting values, checked against the analysis
// module.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gixsat/analysis.hpp"

namespace gixsat {

struct TauCase {
  int line = 0;      // line in the fixture file
  std::string text;  // left-hand side as written
  BranchingVector terms;
  double expected = 0;
};

// Arithmetic over decimal literals with + - * (no parentheses).
double eval_term(std::string_view s);

// Lines "t1,t2,... = tau"; '#' starts a comment.  Throws std::runtime_error
// naming the offending line.
std::vector<TauCase> parse_tau_fixture(std::string_view text);
std::vector<TauCase> load_tau_fixture(const std::string& path);
std::string default_fixture_path();

struct RegressionItem {
  std::string group;  // tau, alpha, base, binom, F
  std::string name;
  double expected = 0;
  double got = 0;
  bool pass = false;
};

inline constexpr double kTauTolerance = 1e-3;
inline constexpr double kAlphaTolerance = 1e-4;
inline constexpr double kBinomTolerance = 1e-4;

std::vector<RegressionItem> tau_regression(const std::vector<TauCase>& cases);
std::vector<RegressionItem> alpha_regression();
std::vector<RegressionItem> binomial_table_regression();
std::vector<RegressionItem> counting_table_regression();

}  // namespace gixsat
