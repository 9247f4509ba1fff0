#pragma once

#include <initializer_list>

#include "gixsat/formula.hpp"

namespace testing {

inline gixsat::Clause cl(int target, std::initializer_list<long long> lits) {
  std::vector<gixsat::Lit> ls;
  for (long long l : lits) ls.push_back(gixsat::Lit::from_dimacs(l));
  return gixsat::Clause(target, ls);
}

inline gixsat::Formula fm(gixsat::Var n, std::initializer_list<gixsat::Clause> cs) { return gixsat::Formula(n, cs); }

// Assignment from DIMACS-style values: {1, -2, 3} sets v1=1, v2=0, v3=1.
inline gixsat::Assignment model(gixsat::Var n, std::initializer_list<long long> vals) {
  gixsat::Assignment a(n + 1, 0);
  for (long long v : vals)
    if (v > 0) a[static_cast<gixsat::Var>(v)] = 1;
  return a;
}

}  // namespace testing
