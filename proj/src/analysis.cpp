#include "gixsat/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gixsat/oracle.hpp"

namespace gixsat {

double branching_factor(const BranchingVector& v, double tol) {
  if (v.size() < 2) throw std::invalid_argument("branching vector needs at least two entries");
  for (double t : v)
    if (!(t > 0) || !std::isfinite(t))
      throw std::invalid_argument("branching vector entries must be positive");
  const double tmin = *std::min_element(v.begin(), v.end());
  const double r = static_cast<double>(v.size());

  // Work in y = ln x; f is strictly decreasing in y.
  auto f = [&](double y) {
    double s = 0;
    for (double t : v) s += std::exp(-t * y);
    return s - 1.0;
  };
  double lo = std::log1p(1e-12);
  // At x = r^{1/tmin} every term is at most 1/r, so f <= 0 there.
  double hi = std::max(std::log(std::pow(2.0, 1.0 / tmin) + 1.0), std::log(r) / tmin);
  for (int it = 0; it < 400 && hi - lo > 1e-16; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0) return std::exp(mid);
    if (fm > 0) lo = mid;
    else hi = mid;
  }
  if (std::abs(f(0.5 * (lo + hi))) > tol) throw std::runtime_error("branching factor did not converge");
  return std::exp(0.5 * (lo + hi));
}

BranchingVector combine_vectors(std::size_t index, const BranchingVector& parent,
                                const BranchingVector& child) {
  if (index >= parent.size()) throw std::invalid_argument("branch index out of range");
  if (child.empty()) throw std::invalid_argument("child vector is empty");
  BranchingVector out;
  for (std::size_t i = 0; i < parent.size(); ++i) {
    if (i != index) {
      out.push_back(parent[i]);
      continue;
    }
    for (double c : child) out.push_back(parent[i] + c);
  }
  return out;
}

const MeasureWeights& weights(Scheme s) {
  static const MeasureWeights g2{Scheme::G2, {0.8039, 1.0}, {}};
  static const MeasureWeights g3{Scheme::G3, {0.6985, 0.875, 1.0}, {0.397, 0.75}};
  static const MeasureWeights g4{
      Scheme::G4, {0.6464, 0.8376, 0.9412, 1.0}, {0.2928, 0.6752, 0.8824}};
  switch (s) {
    case Scheme::G2: return g2;
    case Scheme::G3: return g3;
    case Scheme::G4: return g4;
  }
  throw std::invalid_argument("unknown scheme");
}

Scheme scheme_for_target(int max_target) {
  if (max_target <= 2) return Scheme::G2;
  if (max_target == 3) return Scheme::G3;
  if (max_target == 4) return Scheme::G4;
  throw std::invalid_argument("targets above 4 are not supported");
}

std::string to_string(Scheme s) {
  switch (s) {
    case Scheme::G2: return "g2";
    case Scheme::G3: return "g3";
    case Scheme::G4: return "g4";
  }
  return "?";
}

double variable_weight(const Formula& f, Var v, Scheme s) {
  const auto& w = weights(s).weight;
  bool present = false;
  if (s == Scheme::G2) {
    bool long_c2_only = true;
    for (const auto& c : f.clauses) {
      if (!c.contains_var(v)) continue;
      present = true;
      if (c.net(v) == 0) continue;  // does not strongly appear
      if (!(c.target == 2 && c.size() >= 4)) long_c2_only = false;
    }
    if (!present) return 0.0;
    return long_c2_only ? w[1] : w[0];
  }
  int jmin = static_cast<int>(w.size());
  for (const auto& c : f.clauses) {
    if (!c.contains_var(v)) continue;
    present = true;
    jmin = std::min(jmin, std::max(1, c.target));
  }
  if (!present) return 0.0;
  return w[static_cast<std::size_t>(jmin - 1)];
}

double measure(const Formula& f, Scheme s) {
  double mu = 0;
  for (Var v : constrained_vars(f)) mu += variable_weight(f, v, s);
  return mu;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

std::uint64_t F2(int l, int a, int b) {
  if (l == 0) return 0;
  if (l == 1) return b == 1 ? 1 : 0;
  if (b > 0) return F2(l - 1, a, b - 1) + 1;
  return binomial(a, 2);
}

std::uint64_t F3(int l, int a, int b, int c) {
  if (l == 0) return 0;
  if (l == 1) return c == 1 ? 1 : 0;
  if (c > 0) return F3(l - 1, a, b, c - 1) + 1;
  if (b > 0) return F3(l - 1, a, b - 1, c) + static_cast<std::uint64_t>(a);
  return binomial(a, 3);
}

std::uint64_t F4(int l, int a, int b, int c, int d) {
  if (l == 0) return 0;
  if (l == 1) return d == 1 ? 1 : 0;
  if (d > 0) return F4(l - 1, a, b, c, d - 1) + 1;
  if (c > 0) return F4(l - 1, a, b, c - 1, d) + static_cast<std::uint64_t>(a);
  if (b > 0)
    return F4(l - 1, a, b - 1, c, d) + static_cast<std::uint64_t>(b - 1) + binomial(a, 2);
  return binomial(a, 4);
}

std::uint64_t F_j(int j, const OccurrenceProfile& p) {
  switch (j) {
    case 1: return static_cast<std::uint64_t>(p.a);
    case 2: return F2(p.l, p.a, p.b);
    case 3: return F3(p.l, p.a, p.b, p.c);
    case 4: return F4(p.l, p.a, p.b, p.c, p.d);
  }
  throw std::invalid_argument("F_j defined for j in 1..4");
}

namespace {

// Calls fn for every profile of l variables with multiplicities <= h.
template <class Fn>
void for_each_profile(int l, int h, Fn fn) {
  for (int d = 0; d <= (h >= 4 ? l : 0); ++d)
    for (int c = 0; c <= (h >= 3 ? l - d : 0); ++c)
      for (int b = 0; b <= (h >= 2 ? l - c - d : 0); ++b)
        fn(OccurrenceProfile{l, l - b - c - d, b, c, d});
}

}  // namespace

std::uint64_t F(int l, int h) {
  if (h < 1 || h > 4) throw std::invalid_argument("F defined for h in 1..4");
  if (l < 0) throw std::invalid_argument("negative variable count");
  if (l == 0) return 1;
  if (h == 1) return static_cast<std::uint64_t>(l);
  std::uint64_t best = F(l, h - 1);
  for_each_profile(l, h, [&](const OccurrenceProfile& p) { best = std::max(best, F_j(h, p)); });
  return best;
}

std::uint64_t G(int l, int h) {
  std::uint64_t best = 0;
  for (int j = 0; j <= std::min(h, l); ++j) best = std::max(best, binomial(l, j));
  return best;
}

CountingReport verify_F_le_G(int l_max) {
  CountingReport rep;
  if (l_max < 1) throw std::invalid_argument("l_max must be at least 1");
  for (int l = 0; l <= l_max; ++l)
    for (int h = 1; h <= 4; ++h) {
      ++rep.profiles_checked;
      if (F(l, h) > G(l, h)) {
        rep.ok = false;
        rep.failures.push_back("F(" + std::to_string(l) + "," + std::to_string(h) + ")=" +
                               std::to_string(F(l, h)) + " > G=" + std::to_string(G(l, h)));
      }
      // Each per-profile value is bounded too, not only the maximum.
      if (h >= 2)
        for_each_profile(l, h, [&](const OccurrenceProfile& p) {
          ++rep.profiles_checked;
          if (F_j(h, p) > G(l, h)) {
            rep.ok = false;
            rep.failures.push_back("profile bound violated at l=" + std::to_string(l));
          }
        });
    }

  const int l_oracle = std::min(l_max, 8);
  for (int l = 1; l <= l_oracle; ++l)
    for (int j = 1; j <= 4; ++j)
      for_each_profile(l, j, [&](const OccurrenceProfile& p) {
        Clause c;
        c.target = j;
        Var v = 1;
        const int counts[4] = {p.a, p.b, p.c, p.d};
        for (int m = 0; m < 4; ++m)
          for (int k = 0; k < counts[m]; ++k, ++v)
            for (int r = 0; r <= m; ++r) c.lits.emplace_back(v, true);
        c.normalize();
        ++rep.oracle_checked;
        const auto want = count_clause_solutions(c);
        const auto got = F_j(j, p);
        if (want != got) {
          rep.ok = false;
          rep.failures.push_back("F_" + std::to_string(j) + "(" + std::to_string(p.l) + "," +
                                 std::to_string(p.a) + "," + std::to_string(p.b) + "," +
                                 std::to_string(p.c) + "," + std::to_string(p.d) +
                                 ")=" + std::to_string(got) + " but clause has " +
                                 std::to_string(want) + " solutions");
        }
      });
  return rep;
}

double binom_branching(int k, int h) {
  if (h < 1 || h > k) throw std::invalid_argument("binom_branching needs 1 <= h <= k");
  const double lc = std::lgamma(k + 1.0) - std::lgamma(h + 1.0) - std::lgamma(k - h + 1.0);
  return std::exp(lc / k);
}

AlphaBase alpha_for(double c) {
  if (!(c > 1)) throw std::invalid_argument("alpha_for needs c > 1");
  const double alpha = std::log(2.0) / (std::log(2.0) + std::log(c));
  return {alpha, std::pow(2.0, 1.0 - alpha)};
}

BinomBoundReport max_binom_branching_bound(int k_max, double bound) {
  if (k_max < 7) throw std::invalid_argument("k_max must be at least 7");
  BinomBoundReport rep;
  rep.k_max = k_max;
  for (int k = 7; k <= k_max; ++k) {
    const double kk = k;
    const double pair = std::exp(std::log(kk * (kk - 1) / 2) / kk);
    const double single = std::exp(std::log(kk) / kk);
    rep.max_pair_term = std::max(rep.max_pair_term, pair);
    rep.max_single_term = std::max(rep.max_single_term, single);
    if ((pair > bound || single > bound) && rep.ok) {
      rep.ok = false;
      rep.first_violation = k;
    }
  }
  return rep;
}

}  // namespace gixsat
