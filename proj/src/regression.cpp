#include "gixsat/regression.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gixsat {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double number(std::string_view s) {
  s = trim(s);
  const std::string buf(s);
  char* end = nullptr;
  const double v = std::strtod(buf.c_str(), &end);
  if (buf.empty() || end != buf.c_str() + buf.size()) throw std::invalid_argument("bad number '" + buf + "'");
  return v;
}

double product(std::string_view s) {
  double v = 1;
  for (;;) {
    const auto p = s.find('*');
    v *= number(s.substr(0, p));
    if (p == std::string_view::npos) return v;
    s.remove_prefix(p + 1);
  }
}

}  // namespace

double eval_term(std::string_view s) {
  s = trim(s);
  double total = 0;
  int sign = 1;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    // A sign directly after 'e' belongs to an exponent.
    const bool op = i < s.size() && (s[i] == '+' || s[i] == '-') && i > start &&
                    !(s[i - 1] == 'e' || s[i - 1] == 'E');
    if (i == s.size() || op) {
      total += sign * product(s.substr(start, i - start));
      if (i < s.size()) sign = s[i] == '+' ? 1 : -1;
      start = i + 1;
    }
  }
  return total;
}

std::vector<TauCase> parse_tau_fixture(std::string_view text) {
  std::vector<TauCase> out;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    if (const auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw std::runtime_error("fixture line " + std::to_string(lineno) + ": missing '='");
    TauCase c;
    c.line = lineno;
    c.text = std::string(trim(line.substr(0, eq)));
    try {
      c.expected = number(line.substr(eq + 1));
      std::string_view lhs = c.text;
      for (;;) {
        const auto comma = lhs.find(',');
        c.terms.push_back(eval_term(lhs.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        lhs.remove_prefix(comma + 1);
      }
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error("fixture line " + std::to_string(lineno) + ": " + e.what());
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<TauCase> load_tau_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_tau_fixture(ss.str());
}

std::string default_fixture_path() {
#ifdef GIXSAT_DATA_DIR
  return std::string(GIXSAT_DATA_DIR) + "/tau_regression.txt";
#else
  return "data/tau_regression.txt";
#endif
}

std::vector<RegressionItem> tau_regression(const std::vector<TauCase>& cases) {
  std::vector<RegressionItem> out;
  for (const auto& c : cases) {
    RegressionItem it{"tau", "tau(" + c.text + ")", c.expected, 0, false};
    try {
      it.got = branching_factor(c.terms);
      it.pass = std::abs(it.got - c.expected) <= kTauTolerance;
    } catch (const std::exception&) {
      it.got = std::nan("");
    }
    out.push_back(std::move(it));
  }
  return out;
}

std::vector<RegressionItem> alpha_regression() {
  struct Row {
    double c, alpha, base;
  };
  static const Row rows[] = {{1.5849, 0.600823, 1.3188}, {1.6619, 0.57712, 1.3407}, {1.7115, 0.5633, 1.3536}};
  std::vector<RegressionItem> out;
  for (const auto& r : rows) {
    const AlphaBase ab = alpha_for(r.c);
    std::ostringstream name;
    name << "alpha_for(" << r.c << ")";
    out.push_back({"alpha", name.str(), r.alpha, ab.alpha, std::abs(ab.alpha - r.alpha) <= kAlphaTolerance});
    out.push_back({"base", name.str(), r.base, ab.base, std::abs(ab.base - r.base) <= kAlphaTolerance});
  }
  return out;
}

std::vector<RegressionItem> binomial_table_regression() {
  // C(k,h)^{1/k} for h = 1.. as printed (the G3/G4 table extends the G2 one).
  static const std::vector<std::vector<double>> table = {
      {},
      {},
      {1.4143},
      {1.4423, 1.4423},
      {1.4143, 1.5651},
      {1.3798, 1.5849, 1.5849},
      {1.3481, 1.5705, 1.6476},
      {1.3205, 1.5449, 1.6619, 1.6619},
      {1.2969, 1.5167, 1.6540, 1.7008},
      {1.2766, 1.4891, 1.6361, 1.7115},
      {1.2590, 1.4633, 1.6141, 1.7070},
      {1.2436, 1.4396, 1.5908, 1.6942},
  };
  std::vector<RegressionItem> out;
  for (int k = 2; k < static_cast<int>(table.size()); ++k)
    for (int h = 1; h <= static_cast<int>(table[k].size()); ++h) {
      const double got = binom_branching(k, h);
      const double want = table[k][h - 1];
      out.push_back({"binom", "C(" + std::to_string(k) + "," + std::to_string(h) + ")^(1/k)", want, got,
                     std::abs(got - want) <= kBinomTolerance});
    }
  return out;
}

std::vector<RegressionItem> counting_table_regression() {
  static const std::vector<std::vector<std::uint64_t>> rows = {
      {1, 2, 3, 6, 10, 15, 21, 28},
      {1, 2, 3, 6, 10, 20, 35, 56},
      {1, 2, 3, 6, 10, 20, 35, 70},
  };
  std::vector<RegressionItem> out;
  for (int h = 2; h <= 4; ++h)
    for (int l = 1; l <= 8; ++l) {
      const double want = static_cast<double>(rows[h - 2][l - 1]);
      const std::string args = std::to_string(l) + "," + std::to_string(h);
      const double f = static_cast<double>(F(l, h));
      const double g = static_cast<double>(G(l, h));
      out.push_back({"F", "F(" + args + ")", want, f, f == want});
      out.push_back({"G", "G(" + args + ")", want, g, g == want});
    }
  return out;
}

}  // namespace gixsat
