#include "gixsat/textio.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace gixsat {

ParseError::ParseError(int line, int column, const std::string& what)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string_view text;
  int line, column;
};

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (nl == text.size()) break;
    start = nl + 1;
  }
  return lines;
}

bool is_space(char ch) { return ch == ' ' || ch == '\t' || ch == '\v' || ch == '\f'; }

std::vector<Token> tokenize(std::string_view line, int lineno) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) ++j;
    out.push_back({line.substr(i, j - i), lineno, static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

bool is_comment(std::string_view line) {
  std::size_t i = 0;
  while (i < line.size() && is_space(line[i])) ++i;
  return i < line.size() && line[i] == 'c';
}

long long to_integer(const Token& t, const char* what) {
  long long v = 0;
  const char* b = t.text.data();
  const char* e = b + t.text.size();
  if (!t.text.empty() && *b == '+') ++b;
  auto [p, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || p != e)
    throw ParseError(t.line, t.column, std::string("expected ") + what + ", got '" +
                                           std::string(t.text) + "'");
  return v;
}

}  // namespace

Formula parse(std::string_view text) {
  const auto lines = split_lines(text);
  std::vector<Token> toks;
  bool have_header = false;
  long long n = 0, m = 0;
  int header_line = 0;

  for (std::size_t li = 0; li < lines.size(); ++li) {
    const int lineno = static_cast<int>(li) + 1;
    if (is_comment(lines[li])) continue;
    auto lt = tokenize(lines[li], lineno);
    if (lt.empty()) continue;
    if (!have_header) {
      if (lt[0].text != "p")
        throw ParseError(lineno, lt[0].column, "missing header 'p gxsat <n> <m>'");
      if (lt.size() != 4 || lt[1].text != "gxsat")
        throw ParseError(lineno, lt[0].column, "malformed header, expected 'p gxsat <n> <m>'");
      n = to_integer(lt[2], "variable count");
      m = to_integer(lt[3], "clause count");
      if (n < 0 || n > 1'000'000'000)
        throw ParseError(lineno, lt[2].column, "variable count out of range");
      if (m < 0) throw ParseError(lineno, lt[3].column, "negative clause count");
      have_header = true;
      header_line = lineno;
      continue;
    }
    if (lt[0].text == "p") throw ParseError(lineno, lt[0].column, "duplicate header");
    toks.insert(toks.end(), lt.begin(), lt.end());
  }
  if (!have_header) throw ParseError(static_cast<int>(lines.size()), 1, "missing header 'p gxsat <n> <m>'");

  Formula f;
  f.num_vars = static_cast<Var>(n);
  std::size_t i = 0;
  while (i < toks.size()) {
    const Token& tt = toks[i++];
    const long long target = to_integer(tt, "clause target");
    if (target < 0) throw ParseError(tt.line, tt.column, "negative clause target");
    if (target > kMaxInputTarget)
      throw ParseError(tt.line, tt.column,
                       "clause target " + std::to_string(target) + " exceeds 4");
    Clause c;
    c.target = static_cast<int>(target);
    bool terminated = false;
    while (i < toks.size()) {
      const Token& lt = toks[i++];
      const long long x = to_integer(lt, "literal");
      if (x == 0) {
        terminated = true;
        break;
      }
      if (x > n || -x > n)
        throw ParseError(lt.line, lt.column,
                         "literal " + std::to_string(x) + " out of range 1.." + std::to_string(n));
      c.lits.push_back(Lit::from_dimacs(x));
    }
    if (!terminated) throw ParseError(tt.line, tt.column, "clause is missing its 0 terminator");
    c.normalize();
    f.clauses.push_back(std::move(c));
  }
  if (static_cast<long long>(f.clauses.size()) != m)
    throw ParseError(header_line, 1,
                     "header declares " + std::to_string(m) + " clauses but " +
                         std::to_string(f.clauses.size()) + " were given");
  return f;
}

Formula parse_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::string serialize(const Formula& f) {
  std::string out = "p gxsat " + std::to_string(f.num_vars) + " " + std::to_string(f.clauses.size()) + "\n";
  for (const auto& c : f.clauses) {
    Clause sorted = c;
    sorted.normalize();
    out += std::to_string(c.target);
    for (Lit l : sorted.lits) {
      out += ' ';
      out += std::to_string(l.to_dimacs());
    }
    out += " 0\n";
  }
  return out;
}

}  // namespace gixsat
