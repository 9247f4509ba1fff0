// Extended DIMACS for GiXSAT:
//
//   c comment
//   p gxsat <n> <m>
//   <target> <lit> ... 0        (clauses may span lines)

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "gixsat/formula.hpp"

namespace gixsat {

inline constexpr int kMaxInputTarget = 4;

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& what);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

Formula parse(std::string_view text);
Formula parse_file(const std::string& path);  // throws std::runtime_error if unreadable

// Canonical text: header, then one clause per line with literals sorted by
// (variable, positive first).  LF line endings.
std::string serialize(const Formula& f);

}  // namespace gixsat
