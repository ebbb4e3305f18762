#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "qdepth/monomial.hpp"

namespace qdepth {

// Ideal text format, shared between the library and the CLI:
//
//   vars: 4            required header
//   # comment          '#' starts a comment anywhere on a line
//   x1*x3              one monomial per line, factors x<i> or x<i>^<e>
//   x1^2*x2            '^1' may be omitted; '1' is the identity monomial
//
// Blank lines are ignored. A file with no monomial lines is the zero ideal.

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& what_)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

MonomialIdeal parse_ideal(std::istream& in);
MonomialIdeal parse_ideal_file(const std::string& path);

std::string format_ideal(const MonomialIdeal& ideal);

}  // namespace qdepth
