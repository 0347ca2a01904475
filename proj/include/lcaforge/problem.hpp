#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lcaforge/relation.hpp"

namespace lcaforge {

struct ParseError : std::runtime_error {
  ParseError(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg),
        line(line_) {}
  int line;
};

// A parsed problem file. The universe is the declared taxa line when present,
// otherwise every taxon mentioned in a constraint.
struct Problem {
  Universe universe;
  Relation required;
  Relation forbidden;
  std::optional<std::vector<std::string>> taxa_line;

  bool operator==(const Problem& o) const {
    return universe == o.universe && required == o.required &&
           forbidden == o.forbidden;
  }
};

// Line-oriented grammar:
//   taxa: <name>+            (optional, at most once)
//   require: <a> <b> < <c> <d>
//   forbid:  <a> <b> < <c> <d>
// '#' starts a comment, blank lines are ignored, names match [A-Za-z0-9_]+.
// Throws ParseError with the offending line number.
Problem parse_problem(std::string_view text);

// Canonical rendering; parse_problem(print_problem(p)) == p.
std::string print_problem(const Problem& p);

}  // namespace lcaforge
