#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lucasx/laurent.hpp"

namespace lucasx {

/// Raised for malformed expressions. position() is a 0-based byte offset
/// into the source text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Expression text plus the ordered variable declaration that fixes the
/// dimension, e.g. {"x^-1 + 2 + x", {"x"}}.
struct ExprSource {
  std::string text;
  std::vector<std::string> variables;
};

/// Parses and fully expands an expression. Grammar (docs/grammar.md):
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('+' | '-') unary | power
///   power   := atom (('^' | '**') exponent)?
///   exponent:= ('+' | '-')? integer
///   atom    := integer | variable | '(' expr ')'
///
/// A divisor must expand to a single term that divides the dividend exactly.
LaurentPoly parse(const ExprSource& src);
LaurentPoly parse(std::string_view text, const std::vector<std::string>& variables);

/// Splits "x,y,z" into variable names; each must be one of x, y, z, w and
/// appear at most once.
std::vector<std::string> parse_variable_list(std::string_view list);

/// Canonical text: graded-lex term order, explicit '*' and '^'. parse()
/// round-trips it given the same variables.
std::string to_canonical_string(const LaurentPoly& f,
                                const std::vector<std::string>& variables);

/// Default names x, y, z, w truncated to f.dim().
std::string to_canonical_string(const LaurentPoly& f);

std::vector<std::string> default_variables(std::size_t dim);

}  // namespace lucasx
