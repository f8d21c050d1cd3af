#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cubic/exact_value.hpp"
#include "cubic/polynomial.hpp"

namespace cubic {

/// Syntax or degree error; `column` is 1-based into the original text.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::string text, std::size_t column);

  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }
  /// Message, the input line and a caret under the offending column.
  std::string annotated() const;

 private:
  std::string message_;
  std::string text_;
  std::size_t column_;
};

/// A literal coefficient: integer, decimal, a/b, sqrt(m), n*sqrt(m) or sqrt(m)/d.
struct Coefficient {
  double value = 0.0;
  std::optional<ExactValue> exact;
};

struct ExpressionAST {
  struct Term {
    Coefficient coefficient;  // sign folded in
    int power = 0;
    std::size_t column = 0;
  };
  std::vector<Term> terms;
};

/// Grammar, whitespace-insensitive:
///   expr  := term (('+'|'-') term)* ('=' '0')?
///   term  := ['+'|'-'] coeff? ['*'] ['x' ['^' digit]]
///   coeff := (number ['/' number] [['*'] surd] | surd) with an optional
///            '/' number after a surd
///   surd  := 'sqrt(' integer ')'
ExpressionAST parse_expression(std::string_view text);

/// Sums like powers; throws ParseError unless the x^3 coefficient is nonzero
/// and no power exceeds 3.
GeneralCubic to_cubic(const ExpressionAST& ast, std::string_view text);

GeneralCubic parse_cubic(std::string_view text);

/// A single constant such as "9/2", "-0.75" or "-64*sqrt(2)".
Coefficient parse_coefficient(std::string_view text);

}  // namespace cubic
