#include "cubic/parse.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>

#include "cubic/errors.hpp"

namespace cubic {

ParseError::ParseError(std::string message, std::string text, std::size_t column)
    : std::runtime_error("parse error at column " + std::to_string(column) + ": " + message),
      message_(std::move(message)),
      text_(std::move(text)),
      column_(column) {}

std::string ParseError::annotated() const {
  std::string out = what();
  out += "\n  " + text_ + "\n  " + std::string(column_ > 0 ? column_ - 1 : 0, ' ') + "^";
  return out;
}

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool accept_word(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }
  std::size_t column() {
    skip_space();
    return pos_ + 1;
  }
  [[noreturn]] void fail(const std::string& message) { fail_at(column(), message); }
  [[noreturn]] void fail_at(std::size_t column, const std::string& message) {
    throw ParseError(message, std::string(text_), column);
  }

  // digits ['.' digits] [e [+-] digits]; returns the literal text.
  std::optional<std::string_view> number() {
    skip_space();
    const std::size_t start = pos_;
    std::size_t i = pos_;
    const auto digits = [&] {
      const std::size_t from = i;
      while (i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]))) ++i;
      return i - from;
    };
    std::size_t count = digits();
    if (i < text_.size() && text_[i] == '.') {
      ++i;
      count += digits();
    }
    if (count == 0) return std::nullopt;
    if (i < text_.size() && (text_[i] == 'e' || text_[i] == 'E')) {
      std::size_t j = i + 1;
      if (j < text_.size() && (text_[j] == '+' || text_[j] == '-')) ++j;
      if (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) {
        i = j;
        digits();
      }
    }
    pos_ = i;
    return text_.substr(start, i - start);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

double to_double(std::string_view literal) {
  double value = 0.0;
  const auto result = std::from_chars(literal.data(), literal.data() + literal.size(), value);
  if (result.ec != std::errc{}) return std::nan("");
  return value;
}

Coefficient literal(std::string_view text) {
  Coefficient out;
  out.value = to_double(text);
  if (auto exact = ExactRational::parse(text)) out.exact = ExactValue(*exact);
  return out;
}

Coefficient multiply(const Coefficient& a, const Coefficient& b) {
  Coefficient out;
  out.value = a.value * b.value;
  if (a.exact && b.exact) {
    try {
      out.exact = *a.exact * *b.exact;
    } catch (const ExactOverflow&) {
    }
  }
  return out;
}

Coefficient sqrt_literal(Scanner& scan) {
  if (!scan.accept('(')) scan.fail("expected '(' after sqrt");
  const std::size_t column = scan.column();
  const auto digits = scan.number();
  if (!digits || digits->find_first_of(".eE") != std::string_view::npos) {
    scan.fail_at(column, "sqrt() takes a non-negative integer");
  }
  if (!scan.accept(')')) scan.fail("expected ')' to close sqrt(");
  Coefficient out;
  out.value = std::sqrt(to_double(*digits));
  if (auto n = ExactRational::parse(*digits)) {
    try {
      out.exact = ExactValue::surd(ExactRational(1), n->num());
    } catch (const ExactOverflow&) {
    }
  }
  return out;
}

// coeff := number ['/' number] [['*'] sqrt(int)] | sqrt(int); nullopt if absent.
Coefficient divide(Scanner& scan, const Coefficient& value) {
  const std::size_t column = scan.column();
  const auto den = scan.number();
  if (!den) scan.fail("expected a number after '/'");
  const Coefficient d = literal(*den);
  if (d.value == 0.0) scan.fail_at(column, "division by zero");
  Coefficient q;
  q.value = value.value / d.value;
  if (value.exact && d.exact) {
    try {
      q.exact = *value.exact * ExactValue(ExactRational(1) / d.exact->rational());
    } catch (const ExactOverflow&) {
    }
  }
  return q;
}

// number, n/d, sqrt(m), with an optional sqrt factor and a trailing /d after a surd
std::optional<Coefficient> coefficient(Scanner& scan) {
  Coefficient value;
  bool surd = false;
  if (scan.accept_word("sqrt")) {
    value = sqrt_literal(scan);
    surd = true;
  } else {
    const auto head = scan.number();
    if (!head) return std::nullopt;
    value = literal(*head);
    if (scan.accept('/')) value = divide(scan, value);
    const bool star = scan.accept('*');
    if (scan.accept_word("sqrt")) {
      value = multiply(value, sqrt_literal(scan));
      surd = true;
    } else if (star && scan.peek() != 'x') {
      scan.fail("expected 'x' or sqrt( after '*'");
    }
  }
  if (surd && scan.accept('/')) value = divide(scan, value);
  if (surd) scan.accept('*');
  return value;
}

}  // namespace

ExpressionAST parse_expression(std::string_view text) {
  Scanner scan(text);
  ExpressionAST ast;
  if (scan.done()) scan.fail("empty expression");
  bool first = true;
  while (!scan.done() && scan.peek() != '=') {
    const std::size_t column = scan.column();
    double sign = 1.0;
    if (scan.accept('-')) {
      sign = -1.0;
    } else if (!scan.accept('+') && !first) {
      scan.fail("expected '+' or '-' between terms");
    }
    first = false;

    ExpressionAST::Term term;
    term.column = column;
    auto coeff = coefficient(scan);
    if (scan.accept('x')) {
      term.power = 1;
      if (scan.accept('^')) {
        const std::size_t power_column = scan.column();
        const auto power = scan.number();
        if (!power || power->find_first_not_of("0123456789") != std::string_view::npos) {
          throw ParseError("expected an integer exponent after '^'", std::string(text), power_column);
        }
        if (power->size() > 2 || std::stoi(std::string(*power)) > 3) {
          throw ParseError("degree must be 3; exponent " + std::string(*power) + " is too large",
                           std::string(text), power_column);
        }
        term.power = std::stoi(std::string(*power));
      }
    } else if (!coeff) {
      scan.fail("expected a number, sqrt( or x");
    }
    term.coefficient = coeff.value_or(Coefficient{1.0, ExactValue(ExactRational(1))});
    term.coefficient.value *= sign;
    if (sign < 0 && term.coefficient.exact) term.coefficient.exact = -*term.coefficient.exact;
    ast.terms.push_back(term);
  }
  if (scan.accept('=')) {
    const std::size_t column = scan.column();
    const auto rhs = scan.number();
    if (!rhs || to_double(*rhs) != 0.0) throw ParseError("right-hand side must be 0", std::string(text), column);
  }
  if (!scan.done()) scan.fail("unexpected trailing input");
  return ast;
}

GeneralCubic to_cubic(const ExpressionAST& ast, std::string_view text) {
  std::array<Coefficient, 4> sums{};  // by power
  std::array<bool, 4> exact_ok{true, true, true, true};
  for (auto& s : sums) s.exact = ExactValue{};
  for (const auto& term : ast.terms) {
    auto& slot = sums.at(static_cast<std::size_t>(term.power));
    slot.value += term.coefficient.value;
    if (term.coefficient.exact && slot.exact) {
      try {
        slot.exact = *slot.exact + *term.coefficient.exact;
      } catch (const ExactOverflow&) {
        exact_ok[term.power] = false;
      }
    } else {
      exact_ok[term.power] = false;
    }
  }
  const bool exact = exact_ok[0] && exact_ok[1] && exact_ok[2] && exact_ok[3];
  const bool lead_zero = exact ? sums[3].exact->is_zero() : sums[3].value == 0.0;
  if (lead_zero) throw ParseError("degree must be 3; no x^3 term", std::string(text), 1);
  try {
    if (exact) return GeneralCubic::from_exact({*sums[3].exact, *sums[2].exact, *sums[1].exact, *sums[0].exact});
    return GeneralCubic::from_coefficients(sums[3].value, sums[2].value, sums[1].value, sums[0].value);
  } catch (const InvalidInput& e) {
    throw ParseError(e.what(), std::string(text), 1);
  }
}

GeneralCubic parse_cubic(std::string_view text) { return to_cubic(parse_expression(text), text); }

Coefficient parse_coefficient(std::string_view text) {
  const ExpressionAST ast = parse_expression(text);
  Coefficient out{0.0, ExactValue{}};
  for (const auto& term : ast.terms) {
    if (term.power != 0) throw ParseError("expected a constant", std::string(text), term.column);
    out.value += term.coefficient.value;
    try {
      if (out.exact && term.coefficient.exact) {
        out.exact = *out.exact + *term.coefficient.exact;
      } else {
        out.exact.reset();
      }
    } catch (const ExactOverflow&) {
      out.exact.reset();
    }
  }
  if (!std::isfinite(out.value)) throw ParseError("value is not finite", std::string(text), 1);
  return out;
}

}  // namespace cubic
