#pragma once

#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <string_view>

#include "abelcenter/bipoly.hpp"
#include "abelcenter/unipoly.hpp"

namespace abelcenter {

/// Parse failure with a 1-based column position into the offending input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t column)
      : std::runtime_error(what + " (column " + std::to_string(column) + ")"), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

namespace detail {

// Recursive-descent scanner over the polynomial grammar:
//   sum    := [+|-] term (('+'|'-') term)*
//   term   := coef ['*'] [var] | var        (var := x['^'k] ['*'] [y['^'m]])
//   coef   := int ['/' posint]
// Whitespace is ignored everywhere. Bracket form: "[c0, c1, ...]".
class PolyScanner {
 public:
  PolyScanner(std::string_view text, bool allow_y) : text_(text), allow_y_(allow_y) {}

  BiPoly parse() {
    skip_ws();
    if (peek() == '[') return parse_bracket_list();
    BiPoly total = parse_sum();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return total;
  }

 private:
  BiPoly parse_sum() {
    BiPoly total;
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -1;
        ++pos_;
      } else if (!first) {
        break;
      }
      total += parse_term(sign);
      first = false;
      skip_ws();
      if (pos_ == text_.size() || (peek() != '+' && peek() != '-')) break;
    }
    return total;
  }

  BiPoly parse_term(int sign) {
    skip_ws();
    Rational coef(sign);
    bool saw_coef = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coef *= parse_rational_literal();
      saw_coef = true;
      skip_ws();
      if (peek() == '*') ++pos_;
    }
    int xp = 0, yp = 0;
    bool saw_var = false;
    skip_ws();
    if (peek() == 'x') {
      ++pos_;
      xp = parse_exponent();
      saw_var = true;
      skip_ws();
      if (peek() == '*') ++pos_;
      skip_ws();
    }
    if (peek() == 'y') {
      if (!allow_y_) fail("variable y not allowed here");
      ++pos_;
      yp = parse_exponent();
      saw_var = true;
    }
    if (!saw_coef && !saw_var) fail("expected a term");
    return BiPoly::from_x_poly(UniPoly::monomial(xp, coef), yp);
  }

  Rational parse_rational_literal() {
    Integer num = parse_integer_literal();
    skip_ws();
    if (peek() == '/') {
      std::size_t slash = pos_;
      ++pos_;
      skip_ws();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator", slash + 2);
      Integer den = parse_integer_literal();
      if (den == 0) fail("zero denominator", slash + 1);
      return Rational(num, den);
    }
    return Rational(num);
  }

  Integer parse_integer_literal() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    std::string digits;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      digits.push_back(text_[pos_++]);
    return Integer(digits);
  }

  int parse_exponent() {
    skip_ws();
    if (peek() != '^') return 1;
    ++pos_;
    skip_ws();
    Integer e = parse_integer_literal();
    if (e > 10000) fail("exponent too large");
    return e.convert_to<int>();
  }

  BiPoly parse_bracket_list() {
    ++pos_;  // '['
    std::vector<Rational> coeffs;
    skip_ws();
    if (peek() == ']') {
      ++pos_;
      return {};
    }
    while (true) {
      skip_ws();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -1;
        ++pos_;
        skip_ws();
      }
      coeffs.push_back(Rational(sign) * parse_rational_literal());
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      if (peek() == ']') {
        ++pos_;
        break;
      }
      fail("expected ',' or ']'");
    }
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return BiPoly::from_x_poly(UniPoly(std::move(coeffs)));
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const { fail(what, pos_ + 1); }
  [[noreturn]] void fail(const std::string& what, std::size_t column) const {
    throw ParseError(what, column);
  }

  std::string_view text_;
  bool allow_y_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Univariate grammar: terms `[coef][*][x[^k]]` joined by +/-, coef an
/// integer or num/den, whitespace ignored; or a bracketed ascending
/// coefficient list `[c0, c1, ...]`.
inline UniPoly parse_unipoly(std::string_view text) {
  BiPoly F = detail::PolyScanner(text, /*allow_y=*/false).parse();
  return F.row(0);
}

/// Bivariate grammar: the univariate grammar extended with `y[^m]` factors.
inline BiPoly parse_bipoly(std::string_view text) {
  return detail::PolyScanner(text, /*allow_y=*/true).parse();
}

/// Strict `num`, `-num`, or `num/den` rational literal.
inline Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  int sign = 1;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') sign = -1;
    ++pos;
  }
  skip_ws();
  auto digits = [&]() -> Integer {
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw ParseError("expected integer", pos + 1);
    std::string d;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      d.push_back(text[pos++]);
    return Integer(d);
  };
  Integer num = digits();
  skip_ws();
  Integer den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    skip_ws();
    den = digits();
    if (den == 0) throw ParseError("zero denominator", pos);
  }
  skip_ws();
  if (pos != text.size()) throw ParseError("unexpected trailing input", pos + 1);
  return Rational(sign * num, den);
}

namespace detail {

inline void append_monomial(std::ostream& os, const Rational& c, int xp, int yp, bool leading) {
  Rational mag = c < 0 ? Rational(-c) : c;
  if (leading) {
    if (c < 0) os << '-';
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  bool has_var = xp > 0 || yp > 0;
  if (!has_var || mag != 1) os << mag.str();
  if (xp > 0) {
    os << 'x';
    if (xp > 1) os << '^' << xp;
  }
  if (yp > 0) {
    os << 'y';
    if (yp > 1) os << '^' << yp;
  }
}

}  // namespace detail

/// Descending-degree text form, e.g. "40x^4 - 30x^2 + 2"; "0" for zero.
inline std::string to_string(const UniPoly& f, char var = 'x') {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool leading = true;
  for (int i = f.degree(); i >= 0; --i) {
    const Rational& c = f.coeff(i);
    if (c == 0) continue;
    detail::append_monomial(os, c, var == 'x' ? i : 0, var == 'y' ? i : 0, leading);
    leading = false;
  }
  return os.str();
}

/// Terms ordered by ascending y-power, then descending x-degree.
inline std::string to_string(const BiPoly& F) {
  if (F.is_zero()) return "0";
  std::ostringstream os;
  bool leading = true;
  for (const auto& [j, row] : F.rows()) {
    for (int i = row.degree(); i >= 0; --i) {
      const Rational& c = row.coeff(i);
      if (c == 0) continue;
      detail::append_monomial(os, c, i, j, leading);
      leading = false;
    }
  }
  return os.str();
}

}  // namespace abelcenter
