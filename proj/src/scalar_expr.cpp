#include "pwl/scalar_expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

#include "pwl/errors.hpp"

namespace pwl {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  double run() {
    skip_ws();
    if (pos_ == text_.size()) throw SyntaxError(pos_, "empty expression");
    const double v = expr();
    skip_ws();
    if (pos_ != text_.size()) throw SyntaxError(pos_, "unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  double expr() {
    double v = term();
    for (;;) {
      skip_ws();
      if (accept('+'))
        v += term();
      else if (accept('-'))
        v -= term();
      else
        return v;
    }
  }

  double term() {
    double v = factor();
    for (;;) {
      skip_ws();
      if (accept('*')) {
        v *= factor();
      } else if (peek() == '/') {
        const std::size_t at = pos_++;
        const double d = factor();
        if (d == 0.0) throw Error(ErrorKind::DomainError, "division by zero at offset " + std::to_string(at));
        v /= d;
      } else {
        return v;
      }
    }
  }

  double factor() {
    skip_ws();
    if (pos_ == text_.size()) throw SyntaxError(pos_, "unexpected end of expression");
    if (accept('-')) return -factor();
    if (accept('(')) {
      const double v = expr();
      expect(')');
      return v;
    }
    if (keyword("pi")) return std::numbers::pi;
    if (keyword("sqrt")) {
      const std::size_t at = pos_;
      skip_ws();
      expect('(');
      const double v = expr();
      expect(')');
      if (v < 0.0)
        throw Error(ErrorKind::DomainError, "sqrt of negative value at offset " + std::to_string(at));
      return std::sqrt(v);
    }
    return number();
  }

  double number() {
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    if (!(std::isdigit(static_cast<unsigned char>(*first)) || *first == '.'))
      throw SyntaxError(pos_, "expected a number");
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{}) throw SyntaxError(pos_, "malformed number");
    pos_ += static_cast<std::size_t>(ptr - first);
    return v;
  }

  bool keyword(std::string_view word) {
    if (text_.substr(pos_, word.size()) != word) return false;
    const std::size_t after = pos_ + word.size();
    if (after < text_.size() && std::isalnum(static_cast<unsigned char>(text_[after]))) return false;
    pos_ = after;
    return true;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    skip_ws();
    if (!accept(c)) throw SyntaxError(pos_, std::string("expected '") + c + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

double parse_scalar(std::string_view text) { return Parser(text).run(); }

}  // namespace pwl
