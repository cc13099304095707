#include "hyperforms/symexpr/parse.hpp"

#include <cctype>

namespace hyperforms::symexpr {

namespace {

class Parser {
 public:
  Parser(std::string_view text, int m) : text_(text), limit_(2 * m + 1) {}

  ExprPtr run() {
    ExprPtr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool consume(char c) {
    if (peek_is(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  ExprPtr expr() {
    ExprPtr e = term();
    for (;;) {
      if (consume('+'))
        e = add(e, term());
      else if (consume('-'))
        e = sub(e, term());
      else
        return e;
    }
  }

  ExprPtr term() {
    ExprPtr e = unary();
    for (;;) {
      if (consume('*'))
        e = mul(e, unary());
      else if (consume('/'))
        e = div(e, unary());
      else
        return e;
    }
  }

  ExprPtr unary() {
    if (consume('-')) return neg(unary());
    return factor();
  }

  ExprPtr factor() {
    ExprPtr b = base();
    if (consume('^')) return pow(b, integer());
    return b;
  }

  int integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected a nonnegative integer exponent");
    long v = 0;
    for (std::size_t i = start; i < pos_; ++i) {
      v = v * 10 + (text_[i] - '0');
      if (v > 1'000'000) fail("exponent too large");
    }
    return static_cast<int>(v);
  }

  ExprPtr base() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ExprPtr e = expr();
      if (!consume(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (c == 'f') return symbol();
    if (match_word("sin")) return call(&hyperforms::symexpr::sin);
    if (match_word("cos")) return call(&hyperforms::symexpr::cos);
    if (match_word("sqrt")) return call(&hyperforms::symexpr::sqrt);
    fail("expected a number, symbol, call, or '('");
  }

  bool match_word(const char* w) {
    skip_ws();
    std::size_t n = std::string_view(w).size();
    if (text_.substr(pos_, n) == w) {
      pos_ += n;
      return true;
    }
    return false;
  }

  ExprPtr call(ExprPtr (*fn)(ExprPtr)) {
    if (!consume('(')) fail("expected '(' after function name");
    ExprPtr arg = expr();
    if (!consume(')')) fail("expected ')'");
    return fn(arg);
  }

  ExprPtr number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    Integer whole(std::string(text_.substr(start, pos_ - start)));
    Rational value(whole);
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      std::size_t fs = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == fs) fail("expected digits after decimal point");
      Integer frac(std::string(text_.substr(fs, pos_ - fs)));
      Integer scale(1);
      for (std::size_t i = fs; i < pos_; ++i) scale *= 10;
      value += Rational(frac, scale);
    }
    return constant(value);
  }

  ExprPtr symbol() {
    std::size_t at = pos_;
    ++pos_;  // 'f'
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) throw SyntaxError("expected digits after 'f'", at);
    long idx = 0;
    for (std::size_t i = start; i < pos_; ++i) {
      idx = idx * 10 + (text_[i] - '0');
      if (idx > 1'000'000) break;
    }
    if (idx < 1 || idx > limit_)
      throw SymbolOutOfRange("symbol f" + std::to_string(idx) + " outside f1..f" +
                                 std::to_string(limit_),
                             static_cast<int>(idx), limit_);
    return coordinate(static_cast<int>(idx));
  }

  std::string_view text_;
  long limit_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_expr(std::string_view text, int m) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  return Parser(text, m).run();
}

}  // namespace hyperforms::symexpr
