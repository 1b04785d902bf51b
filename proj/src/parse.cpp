#include "holomult/parse.hpp"

#include <cctype>

namespace hlm {

namespace {

constexpr std::uint32_t kMaxExponent = 1000;

class ExprParser {
public:
  ExprParser(std::string_view text, std::size_t n, SourcePos at, const NameTable* names = nullptr)
      : text_(text), n_(n), at_(at), names_(names) {}

  CPoly parse() {
    skip_ws();
    if (done()) fail("empty expression");
    CPoly p = expr();
    skip_ws();
    if (!done()) fail(std::string("unexpected '") + peek() + "'");
    return p;
  }

private:
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }

  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t p, const std::string& msg) const {
    throw ParseError(msg, at_.line, at_.column + p);
  }

  CPoly expr() {
    skip_ws();
    bool negate = false;
    if (peek() == '-' || peek() == '+') {
      negate = peek() == '-';
      ++pos_;
    }
    CPoly acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_ws();
      const char c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      CPoly rhs = term();
      if (c == '+')
        acc += rhs;
      else
        acc -= rhs;
    }
  }

  CPoly term() {
    CPoly acc = factor();
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        acc *= factor();
        continue;
      }
      if (!done() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '('))
        fail("implicit multiplication is not allowed; use '*'");
      return acc;
    }
  }

  CPoly factor() {
    CPoly b = base();
    skip_ws();
    if (peek() != '^') return b;
    ++pos_;
    skip_ws();
    const std::size_t start = pos_;
    if (peek() == '-') fail("negative exponent");
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a nonnegative integer exponent");
    std::uint64_t e = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      e = e * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (e > kMaxExponent) fail_at(start, "exponent larger than " + std::to_string(kMaxExponent));
      ++pos_;
    }
    return b.pow(static_cast<unsigned>(e));
  }

  CPoly base() {
    skip_ws();
    const char c = peek();
    if (c == '(') {
      const std::size_t open = pos_;
      ++pos_;
      CPoly inner = expr();
      skip_ws();
      if (peek() != ')') fail_at(open, "unbalanced '('");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return CPoly::constant(n_, number());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    if (done()) fail("unexpected end of expression");
    fail(std::string("unexpected '") + c + "'");
  }

  Rational digits() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return Rational(mpz_class(std::string(text_.substr(start, pos_ - start))));
  }

  Rational number() {
    const std::size_t start = pos_;
    Rational value = digits();
    if (peek() == '/') {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek())))
        fail("expected a denominator after '/'; division is only allowed inside a rational literal");
      Rational den = digits();
      if (sgn(den) == 0) fail_at(start, "zero denominator");
      value /= den;
    } else if (peek() == '.') {
      ++pos_;
      const std::size_t frac_start = pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digits after '.'");
      Rational frac = digits();
      mpz_class scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), 10, pos_ - frac_start);
      value += frac / Rational(scale);
    }
    if (peek() == 'e' || peek() == 'E') fail_at(start, "non-Gaussian-rational literal: exponent notation");
    value.canonicalize();
    return value;
  }

  CPoly identifier() {
    const std::size_t start = pos_;
    while (!done() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    const std::string_view word = text_.substr(start, pos_ - start);
    if (word == "i") return CPoly::constant(n_, GaussRat::i());
    if (word.size() >= 2 && word[0] == 'z' &&
        word.substr(1).find_first_not_of("0123456789") == std::string_view::npos) {
      if (n_ == 0) fail_at(start, "expected a constant, found variable '" + std::string(word) + "'");
      const std::string idx(word.substr(1));
      const std::size_t k = idx.size() > 9 ? 0 : std::stoul(idx);
      if (k == 0 || k > n_) fail_at(start, "variable index " + idx + " out of range 1.." + std::to_string(n_));
      return CPoly::variable(n_, k - 1);
    }
    if (names_) {
      const auto it = names_->find(word);
      if (it != names_->end()) return it->second;
    }
    fail_at(start, "undefined name or non-Gaussian-rational literal '" + std::string(word) + "'");
  }

  std::string_view text_;
  std::size_t n_;
  SourcePos at_;
  const NameTable* names_;
  std::size_t pos_ = 0;
};

}  // namespace

CPoly parse_expr(std::string_view text, std::size_t n, SourcePos at) {
  if (n == 0) throw DomainError("parse_expr needs at least one variable");
  return ExprParser(text, n, at).parse();
}

CPoly parse_expr(std::string_view text, std::size_t n, const NameTable& names, SourcePos at) {
  if (n == 0) throw DomainError("parse_expr needs at least one variable");
  return ExprParser(text, n, at, &names).parse();
}

GaussRat parse_constant(std::string_view text, SourcePos at) {
  return ExprParser(text, 0, at).parse().constant_term();
}

}  // namespace hlm
