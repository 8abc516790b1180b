#include "mixmul/parser.hpp"

#include <cctype>
#include <string>

#include "mixmul/errors.hpp"

namespace mixmul {

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const PolyRingPtr& ring, std::size_t line, std::size_t offset)
      : text_(text), ring_(ring), line_(line), offset_(offset) {}

  Polynomial parse() {
    skip_space();
    if (at_end()) fail("empty polynomial");
    Polynomial p = expr();
    skip_space();
    if (!at_end()) {
      if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '(' ||
          std::isdigit(static_cast<unsigned char>(peek()))) {
        fail("implicit multiplication is not allowed; use '*'");
      }
      fail(std::string("unexpected character '") + peek() + "'");
    }
    return p;
  }

 private:
  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      skip_space();
      if (at_end()) return acc;
      const char c = peek();
      if (c == '+') {
        ++pos_;
        acc = acc + term();
      } else if (c == '-') {
        ++pos_;
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      skip_space();
      if (at_end()) return acc;
      if (peek() == '*') {
        ++pos_;
        acc = acc * unary();
      } else if (peek() == '/') {
        ++pos_;
        skip_space();
        const std::size_t at = pos_;
        mpz_class d = integer("expected integer literal after '/'");
        if (d == 0) fail_at(at, "division by zero");
        try {
          acc = acc.scaled(Scalar(mpz_class(1), d));
        } catch (const DomainError& e) {
          fail_at(at, e.what());
        }
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    skip_space();
    if (!at_end() && peek() == '-') {
      ++pos_;
      return -unary();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    skip_space();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_space();
      const std::size_t at = pos_;
      mpz_class e = integer("expected nonnegative integer exponent after '^'");
      if (!e.fits_uint_p() || e > 100000) fail_at(at, "exponent too large");
      Polynomial r = Polynomial::constant(ring_, 1);
      for (unsigned long k = e.get_ui(); k > 0; --k) r = r * base;
      return r;
    }
    return base;
  }

  Polynomial atom() {
    skip_space();
    if (at_end()) fail("unexpected end of input");
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      skip_space();
      if (at_end() || peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t at = pos_;
      mpz_class v = integer("expected integer");
      try {
        return Polynomial::constant(ring_, Scalar(v));
      } catch (const DomainError& e) {
        fail_at(at, e.what());
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t at = pos_;
      std::string name;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) name += text_[pos_++];
      const std::size_t idx = ring_->index_of(name);
      if (idx == ring_->nvars()) fail_at(at, "unknown variable '" + name + "'");
      return Polynomial::variable(ring_, idx);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  mpz_class integer(const char* message) {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail(message);
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    mpz_class v(std::string(text_.substr(start, pos_ - start)));
    skip_space();
    if (!at_end() && (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '(')) {
      fail("implicit multiplication is not allowed; use '*'");
    }
    return v;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const {
    throw ParseError(msg, line_, offset_ + at + 1);
  }

  std::string_view text_;
  const PolyRingPtr& ring_;
  std::size_t line_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const PolyRingPtr& ring, std::size_t line, std::size_t column_offset) {
  return PolyParser(text, ring, line, column_offset).parse();
}

}  // namespace mixmul
