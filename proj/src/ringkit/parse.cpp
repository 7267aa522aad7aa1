#include <cctype>

#include "kron/errors.hpp"
#include "kron/ringkit/multipoly.hpp"

namespace kron {

namespace {

// Recursive-descent parser:
//   expr  := ['+'|'-'] term (('+'|'-') term)*
//   term  := unary (('*'|'/') unary)*
//   unary := '-' unary | power
//   power := atom ('^' integer)?
//   atom  := integer | identifier | '(' expr ')'
class Parser {
 public:
  Parser(const PolyRing& ring, std::string_view text) : ring_(ring), text_(text) {}

  MultiPoly run() {
    MultiPoly result = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidInput("polynomial parse error at offset " + std::to_string(pos_) + ": " + what + " in \"" +
                       std::string(text_) + "\"");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    MultiPoly acc(ring_);
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else break;
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = unary();
    while (true) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        MultiPoly d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        const Domain& dom = ring_.domain();
        if (dom.is_field()) {
          acc = acc.scaled(dom.inv(d.constant_term()));
        } else {
          auto q = acc.divide_exact(d);
          if (!q) fail("inexact integer division");
          acc = std::move(*q);
        }
      } else {
        break;
      }
    }
    return acc;
  }

  MultiPoly unary() {
    if (accept('-')) return -unary();
    return power();
  }

  MultiPoly power() {
    MultiPoly base = atom();
    if (accept('^')) {
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      const std::string digits(text_.substr(start, pos_ - start));
      if (digits.size() > 4) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  MultiPoly atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      mpz_class value(std::string(text_.substr(start, pos_ - start)), 10);
      return MultiPoly::constant(ring_, ring_.domain().from_mpz(value));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      if (auto idx = ring_.index_of(name)) return MultiPoly::variable(ring_, *idx);
      if (name == "w" && ring_.domain().kind() == DomainKind::extension_field)
        return MultiPoly::constant(ring_, ring_.domain().generator());
      pos_ = start;
      fail("unknown variable '" + std::string(name) + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  const PolyRing& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly MultiPoly::parse(const PolyRing& ring, std::string_view text) { return Parser(ring, text).run(); }

}  // namespace kron
