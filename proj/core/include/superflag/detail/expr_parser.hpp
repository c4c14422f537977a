#pragma once

// Small recursive-descent parser shared by the scalar, polynomial and matrix
// literal readers. Grammar:
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' integer)?
//   atom   := integer | identifier | '(' expr ')'

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "superflag/field_scalar.hpp"

namespace superflag::detail {

struct Token {
  enum class Kind { number, ident, op, end };
  Kind kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view text);

/// Splits on `sep` at parenthesis depth zero.
std::vector<std::string_view> split_top_level(std::string_view text, char sep);

std::string_view trim(std::string_view text);

template <class Value>
class ExprParser {
 public:
  struct Hooks {
    std::function<Value(const Rational&)> number;
    std::function<Value(const std::string&)> ident;
    std::function<Value(const Value&, const Value&)> divide;
  };

  ExprParser(std::string_view text, Hooks hooks) : tokens_(tokenize(text)), hooks_(std::move(hooks)) {}

  Value parse() {
    if (peek().kind == Token::Kind::end) fail("empty expression");
    Value v = expr();
    if (peek().kind != Token::Kind::end) fail("unexpected '" + peek().text + "'");
    return v;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  bool accept(char op) {
    if (peek().kind == Token::Kind::op && peek().text[0] == op) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse error at column " + std::to_string(peek().pos + 1) + ": " + what);
  }

  Value expr() {
    Value v = term();
    for (;;) {
      if (accept('+')) {
        v = v + term();
      } else if (accept('-')) {
        v = v - term();
      } else {
        return v;
      }
    }
  }
  Value term() {
    Value v = unary();
    for (;;) {
      if (accept('*')) {
        v = v * unary();
      } else if (accept('/')) {
        v = hooks_.divide(v, unary());
      } else {
        return v;
      }
    }
  }
  Value unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }
  Value power() {
    Value base = atom();
    if (!accept('^')) return base;
    if (peek().kind != Token::Kind::number) fail("exponent must be a non-negative integer");
    unsigned long e = std::stoul(tokens_[pos_++].text);
    Value out = hooks_.number(Rational(1));
    for (unsigned long k = 0; k < e; ++k) out = out * base;
    return out;
  }
  Value atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Token::Kind::number:
        ++pos_;
        return hooks_.number(Rational(t.text));
      case Token::Kind::ident:
        ++pos_;
        return hooks_.ident(t.text);
      case Token::Kind::op:
        if (accept('(')) {
          Value v = expr();
          if (!accept(')')) fail("expected ')'");
          return v;
        }
        fail("unexpected '" + t.text + "'");
      case Token::Kind::end:
        break;
    }
    fail("unexpected end of input");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  Hooks hooks_;
};

}  // namespace superflag::detail
