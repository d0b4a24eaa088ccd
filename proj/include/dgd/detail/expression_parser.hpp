// Copyright 2026 The dgdensity Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Recursive-descent parser shared by the polynomial, word and field syntaxes.
//
//   expr  := ['+'|'-'] term { ('+'|'-') term }
//   term  := power { ['*'] power }
//   power := atom [ '^' integer ]
//   atom  := integer [ '/' integer ] | identifier | '(' expr ')'

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "dgd/errors.hpp"
#include "dgd/rational.hpp"

namespace dgd::detail {

template <class Value, class Resolve, class Constant>
class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, Resolve resolve, Constant constant)
      : text_(text), resolve_(resolve), constant_(constant) {}

  Value parse() {
    skip_space();
    if (pos_ == text_.size()) fail("empty expression");
    Value v = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return v;
  }

 private:
  Value expr() {
    skip_space();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = text_[pos_++] == '-';
    }
    Value acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_space();
      const char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Value rhs = term();
      if (c == '+') {
        acc = acc + rhs;
      } else {
        acc = acc - rhs;
      }
    }
    return acc;
  }

  Value term() {
    Value acc = power();
    for (;;) {
      skip_space();
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * power();
      } else if (starts_atom(c)) {
        acc = acc * power();
      } else {
        break;
      }
    }
    return acc;
  }

  Value power() {
    Value base = atom();
    skip_space();
    if (peek() != '^') return base;
    ++pos_;
    skip_space();
    const std::string digits = read_digits();
    if (digits.empty()) fail("expected exponent after '^'");
    if (digits.size() > 6) fail("exponent too large");
    const unsigned long e = std::stoul(digits);
    Value out = constant_(Rational(1));
    for (unsigned long i = 0; i < e; ++i) out = out * base;
    return out;
  }

  Value atom() {
    skip_space();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Value inner = expr();
      skip_space();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string literal = read_digits();
      skip_space();
      if (peek() == '/') {
        ++pos_;
        skip_space();
        const std::string den = read_digits();
        if (den.empty()) fail("expected denominator after '/'");
        literal += "/" + den;
      }
      return constant_(parse_rational(literal));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      return resolve_(text_.substr(start, pos_ - start));
    }
    fail(c == '\0' ? "unexpected end of input" : "unexpected character");
  }

  bool starts_atom(char c) const {
    return c == '(' || c == '_' || std::isalnum(static_cast<unsigned char>(c));
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) +
                     "'");
  }

  std::string_view text_;
  Resolve resolve_;
  Constant constant_;
  std::size_t pos_ = 0;
};

template <class Value, class Resolve, class Constant>
Value parse_expression(std::string_view text, Resolve resolve, Constant constant) {
  return ExpressionParser<Value, Resolve, Constant>(text, resolve, constant).parse();
}

template <class Value, class Resolve>
Value parse_expression(std::string_view text, Resolve resolve) {
  return parse_expression<Value>(text, resolve, [](const Rational& c) { return Value(c); });
}

}  // namespace dgd::detail
