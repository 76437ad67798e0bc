//  Copyright 2026 The partlogic Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include <string>
#include <vector>

#include "partlogic/error.hpp"
#include "partlogic/formula.hpp"

namespace partlogic {

namespace {

enum class Tok { Var, True, False, Not, And, Or, Implies, Iff, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End: return "end of input";
    case Tok::Var: return "variable '" + t.text + "'";
    default: return "'" + t.text + "'";
  }
}

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto is_alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); };
  auto is_ident = [&](char c) { return is_alpha(c) || (c >= '0' && c <= '9') || c == '_'; };
  while (i < s.size()) {
    const char c = s[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    const auto start = i;
    if (is_alpha(c)) {
      while (i < s.size() && is_ident(s[i])) ++i;
      std::string word(s.substr(start, i - start));
      Tok kind = word == "T" ? Tok::True : word == "F" ? Tok::False : Tok::Var;
      out.push_back({kind, start, std::move(word)});
      continue;
    }
    switch (c) {
      case '~': out.push_back({Tok::Not, start, "~"}); ++i; continue;
      case '&': out.push_back({Tok::And, start, "&"}); ++i; continue;
      case '|': out.push_back({Tok::Or, start, "|"}); ++i; continue;
      case '(': out.push_back({Tok::LParen, start, "("}); ++i; continue;
      case ')': out.push_back({Tok::RParen, start, ")"}); ++i; continue;
      default: break;
    }
    if (s.substr(i, 2) == "->") {
      out.push_back({Tok::Implies, start, "->"});
      i += 2;
      continue;
    }
    if (s.substr(i, 3) == "<->") {
      out.push_back({Tok::Iff, start, "<->"});
      i += 3;
      continue;
    }
    throw SyntaxError(ErrorCode::SyntaxError, start,
                      "unexpected character '" + std::string(1, c) + "'");
  }
  out.push_back({Tok::End, s.size(), ""});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  Formula parse_all() {
    auto f = parse_iff();
    const auto& t = peek();
    if (t.kind == Tok::RParen) {
      throw SyntaxError(ErrorCode::UnbalancedParens, t.pos, "unmatched ')'");
    }
    if (t.kind != Tok::End) {
      throw SyntaxError(ErrorCode::SyntaxError, t.pos,
                        "expected an operator, found " + describe(t));
    }
    return f;
  }

 private:
  const Token& peek() const { return tokens_[index_]; }
  const Token& take() { return tokens_[index_++]; }
  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++index_;
    return true;
  }

  Formula parse_iff() {
    auto left = parse_implies();
    while (accept(Tok::Iff)) left = Formula::binary(Formula::Kind::Iff, left, parse_implies());
    return left;
  }

  Formula parse_implies() {
    auto left = parse_or();
    if (accept(Tok::Implies)) {
      return Formula::binary(Formula::Kind::Implies, left, parse_implies());
    }
    return left;
  }

  Formula parse_or() {
    auto left = parse_and();
    while (accept(Tok::Or)) left = Formula::binary(Formula::Kind::Or, left, parse_and());
    return left;
  }

  Formula parse_and() {
    auto left = parse_unary();
    while (accept(Tok::And)) left = Formula::binary(Formula::Kind::And, left, parse_unary());
    return left;
  }

  Formula parse_unary() {
    if (accept(Tok::Not)) return Formula::negation(parse_unary());
    return parse_primary();
  }

  Formula parse_primary() {
    const auto& t = take();
    switch (t.kind) {
      case Tok::Var: return Formula::variable(t.text);
      case Tok::True: return Formula::constant(true);
      case Tok::False: return Formula::constant(false);
      case Tok::LParen: {
        auto inner = parse_iff();
        const auto& close = peek();
        if (close.kind == Tok::RParen) {
          ++index_;
          return inner;
        }
        if (close.kind == Tok::End) {
          throw SyntaxError(ErrorCode::UnbalancedParens, t.pos, "unclosed '('");
        }
        throw SyntaxError(ErrorCode::SyntaxError, close.pos,
                          "expected ')', found " + describe(close));
      }
      case Tok::RParen:
        if (depth_of_open() == 0) {
          throw SyntaxError(ErrorCode::UnbalancedParens, t.pos, "unmatched ')'");
        }
        break;
      default:
        break;
    }
    throw SyntaxError(ErrorCode::SyntaxError, t.pos, "expected an operand, found " + describe(t));
  }

  // Number of '(' before the current token that are still open.
  std::size_t depth_of_open() const {
    std::size_t depth = 0;
    for (std::size_t i = 0; i + 1 < index_; ++i) {
      if (tokens_[i].kind == Tok::LParen) ++depth;
      if (tokens_[i].kind == Tok::RParen && depth > 0) --depth;
    }
    return depth;
  }

  std::vector<Token> tokens_;
  std::size_t index_ = 0;
};

int precedence(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Iff: return 1;
    case Formula::Kind::Implies: return 2;
    case Formula::Kind::Or: return 3;
    case Formula::Kind::And: return 4;
    case Formula::Kind::Not: return 5;
    default: return 6;
  }
}

std::string_view symbol(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Iff: return "<->";
    case Formula::Kind::Implies: return "->";
    case Formula::Kind::Or: return "|";
    default: return "&";
  }
}

void render(const Formula& f, std::string& out) {
  const auto k = f.kind();
  if (k == Formula::Kind::Variable) {
    out += f.name();
    return;
  }
  if (k == Formula::Kind::Constant) {
    out += f.value() ? "T" : "F";
    return;
  }
  auto operand = [&](const Formula& c, bool parens) {
    if (parens) out += '(';
    render(c, out);
    if (parens) out += ')';
  };
  const int p = precedence(k);
  if (k == Formula::Kind::Not) {
    out += '~';
    operand(f.child(0), precedence(f.child(0).kind()) < p);
    return;
  }
  const int lp = precedence(f.child(0).kind());
  const int rp = precedence(f.child(1).kind());
  const bool right_assoc = k == Formula::Kind::Implies;
  operand(f.child(0), right_assoc ? lp <= p : lp < p);
  out += ' ';
  out += symbol(k);
  out += ' ';
  operand(f.child(1), right_assoc ? rp < p : rp <= p);
}

}  // namespace

Formula parse(std::string_view text) { return Parser(text).parse_all(); }

std::string format(const Formula& f) {
  std::string out;
  render(f, out);
  return out;
}

}  // namespace partlogic
