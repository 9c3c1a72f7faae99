// Copyright 2026 The inlc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "inlc/parser.h"

#include <cctype>
#include <string>
#include <vector>

#include "inlc/errors.h"

namespace inlc {

namespace {

enum class Tok {
  kIdent, kTop, kBot, kBox, kNot, kAnd, kOr, kArrow, kIff,
  kLParen, kRParen, kComma, kSemi, kEnd,
};

struct Token {
  Tok kind;
  SourceSpan span;
  std::string text;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::kIdent: return "identifier";
    case Tok::kTop: return "'top'";
    case Tok::kBot: return "'bot'";
    case Tok::kBox: return "'Box'";
    case Tok::kNot: return "'~'";
    case Tok::kAnd: return "'&'";
    case Tok::kOr: return "'|'";
    case Tok::kArrow: return "'->'";
    case Tok::kIff: return "'<->'";
    case Tok::kLParen: return "'('";
    case Tok::kRParen: return "')'";
    case Tok::kComma: return "','";
    case Tok::kSemi: return "';'";
    case Tok::kEnd: return "end of input";
  }
  return "?";
}

std::vector<Token> lex(std::string_view in) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < in.size()) {
    const char c = in[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    auto emit = [&](Tok k, std::size_t len) {
      out.push_back({k, {start, start + len}, std::string(in.substr(start, len))});
      i = start + len;
    };
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i + 1;
      while (j < in.size() && (std::isalnum(static_cast<unsigned char>(in[j])) ||
                               in[j] == '_')) {
        ++j;
      }
      std::string_view word = in.substr(i, j - i);
      Tok k = word == "top"   ? Tok::kTop
              : word == "bot" ? Tok::kBot
              : word == "Box" ? Tok::kBox
                              : Tok::kIdent;
      emit(k, j - i);
      continue;
    }
    if (in.substr(i, 3) == "<->") {
      emit(Tok::kIff, 3);
    } else if (in.substr(i, 2) == "->") {
      emit(Tok::kArrow, 2);
    } else {
      switch (c) {
        case '~': emit(Tok::kNot, 1); break;
        case '&': emit(Tok::kAnd, 1); break;
        case '|': emit(Tok::kOr, 1); break;
        case '(': emit(Tok::kLParen, 1); break;
        case ')': emit(Tok::kRParen, 1); break;
        case ',': emit(Tok::kComma, 1); break;
        case ';': emit(Tok::kSemi, 1); break;
        default:
          throw ParseError({start, start + 1},
                           std::string("unexpected character '") + c + "'");
      }
    }
  }
  out.push_back({Tok::kEnd, {in.size(), in.size()}, ""});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Formula parse() {
    Formula f = iff();
    if (!at(Tok::kEnd)) fail("expected end of input");
    return f;
  }

 private:
  bool at(Tok k) const { return toks_[pos_].kind == k; }
  const Token& peek() const { return toks_[pos_]; }

  [[noreturn]] void fail(const std::string& expected) const {
    const Token& t = peek();
    std::string found = t.kind == Tok::kEnd ? describe(Tok::kEnd)
                                            : "'" + t.text + "'";
    throw ParseError(t.span, expected + ", found " + found);
  }

  void expect(Tok k) {
    if (!at(k)) fail(std::string("expected ") + describe(k));
    ++pos_;
  }

  Formula iff() {
    Formula f = impl();
    while (at(Tok::kIff)) {
      ++pos_;
      f = Formula::iff(f, impl());
    }
    return f;
  }

  Formula impl() {
    Formula f = disj();
    if (at(Tok::kArrow)) {
      ++pos_;
      return Formula::implies(f, impl());
    }
    return f;
  }

  Formula disj() {
    Formula f = conj();
    while (at(Tok::kOr)) {
      ++pos_;
      f = Formula::disj(f, conj());
    }
    return f;
  }

  Formula conj() {
    Formula f = neg();
    while (at(Tok::kAnd)) {
      ++pos_;
      f = Formula::conj(f, neg());
    }
    return f;
  }

  Formula neg() {
    if (at(Tok::kNot)) {
      ++pos_;
      return Formula::negation(neg());
    }
    return atom();
  }

  Formula atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::kTop: ++pos_; return Formula::top();
      case Tok::kBot: ++pos_; return Formula::bot();
      case Tok::kIdent: ++pos_; return Formula::var(t.text);
      case Tok::kLParen: {
        ++pos_;
        Formula f = iff();
        expect(Tok::kRParen);
        return f;
      }
      case Tok::kBox: return box();
      default: fail("expected a formula");
    }
  }

  Formula box() {
    ++pos_;
    expect(Tok::kLParen);
    std::vector<Formula> inst;
    if (!at(Tok::kSemi)) {
      inst.push_back(iff());
      while (!at(Tok::kSemi)) {
        if (!at(Tok::kComma)) fail("expected ',' or ';'");
        ++pos_;
        inst.push_back(iff());
      }
    }
    expect(Tok::kSemi);
    Formula univ = iff();
    expect(Tok::kRParen);
    return Formula::box(std::move(inst), univ);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_inl(std::string_view text) { return Parser(lex(text)).parse(); }

}  // namespace inlc
