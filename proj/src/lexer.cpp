/* Copyright 2026 The HoTT Kernel Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <algorithm>
#include <iterator>
#include <cctype>

#include "hott/surface.hpp"

namespace hott {

namespace {

std::string located(const std::string& message, const Span& span) {
  return span.file + ":" + std::to_string(span.line) + ":" +
         std::to_string(span.column) + ": " + message;
}

constexpr std::string_view kKeywords[] = {
    "def",       "postulate",  "in",        "Type",      "Nat",
    "Unit",      "Empty",      "Sig",       "Id",        "W",
    "Trunc",     "pair",       "inl",       "inr",       "refl",
    "zero",      "succ",       "star",      "tree",      "eta",
    "ind-nat",   "ind-sigma",  "ind-sum",   "ind-unit",  "ind-empty",
    "ind-eq",    "ind-w",      "ind-trunc", "_",
};

constexpr std::string_view kDirectives[] = {
    "#check", "#eval", "#assert-eq", "#assert-neq", "#fail"};

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_continue(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

}  // namespace

const char* token_kind_name(TokenKind k) {
  switch (k) {
    case TokenKind::Lambda: return "LAMBDA";
    case TokenKind::LParen: return "LPAREN";
    case TokenKind::RParen: return "RPAREN";
    case TokenKind::Colon: return "COLON";
    case TokenKind::Dot: return "DOT";
    case TokenKind::Comma: return "COMMA";
    case TokenKind::Arrow: return "ARROW";
    case TokenKind::Plus: return "PLUS";
    case TokenKind::Equals: return "EQUALS";
    case TokenKind::EqEq: return "EQEQ";
    case TokenKind::Assign: return "ASSIGN";
    case TokenKind::Ident: return "IDENT";
    case TokenKind::Nat: return "NAT";
    case TokenKind::Directive: return "DIRECTIVE";
    case TokenKind::End: return "END";
  }
  return "?";
}

SyntaxError::SyntaxError(std::string message, Span span,
                         std::vector<std::string> expected)
    : std::runtime_error(located(message, span)),
      detail_(std::move(message)),
      span_(std::move(span)),
      expected_(std::move(expected)) {}

bool is_keyword(std::string_view word) {
  return std::find(std::begin(kKeywords), std::end(kKeywords), word) != std::end(kKeywords);
}

std::vector<Token> tokenize(std::string_view text, const std::string& file) {
  std::vector<Token> out;
  std::size_t i = 0;
  std::uint32_t line = 1, column = 1;

  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < text.size(); ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };
  auto emit = [&](TokenKind kind, std::size_t len, Span span) {
    out.push_back({kind, std::string(text.substr(i, len)), std::move(span)});
    advance(len);
  };

  while (i < text.size()) {
    char c = text[i];
    Span here{file, line, column};
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '-') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i + 1;
      for (;;) {
        if (j < text.size() && ident_continue(text[j])) {
          ++j;
        } else if (j + 1 < text.size() && text[j] == '-' &&
                   ident_continue(text[j + 1])) {
          // Hyphenated names such as is-contr; "->" and "--" never join.
          j += 2;
        } else {
          break;
        }
      }
      emit(TokenKind::Ident, j - i, here);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
        ++j;
      if (j < text.size() && ident_start(text[j]))
        throw LexError("malformed numeral", here);
      emit(TokenKind::Nat, j - i, here);
      continue;
    }
    if (c == '#') {
      std::size_t j = i + 1;
      while (j < text.size() &&
             (std::isalpha(static_cast<unsigned char>(text[j])) || text[j] == '-'))
        ++j;
      std::string_view word = text.substr(i, j - i);
      if (std::find(std::begin(kDirectives), std::end(kDirectives), word) ==
          std::end(kDirectives))
        throw LexError("unknown directive '" + std::string(word) + "'", here);
      emit(TokenKind::Directive, j - i, here);
      continue;
    }
    auto next = [&](char d) { return i + 1 < text.size() && text[i + 1] == d; };
    switch (c) {
      case '\\': emit(TokenKind::Lambda, 1, here); continue;
      case '(': emit(TokenKind::LParen, 1, here); continue;
      case ')': emit(TokenKind::RParen, 1, here); continue;
      case '.': emit(TokenKind::Dot, 1, here); continue;
      case ',': emit(TokenKind::Comma, 1, here); continue;
      case '+': emit(TokenKind::Plus, 1, here); continue;
      case ':':
        if (next('=')) emit(TokenKind::Assign, 2, here);
        else emit(TokenKind::Colon, 1, here);
        continue;
      case '=':
        if (next('=')) emit(TokenKind::EqEq, 2, here);
        else emit(TokenKind::Equals, 1, here);
        continue;
      case '-':
        if (next('>')) {
          emit(TokenKind::Arrow, 2, here);
          continue;
        }
        break;
      default:
        break;
    }
    if (static_cast<unsigned char>(c) >= 0x80)
      throw LexError("non-ASCII character outside a comment", here);
    throw LexError(std::string("unexpected character '") + c + "'", here);
  }
  out.push_back({TokenKind::End, "", Span{file, line, column}});
  return out;
}

}  // namespace hott
