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

// Concrete syntax of .hott proof files: tokens, parse trees, and the parser.
//
//   module := item*
//   item   := "def" IDENT ":" expr ":=" expr
//           | "postulate" IDENT ":" expr
//           | "#check" expr ":" expr
//           | "#eval" expr
//           | "#assert-eq" expr "==" expr ":" expr
//           | "#assert-neq" expr "==" expr ":" expr
//           | "#fail" [RULE] item
//   expr   := "\" binder+ "." expr
//           | "(" IDENT+ ":" expr ")" ... "->" expr
//           | "Sig" "(" IDENT+ ":" expr ")" "," expr
//           | arrow
//   arrow  := eq ["->" expr]
//   eq     := sum ["=" sum "in" sum]
//   sum    := app ["+" sum]
//   app    := head atom*
//
// Eliminators take the motive first, either in binder form `(n. P)` /
// `(x p. P)` or as a family atom that is applied to the bound variables.

#ifndef HOTT_SURFACE_HPP_
#define HOTT_SURFACE_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hott/diagnostic.hpp"
#include "hott/term.hpp"

namespace hott {

enum class TokenKind {
  Lambda,     // backslash
  LParen,
  RParen,
  Colon,
  Dot,
  Comma,
  Arrow,      // ->
  Plus,
  Equals,     // =
  EqEq,       // ==
  Assign,     // :=
  Ident,
  Nat,
  Directive,  // #check, #eval, ...
  End,
};

const char* token_kind_name(TokenKind k);

struct Token {
  TokenKind kind;
  std::string text;
  Span span;
};

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::string message, Span span,
              std::vector<std::string> expected = {});
  const Span& span() const { return span_; }
  const std::vector<std::string>& expected() const { return expected_; }
  // Message without the location prefix.
  const std::string& detail() const { return detail_; }

 private:
  std::string detail_;
  Span span_;
  std::vector<std::string> expected_;
};

class LexError : public SyntaxError {
 public:
  using SyntaxError::SyntaxError;
};

class ParseError : public SyntaxError {
 public:
  using SyntaxError::SyntaxError;
};

std::vector<Token> tokenize(std::string_view text, const std::string& file = "<input>");

bool is_keyword(std::string_view word);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Tag { Ident, Numeral, Former };

  Tag tag = Tag::Former;
  Kind kind = Kind::Nat;     // Former only
  std::string ident;         // Ident only
  std::uint64_t number = 0;  // Numeral value, or the level of Type n
  std::vector<ExprPtr> children;
  // Per child: names bound in that child. When `family[i]` is set the
  // child was written as a family atom and binds nothing syntactically;
  // it is applied to the variables the kernel binds there.
  std::vector<std::vector<std::string>> binders;
  std::vector<bool> family;
  Span span;
};

struct Item {
  enum class Tag { Def, Postulate, Check, Eval, AssertEq, AssertNeq, Fail };

  Tag tag = Tag::Def;
  std::string name;             // Def, Postulate
  ExprPtr type;                 // Def, Postulate, Check, AssertEq, AssertNeq
  ExprPtr body;                 // Def
  ExprPtr lhs;                  // Check, Eval, AssertEq, AssertNeq
  ExprPtr rhs;                  // AssertEq, AssertNeq
  std::shared_ptr<const Item> inner;     // Fail
  std::optional<std::string> expected_rule;  // Fail
  Span span;
};

struct SurfaceModule {
  std::string file;
  std::vector<Item> items;
};

SurfaceModule parse(const std::vector<Token>& tokens, std::string file = "<input>");
SurfaceModule parse_source(std::string_view text, const std::string& file = "<input>");

// Parse a single expression (used by `eval --expr`).
ExprPtr parse_expression(std::string_view text, const std::string& file = "<expr>");

}  // namespace hott

#endif  // HOTT_SURFACE_HPP_
