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

#include <charconv>
#include <utility>

#include "hott/surface.hpp"

namespace hott {

namespace {

struct EliminatorSyntax {
  std::string_view keyword;
  Kind kind;
  std::size_t motive_binders;
  std::size_t arguments;  // after the motive
};

constexpr EliminatorSyntax kEliminators[] = {
    {"ind-sigma", Kind::IndSigma, 1, 2}, {"ind-nat", Kind::IndNat, 1, 3},
    {"ind-unit", Kind::IndUnit, 1, 2},   {"ind-empty", Kind::IndEmpty, 1, 1},
    {"ind-sum", Kind::IndCoprod, 1, 3},  {"ind-eq", Kind::IndEq, 2, 4},
    {"ind-w", Kind::IndW, 1, 2},         {"ind-trunc", Kind::IndTrunc, 1, 3},
};

struct ConstructorSyntax {
  std::string_view keyword;
  Kind kind;
  std::size_t arguments;
};

constexpr ConstructorSyntax kConstructors[] = {
    {"succ", Kind::Succ, 1},  {"inl", Kind::Inl, 1},
    {"inr", Kind::Inr, 1},    {"eta", Kind::TruncIn, 1},
    {"pair", Kind::Pair, 2},  {"tree", Kind::Tree, 2},
    {"Id", Kind::Id, 3},      {"Trunc", Kind::Trunc, 1},
};

constexpr std::pair<std::string_view, Kind> kAtoms[] = {
    {"Nat", Kind::Nat},     {"Unit", Kind::Unit}, {"Empty", Kind::Empty},
    {"zero", Kind::Zero},   {"star", Kind::Star}, {"refl", Kind::Refl},
};

std::shared_ptr<Expr> former(Kind kind, Span span) {
  auto e = std::make_shared<Expr>();
  e->tag = Expr::Tag::Former;
  e->kind = kind;
  e->span = std::move(span);
  return e;
}

void add_child(Expr& e, ExprPtr c, std::vector<std::string> binders = {},
               bool family = false) {
  e.children.push_back(std::move(c));
  e.binders.push_back(std::move(binders));
  e.family.push_back(family);
}

class Parser {
 public:
  Parser(const std::vector<Token>& tokens, std::string file)
      : toks_(tokens), file_(std::move(file)) {}

  SurfaceModule module() {
    SurfaceModule m;
    m.file = file_;
    while (peek().kind != TokenKind::End) m.items.push_back(item());
    return m;
  }

  ExprPtr lone_expression() {
    ExprPtr e = expr();
    expect(TokenKind::End, "end of input");
    return e;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[i];
  }
  const Token& take() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  bool at(TokenKind k) const { return peek().kind == k; }
  bool at_word(std::string_view w) const {
    return peek().kind == TokenKind::Ident && peek().text == w;
  }

  [[noreturn]] void error(std::vector<std::string> expected) const {
    const Token& t = peek();
    std::string found = t.kind == TokenKind::End ? "end of input"
                                                 : "'" + t.text + "'";
    std::string msg = "expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) msg += i + 1 == expected.size() ? " or " : ", ";
      msg += expected[i];
    }
    msg += ", found " + found;
    throw ParseError(msg, t.span, std::move(expected));
  }

  const Token& expect(TokenKind k, const std::string& what) {
    if (!at(k)) error({what});
    return take();
  }

  void expect_word(std::string_view w) {
    if (!at_word(w)) error({"'" + std::string(w) + "'"});
    take();
  }

  std::string name() {
    if (!at(TokenKind::Ident) || (is_keyword(peek().text) && peek().text != "_"))
      error({"identifier"});
    return take().text;
  }

  Item item() {
    Item it;
    it.span = peek().span;
    if (at_word("def")) {
      take();
      it.tag = Item::Tag::Def;
      it.name = name();
      expect(TokenKind::Colon, "':' (definitions need a type)");
      it.type = expr();
      expect(TokenKind::Assign, "':='");
      it.body = expr();
      return it;
    }
    if (at_word("postulate")) {
      take();
      it.tag = Item::Tag::Postulate;
      it.name = name();
      expect(TokenKind::Colon, "':'");
      it.type = expr();
      return it;
    }
    if (at(TokenKind::Directive)) {
      std::string d = take().text;
      if (d == "#check") {
        it.tag = Item::Tag::Check;
        it.lhs = expr();
        expect(TokenKind::Colon, "':'");
        it.type = expr();
      } else if (d == "#eval") {
        it.tag = Item::Tag::Eval;
        it.lhs = expr();
      } else if (d == "#assert-eq" || d == "#assert-neq") {
        it.tag = d == "#assert-eq" ? Item::Tag::AssertEq : Item::Tag::AssertNeq;
        it.lhs = expr();
        expect(TokenKind::EqEq, "'=='");
        it.rhs = expr();
        expect(TokenKind::Colon, "':'");
        it.type = expr();
      } else {
        it.tag = Item::Tag::Fail;
        if (at(TokenKind::Ident) && !is_keyword(peek().text))
          it.expected_rule = take().text;
        it.inner = std::make_shared<Item>(item());
      }
      return it;
    }
    error({"'def'", "'postulate'", "a directive"});
  }

  // Looks at "(" IDENT+ ":" without consuming.
  bool at_binder_group() const {
    if (!at(TokenKind::LParen)) return false;
    std::size_t i = 1;
    while (peek(i).kind == TokenKind::Ident) ++i;
    return i > 1 && peek(i).kind == TokenKind::Colon;
  }

  // "(" IDENT+ ":" expr ")"
  std::pair<std::vector<std::string>, ExprPtr> binder_group() {
    expect(TokenKind::LParen, "'('");
    std::vector<std::string> names;
    while (at(TokenKind::Ident)) names.push_back(name());
    expect(TokenKind::Colon, "':'");
    ExprPtr type = expr();
    expect(TokenKind::RParen, "')'");
    return {std::move(names), std::move(type)};
  }

  // Nest one binder per name, innermost body last.
  ExprPtr nest(Kind kind, const std::vector<std::pair<std::string, ExprPtr>>& bs,
               ExprPtr body, const Span& span) {
    for (auto it = bs.rbegin(); it != bs.rend(); ++it) {
      auto e = former(kind, span);
      add_child(*e, it->second);
      add_child(*e, std::move(body), {it->first});
      body = std::move(e);
    }
    return body;
  }

  ExprPtr expr() {
    Span span = peek().span;
    if (at(TokenKind::Lambda)) {
      take();
      std::vector<std::pair<std::string, ExprPtr>> bs;
      while (!at(TokenKind::Dot)) {
        if (at(TokenKind::LParen)) {
          auto [names, type] = binder_group();
          for (auto& n : names) bs.emplace_back(n, type);
        } else if (at(TokenKind::Ident)) {
          bs.emplace_back(name(), nullptr);
        } else {
          error({"'('", "identifier", "'.'"});
        }
      }
      if (bs.empty()) error({"a binder"});
      take();
      return nest(Kind::Lambda, bs, expr(), span);
    }
    if (at_binder_group()) {
      std::vector<std::pair<std::string, ExprPtr>> bs;
      while (at_binder_group()) {
        auto [names, type] = binder_group();
        for (auto& n : names) bs.emplace_back(n, type);
      }
      expect(TokenKind::Arrow, "'->'");
      return nest(Kind::Pi, bs, expr(), span);
    }
    if (at_word("Sig")) {
      take();
      std::vector<std::pair<std::string, ExprPtr>> bs;
      while (at_binder_group()) {
        auto [names, type] = binder_group();
        for (auto& n : names) bs.emplace_back(n, type);
      }
      if (bs.empty()) error({"'(' binder"});
      expect(TokenKind::Comma, "','");
      return nest(Kind::Sigma, bs, expr(), span);
    }
    ExprPtr lhs = equality();
    if (at(TokenKind::Arrow)) {
      take();
      ExprPtr rhs = expr();
      auto e = former(Kind::Pi, span);
      add_child(*e, lhs);
      add_child(*e, rhs, {"_"});
      return e;
    }
    return lhs;
  }

  ExprPtr equality() {
    Span span = peek().span;
    ExprPtr lhs = sum();
    if (!at(TokenKind::Equals)) return lhs;
    take();
    ExprPtr rhs = sum();
    expect_word("in");
    ExprPtr type = sum();
    auto e = former(Kind::Id, span);
    add_child(*e, type);
    add_child(*e, lhs);
    add_child(*e, rhs);
    return e;
  }

  ExprPtr sum() {
    Span span = peek().span;
    ExprPtr lhs = application();
    if (!at(TokenKind::Plus)) return lhs;
    take();
    auto e = former(Kind::Coprod, span);
    add_child(*e, lhs);
    add_child(*e, sum());
    return e;
  }

  bool at_atom() const {
    switch (peek().kind) {
      case TokenKind::LParen:
      case TokenKind::Nat:
        return true;
      case TokenKind::Ident: {
        const std::string& w = peek().text;
        if (!is_keyword(w)) return true;
        if (w == "Type") return true;
        for (const auto& [kw, kind] : kAtoms)
          if (w == kw) return true;
        return false;
      }
      default:
        return false;
    }
  }

  ExprPtr application() {
    Span span = peek().span;
    ExprPtr head = head_form();
    while (at_atom()) {
      auto e = former(Kind::App, span);
      add_child(*e, head);
      add_child(*e, atom());
      head = std::move(e);
    }
    return head;
  }

  // `(x. P)` / `(x p. P)` binder form, or a family atom.
  void family_argument(Expr& e, std::size_t binders) {
    if (at(TokenKind::LParen)) {
      std::size_t i = 1;
      while (peek(i).kind == TokenKind::Ident && i <= binders) ++i;
      if (i == binders + 1 && peek(i).kind == TokenKind::Dot) {
        take();
        std::vector<std::string> names;
        for (std::size_t k = 0; k < binders; ++k) names.push_back(name());
        take();  // '.'
        ExprPtr body = expr();
        expect(TokenKind::RParen, "')'");
        add_child(e, std::move(body), std::move(names));
        return;
      }
    }
    add_child(e, atom(), {}, true);
  }

  ExprPtr head_form() {
    Span span = peek().span;
    if (at(TokenKind::Ident)) {
      const std::string w = peek().text;
      for (const auto& el : kEliminators) {
        if (w != el.keyword) continue;
        take();
        auto e = former(el.kind, span);
        if (el.kind == Kind::IndEq) {
          // Surface order: motive, base, center, endpoint, path.
          auto motive = std::make_shared<Expr>();
          family_argument(*motive, 2);
          ExprPtr base = atom();
          add_child(*e, base);
          e->children.push_back(motive->children[0]);
          e->binders.push_back(motive->binders[0]);
          e->family.push_back(motive->family[0]);
          for (int k = 0; k < 3; ++k) add_child(*e, atom());
        } else {
          family_argument(*e, el.motive_binders);
          for (std::size_t k = 0; k < el.arguments; ++k) add_child(*e, atom());
        }
        return e;
      }
      for (const auto& c : kConstructors) {
        if (w != c.keyword) continue;
        take();
        auto e = former(c.kind, span);
        for (std::size_t k = 0; k < c.arguments; ++k) add_child(*e, atom());
        return e;
      }
      if (w == "W") {
        take();
        auto e = former(Kind::W, span);
        add_child(*e, atom());
        family_argument(*e, 1);
        return e;
      }
    }
    return atom();
  }

  ExprPtr atom() {
    Span span = peek().span;
    if (at(TokenKind::LParen)) {
      take();
      ExprPtr e = expr();
      expect(TokenKind::RParen, "')'");
      return e;
    }
    if (at(TokenKind::Nat)) {
      auto e = std::make_shared<Expr>();
      e->tag = Expr::Tag::Numeral;
      e->number = number(take());
      e->span = span;
      return e;
    }
    if (at(TokenKind::Ident)) {
      const std::string w = peek().text;
      if (w == "Type") {
        take();
        if (!at(TokenKind::Nat)) error({"universe level"});
        auto e = former(Kind::Universe, span);
        e->number = number(take());
        return e;
      }
      for (const auto& [kw, kind] : kAtoms) {
        if (w == kw) {
          take();
          return former(kind, span);
        }
      }
      if (!is_keyword(w)) {
        auto e = std::make_shared<Expr>();
        e->tag = Expr::Tag::Ident;
        e->ident = take().text;
        e->span = span;
        return e;
      }
    }
    error({"an expression"});
  }

  std::uint64_t number(const Token& t) const {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || v > 1'000'000)
      throw ParseError("numeral out of range", t.span);
    return v;
  }

  const std::vector<Token>& toks_;
  std::string file_;
  std::size_t pos_ = 0;
};

}  // namespace

SurfaceModule parse(const std::vector<Token>& tokens, std::string file) {
  return Parser(tokens, std::move(file)).module();
}

SurfaceModule parse_source(std::string_view text, const std::string& file) {
  return parse(tokenize(text, file), file);
}

ExprPtr parse_expression(std::string_view text, const std::string& file) {
  std::vector<Token> toks = tokenize(text, file);
  return Parser(toks, file).lone_expression();
}

}  // namespace hott
