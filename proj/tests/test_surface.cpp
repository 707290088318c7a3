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

#include <doctest.h>

#include "hott/pretty.hpp"
#include "hott/resolve.hpp"
#include "hott/surface.hpp"
#include "support.hpp"

namespace hott {
namespace {

std::vector<TokenKind> kinds(std::string_view text) {
  std::vector<TokenKind> out;
  for (const Token& t : tokenize(text)) out.push_back(t.kind);
  return out;
}

TEST_CASE("tokenize examples") {
  using K = TokenKind;
  CHECK(kinds("\\(x : Nat). x") ==
        std::vector<K>{K::Lambda, K::LParen, K::Ident, K::Colon, K::Ident, K::RParen,
                       K::Dot, K::Ident, K::End});
  auto toks = tokenize("-- comment\nNat");
  REQUIRE(toks.size() == 2);
  CHECK(toks[0].kind == K::Ident);
  CHECK(toks[0].text == "Nat");
  CHECK(toks[0].span.line == 2);
  CHECK_THROWS_AS(tokenize("@"), LexError);
  CHECK(kinds("a-b c") == std::vector<K>{K::Ident, K::Ident, K::End});
  CHECK(tokenize("a-b")[0].text == "a-b");
  CHECK_THROWS_AS(tokenize("c - d"), LexError);
  CHECK(tokenize("ind-nat")[0].text == "ind-nat");
  CHECK(kinds(":= == -> = :") ==
        std::vector<K>{K::Assign, K::EqEq, K::Arrow, K::Equals, K::Colon, K::End});
}

TEST_CASE("parse examples") {
  SurfaceModule m = parse_source("def idN : Nat -> Nat := \\(x : Nat). x");
  REQUIRE(m.items.size() == 1);
  CHECK(m.items[0].tag == Item::Tag::Def);
  CHECK(m.items[0].name == "idN");
  Term type = resolve_expr(*m.items[0].type, [](const std::string&) { return false; });
  Term body = resolve_expr(*m.items[0].body, [](const std::string&) { return false; });
  CHECK(type == Term::arrow(Term::nat(), Term::nat()));
  CHECK(body == Term::lambda(Term::nat(), Term::var(0)));

  SurfaceModule a = parse_source("#assert-eq comp h (comp g f) == comp (comp h g) f : Nat");
  REQUIRE(a.items.size() == 1);
  CHECK(a.items[0].tag == Item::Tag::AssertEq);

  CHECK_THROWS_AS(parse_source("def x := 3"), ParseError);
  try {
    parse_source("def x := 3");
  } catch (const ParseError& e) {
    CHECK(e.span().line == 1);
    CHECK_FALSE(e.expected().empty());
  }
}

TEST_CASE("sugar") {
  auto none = [](const std::string&) { return false; };
  auto r = [&](std::string_view s) { return resolve_expr(*parse_expression(s), none); };
  CHECK(r("zero = 1 in Nat") == Term::id(Term::nat(), Term::zero(), Term::numeral(1)));
  CHECK(r("Nat + Unit + Empty") ==
        Term::coprod(Term::nat(), Term::coprod(Term::unit(), Term::empty())));
  CHECK(r("Nat -> Nat -> Nat") ==
        Term::arrow(Term::nat(), Term::arrow(Term::nat(), Term::nat())));
  CHECK(r("Sig (x : Nat), Id Nat x x") ==
        Term::sigma(Term::nat(), Term::id(Term::nat(), Term::var(0), Term::var(0))));
  CHECK(r("3") == Term::numeral(3));
  CHECK(r("Type 2") == Term::universe(Level(2)));
}

TEST_CASE("resolve examples") {
  auto none = [](const std::string&) { return false; };
  CHECK(resolve_expr(*parse_expression("\\(x : Nat). \\(y : Nat). x"), none) ==
        Term::lambda(Term::nat(), Term::lambda(Term::nat(), Term::var(1))));
  // Innermost binder wins.
  CHECK(resolve_expr(*parse_expression("\\(x : Nat) (x : Unit). x"), none) ==
        Term::lambda(Term::nat(), Term::lambda(Term::unit(), Term::var(0))));

  SurfaceModule m = parse_source("def idN : Nat -> Nat := \\(x : Nat). x\n#eval idN 0\n#eval foo");
  auto ds = resolve(m, Signature());
  REQUIRE(ds.size() == 3);
  CHECK(ds[1].expr == Term::app(Term::constant("idN"), Term::zero()));
  REQUIRE(ds[2].resolve_error);
  CHECK(ds[2].resolve_error->rule == Rule::UnboundIdentifier);
  REQUIRE(ds[2].resolve_error->span);
  CHECK(ds[2].resolve_error->span->line == 3);
  CHECK(ds[2].resolve_error->span->column == 7);
}

TEST_CASE("family motives apply the family to the bound variables") {
  auto none = [](const std::string&) { return false; };
  Term t = resolve_expr(*parse_expression("\\(P : Nat -> Type 0) (b : P 0) (s : (n : Nat) -> P n -> P (succ n)). ind-nat P b s 3"),
                        none);
  Term body = t[1][1][1];
  REQUIRE(body.kind() == Kind::IndNat);
  CHECK(body[0] == Term::app(Term::var(3), Term::var(0)));
}

TEST_CASE("pretty printing round-trips every stdlib declaration") {
  auto s = testing::stdlib_session();
  const Signature& sig = s.signature();
  auto global = [&](const std::string& n) { return sig.contains(n); };
  std::size_t n = 0;
  for (const Declaration& d : sig.declarations()) {
    for (const Term& t : {d.type, d.body}) {
      if (!t) continue;
      std::string text = pretty(t);
      Term back = resolve_expr(*parse_expression(text), global);
      CHECK_MESSAGE(back == t, d.name << ": " << text);
      ++n;
    }
  }
  CHECK(n > 100);
}

TEST_CASE("pretty printer freshens captured names") {
  // \x. \x1. x applied inside a context that already names x.
  Term t = Term::lambda(Term::nat(), Term::app(Term::var(1), Term::var(0)), "x");
  std::string text = pretty(t, {"x"});
  CHECK(text == "\\(x1 : Nat). x x1");
  CHECK(pretty(Term::numeral(4)) == "4");
  CHECK(pretty(Term::arrow(Term::coprod(Term::nat(), Term::unit()), Term::nat())) ==
        "Nat + Unit -> Nat");
}

TEST_CASE("diagnostics carry spans inside the file") {
  Session s;
  auto d = s.run_source("def a : Nat := 0\n\ndef b : Nat := star\n", "f.hott");
  REQUIRE(d);
  REQUIRE(d->span);
  CHECK(d->span->file == "f.hott");
  CHECK(d->span->line == 3);
  CHECK(format_diagnostic(*d).rfind("f.hott:3:", 0) == 0);
}

}  // namespace
}  // namespace hott
