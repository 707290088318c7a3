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

#include "hott/resolve.hpp"

#include <set>
#include <utility>

namespace hott {

namespace {

const char* kDefaultHints[] = {"x", "p"};

[[noreturn]] void unbound(const std::string& name, const Span& span) {
  Diagnostic d;
  d.rule = Rule::UnboundIdentifier;
  d.message = "unbound identifier '" + name + "'";
  d.span = span;
  throw TypeError(std::move(d));
}

}  // namespace

Term resolve_expr(const Expr& e, const NameLookup& is_global,
                  std::vector<std::string> scope) {
  switch (e.tag) {
    case Expr::Tag::Numeral:
      return Term::numeral(e.number);
    case Expr::Tag::Ident: {
      if (e.ident != "_") {
        for (std::size_t k = 0; k < scope.size(); ++k)
          if (scope[scope.size() - 1 - k] == e.ident)
            return Term::var(static_cast<std::uint32_t>(k));
        if (is_global(e.ident)) return Term::constant(e.ident);
      }
      unbound(e.ident, e.span);
    }
    case Expr::Tag::Former:
      break;
  }

  std::vector<Term> children;
  std::vector<std::string> hints;
  for (std::size_t i = 0; i < e.children.size(); ++i) {
    std::uint32_t nb = binders_of(e.kind, i);
    if (!e.children[i]) {
      children.emplace_back();
      for (const auto& n : e.binders[i]) hints.push_back(n);
      continue;
    }
    if (e.family[i]) {
      Term f = shift(resolve_expr(*e.children[i], is_global, scope), 0, nb);
      for (std::uint32_t k = 0; k < nb; ++k) {
        f = Term::app(std::move(f), Term::var(nb - 1 - k));
        hints.push_back(kDefaultHints[k]);
      }
      children.push_back(std::move(f));
      continue;
    }
    std::vector<std::string> inner = scope;
    for (const auto& n : e.binders[i]) {
      inner.push_back(n);
      hints.push_back(n);
    }
    children.push_back(resolve_expr(*e.children[i], is_global, std::move(inner)));
  }
  std::uint32_t payload =
      e.kind == Kind::Universe ? static_cast<std::uint32_t>(e.number) : 0;
  return Term::make(e.kind, payload, {}, std::move(children), std::move(hints));
}

Directive resolve_item(const Item& item, const NameLookup& is_global) {
  Directive d;
  d.span = item.span;
  auto with_span = [&](TypeError& err) {
    if (!err.diagnostic().span) err.diagnostic().span = item.span;
    d.resolve_error = err.diagnostic();
  };
  switch (item.tag) {
    case Item::Tag::Def:
    case Item::Tag::Postulate:
      d.tag = Directive::Tag::Declare;
      d.decl.name = item.name;
      d.decl.kind = item.tag == Item::Tag::Def ? DeclKind::Definition
                                               : DeclKind::Postulate;
      break;
    case Item::Tag::Check: d.tag = Directive::Tag::Check; break;
    case Item::Tag::Eval: d.tag = Directive::Tag::Eval; break;
    case Item::Tag::AssertEq: d.tag = Directive::Tag::AssertEq; break;
    case Item::Tag::AssertNeq: d.tag = Directive::Tag::AssertNeq; break;
    case Item::Tag::Fail:
      d.tag = Directive::Tag::Fail;
      d.expected_rule = item.expected_rule;
      d.inner = std::make_shared<Directive>(resolve_item(*item.inner, is_global));
      return d;
  }
  try {
    switch (item.tag) {
      case Item::Tag::Def:
        d.decl.type = resolve_expr(*item.type, is_global);
        d.decl.body = resolve_expr(*item.body, is_global);
        break;
      case Item::Tag::Postulate:
        d.decl.type = resolve_expr(*item.type, is_global);
        break;
      case Item::Tag::Check:
        d.expr = resolve_expr(*item.lhs, is_global);
        d.type = resolve_expr(*item.type, is_global);
        break;
      case Item::Tag::Eval:
        d.expr = resolve_expr(*item.lhs, is_global);
        break;
      case Item::Tag::AssertEq:
      case Item::Tag::AssertNeq:
        d.expr = resolve_expr(*item.lhs, is_global);
        d.rhs = resolve_expr(*item.rhs, is_global);
        d.type = resolve_expr(*item.type, is_global);
        break;
      case Item::Tag::Fail:
        break;
    }
  } catch (TypeError& err) {
    with_span(err);
  }
  return d;
}

std::vector<Directive> resolve(const SurfaceModule& m, const Signature& sig) {
  std::set<std::string> declared;
  NameLookup is_global = [&](const std::string& n) {
    return sig.contains(n) || declared.count(n) != 0;
  };
  std::vector<Directive> out;
  for (const Item& item : m.items) {
    out.push_back(resolve_item(item, is_global));
    if (item.tag == Item::Tag::Def || item.tag == Item::Tag::Postulate)
      declared.insert(item.name);
  }
  return out;
}

}  // namespace hott
