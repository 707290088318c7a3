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

#include "hott/typecheck.hpp"

#include <string>
#include <utility>

namespace hott {

namespace {

// P is a motive binding one variable over ctx; returns P[arg] where arg
// lives `extra` binders deeper than ctx.
Term motive_at(const Term& motive, const Term& arg, std::uint32_t extra) {
  return instantiate(shift(motive, 1, extra), arg);
}

std::optional<Level> join(std::optional<Level> a, std::optional<Level> b) {
  if (!a) return b;
  if (!b) return a;
  return max(*a, *b);
}

std::string hint_or(std::span<const std::string> hints, std::size_t i,
                    const char* fallback) {
  return i < hints.size() ? hints[i] : fallback;
}

}  // namespace

void Checker::fail(Rule r, const Context& ctx, std::string message,
                   std::optional<Term> expected,
                   std::optional<Term> found) const {
  Diagnostic d;
  d.rule = r;
  d.message = std::move(message);
  d.expected = std::move(expected);
  d.found = std::move(found);
  d.context = ctx;
  throw TypeError(std::move(d));
}

bool Checker::is_type_former(Kind k) const {
  switch (k) {
    case Kind::Universe:
    case Kind::Pi:
    case Kind::Sigma:
    case Kind::Nat:
    case Kind::Unit:
    case Kind::Empty:
    case Kind::Coprod:
    case Kind::Id:
    case Kind::W:
    case Kind::Trunc:
      return true;
    default:
      return false;
  }
}

std::optional<Level> Checker::level_of(const Context& ctx, const Term& type) {
  switch (type.kind()) {
    case Kind::Universe:
      return type.level().succ();
    case Kind::Nat:
    case Kind::Unit:
    case Kind::Empty:
      return std::nullopt;
    case Kind::Pi:
    case Kind::Sigma:
    case Kind::W: {
      auto a = level_of(ctx, type[0]);
      auto b = level_of(ctx.extend(type[0], hint_or(type.hints(), 0, "x")),
                        type[1]);
      return join(a, b);
    }
    case Kind::Coprod:
      return join(level_of(ctx, type[0]), level_of(ctx, type[1]));
    case Kind::Id: {
      auto a = level_of(ctx, type[0]);
      check(ctx, type[1], type[0]);
      check(ctx, type[2], type[0]);
      return a;
    }
    case Kind::Trunc:
      return level_of(ctx, type[0]);
    default: {
      Term u = whnf(infer(ctx, type));
      if (u.kind() != Kind::Universe)
        fail(Rule::NotAType, ctx, "expected a type", std::nullopt, type);
      return u.level();
    }
  }
}

void Checker::require_type(const Context& ctx, const Term& type, Rule r) {
  try {
    level_of(ctx, type);
  } catch (TypeError& e) {
    if (e.diagnostic().rule == Rule::NotAType) e.diagnostic().rule = r;
    throw;
  }
}

Level Checker::infer_universe(const Context& ctx, const Term& type) {
  return level_of(ctx, type).value_or(Level(0));
}

void Checker::check_context(const Context& ctx) {
  Context prefix;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    const Term& entry = ctx.entries()[i];
    if (!well_scoped(entry, static_cast<std::uint32_t>(i)))
      fail(Rule::UnboundVariable, prefix,
           "context entry " + std::to_string(i) + " is not well scoped",
           std::nullopt, entry);
    try {
      level_of(prefix, entry);
    } catch (TypeError& e) {
      e.diagnostic().message =
          "context entry " + std::to_string(i) + ": " + e.diagnostic().message;
      throw;
    }
    prefix = prefix.extend(entry, ctx.names()[i]);
  }
}

Term Checker::infer(const Context& ctx, const Term& t) {
  switch (t.kind()) {
    case Kind::Var: {
      auto ty = ctx.lookup(t.index());
      if (!ty) fail(Rule::UnboundVariable, ctx, "variable index out of range",
                    std::nullopt, t);
      return *ty;
    }
    case Kind::Const: {
      const Declaration* d = sig_.lookup(t.name());
      if (!d) fail(Rule::UnboundConstant, ctx, "unknown constant " + t.name());
      return d->type;
    }
    case Kind::Universe:
    case Kind::Pi:
    case Kind::Sigma:
    case Kind::Nat:
    case Kind::Unit:
    case Kind::Empty:
    case Kind::Coprod:
    case Kind::Id:
    case Kind::W:
    case Kind::Trunc:
      return Term::universe(infer_universe(ctx, t));
    case Kind::Zero:
      return Term::nat();
    case Kind::Succ:
      check(ctx, t[0], Term::nat(), Rule::SuccArgument);
      return Term::nat();
    case Kind::Star:
      return Term::unit();
    case Kind::Lambda: {
      if (!t[0])
        fail(Rule::CannotSynthesize, ctx,
             "cannot infer the type of an unannotated lambda", std::nullopt,
             t);
      require_type(ctx, t[0], Rule::NotAType);
      Context inner = ctx.extend(t[0], hint_or(t.hints(), 0, "x"));
      Term body = infer(inner, t[1]);
      return Term::pi(t[0], body, hint_or(t.hints(), 0, "x"));
    }
    case Kind::App:
      return infer_app(ctx, t);
    case Kind::Pair:
    case Kind::Inl:
    case Kind::Inr:
    case Kind::Refl:
    case Kind::Tree:
    case Kind::TruncIn:
      fail(Rule::CannotSynthesize, ctx,
           std::string("cannot infer the type of ") + kind_name(t.kind()) +
               "; it needs a type annotation",
           std::nullopt, t);
    default:
      return infer_eliminator(ctx, t);
  }
}

Term Checker::infer_app(const Context& ctx, const Term& t) {
  const Term& fn = t[0];
  const Term& arg = t[1];
  if (fn.kind() == Kind::Lambda && !fn[0]) {
    // Redex with an unannotated lambda, as produced by W computation.
    Term a = infer(ctx, arg);
    Term b = infer(ctx.extend(a, hint_or(fn.hints(), 0, "x")), fn[1]);
    return instantiate(b, arg);
  }
  Term f = whnf(infer(ctx, fn));
  if (f.kind() != Kind::Pi)
    fail(Rule::PiElim, ctx, "applying a term that is not a function",
         std::nullopt, f);
  check(ctx, arg, f[0], Rule::PiElimArgument);
  return instantiate(f[1], arg);
}

Term Checker::infer_eliminator(const Context& ctx, const Term& t) {
  switch (t.kind()) {
    case Kind::IndSigma: {
      const Term &motive = t[0], &step = t[1], &scrut = t[2];
      Term s = whnf(infer(ctx, scrut));
      if (s.kind() != Kind::Sigma)
        fail(Rule::IndSigmaScrutinee, ctx, "scrutinee is not a pair",
             std::nullopt, s);
      require_type(ctx.extend(s, t.hints()[0]), motive, Rule::IndSigmaMotive);
      Term step_type = Term::pi(
          s[0],
          Term::pi(s[1], motive_at(motive, Term::pair(Term::var(1), Term::var(0)), 2),
                   hint_or(s.hints(), 0, "y")),
          "x");
      check(ctx, step, step_type, Rule::IndSigmaStep);
      return instantiate(motive, scrut);
    }
    case Kind::IndNat: {
      const Term &motive = t[0], &base = t[1], &step = t[2], &scrut = t[3];
      check(ctx, scrut, Term::nat(), Rule::IndNatScrutinee);
      require_type(ctx.extend(Term::nat(), t.hints()[0]), motive,
                   Rule::IndNatMotive);
      check(ctx, base, instantiate(motive, Term::zero()), Rule::IndNatBase);
      Term step_type = Term::pi(
          Term::nat(),
          Term::pi(motive, motive_at(motive, Term::succ(Term::var(1)), 2), "ih"),
          t.hints()[0]);
      check(ctx, step, step_type, Rule::IndNatStep);
      return instantiate(motive, scrut);
    }
    case Kind::IndUnit: {
      const Term &motive = t[0], &point = t[1], &scrut = t[2];
      check(ctx, scrut, Term::unit(), Rule::IndUnitScrutinee);
      require_type(ctx.extend(Term::unit(), t.hints()[0]), motive,
                   Rule::IndUnitMotive);
      check(ctx, point, instantiate(motive, Term::star()), Rule::IndUnitPoint);
      return instantiate(motive, scrut);
    }
    case Kind::IndEmpty: {
      const Term &motive = t[0], &scrut = t[1];
      check(ctx, scrut, Term::empty(), Rule::IndEmptyScrutinee);
      require_type(ctx.extend(Term::empty(), t.hints()[0]), motive,
                   Rule::IndEmptyMotive);
      return instantiate(motive, scrut);
    }
    case Kind::IndCoprod: {
      const Term &motive = t[0], &left = t[1], &right = t[2], &scrut = t[3];
      Term s = whnf(infer(ctx, scrut));
      if (s.kind() != Kind::Coprod)
        fail(Rule::IndCoprodScrutinee, ctx, "scrutinee is not in a coproduct",
             std::nullopt, s);
      require_type(ctx.extend(s, t.hints()[0]), motive, Rule::IndCoprodMotive);
      check(ctx, left,
            Term::pi(s[0], motive_at(motive, Term::inl(Term::var(0)), 1), "x"),
            Rule::IndCoprodLeft);
      check(ctx, right,
            Term::pi(s[1], motive_at(motive, Term::inr(Term::var(0)), 1), "y"),
            Rule::IndCoprodRight);
      return instantiate(motive, scrut);
    }
    case Kind::IndEq: {
      const Term &base = t[0], &motive = t[1], &center = t[2],
                 &endpoint = t[3], &path = t[4];
      Term a_type = infer(ctx, base);
      Context inner = ctx.extend(a_type, t.hints()[0]);
      inner = inner.extend(
          Term::id(shift(a_type, 0, 1), shift(base, 0, 1), Term::var(0)),
          t.hints()[1]);
      require_type(inner, motive, Rule::IndEqMotive);
      check(ctx, center, instantiate2(motive, base, Term::refl()),
            Rule::IndEqCenter);
      check(ctx, endpoint, a_type, Rule::IndEqEndpoint);
      check(ctx, path, Term::id(a_type, base, endpoint), Rule::IndEqPath);
      return instantiate2(motive, endpoint, path);
    }
    case Kind::IndW: {
      const Term &motive = t[0], &step = t[1], &scrut = t[2];
      Term s = whnf(infer(ctx, scrut));
      if (s.kind() != Kind::W)
        fail(Rule::IndWScrutinee, ctx, "scrutinee is not a tree", std::nullopt,
             s);
      require_type(ctx.extend(s, t.hints()[0]), motive, Rule::IndWMotive);
      const Term& arities = s[1];  // over ctx, x
      // (x : A) -> (a : B x -> W) -> ((y : B x) -> P (a y)) -> P (tree x a)
      Term components = Term::pi(arities, shift(s, 0, 2), "y");
      Term hyp = Term::pi(shift(arities, 0, 1),
                          motive_at(motive, Term::app(Term::var(1), Term::var(0)), 3),
                          "y");
      Term result = motive_at(motive, Term::tree(Term::var(2), Term::var(1)), 3);
      Term step_type = Term::pi(
          s[0], Term::pi(components, Term::pi(hyp, result, "ih"), "a"), "x");
      check(ctx, step, step_type, Rule::IndWStep);
      return instantiate(motive, scrut);
    }
    case Kind::IndTrunc: {
      const Term &motive = t[0], &point = t[1], &coherence = t[2],
                 &scrut = t[3];
      Term s = whnf(infer(ctx, scrut));
      if (s.kind() != Kind::Trunc)
        fail(Rule::IndTruncScrutinee, ctx, "scrutinee is not a truncation",
             std::nullopt, s);
      require_type(ctx.extend(s, t.hints()[0]), motive, Rule::IndTruncMotive);
      check(ctx, point,
            Term::pi(s[0], motive_at(motive, Term::trunc_in(Term::var(0)), 1),
                     "a"),
            Rule::IndTruncPoint);
      // The motive must be a family of propositions:
      // (t : ||A||) -> (u v : Q t) -> u = v.
      Term coherence_type = Term::pi(
          s,
          Term::pi(motive,
                   Term::pi(shift(motive, 0, 1),
                            Term::id(shift(motive, 0, 2), Term::var(1),
                                     Term::var(0)),
                            "v"),
                   "u"),
          "t");
      check(ctx, coherence, coherence_type, Rule::IndTruncCoherence);
      return instantiate(motive, scrut);
    }
    default:
      fail(Rule::CannotSynthesize, ctx,
           std::string("no synthesis rule for ") + kind_name(t.kind()),
           std::nullopt, t);
  }
}

void Checker::check(const Context& ctx, const Term& t, const Term& type,
                    Rule on_mismatch) {
  switch (t.kind()) {
    case Kind::Lambda: {
      Term p = whnf(type);
      if (p.kind() != Kind::Pi)
        fail(Rule::PiIntro, ctx, "lambda checked against a non-function type",
             type, t);
      if (t[0]) {
        require_type(ctx, t[0], Rule::NotAType);
        if (!conv(t[0], p[0]))
          fail(Rule::PiIntroDomain, ctx,
               "lambda annotation disagrees with the function domain", p[0],
               t[0]);
      }
      check(ctx.extend(p[0], hint_or(t.hints(), 0, "x")), t[1], p[1], on_mismatch);
      return;
    }
    case Kind::Pair: {
      Term s = whnf(type);
      if (s.kind() != Kind::Sigma)
        fail(Rule::SigmaIntro, ctx, "pair checked against a non-Sigma type",
             type, t);
      check(ctx, t[0], s[0], Rule::PairFirst);
      check(ctx, t[1], instantiate(s[1], t[0]), Rule::PairSecond);
      return;
    }
    case Kind::Inl:
    case Kind::Inr: {
      Term c = whnf(type);
      if (c.kind() != Kind::Coprod)
        fail(Rule::CoprodIntro, ctx,
             "injection checked against a non-coproduct type", type, t);
      check(ctx, t[0], c[t.kind() == Kind::Inl ? 0 : 1], on_mismatch);
      return;
    }
    case Kind::Refl: {
      Term i = whnf(type);
      if (i.kind() != Kind::Id)
        fail(Rule::IdIntro, ctx, "refl checked against a non-identity type",
             type, t);
      if (!conv(i[1], i[2]))
        fail(Rule::ReflEndpoints, ctx,
             "the endpoints of the identity type are not judgmentally equal",
             i[1], i[2]);
      return;
    }
    case Kind::Tree: {
      Term w = whnf(type);
      if (w.kind() != Kind::W)
        fail(Rule::WIntro, ctx, "tree checked against a non-W type", type, t);
      check(ctx, t[0], w[0], Rule::TreeShape);
      Term components =
          Term::pi(instantiate(w[1], t[0]), shift(w, 0, 1), "y");
      check(ctx, t[1], components, Rule::TreeComponents);
      return;
    }
    case Kind::TruncIn: {
      Term tr = whnf(type);
      if (tr.kind() != Kind::Trunc)
        fail(Rule::TruncIntro, ctx, "eta checked against a non-truncation type",
             type, t);
      check(ctx, t[0], tr[0], on_mismatch);
      return;
    }
    default:
      break;
  }

  if (is_type_former(t.kind())) {
    Term u = whnf(type);
    if (u.kind() == Kind::Universe) {
      std::optional<Level> lv = level_of(ctx, t);
      if (lv && *lv != u.level())
        fail(Rule::UniverseMismatch, ctx,
             "type lives in Type " + std::to_string(lv->value) +
                 ", not Type " + std::to_string(u.level().value),
             type, Term::universe(*lv));
      return;
    }
  }

  Term inferred = infer(ctx, t);
  if (!conv(inferred, type)) {
    Term a = whnf(inferred);
    Term b = whnf(type);
    Rule r = a.kind() == Kind::Universe && b.kind() == Kind::Universe
                 ? Rule::UniverseMismatch
                 : on_mismatch;
    fail(r, ctx, "type mismatch", type, inferred);
  }
}

Term infer(const Signature& sig, const Context& ctx, const Term& t,
           ReductionBudget& budget) {
  return Checker(sig, budget).infer(ctx, t);
}

void check(const Signature& sig, const Context& ctx, const Term& t,
           const Term& type, ReductionBudget& budget) {
  Checker(sig, budget).check(ctx, t, type);
}

Level infer_universe(const Signature& sig, const Context& ctx, const Term& type,
                     ReductionBudget& budget) {
  return Checker(sig, budget).infer_universe(ctx, type);
}

void check_context(const Signature& sig, const Context& ctx,
                   ReductionBudget& budget) {
  Checker(sig, budget).check_context(ctx);
}

Signature check_declaration(const Signature& sig, Declaration d,
                            ReductionBudget& budget) {
  if (sig.contains(d.name)) {
    Diagnostic diag;
    diag.rule = Rule::DuplicateName;
    diag.message = "'" + d.name + "' is already declared";
    throw TypeError(std::move(diag));
  }
  Checker checker(sig, budget);
  checker.infer_universe(Context(), d.type);
  if (d.kind == DeclKind::Definition) checker.check(Context(), d.body, d.type);
  return sig.extend(std::move(d));
}

}  // namespace hott
