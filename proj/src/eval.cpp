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

#include "hott/eval.hpp"

#include <string>
#include <vector>

namespace hott {

BudgetExhausted::BudgetExhausted(std::uint64_t steps)
    : std::runtime_error("reduction budget exhausted after " +
                         std::to_string(steps) + " steps"),
      steps_(steps) {}

namespace {

Term with_child(const Term& t, std::size_t i, Term c) {
  if (c.same_node(t[i])) return t;
  std::vector<Term> children(t.children().begin(), t.children().end());
  children[i] = std::move(c);
  return Term::make(t.kind(), 0, t.name(), std::move(children),
                    std::vector<std::string>(t.hints().begin(), t.hints().end()));
}

class Reducer {
 public:
  Reducer(const Signature& sig, ReductionBudget& budget)
      : sig_(sig), budget_(budget) {}

  Term whnf(Term t, bool delta) {
    for (;;) {
      switch (t.kind()) {
        case Kind::Const: {
          if (!delta) return t;
          const Declaration* d = sig_.lookup(t.name());
          if (!d || !d->body) return t;
          budget_.tick();
          t = d->body;
          continue;
        }
        case Kind::App: {
          std::vector<Term> args;
          Term head = t;
          while (head.kind() == Kind::App) {
            args.push_back(head[1]);
            head = head[0];
          }
          Term h = whnf(head, delta);
          if (h.kind() == Kind::Lambda) {
            budget_.tick();
            Term r = instantiate(h[1], args.back());
            args.pop_back();
            while (!args.empty()) {
              r = Term::app(std::move(r), args.back());
              args.pop_back();
            }
            t = std::move(r);
            continue;
          }
          if (h.same_node(head)) return t;
          while (!args.empty()) {
            h = Term::app(std::move(h), args.back());
            args.pop_back();
          }
          return h;
        }
        case Kind::IndSigma: {
          Term s = whnf(t[2], true);
          if (s.kind() == Kind::Pair) {
            budget_.tick();
            t = Term::app(t[1], {s[0], s[1]});
            continue;
          }
          return with_child(t, 2, std::move(s));
        }
        case Kind::IndNat: {
          Term s = whnf(t[3], true);
          if (s.kind() == Kind::Zero) {
            budget_.tick();
            t = t[1];
            continue;
          }
          if (s.kind() == Kind::Succ) {
            budget_.tick();
            Term rec = Term::make(Kind::IndNat, 0, {}, {t[0], t[1], t[2], s[0]},
                                  {t.hints()[0]});
            t = Term::app(t[2], {s[0], std::move(rec)});
            continue;
          }
          return with_child(t, 3, std::move(s));
        }
        case Kind::IndUnit: {
          Term s = whnf(t[2], true);
          if (s.kind() == Kind::Star) {
            budget_.tick();
            t = t[1];
            continue;
          }
          return with_child(t, 2, std::move(s));
        }
        case Kind::IndEmpty: {
          Term s = whnf(t[1], true);
          return with_child(t, 1, std::move(s));
        }
        case Kind::IndCoprod: {
          Term s = whnf(t[3], true);
          if (s.kind() == Kind::Inl) {
            budget_.tick();
            t = Term::app(t[1], s[0]);
            continue;
          }
          if (s.kind() == Kind::Inr) {
            budget_.tick();
            t = Term::app(t[2], s[0]);
            continue;
          }
          return with_child(t, 3, std::move(s));
        }
        case Kind::IndEq: {
          Term s = whnf(t[4], true);
          if (s.kind() == Kind::Refl) {
            budget_.tick();
            t = t[2];
            continue;
          }
          return with_child(t, 4, std::move(s));
        }
        case Kind::IndW: {
          Term s = whnf(t[2], true);
          if (s.kind() == Kind::Tree) {
            budget_.tick();
            // h(x, a, \y. ind-w(h, a y)); the lambda is left unannotated.
            const Term& comps = s[1];
            Term rec = Term::make(
                Kind::IndW, 0, {},
                {shift(t[0], 1, 1), shift(t[1], 0, 1),
                 Term::app(shift(comps, 0, 1), Term::var(0))},
                {t.hints()[0]});
            t = Term::app(t[1], {s[0], comps, Term::lambda(Term(), rec, "y")});
            continue;
          }
          return with_child(t, 2, std::move(s));
        }
        case Kind::IndTrunc: {
          Term s = whnf(t[3], true);
          if (s.kind() == Kind::TruncIn) {
            budget_.tick();
            t = Term::app(t[1], s[0]);
            continue;
          }
          return with_child(t, 3, std::move(s));
        }
        default:
          return t;
      }
    }
  }

  Term normalize(const Term& t) {
    Term h = whnf(t, true);
    if (h.arity() == 0) return h;
    std::vector<Term> children;
    children.reserve(h.arity());
    bool changed = false;
    for (const Term& c : h.children()) {
      Term n = c ? normalize(c) : c;
      changed = changed || !n.same_node(c);
      children.push_back(std::move(n));
    }
    if (!changed) return h;
    return Term::make(h.kind(), 0, h.name(), std::move(children),
                      std::vector<std::string>(h.hints().begin(), h.hints().end()));
  }

  bool conv(const Term& a0, const Term& b0) {
    if (a0 == b0) return true;
    Term a = whnf(a0, false);
    Term b = whnf(b0, false);
    if (a == b) return true;
    for (;;) {
      const Declaration* da = head_definition(a);
      const Declaration* db = head_definition(b);
      if (!da && !db) break;
      if (da && db && da->name == db->name && spines_conv(a, b)) return true;
      std::size_t pa = da ? *sig_.position(da->name) : 0;
      std::size_t pb = db ? *sig_.position(db->name) : 0;
      bool unfold_a = da && (!db || pa >= pb);
      bool unfold_b = db && (!da || pb >= pa);
      if (unfold_a) a = whnf(unfold_head(a, *da), false);
      if (unfold_b) b = whnf(unfold_head(b, *db), false);
      if (a == b) return true;
    }
    return compare_heads(a, b);
  }

 private:
  static const Term& spine_head(const Term& t) {
    const Term* h = &t;
    while (h->kind() == Kind::App) h = &(*h)[0];
    return *h;
  }

  const Declaration* head_definition(const Term& t) const {
    const Term& h = spine_head(t);
    if (h.kind() != Kind::Const) return nullptr;
    const Declaration* d = sig_.lookup(h.name());
    return d && d->body ? d : nullptr;
  }

  Term unfold_head(const Term& t, const Declaration& d) {
    budget_.tick();
    if (t.kind() == Kind::Const) return d.body;
    return Term::app(unfold_head(t[0], d), t[1]);
  }

  bool spines_conv(const Term& a, const Term& b) {
    if (a.kind() == Kind::App && b.kind() == Kind::App)
      return spines_conv(a[0], b[0]) && conv(a[1], b[1]);
    return a.kind() == Kind::Const && b.kind() == Kind::Const &&
           a.name() == b.name();
  }

  bool compare_heads(const Term& a, const Term& b) {
    bool la = a.kind() == Kind::Lambda;
    bool lb = b.kind() == Kind::Lambda;
    if (la && lb) return conv(a[1], b[1]);
    if (la) return conv(a[1], Term::app(shift(b, 0, 1), Term::var(0)));
    if (lb) return conv(Term::app(shift(a, 0, 1), Term::var(0)), b[1]);
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
      case Kind::Var:
        return a.index() == b.index();
      case Kind::Const:
        return a.name() == b.name();
      case Kind::Universe:
        return a.level() == b.level();
      default:
        break;
    }
    for (std::size_t i = 0; i < a.arity(); ++i) {
      if (!a[i] || !b[i]) {
        if (a[i] || b[i]) return false;
        continue;
      }
      if (!conv(a[i], b[i])) return false;
    }
    return true;
  }

  const Signature& sig_;
  ReductionBudget& budget_;
};

}  // namespace

Term whnf(const Signature& sig, const Term& t, ReductionBudget& budget) {
  return Reducer(sig, budget).whnf(t, true);
}

Term whnf_no_delta(const Signature& sig, const Term& t,
                   ReductionBudget& budget) {
  return Reducer(sig, budget).whnf(t, false);
}

Term normalize(const Signature& sig, const Term& t, ReductionBudget& budget) {
  return Reducer(sig, budget).normalize(t);
}

bool conv(const Signature& sig, const Term& a, const Term& b,
          ReductionBudget& budget) {
  return Reducer(sig, budget).conv(a, b);
}

}  // namespace hott
