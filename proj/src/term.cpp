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

#include "hott/term.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace hott {

namespace {

struct KindInfo {
  const char* name;
  std::uint8_t arity;
  std::uint8_t binders[5];
};

// Indexed by Kind.
constexpr KindInfo kKindInfo[] = {
    {"Var", 0, {}},
    {"Const", 0, {}},
    {"Universe", 0, {}},
    {"Pi", 2, {0, 1}},
    {"Lambda", 2, {0, 1}},
    {"App", 2, {0, 0}},
    {"Sigma", 2, {0, 1}},
    {"Pair", 2, {0, 0}},
    {"IndSigma", 3, {1, 0, 0}},
    {"Nat", 0, {}},
    {"Zero", 0, {}},
    {"Succ", 1, {0}},
    {"IndNat", 4, {1, 0, 0, 0}},
    {"Unit", 0, {}},
    {"Star", 0, {}},
    {"IndUnit", 3, {1, 0, 0}},
    {"Empty", 0, {}},
    {"IndEmpty", 2, {1, 0}},
    {"Coprod", 2, {0, 0}},
    {"Inl", 1, {0}},
    {"Inr", 1, {0}},
    {"IndCoprod", 4, {1, 0, 0, 0}},
    {"Id", 3, {0, 0, 0}},
    {"Refl", 0, {}},
    {"IndEq", 5, {0, 2, 0, 0, 0}},
    {"W", 2, {0, 1}},
    {"Tree", 2, {0, 0}},
    {"IndW", 3, {1, 0, 0}},
    {"Trunc", 1, {0}},
    {"TruncIn", 1, {0}},
    {"IndTrunc", 4, {1, 0, 0, 0}},
};

const KindInfo& info(Kind k) { return kKindInfo[static_cast<std::size_t>(k)]; }

}  // namespace

const char* kind_name(Kind k) { return info(k).name; }

std::size_t arity_of(Kind k) { return info(k).arity; }

std::uint32_t binders_of(Kind k, std::size_t child) {
  return info(k).binders[child];
}

Term Term::make(Kind kind, std::uint32_t payload, std::string name,
                std::vector<Term> children, std::vector<std::string> hints) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->payload = payload;
  node->name = std::move(name);
  std::uint32_t bound = kind == Kind::Var ? payload + 1 : 0;
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (!children[i]) continue;
    std::uint32_t b = binders_of(kind, i);
    std::uint32_t fb = children[i].free_bound();
    bound = std::max(bound, fb > b ? fb - b : 0);
  }
  node->free_bound = bound;
  node->children = std::move(children);
  node->hints = std::move(hints);
  return Term(std::move(node));
}

Term Term::var(std::uint32_t index) {
  return make(Kind::Var, index, {}, {}, {});
}
Term Term::constant(std::string name) {
  return make(Kind::Const, 0, std::move(name), {}, {});
}
Term Term::universe(Level level) {
  return make(Kind::Universe, level.value, {}, {}, {});
}
Term Term::pi(Term domain, Term codomain, std::string hint) {
  return make(Kind::Pi, 0, {}, {std::move(domain), std::move(codomain)},
              {std::move(hint)});
}
Term Term::arrow(Term domain, Term codomain) {
  return pi(std::move(domain), shift(codomain, 0, 1), "_");
}
Term Term::lambda(Term domain, Term body, std::string hint) {
  return make(Kind::Lambda, 0, {}, {std::move(domain), std::move(body)},
              {std::move(hint)});
}
Term Term::app(Term fn, Term arg) {
  return make(Kind::App, 0, {}, {std::move(fn), std::move(arg)}, {});
}
Term Term::app(Term fn, std::initializer_list<Term> args) {
  for (const Term& a : args) fn = app(std::move(fn), a);
  return fn;
}
Term Term::sigma(Term first, Term second, std::string hint) {
  return make(Kind::Sigma, 0, {}, {std::move(first), std::move(second)},
              {std::move(hint)});
}
Term Term::pair(Term fst, Term snd) {
  return make(Kind::Pair, 0, {}, {std::move(fst), std::move(snd)}, {});
}
Term Term::ind_sigma(Term motive, Term step, Term scrutinee, std::string hint) {
  return make(Kind::IndSigma, 0, {},
              {std::move(motive), std::move(step), std::move(scrutinee)},
              {std::move(hint)});
}
Term Term::nat() { return make(Kind::Nat, 0, {}, {}, {}); }
Term Term::zero() { return make(Kind::Zero, 0, {}, {}, {}); }
Term Term::succ(Term pred) {
  return make(Kind::Succ, 0, {}, {std::move(pred)}, {});
}
Term Term::numeral(std::uint64_t n) {
  Term t = zero();
  for (std::uint64_t i = 0; i < n; ++i) t = succ(std::move(t));
  return t;
}
Term Term::ind_nat(Term motive, Term base, Term step, Term scrutinee,
                   std::string hint) {
  return make(Kind::IndNat, 0, {},
              {std::move(motive), std::move(base), std::move(step),
               std::move(scrutinee)},
              {std::move(hint)});
}
Term Term::unit() { return make(Kind::Unit, 0, {}, {}, {}); }
Term Term::star() { return make(Kind::Star, 0, {}, {}, {}); }
Term Term::ind_unit(Term motive, Term point, Term scrutinee, std::string hint) {
  return make(Kind::IndUnit, 0, {},
              {std::move(motive), std::move(point), std::move(scrutinee)},
              {std::move(hint)});
}
Term Term::empty() { return make(Kind::Empty, 0, {}, {}, {}); }
Term Term::ind_empty(Term motive, Term scrutinee, std::string hint) {
  return make(Kind::IndEmpty, 0, {}, {std::move(motive), std::move(scrutinee)},
              {std::move(hint)});
}
Term Term::coprod(Term left, Term right) {
  return make(Kind::Coprod, 0, {}, {std::move(left), std::move(right)}, {});
}
Term Term::inl(Term value) {
  return make(Kind::Inl, 0, {}, {std::move(value)}, {});
}
Term Term::inr(Term value) {
  return make(Kind::Inr, 0, {}, {std::move(value)}, {});
}
Term Term::ind_coprod(Term motive, Term on_left, Term on_right, Term scrutinee,
                      std::string hint) {
  return make(Kind::IndCoprod, 0, {},
              {std::move(motive), std::move(on_left), std::move(on_right),
               std::move(scrutinee)},
              {std::move(hint)});
}
Term Term::id(Term type, Term lhs, Term rhs) {
  return make(Kind::Id, 0, {}, {std::move(type), std::move(lhs), std::move(rhs)},
              {});
}
Term Term::refl() { return make(Kind::Refl, 0, {}, {}, {}); }
Term Term::ind_eq(Term base, Term motive, Term center, Term endpoint, Term path,
                  std::string hint_point, std::string hint_path) {
  return make(Kind::IndEq, 0, {},
              {std::move(base), std::move(motive), std::move(center),
               std::move(endpoint), std::move(path)},
              {std::move(hint_point), std::move(hint_path)});
}
Term Term::w(Term shapes, Term arities, std::string hint) {
  return make(Kind::W, 0, {}, {std::move(shapes), std::move(arities)},
              {std::move(hint)});
}
Term Term::tree(Term shape, Term components) {
  return make(Kind::Tree, 0, {}, {std::move(shape), std::move(components)}, {});
}
Term Term::ind_w(Term motive, Term step, Term scrutinee, std::string hint) {
  return make(Kind::IndW, 0, {},
              {std::move(motive), std::move(step), std::move(scrutinee)},
              {std::move(hint)});
}
Term Term::trunc(Term type) {
  return make(Kind::Trunc, 0, {}, {std::move(type)}, {});
}
Term Term::trunc_in(Term value) {
  return make(Kind::TruncIn, 0, {}, {std::move(value)}, {});
}
Term Term::ind_trunc(Term motive, Term point, Term coherence, Term scrutinee,
                     std::string hint) {
  return make(Kind::IndTrunc, 0, {},
              {std::move(motive), std::move(point), std::move(coherence),
               std::move(scrutinee)},
              {std::move(hint)});
}

bool Term::as_numeral(std::uint64_t& out) const {
  std::uint64_t n = 0;
  const Term* t = this;
  while (t->kind() == Kind::Succ) {
    ++n;
    t = &(*t)[0];
  }
  if (t->kind() != Kind::Zero) return false;
  out = n;
  return true;
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  if (a.kind() != b.kind() || a.node_->payload != b.node_->payload ||
      a.free_bound() != b.free_bound() || a.name() != b.name())
    return false;
  for (std::size_t i = 0; i < a.arity(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

namespace {

// Rebuild t with each child transformed; `f(child, extra_binders)` is called
// for non-null children. Returns t itself when nothing changed.
template <typename F>
Term map_children(const Term& t, F&& f) {
  std::vector<Term> out;
  bool changed = false;
  out.reserve(t.arity());
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (!t[i]) {
      out.push_back(t[i]);
      continue;
    }
    Term c = f(t[i], binders_of(t.kind(), i));
    changed = changed || !c.same_node(t[i]);
    out.push_back(std::move(c));
  }
  if (!changed) return t;
  return Term::make(t.kind(), t.kind() == Kind::Var ? t.index() : t.level().value,
                    t.name(),
                    std::move(out),
                    std::vector<std::string>(t.hints().begin(), t.hints().end()));
}

Term shift_rec(const Term& t, std::uint32_t cutoff, std::int64_t amount) {
  if (t.free_bound() <= cutoff) return t;
  if (t.kind() == Kind::Var) {
    std::int64_t i = static_cast<std::int64_t>(t.index()) + amount;
    if (i < 0) throw std::logic_error("shift: de Bruijn index underflow");
    return Term::var(static_cast<std::uint32_t>(i));
  }
  return map_children(t, [&](const Term& c, std::uint32_t b) {
    return shift_rec(c, cutoff + b, amount);
  });
}

Term subst_rec(const Term& t, std::uint32_t depth, std::uint32_t j,
               const Term& s) {
  if (t.free_bound() <= depth + j) return t;
  if (t.kind() == Kind::Var) {
    std::uint32_t i = t.index();
    if (i < depth + j) return t;
    if (i == depth + j) return shift(s, 0, depth + j);
    return Term::var(i - 1);
  }
  return map_children(t, [&](const Term& c, std::uint32_t b) {
    return subst_rec(c, depth + b, j, s);
  });
}

}  // namespace

Term shift(const Term& t, std::uint32_t cutoff, std::int64_t amount) {
  if (amount == 0) return t;
  return shift_rec(t, cutoff, amount);
}

Term subst(const Term& t, std::uint32_t j, const Term& s) {
  return subst_rec(t, 0, j, s);
}

Term instantiate2(const Term& body, const Term& first, const Term& second) {
  return subst(subst(body, 1, first), 0, second);
}

bool well_scoped(const Term& t, std::uint32_t depth) {
  return t.free_bound() <= depth;
}

std::size_t term_size(const Term& t) {
  if (!t) return 0;
  std::size_t n = 1;
  for (const Term& c : t.children()) n += term_size(c);
  return n;
}

}  // namespace hott
