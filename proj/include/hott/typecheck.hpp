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

// Bidirectional type checking.
//
// Synthesizing terms: variables, constants, every type former, annotated
// lambdas, applications, Zero, Succ, Star and all eliminators. Checkable
// only: Pair, Inl, Inr, Refl, Tree, TruncIn and unannotated lambdas.
//
// Universes are Russell style and non-cumulative. A binary former lives at
// the max of its components' levels. Nat, Unit and Empty live in every
// universe: they synthesize Type 0 but check against any Type n, and a
// former built only from them inherits that freedom in checking mode.
//
// All failures throw TypeError carrying a Diagnostic.

#ifndef HOTT_TYPECHECK_HPP_
#define HOTT_TYPECHECK_HPP_

#include "hott/diagnostic.hpp"
#include "hott/eval.hpp"
#include "hott/signature.hpp"
#include "hott/term.hpp"

namespace hott {

class Checker {
 public:
  Checker(const Signature& sig, ReductionBudget& budget)
      : sig_(sig), budget_(budget) {}

  Term infer(const Context& ctx, const Term& t);
  void check(const Context& ctx, const Term& t, const Term& type,
             Rule on_mismatch = Rule::TypeMismatch);
  Level infer_universe(const Context& ctx, const Term& type);
  void check_context(const Context& ctx);

  bool conv(const Term& a, const Term& b) {
    return hott::conv(sig_, a, b, budget_);
  }
  Term whnf(const Term& t) { return hott::whnf(sig_, t, budget_); }

 private:
  // Level of a type; nullopt when the type is built from Nat/Unit/Empty
  // alone and therefore fits every universe.
  std::optional<Level> level_of(const Context& ctx, const Term& type);
  void require_type(const Context& ctx, const Term& type, Rule r);
  Term infer_app(const Context& ctx, const Term& t);
  Term infer_eliminator(const Context& ctx, const Term& t);
  bool is_type_former(Kind k) const;

  [[noreturn]] void fail(Rule r, const Context& ctx, std::string message,
                         std::optional<Term> expected = std::nullopt,
                         std::optional<Term> found = std::nullopt) const;

  const Signature& sig_;
  ReductionBudget& budget_;
};

Term infer(const Signature& sig, const Context& ctx, const Term& t,
           ReductionBudget& budget);
void check(const Signature& sig, const Context& ctx, const Term& t,
           const Term& type, ReductionBudget& budget);
Level infer_universe(const Signature& sig, const Context& ctx, const Term& type,
                     ReductionBudget& budget);
void check_context(const Signature& sig, const Context& ctx,
                   ReductionBudget& budget);

// Checks d against sig and returns the extended signature.
Signature check_declaration(const Signature& sig, Declaration d,
                            ReductionBudget& budget);

}  // namespace hott

#endif  // HOTT_TYPECHECK_HPP_
