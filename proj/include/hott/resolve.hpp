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

// Name resolution: parse trees to core terms and kernel directives.

#ifndef HOTT_RESOLVE_HPP_
#define HOTT_RESOLVE_HPP_

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hott/diagnostic.hpp"
#include "hott/signature.hpp"
#include "hott/surface.hpp"
#include "hott/term.hpp"

namespace hott {

struct Directive {
  enum class Tag { Declare, Check, Eval, AssertEq, AssertNeq, Fail };

  Tag tag = Tag::Declare;
  Declaration decl;  // Declare
  Term expr;         // Check, Eval, AssertEq, AssertNeq
  Term rhs;          // AssertEq, AssertNeq
  Term type;         // Check, AssertEq, AssertNeq
  std::shared_ptr<const Directive> inner;  // Fail
  std::optional<std::string> expected_rule;
  // Set when the item could not be resolved; reported when the directive
  // is reached so that `#fail` can observe it.
  std::optional<Diagnostic> resolve_error;
  Span span;
};

// Predicate telling whether a name denotes a global constant.
using NameLookup = std::function<bool(const std::string&)>;

// Identifiers resolve to the innermost binder of that name (Var), else to a
// constant. Throws TypeError(unbound-identifier) with the identifier's span.
Term resolve_expr(const Expr& e, const NameLookup& is_global,
                  std::vector<std::string> scope = {});

Directive resolve_item(const Item& item, const NameLookup& is_global);

// Resolves a whole module against sig; names declared by earlier items of
// the module count as globals for later ones.
std::vector<Directive> resolve(const SurfaceModule& m, const Signature& sig);

}  // namespace hott

#endif  // HOTT_RESOLVE_HPP_
