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

#ifndef HOTT_DIAGNOSTIC_HPP_
#define HOTT_DIAGNOSTIC_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hott/signature.hpp"
#include "hott/term.hpp"

namespace hott {

struct Span {
  std::string file;
  std::uint32_t line = 1;
  std::uint32_t column = 1;
};

// Closed vocabulary of rule names carried by diagnostics. Each checker
// failure names exactly one of these; rule_name() gives the spelling used in
// messages and in `#fail <rule>` expectations.
enum class Rule {
  // Structural.
  UnboundVariable,   // "unbound-variable": de Bruijn index out of range
  UnboundConstant,   // "unbound-constant"
  CannotSynthesize,  // "cannot-synthesize": checkable-only term in infer mode
  NotAType,          // "not-a-type"
  UniverseMismatch,  // "universe-mismatch"
  TypeMismatch,      // "type-mismatch": element conversion failed
  // Pi.
  PiElim,            // "Pi-elim": applying a non-function
  PiElimArgument,    // "Pi-elim-argument"
  PiIntro,           // "Pi-intro": lambda against a non-Pi type
  PiIntroDomain,     // "Pi-intro-domain": annotation disagrees with the Pi
  // Sigma.
  SigmaIntro,        // "Sigma-intro"
  PairFirst,         // "Pair-first"
  PairSecond,        // "Pair-second"
  IndSigmaMotive,
  IndSigmaStep,
  IndSigmaScrutinee,
  // Nat.
  SuccArgument,      // "Succ-argument"
  IndNatMotive,
  IndNatBase,
  IndNatStep,
  IndNatScrutinee,
  // Unit and Empty.
  IndUnitMotive,
  IndUnitPoint,
  IndUnitScrutinee,
  IndEmptyMotive,
  IndEmptyScrutinee,
  // Coproducts.
  CoprodIntro,       // "Coprod-intro"
  IndCoprodMotive,
  IndCoprodLeft,
  IndCoprodRight,
  IndCoprodScrutinee,
  // Identity types.
  IdIntro,           // "Id-intro": refl against a non-identity type
  ReflEndpoints,     // "refl-endpoints-not-convertible"
  IndEqMotive,
  IndEqCenter,
  IndEqEndpoint,
  IndEqPath,
  // W-types.
  WIntro,            // "W-intro": tree against a non-W type
  TreeShape,
  TreeComponents,
  IndWMotive,
  IndWStep,
  IndWScrutinee,
  // Truncation.
  TruncIntro,
  IndTruncMotive,
  IndTruncPoint,
  IndTruncCoherence,
  IndTruncScrutinee,
  // Declarations and directives.
  DuplicateName,       // "duplicate-name"
  UnboundIdentifier,   // "unbound-identifier": surface name resolution
  AssertEq,            // "assert-eq": sides not convertible
  AssertNeq,           // "assert-neq": sides convertible
  FailSucceeded,       // "fail-unexpected-success"
  FailWrongRule,       // "fail-wrong-rule"
  BudgetExhausted,     // "budget-exhausted"
};

std::string_view rule_name(Rule r);
std::optional<Rule> rule_from_name(std::string_view name);

struct Diagnostic {
  Rule rule = Rule::TypeMismatch;
  std::string message;
  std::optional<Term> expected;
  std::optional<Term> found;
  Context context;
  std::optional<Span> span;
};

class TypeError : public std::runtime_error {
 public:
  explicit TypeError(Diagnostic d);
  const Diagnostic& diagnostic() const { return diag_; }
  Diagnostic& diagnostic() { return diag_; }

 private:
  Diagnostic diag_;
};

}  // namespace hott

#endif  // HOTT_DIAGNOSTIC_HPP_
