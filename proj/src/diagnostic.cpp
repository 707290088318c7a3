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

#include "hott/diagnostic.hpp"

#include <utility>

namespace hott {

namespace {

constexpr std::pair<Rule, std::string_view> kRuleNames[] = {
    {Rule::UnboundVariable, "unbound-variable"},
    {Rule::UnboundConstant, "unbound-constant"},
    {Rule::CannotSynthesize, "cannot-synthesize"},
    {Rule::NotAType, "not-a-type"},
    {Rule::UniverseMismatch, "universe-mismatch"},
    {Rule::TypeMismatch, "type-mismatch"},
    {Rule::PiElim, "Pi-elim"},
    {Rule::PiElimArgument, "Pi-elim-argument"},
    {Rule::PiIntro, "Pi-intro"},
    {Rule::PiIntroDomain, "Pi-intro-domain"},
    {Rule::SigmaIntro, "Sigma-intro"},
    {Rule::PairFirst, "Pair-first"},
    {Rule::PairSecond, "Pair-second"},
    {Rule::IndSigmaMotive, "IndSigma-motive"},
    {Rule::IndSigmaStep, "IndSigma-step"},
    {Rule::IndSigmaScrutinee, "IndSigma-scrutinee"},
    {Rule::SuccArgument, "Succ-argument"},
    {Rule::IndNatMotive, "IndNat-motive"},
    {Rule::IndNatBase, "IndNat-base"},
    {Rule::IndNatStep, "IndNat-step"},
    {Rule::IndNatScrutinee, "IndNat-scrutinee"},
    {Rule::IndUnitMotive, "IndUnit-motive"},
    {Rule::IndUnitPoint, "IndUnit-point"},
    {Rule::IndUnitScrutinee, "IndUnit-scrutinee"},
    {Rule::IndEmptyMotive, "IndEmpty-motive"},
    {Rule::IndEmptyScrutinee, "IndEmpty-scrutinee"},
    {Rule::CoprodIntro, "Coprod-intro"},
    {Rule::IndCoprodMotive, "IndCoprod-motive"},
    {Rule::IndCoprodLeft, "IndCoprod-left"},
    {Rule::IndCoprodRight, "IndCoprod-right"},
    {Rule::IndCoprodScrutinee, "IndCoprod-scrutinee"},
    {Rule::IdIntro, "Id-intro"},
    {Rule::ReflEndpoints, "refl-endpoints-not-convertible"},
    {Rule::IndEqMotive, "IndEq-motive"},
    {Rule::IndEqCenter, "IndEq-center"},
    {Rule::IndEqEndpoint, "IndEq-endpoint"},
    {Rule::IndEqPath, "IndEq-path"},
    {Rule::WIntro, "W-intro"},
    {Rule::TreeShape, "Tree-shape"},
    {Rule::TreeComponents, "Tree-components"},
    {Rule::IndWMotive, "IndW-motive"},
    {Rule::IndWStep, "IndW-step"},
    {Rule::IndWScrutinee, "IndW-scrutinee"},
    {Rule::TruncIntro, "Trunc-intro"},
    {Rule::IndTruncMotive, "IndTrunc-motive"},
    {Rule::IndTruncPoint, "IndTrunc-point"},
    {Rule::IndTruncCoherence, "IndTrunc-coherence"},
    {Rule::IndTruncScrutinee, "IndTrunc-scrutinee"},
    {Rule::DuplicateName, "duplicate-name"},
    {Rule::UnboundIdentifier, "unbound-identifier"},
    {Rule::AssertEq, "assert-eq"},
    {Rule::AssertNeq, "assert-neq"},
    {Rule::FailSucceeded, "fail-unexpected-success"},
    {Rule::FailWrongRule, "fail-wrong-rule"},
    {Rule::BudgetExhausted, "budget-exhausted"},
};

}  // namespace

std::string_view rule_name(Rule r) {
  for (const auto& [rule, name] : kRuleNames)
    if (rule == r) return name;
  return "unknown-rule";
}

std::optional<Rule> rule_from_name(std::string_view name) {
  for (const auto& [rule, spelled] : kRuleNames)
    if (spelled == name) return rule;
  return std::nullopt;
}

TypeError::TypeError(Diagnostic d)
    : std::runtime_error(std::string(rule_name(d.rule)) + ": " + d.message),
      diag_(std::move(d)) {}

}  // namespace hott
