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

#include "hott/driver.hpp"

#include <chrono>
#include <sstream>

#include "hott/pretty.hpp"
#include "hott/typecheck.hpp"

namespace hott {

namespace {

Diagnostic budget_diagnostic(const BudgetExhausted& e) {
  Diagnostic d;
  d.rule = Rule::BudgetExhausted;
  d.message = e.what();
  return d;
}

}  // namespace

std::string render_value(const Term& nf) { return pretty(nf); }

Session::Session(SessionOptions options) : options_(options) {}

Outcome Session::run_directive(const Directive& d) {
  Outcome out;
  if (d.resolve_error) {
    out.ok = false;
    out.diagnostic = d.resolve_error;
    return out;
  }
  ReductionBudget budget = fresh_budget();
  try {
    switch (d.tag) {
      case Directive::Tag::Declare: {
        auto start = std::chrono::steady_clock::now();
        sig_ = check_declaration(sig_, d.decl, budget);
        if (options_.trace && trace_) {
          auto us = std::chrono::duration_cast<std::chrono::microseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
          std::ostringstream os;
          os << (d.decl.kind == DeclKind::Postulate ? "postulate " : "def ")
             << d.decl.name << " (" << budget.steps_used << " steps, " << us
             << " us)";
          trace_(os.str());
        }
        break;
      }
      case Directive::Tag::Check: {
        Checker c(sig_, budget);
        c.infer_universe(Context(), d.type);
        c.check(Context(), d.expr, d.type);
        break;
      }
      case Directive::Tag::Eval: {
        Checker c(sig_, budget);
        c.infer(Context(), d.expr);
        Term nf = normalize(sig_, d.expr, budget);
        out.output = render_value(nf);
        if (options_.print_normal_forms && output_) output_(*out.output);
        break;
      }
      case Directive::Tag::AssertEq:
      case Directive::Tag::AssertNeq: {
        Checker c(sig_, budget);
        c.infer_universe(Context(), d.type);
        c.check(Context(), d.expr, d.type);
        c.check(Context(), d.rhs, d.type);
        bool equal = c.conv(d.expr, d.rhs);
        bool want = d.tag == Directive::Tag::AssertEq;
        if (equal != want) {
          Diagnostic diag;
          diag.rule = want ? Rule::AssertEq : Rule::AssertNeq;
          diag.message = want ? "sides are not judgmentally equal"
                              : "sides are judgmentally equal";
          diag.expected = d.expr;
          diag.found = d.rhs;
          out.ok = false;
          out.diagnostic = std::move(diag);
        }
        break;
      }
      case Directive::Tag::Fail: {
        Outcome inner = run_directive(*d.inner);
        if (inner.ok) {
          Diagnostic diag;
          diag.rule = Rule::FailSucceeded;
          diag.message = "item was expected to be rejected but checked";
          out.ok = false;
          out.diagnostic = std::move(diag);
        } else if (d.expected_rule &&
                   *d.expected_rule != rule_name(inner.diagnostic->rule)) {
          Diagnostic diag;
          diag.rule = Rule::FailWrongRule;
          diag.message = "item was rejected by rule '" +
                         std::string(rule_name(inner.diagnostic->rule)) +
                         "', expected '" + *d.expected_rule + "'";
          out.ok = false;
          out.diagnostic = std::move(diag);
        }
        break;
      }
    }
  } catch (const TypeError& e) {
    out.ok = false;
    out.diagnostic = e.diagnostic();
  } catch (const BudgetExhausted& e) {
    out.ok = false;
    out.diagnostic = budget_diagnostic(e);
  }
  account(budget);
  if (out.diagnostic && !out.diagnostic->span) out.diagnostic->span = d.span;
  return out;
}

Outcome Session::execute(const Directive& d) { return run_directive(d); }

std::optional<Diagnostic> Session::run(const SurfaceModule& m) {
  std::vector<Directive> ds = resolve(m, sig_);
  for (const Directive& d : ds) {
    Outcome o = run_directive(d);
    if (!o.ok) return o.diagnostic;
  }
  return std::nullopt;
}

std::optional<Diagnostic> Session::run_source(std::string_view text,
                                              const std::string& file) {
  return run(parse_source(text, file));
}

Term Session::resolve_text(std::string_view expr_text) const {
  ExprPtr e = parse_expression(expr_text);
  return resolve_expr(*e, [this](const std::string& n) { return sig_.contains(n); });
}

EvalResult Session::evaluate(std::string_view expr_text) {
  Term t = resolve_text(expr_text);
  ReductionBudget budget = fresh_budget();
  try {
    Checker c(sig_, budget);
    EvalResult r;
    r.type = c.infer(Context(), t);
    r.normal_form = normalize(sig_, t, budget);
    r.text = render_value(r.normal_form);
    account(budget);
    return r;
  } catch (...) {
    account(budget);
    throw;
  }
}

}  // namespace hott
