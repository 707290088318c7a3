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

// Runs parsed proof files against a growing Signature.

#ifndef HOTT_DRIVER_HPP_
#define HOTT_DRIVER_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hott/diagnostic.hpp"
#include "hott/eval.hpp"
#include "hott/resolve.hpp"
#include "hott/signature.hpp"
#include "hott/surface.hpp"

namespace hott {

struct SessionOptions {
  std::uint64_t max_steps = kDefaultMaxSteps;
  bool print_normal_forms = true;  // #eval results go to the output sink
  bool trace = false;              // one line per declaration to the trace sink
};

// Outcome of executing one directive.
struct Outcome {
  bool ok = true;
  std::optional<Diagnostic> diagnostic;  // set when !ok
  std::optional<std::string> output;     // #eval result
};

// Result of evaluating an expression.
struct EvalResult {
  Term normal_form;
  Term type;
  std::string text;  // printed normal form; decimal for numerals
};

class Session {
 public:
  explicit Session(SessionOptions options = {});

  using Sink = std::function<void(const std::string&)>;
  void set_output(Sink sink) { output_ = std::move(sink); }
  void set_trace(Sink sink) { trace_ = std::move(sink); }

  const Signature& signature() const { return sig_; }

  // Executes every directive of m in order; stops at the first failure and
  // returns its diagnostic. Syntax errors are not handled here.
  std::optional<Diagnostic> run(const SurfaceModule& m);

  // Lexes, parses and runs. Throws SyntaxError on lexical or parse failure.
  std::optional<Diagnostic> run_source(std::string_view text,
                                       const std::string& file);

  Outcome execute(const Directive& d);

  // Parse, resolve, check and normalize a closed expression.
  // Throws SyntaxError, TypeError or BudgetExhausted.
  EvalResult evaluate(std::string_view expr_text);

  // Parses and resolves an expression against the current signature.
  Term resolve_text(std::string_view expr_text) const;

  std::uint64_t steps_used() const { return steps_used_; }

 private:
  ReductionBudget fresh_budget() const {
    return ReductionBudget{options_.max_steps, 0};
  }
  void account(const ReductionBudget& b) { steps_used_ += b.steps_used; }
  Outcome run_directive(const Directive& d);

  SessionOptions options_;
  Signature sig_;
  Sink output_;
  Sink trace_;
  std::uint64_t steps_used_ = 0;
};

// Printed form of a closed normal form: decimal for numerals.
std::string render_value(const Term& nf);

}  // namespace hott

#endif  // HOTT_DRIVER_HPP_
