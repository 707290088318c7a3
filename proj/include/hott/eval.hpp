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

// Reduction and judgmental equality.
//
// Reduction contracts beta redexes, the computation rule of every
// eliminator applied to its constructor, and unfolds defined constants.
// Conversion reduces both sides to weak head normal form and compares
// heads, with eta for Pi only.

#ifndef HOTT_EVAL_HPP_
#define HOTT_EVAL_HPP_

#include <cstdint>
#include <stdexcept>

#include "hott/signature.hpp"
#include "hott/term.hpp"

namespace hott {

inline constexpr std::uint64_t kDefaultMaxSteps = 10'000'000;

class BudgetExhausted : public std::runtime_error {
 public:
  explicit BudgetExhausted(std::uint64_t steps);
  std::uint64_t steps() const { return steps_; }

 private:
  std::uint64_t steps_;
};

// One step is one beta, iota or delta contraction.
struct ReductionBudget {
  std::uint64_t max_steps = kDefaultMaxSteps;
  std::uint64_t steps_used = 0;

  void tick() {
    if (steps_used >= max_steps) throw BudgetExhausted(steps_used);
    ++steps_used;
  }
};

// Weak head normal form with full delta unfolding at the head.
Term whnf(const Signature& sig, const Term& t, ReductionBudget& budget);

// Weak head normal form that leaves a defined constant at the head of an
// application spine folded. Scrutinees of eliminators are still unfolded.
Term whnf_no_delta(const Signature& sig, const Term& t,
                   ReductionBudget& budget);

// Full normal form, reducing under binders.
Term normalize(const Signature& sig, const Term& t, ReductionBudget& budget);

// Judgmental equality of two terms assumed to share a type and context.
bool conv(const Signature& sig, const Term& a, const Term& b,
          ReductionBudget& budget);

}  // namespace hott

#endif  // HOTT_EVAL_HPP_
