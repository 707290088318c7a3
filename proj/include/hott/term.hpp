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

// Core term language of the kernel.
//
// Terms are immutable trees with nameless (de Bruijn) variables: Var(0) is
// the innermost binder. Binder name hints are carried for printing only and
// never take part in equality, so structural equality is alpha-equivalence.

#ifndef HOTT_TERM_HPP_
#define HOTT_TERM_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace hott {

// Index into the universe tower Type 0 : Type 1 : ...
struct Level {
  std::uint32_t value = 0;

  constexpr Level() = default;
  constexpr explicit Level(std::uint32_t v) : value(v) {}

  constexpr Level succ() const { return Level(value + 1); }
  friend constexpr auto operator<=>(Level, Level) = default;
};

constexpr Level max(Level a, Level b) { return a < b ? b : a; }

enum class Kind : std::uint8_t {
  Var,
  Const,
  Universe,
  Pi,         // (domain, codomain[1])
  Lambda,     // (domain or null, body[1])
  App,        // (fn, arg)
  Sigma,      // (first, second[1])
  Pair,       // (fst, snd)
  IndSigma,   // (motive[1], step, scrutinee)
  Nat,
  Zero,
  Succ,       // (pred)
  IndNat,     // (motive[1], base, step, scrutinee)
  Unit,
  Star,
  IndUnit,    // (motive[1], point, scrutinee)
  Empty,
  IndEmpty,   // (motive[1], scrutinee)
  Coprod,     // (left, right)
  Inl,        // (value)
  Inr,        // (value)
  IndCoprod,  // (motive[1], onLeft, onRight, scrutinee)
  Id,         // (type, lhs, rhs)
  Refl,
  IndEq,      // (base, motive[2], center, endpoint, path)
  W,          // (shapes, arities[1])
  Tree,       // (shape, components)
  IndW,       // (motive[1], step, scrutinee)
  Trunc,      // (type)
  TruncIn,    // (value)
  IndTrunc,   // (motive[1], point, coherence, scrutinee)
};

// Name used in diagnostics and debugging output.
const char* kind_name(Kind k);

// Number of children a node of kind k carries.
std::size_t arity_of(Kind k);

// Number of variables bound by child `child` of a node of kind k.
std::uint32_t binders_of(Kind k, std::size_t child);

class Term {
 public:
  Term() = default;

  static Term var(std::uint32_t index);
  static Term constant(std::string name);
  static Term universe(Level level);
  static Term pi(Term domain, Term codomain, std::string hint = "x");
  static Term arrow(Term domain, Term codomain);  // non-dependent Pi
  static Term lambda(Term domain, Term body, std::string hint = "x");
  static Term app(Term fn, Term arg);
  static Term app(Term fn, std::initializer_list<Term> args);
  static Term sigma(Term first, Term second, std::string hint = "x");
  static Term pair(Term fst, Term snd);
  static Term ind_sigma(Term motive, Term step, Term scrutinee,
                        std::string hint = "z");
  static Term nat();
  static Term zero();
  static Term succ(Term pred);
  static Term numeral(std::uint64_t n);
  static Term ind_nat(Term motive, Term base, Term step, Term scrutinee,
                      std::string hint = "n");
  static Term unit();
  static Term star();
  static Term ind_unit(Term motive, Term point, Term scrutinee,
                       std::string hint = "t");
  static Term empty();
  static Term ind_empty(Term motive, Term scrutinee, std::string hint = "e");
  static Term coprod(Term left, Term right);
  static Term inl(Term value);
  static Term inr(Term value);
  static Term ind_coprod(Term motive, Term on_left, Term on_right,
                         Term scrutinee, std::string hint = "z");
  static Term id(Term type, Term lhs, Term rhs);
  static Term refl();
  static Term ind_eq(Term base, Term motive, Term center, Term endpoint,
                     Term path, std::string hint_point = "y",
                     std::string hint_path = "p");
  static Term w(Term shapes, Term arities, std::string hint = "x");
  static Term tree(Term shape, Term components);
  static Term ind_w(Term motive, Term step, Term scrutinee,
                    std::string hint = "w");
  static Term trunc(Term type);
  static Term trunc_in(Term value);
  static Term ind_trunc(Term motive, Term point, Term coherence,
                        Term scrutinee, std::string hint = "t");

  // Generic constructor used by the traversals; children.size() must equal
  // arity_of(kind) and hints.size() the total number of bound variables.
  static Term make(Kind kind, std::uint32_t payload, std::string name,
                   std::vector<Term> children, std::vector<std::string> hints);

  explicit operator bool() const { return node_ != nullptr; }
  Kind kind() const { return node_->kind; }

  std::uint32_t index() const { return node_->payload; }  // Var
  Level level() const { return Level(node_->payload); }    // Universe
  const std::string& name() const { return node_->name; }  // Const

  std::size_t arity() const { return node_->children.size(); }
  const Term& operator[](std::size_t i) const { return node_->children[i]; }
  std::span<const Term> children() const { return node_->children; }
  std::span<const std::string> hints() const { return node_->hints; }

  // Smallest depth d such that the term is well scoped under d binders.
  std::uint32_t free_bound() const { return node_->free_bound; }

  // Succ^n(Zero) detection; returns false for anything else.
  bool as_numeral(std::uint64_t& out) const;

  bool same_node(const Term& other) const { return node_ == other.node_; }

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node {
    Kind kind;
    std::uint32_t payload = 0;
    std::uint32_t free_bound = 0;
    std::string name;
    std::vector<Term> children;
    std::vector<std::string> hints;
  };

  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// Shift every free index >= cutoff by amount. Underflow is a kernel bug and
// throws std::logic_error.
Term shift(const Term& t, std::uint32_t cutoff, std::int64_t amount);

// Replace Var(j) by s and close the gap. s lives in the context obtained by
// dropping the j innermost entries and the substituted entry itself.
Term subst(const Term& t, std::uint32_t j, const Term& s);

// subst(body, 0, s): the usual instantiation of a one-variable binder.
inline Term instantiate(const Term& body, const Term& s) {
  return subst(body, 0, s);
}

// Instantiate a two-variable binder: Var(1) := first, Var(0) := second.
// Both arguments live in the context outside the binder.
Term instantiate2(const Term& body, const Term& first, const Term& second);

bool well_scoped(const Term& t, std::uint32_t depth);

// Number of nodes; used by the enumeration suites.
std::size_t term_size(const Term& t);

}  // namespace hott

#endif  // HOTT_TERM_HPP_
