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

#ifndef HOTT_SIGNATURE_HPP_
#define HOTT_SIGNATURE_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hott/term.hpp"

namespace hott {

enum class DeclKind { Definition, Postulate };

struct Declaration {
  std::string name;
  Term type;  // closed
  Term body;  // closed; null unless kind == Definition
  DeclKind kind = DeclKind::Definition;

  static Declaration definition(std::string name, Term type, Term body) {
    return {std::move(name), std::move(type), std::move(body),
            DeclKind::Definition};
  }
  static Declaration postulate(std::string name, Term type) {
    return {std::move(name), std::move(type), Term(), DeclKind::Postulate};
  }
};

// Ordered global environment. Values are immutable; extend() returns a new
// Signature and leaves the receiver untouched.
class Signature {
 public:
  Signature();

  // Caller is responsible for having checked d against *this.
  // Throws std::invalid_argument on a duplicate name.
  Signature extend(Declaration d) const;

  bool contains(const std::string& name) const;
  const Declaration* lookup(const std::string& name) const;
  // Position of the declaration; later declarations have larger positions.
  std::optional<std::size_t> position(const std::string& name) const;

  std::size_t size() const { return decls_->size(); }
  const Declaration& operator[](std::size_t i) const { return (*decls_)[i]; }
  const std::vector<Declaration>& declarations() const { return *decls_; }

  std::vector<std::string> postulates() const;

 private:
  std::shared_ptr<const std::vector<Declaration>> decls_;
  std::shared_ptr<const std::unordered_map<std::string, std::size_t>> index_;
};

// Telescope of types; entry i is well scoped over entries 0..i-1. Var(k)
// refers to the entry at position size()-1-k.
class Context {
 public:
  Context() = default;
  explicit Context(std::vector<Term> entries)
      : entries_(std::move(entries)), names_(entries_.size(), "x") {}

  Context extend(Term type, std::string name = "x") const;
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::vector<Term>& entries() const { return entries_; }

  // Type of Var(k), shifted into the full context; nullopt when unbound.
  std::optional<Term> lookup(std::uint32_t k) const;

  // Binder name hints, innermost last; used for printing only.
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<Term> entries_;
  std::vector<std::string> names_;
};

}  // namespace hott

#endif  // HOTT_SIGNATURE_HPP_
