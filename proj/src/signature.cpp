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

#include "hott/signature.hpp"

#include <stdexcept>

namespace hott {

Signature::Signature()
    : decls_(std::make_shared<const std::vector<Declaration>>()),
      index_(std::make_shared<
             const std::unordered_map<std::string, std::size_t>>()) {}

Signature Signature::extend(Declaration d) const {
  if (contains(d.name))
    throw std::invalid_argument("duplicate declaration: " + d.name);
  auto decls = std::make_shared<std::vector<Declaration>>(*decls_);
  auto index =
      std::make_shared<std::unordered_map<std::string, std::size_t>>(*index_);
  (*index)[d.name] = decls->size();
  decls->push_back(std::move(d));
  Signature out;
  out.decls_ = std::move(decls);
  out.index_ = std::move(index);
  return out;
}

bool Signature::contains(const std::string& name) const {
  return index_->count(name) != 0;
}

const Declaration* Signature::lookup(const std::string& name) const {
  auto it = index_->find(name);
  return it == index_->end() ? nullptr : &(*decls_)[it->second];
}

std::optional<std::size_t> Signature::position(const std::string& name) const {
  auto it = index_->find(name);
  if (it == index_->end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> Signature::postulates() const {
  std::vector<std::string> out;
  for (const Declaration& d : *decls_)
    if (d.kind == DeclKind::Postulate) out.push_back(d.name);
  return out;
}

Context Context::extend(Term type, std::string name) const {
  Context out = *this;
  out.entries_.push_back(std::move(type));
  out.names_.push_back(std::move(name));
  return out;
}

std::optional<Term> Context::lookup(std::uint32_t k) const {
  if (k >= entries_.size()) return std::nullopt;
  return shift(entries_[entries_.size() - 1 - k], 0, k + 1);
}

}  // namespace hott
