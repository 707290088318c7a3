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

#include "hott/pretty.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hott/surface.hpp"

namespace hott {

namespace {

// Binding strength of a printed form; a form is parenthesized when printed
// in a position that demands more.
enum Prec { kTop = 0, kDomain = 1, kSum = 2, kApp = 3, kAtom = 4 };

bool occurs(const Term& t, std::uint32_t idx) {
  if (!t || t.free_bound() <= idx) return false;
  if (t.kind() == Kind::Var) return t.index() == idx;
  for (std::size_t i = 0; i < t.arity(); ++i)
    if (occurs(t[i], idx + binders_of(t.kind(), i))) return true;
  return false;
}

void collect_constants(const Term& t, std::set<std::string>& out) {
  if (!t) return;
  if (t.kind() == Kind::Const) out.insert(t.name());
  for (const Term& c : t.children()) collect_constants(c, out);
}

const char* eliminator_keyword(Kind k) {
  switch (k) {
    case Kind::IndSigma: return "ind-sigma";
    case Kind::IndNat: return "ind-nat";
    case Kind::IndUnit: return "ind-unit";
    case Kind::IndEmpty: return "ind-empty";
    case Kind::IndCoprod: return "ind-sum";
    case Kind::IndEq: return "ind-eq";
    case Kind::IndW: return "ind-w";
    case Kind::IndTrunc: return "ind-trunc";
    default: return nullptr;
  }
}

class Printer {
 public:
  Printer(const Term& root, std::vector<std::string> names)
      : names_(std::move(names)) {
    collect_constants(root, constants_);
  }

  std::string print(const Term& t, int prec) {
    std::ostringstream os;
    emit(os, t, prec);
    return os.str();
  }

 private:
  bool taken(const std::string& n) const {
    return is_keyword(n) || constants_.count(n) != 0 ||
           std::find(names_.begin(), names_.end(), n) != names_.end();
  }

  std::string fresh(const std::string& hint, bool used) {
    if (!used && (hint.empty() || hint == "_")) return "_";
    std::string base = hint.empty() || hint == "_" ? "x" : hint;
    if (!taken(base)) return base;
    for (int k = 1;; ++k) {
      std::string candidate = base + std::to_string(k);
      if (!taken(candidate)) return candidate;
    }
  }

  void open(std::ostream& os, bool paren) { if (paren) os << '('; }
  void close(std::ostream& os, bool paren) { if (paren) os << ')'; }

  // Prints a child that binds `names.size()` variables.
  void under(std::ostream& os, const Term& body,
             const std::vector<std::string>& names, int prec) {
    for (const auto& n : names) names_.push_back(n);
    emit(os, body, prec);
    names_.resize(names_.size() - names.size());
  }

  std::vector<std::string> binder_names(const Term& t, std::size_t child) {
    std::uint32_t nb = binders_of(t.kind(), child);
    std::size_t first = 0;
    for (std::size_t i = 0; i < child; ++i) first += binders_of(t.kind(), i);
    std::vector<std::string> out;
    for (std::uint32_t k = 0; k < nb; ++k) {
      std::string hint =
          first + k < t.hints().size() ? t.hints()[first + k] : std::string("x");
      bool used = occurs(t[child], nb - 1 - k);
      std::string n = fresh(hint, used);
      // Later binders of the same group must not reuse this name.
      names_.push_back(n);
      out.push_back(n);
    }
    names_.resize(names_.size() - nb);
    return out;
  }

  void family(std::ostream& os, const Term& t, std::size_t child) {
    std::vector<std::string> ns = binder_names(t, child);
    os << '(';
    for (std::size_t i = 0; i < ns.size(); ++i) os << (i ? " " : "") << ns[i];
    os << ". ";
    under(os, t[child], ns, kTop);
    os << ')';
  }

  void emit(std::ostream& os, const Term& t, int prec) {
    std::uint64_t n = 0;
    switch (t.kind()) {
      case Kind::Var: {
        std::uint32_t i = t.index();
        if (i < names_.size()) os << names_[names_.size() - 1 - i];
        else os << "#" << i;
        return;
      }
      case Kind::Const: os << t.name(); return;
      case Kind::Universe: {
        bool p = prec > kApp;
        open(os, p);
        os << "Type " << t.level().value;
        close(os, p);
        return;
      }
      case Kind::Nat: os << "Nat"; return;
      case Kind::Unit: os << "Unit"; return;
      case Kind::Empty: os << "Empty"; return;
      case Kind::Star: os << "star"; return;
      case Kind::Refl: os << "refl"; return;
      case Kind::Zero: os << "0"; return;
      case Kind::Succ:
        if (t.as_numeral(n)) {
          os << n;
          return;
        }
        break;
      default:
        break;
    }

    switch (t.kind()) {
      case Kind::Pi: {
        bool dependent = occurs(t[1], 0);
        bool p = prec > kTop;
        open(os, p);
        if (dependent) {
          auto ns = binder_names(t, 1);
          os << '(' << ns[0] << " : ";
          emit(os, t[0], kTop);
          os << ") -> ";
          under(os, t[1], ns, kTop);
        } else {
          emit(os, t[0], kDomain);
          os << " -> ";
          under(os, t[1], {"_"}, kTop);
        }
        close(os, p);
        return;
      }
      case Kind::Lambda: {
        bool p = prec > kTop;
        open(os, p);
        auto ns = binder_names(t, 1);
        os << '\\';
        if (t[0]) {
          os << '(' << ns[0] << " : ";
          emit(os, t[0], kTop);
          os << ')';
        } else {
          os << ns[0];
        }
        os << ". ";
        under(os, t[1], ns, kTop);
        close(os, p);
        return;
      }
      case Kind::Sigma: {
        bool p = prec > kTop;
        open(os, p);
        auto ns = binder_names(t, 1);
        os << "Sig (" << ns[0] << " : ";
        emit(os, t[0], kTop);
        os << "), ";
        under(os, t[1], ns, kTop);
        close(os, p);
        return;
      }
      case Kind::Coprod: {
        bool p = prec > kSum;
        open(os, p);
        emit(os, t[0], kApp);
        os << " + ";
        emit(os, t[1], kSum);
        close(os, p);
        return;
      }
      case Kind::App: {
        bool p = prec > kApp;
        open(os, p);
        emit(os, t[0], kApp);
        os << ' ';
        emit(os, t[1], kAtom);
        close(os, p);
        return;
      }
      default:
        break;
    }

    bool p = prec > kApp;
    open(os, p);
    if (const char* kw = eliminator_keyword(t.kind())) {
      os << kw << ' ';
      if (t.kind() == Kind::IndEq) {
        family(os, t, 1);
        for (std::size_t i : {0, 2, 3, 4}) {
          os << ' ';
          emit(os, t[i], kAtom);
        }
      } else {
        family(os, t, 0);
        for (std::size_t i = 1; i < t.arity(); ++i) {
          os << ' ';
          emit(os, t[i], kAtom);
        }
      }
      close(os, p);
      return;
    }
    const char* head = "?";
    switch (t.kind()) {
      case Kind::Succ: head = "succ"; break;
      case Kind::Pair: head = "pair"; break;
      case Kind::Inl: head = "inl"; break;
      case Kind::Inr: head = "inr"; break;
      case Kind::Id: head = "Id"; break;
      case Kind::Tree: head = "tree"; break;
      case Kind::Trunc: head = "Trunc"; break;
      case Kind::TruncIn: head = "eta"; break;
      case Kind::W: head = "W"; break;
      default: break;
    }
    os << head;
    if (t.kind() == Kind::W) {
      os << ' ';
      emit(os, t[0], kAtom);
      os << ' ';
      family(os, t, 1);
    } else {
      for (const Term& c : t.children()) {
        os << ' ';
        emit(os, c, kAtom);
      }
    }
    close(os, p);
  }

  std::vector<std::string> names_;
  std::set<std::string> constants_;
};

}  // namespace

std::string pretty(const Term& t, const std::vector<std::string>& names) {
  if (!t) return "<null>";
  return Printer(t, names).print(t, kTop);
}

std::string format_diagnostic(const Diagnostic& d) {
  std::ostringstream os;
  if (d.span) os << d.span->file << ':' << d.span->line << ':' << d.span->column << ": ";
  os << "error[" << rule_name(d.rule) << "]: " << d.message;
  const auto& names = d.context.names();
  if (d.expected) os << "\n  expected: " << pretty(*d.expected, names);
  if (d.found) os << "\n  found:    " << pretty(*d.found, names);
  return os.str();
}

}  // namespace hott
