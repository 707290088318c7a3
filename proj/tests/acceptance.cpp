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

// Acceptance harness: prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails. Timings go to stderr so stdout is
// reproducible.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "enumerate.hpp"
#include "hott/cli.hpp"
#include "hott/driver.hpp"
#include "hott/eval.hpp"
#include "hott/pretty.hpp"
#include "hott/surface.hpp"
#include "hott/typecheck.hpp"
#include "support.hpp"

namespace hott::testing {
namespace {

// Pinned limits.
constexpr double kStdlibSeconds = 10.0;
constexpr std::size_t kMinManifestNames = 55;
constexpr double kEvalSeconds = 1.0;
constexpr std::size_t kMinFailItems = 12;
constexpr std::size_t kMinPopulation = 1000;
constexpr std::size_t kMaxPopulation = 100000;
constexpr double kPropertySeconds = 60.0;
constexpr std::size_t kRandomTerms = 1000;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Verdict {
  bool pass = true;
  std::vector<std::string> notes;  // deterministic detail, printed on stdout

  void require(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      notes.push_back(what);
    }
  }
};

int cli(std::vector<std::string> args) {
  std::vector<const char*> argv{"hott"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

std::vector<std::string> stdlib_paths() {
  std::vector<std::string> paths;
  for (const auto& f : stdlib_files()) paths.push_back(stdlib_path(f).string());
  return paths;
}

// 1. The stdlib checks quickly and every manifest entry exists in the
// stated file with the stated type.
Verdict corpus_check() {
  Verdict v;
  std::vector<std::string> args{"check"};
  for (const auto& p : stdlib_paths()) args.push_back(p);
  auto start = Clock::now();
  int code = cli(args);
  double elapsed = seconds_since(start);
  std::cerr << "stdlib check: " << elapsed << " s\n";
  v.require(code == kExitOk, "hott check stdlib exited " + std::to_string(code));
  v.require(elapsed < kStdlibSeconds, "stdlib check exceeded the time limit");

  std::multimap<std::string, std::pair<std::string, std::string>> manifest;
  std::istringstream lines(read_text(source_dir() / "stdlib" / "MANIFEST"));
  std::string line;
  std::size_t entries = 0;
  while (std::getline(lines, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string file, name, colon;
    ls >> file >> name >> colon;
    std::string type;
    std::getline(ls, type);
    v.require(colon == ":", "malformed manifest line: " + line);
    manifest.emplace(file, std::make_pair(name, type));
    ++entries;
  }
  v.require(entries >= kMinManifestNames,
            "manifest has " + std::to_string(entries) + " names");

  SessionOptions opts;
  opts.print_normal_forms = false;
  Session s(opts);
  std::size_t confirmed = 0;
  for (const auto& file : stdlib_files()) {
    auto range = manifest.equal_range(file);
    for (auto it = range.first; it != range.second; ++it)
      v.require(!s.signature().contains(it->second.first),
                it->second.first + " is declared before " + file);
    auto path = stdlib_path(file);
    if (auto d = s.run_source(read_text(path), path.string())) {
      v.require(false, format_diagnostic(*d));
      return v;
    }
    for (auto it = range.first; it != range.second; ++it) {
      const auto& [name, type_text] = it->second;
      const Declaration* decl = s.signature().lookup(name);
      if (!decl) {
        v.require(false, name + " missing from " + file);
        continue;
      }
      try {
        Term stated = s.resolve_text(type_text);
        ReductionBudget b;
        infer_universe(s.signature(), Context(), stated, b);
        if (conv(s.signature(), stated, decl->type, b)) ++confirmed;
        else v.require(false, name + " has a different type");
      } catch (const std::exception& e) {
        v.require(false, name + ": " + e.what());
      }
    }
  }
  v.notes.push_back("manifest names confirmed: " + std::to_string(confirmed) + "/" +
                    std::to_string(entries));
  return v;
}

// 2. Judgmental equalities, and the one that must not hold.
Verdict judgmental_equalities() {
  Verdict v;
  Session s = stdlib_session();
  const std::vector<std::pair<std::string, std::string>> items = {
      {"add m zero == m",
       "#assert-eq \\(m : Nat). add m zero == \\(m : Nat). m : Nat -> Nat"},
      {"comp id f == f",
       "#assert-eq \\(A B : Type 0) (f : A -> B). comp A B B (id B) f"
       " == \\(A B : Type 0) (f : A -> B). f : (A B : Type 0) -> (A -> B) -> A -> B"},
      {"comp f id == f",
       "#assert-eq \\(A B : Type 0) (f : A -> B). comp A A B f (id A)"
       " == \\(A B : Type 0) (f : A -> B). f : (A B : Type 0) -> (A -> B) -> A -> B"},
      {"comp (comp h g) f == comp h (comp g f)",
       "#assert-eq \\(A B C D : Type 0) (f : A -> B) (g : B -> C) (h : C -> D)."
       " comp A B D (comp B C D h g) f"
       " == \\(A B C D : Type 0) (f : A -> B) (g : B -> C) (h : C -> D)."
       " comp A C D h (comp A B C g f)"
       " : (A B C D : Type 0) -> (A -> B) -> (B -> C) -> (C -> D) -> A -> D"},
      {"Eq-nat (succ m) (succ n) == Eq-nat m n",
       "#assert-eq \\(m n : Nat). Eq-nat (succ m) (succ n)"
       " == \\(m n : Nat). Eq-nat m n : Nat -> Nat -> Type 0"},
      {"Fin (succ k) == Fin k + Unit",
       "#assert-eq \\(k : Nat). Fin (succ k) == \\(k : Nat). Fin k + Unit"
       " : Nat -> Type 0"},
      {"(\\x. f x) == f",
       "#assert-eq \\(A B : Type 0) (f : A -> B). \\x. f x"
       " == \\(A B : Type 0) (f : A -> B). f : (A B : Type 0) -> (A -> B) -> A -> B"},
      {"add zero n =/= n",
       "#assert-neq \\(n : Nat). add zero n == \\(n : Nat). n : Nat -> Nat"},
  };
  for (const auto& [label, source] : items) {
    try {
      auto d = s.run_source(source, "<criterion-2>");
      v.require(!d, label + ": " + (d ? format_diagnostic(*d) : ""));
    } catch (const std::exception& e) {
      v.require(false, label + ": " + e.what());
    }
  }

  // The same two arithmetic facts on open terms in the context m : Nat.
  ReductionBudget b;
  Term add = Term::constant("add");
  Term m = Term::var(0);
  Context ctx({Term::nat()});
  check(s.signature(), ctx, Term::app(add, {m, Term::zero()}), Term::nat(), b);
  v.require(conv(s.signature(), Term::app(add, {m, Term::zero()}), m, b),
            "open add m zero == m");
  v.require(!conv(s.signature(), Term::app(add, {Term::zero(), m}), m, b),
            "open add zero n =/= n");
  v.notes.push_back("assertions: " + std::to_string(items.size() + 2));
  return v;
}

// 3. Evaluation against host oracles.
Verdict evaluation_suite() {
  Verdict v;
  Session s = stdlib_session();
  struct Case {
    std::string expr;
    std::function<std::uint64_t()> oracle;
  };
  const std::vector<Case> cases = {
      {"factorial 5", [] { return oracle::factorial(5); }},
      {"fib 10", [] { return oracle::fib(10); }},
      {"binom 5 2", [] { return oracle::binom(5, 2); }},
      {"dist 3 7", [] { return oracle::dist(3, 7); }},
      {"min 4 9", [] { return oracle::min(4, 9); }},
      {"max 4 9", [] { return oracle::max(4, 9); }},
      {"mul 6 7", [] { return oracle::mul(6, 7); }},
  };
  auto start = Clock::now();
  for (const auto& c : cases) {
    std::string want = std::to_string(c.oracle());
    try {
      std::string got = s.evaluate(c.expr).text;
      v.require(got == want, c.expr + " gave " + got + ", oracle " + want);
    } catch (const std::exception& e) {
      v.require(false, c.expr + ": " + e.what());
    }
  }
  double elapsed = seconds_since(start);
  std::cerr << "evaluation suite: " << elapsed << " s\n";
  v.require(elapsed < kEvalSeconds, "evaluation exceeded the time limit");
  v.notes.push_back("expressions: " + std::to_string(cases.size()));
  return v;
}

// 4. Negative corpus.
Verdict negative_corpus() {
  Verdict v;
  const std::vector<std::pair<std::string, std::string>> required = {
      {"type-in-type.hott", "universe-mismatch"},
      {"refl-zero-one.hott", "refl-endpoints-not-convertible"},
      {"ind-nat-mismatch.hott", "IndNat-base"},
      {"ind-nat-mismatch.hott", "IndNat-step"},
      {"unbound.hott", "unbound-identifier"},
      {"sigma-eta.hott", "assert-eq"},
      {"w-arity.hott", "Tree-components"},
  };
  std::set<std::pair<std::string, std::string>> seen;
  std::size_t items = 0;
  std::vector<std::string> files;
  for (const auto& entry : std::filesystem::directory_iterator(source_dir() / "tests" / "negative"))
    if (entry.path().extension() == ".hott") files.push_back(entry.path().string());
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    std::string file = std::filesystem::path(path).filename().string();
    int code = cli({"check", path});
    v.require(code == kExitOk, file + " exited " + std::to_string(code));
    SurfaceModule m = parse_source(read_text(path), path);
    for (const Item& item : m.items) {
      if (item.tag != Item::Tag::Fail) continue;
      v.require(item.expected_rule.has_value(), file + ": #fail without a rule");
      if (!item.expected_rule) continue;
      v.require(rule_from_name(*item.expected_rule).has_value(),
                file + ": unknown rule " + *item.expected_rule);
      seen.insert({file, *item.expected_rule});
      ++items;
    }
  }
  v.require(items >= kMinFailItems, "only " + std::to_string(items) + " #fail items");
  for (const auto& r : required)
    v.require(seen.count(r) > 0, "missing " + r.second + " in " + r.first);
  v.notes.push_back("#fail items: " + std::to_string(items));
  return v;
}

// 5. Kernel properties over enumerated terms.
Verdict property_suite() {
  Verdict v;
  auto start = Clock::now();
  PropertyReport r = run_property_suite();
  double elapsed = seconds_since(start);
  std::cerr << "property suite: " << elapsed << " s\n";
  v.require(r.population >= kMinPopulation && r.population <= kMaxPopulation,
            "population " + std::to_string(r.population) + " out of range");
  v.require(r.random_terms == kRandomTerms, "random term count");
  v.require(elapsed < kPropertySeconds, "property suite exceeded the time limit");
  for (const auto& f : r.failures) v.require(false, f);
  v.notes.push_back("closed terms: " + std::to_string(r.population) +
                    ", conv classes: " + std::to_string(r.conv_classes) +
                    ", open terms: " + std::to_string(r.open_population) +
                    ", random terms: " + std::to_string(r.random_terms) +
                    ", raw terms: " + std::to_string(r.raw_terms));
  return v;
}

bool declares_postulate(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string word;
    while (ls >> word) {
      if (word == "--") break;
      if (word == "postulate") return true;
    }
  }
  return false;
}

// 6. Postulate census.
Verdict axiom_layer() {
  Verdict v;
  const std::set<std::string> expected = {"funext0", "funext1", "ua0",    "trunc-eq0", "S1",
                                          "base",    "loop",    "ind-S1", "comp-S1"};
  const std::set<std::string> axiom_files = {"axioms.hott", "circle.hott"};
  SessionOptions opts;
  opts.print_normal_forms = false;
  Session s(opts);
  for (const auto& file : stdlib_files()) {
    std::size_t before = s.signature().size();
    auto path = stdlib_path(file);
    std::string text = read_text(path);
    if (auto d = s.run_source(text, path.string())) {
      v.require(false, format_diagnostic(*d));
      return v;
    }
    bool axioms = axiom_files.count(file) > 0;
    if (!axioms) v.require(!declares_postulate(text), file + " mentions postulate");
    for (std::size_t i = before; i < s.signature().size(); ++i) {
      const Declaration& d = s.signature()[i];
      if (d.kind == DeclKind::Postulate)
        v.require(axioms, d.name + " postulated in " + file);
    }
  }
  auto list = s.signature().postulates();
  std::set<std::string> actual(list.begin(), list.end());
  v.require(list.size() == actual.size(), "a postulate is declared twice");
  v.require(actual == expected, "postulate census differs");
  std::string census;
  for (const auto& n : list) census += (census.empty() ? "" : " ") + n;
  v.notes.push_back("postulates: " + census);
  return v;
}

struct Run {
  std::string text;
  int code = 0;
};

Run run_criteria() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"corpus check", corpus_check},
      {"judgmental equalities", judgmental_equalities},
      {"evaluation suite", evaluation_suite},
      {"negative corpus", negative_corpus},
      {"kernel properties", property_suite},
      {"axiom layer", axiom_layer},
  };
  Run run;
  std::ostringstream out;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    out << "criterion " << i + 1 << ": " << (v.pass ? "PASS" : "FAIL") << " "
        << criteria[i].first << "\n";
    for (const auto& n : v.notes) out << "  " << n << "\n";
    if (!v.pass) run.code = 1;
  }
  run.text = out.str();
  return run;
}

}  // namespace
}  // namespace hott::testing

int main() {
  using hott::testing::run_criteria;
  auto first = run_criteria();
  auto second = run_criteria();
  bool same = first.text == second.text && first.code == second.code;
  std::cout << first.text << "criterion 7: " << (same ? "PASS" : "FAIL")
            << " determinism\n";
  return first.code == 0 && same ? 0 : 1;
}
