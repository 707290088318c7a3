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

// Shared helpers for the test binaries: source paths, stdlib loading and
// host-integer oracles.

#ifndef HOTT_TESTS_SUPPORT_HPP_
#define HOTT_TESTS_SUPPORT_HPP_

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hott/driver.hpp"
#include "hott/pretty.hpp"

namespace hott::testing {

inline std::filesystem::path source_dir() { return HOTT_SOURCE_DIR; }

inline const std::vector<std::string>& stdlib_files() {
  static const std::vector<std::string> files = {
      "prelude.hott", "nat.hott",      "int.hott",   "identity.hott",
      "eqnat.hott",   "fin.hott",      "sigma-id.hott", "equiv.hott",
      "axioms.hott",  "circle.hott"};
  return files;
}

inline std::filesystem::path stdlib_path(const std::string& file) {
  return source_dir() / "stdlib" / file;
}

inline std::string read_text(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Runs the first `count` stdlib files into s; throws on any failure.
inline void load_stdlib(Session& s, std::size_t count = SIZE_MAX) {
  const auto& files = stdlib_files();
  for (std::size_t i = 0; i < files.size() && i < count; ++i) {
    auto path = stdlib_path(files[i]);
    if (auto d = s.run_source(read_text(path), path.string()))
      throw std::runtime_error(format_diagnostic(*d));
  }
}

// A session with the whole stdlib loaded and #eval output discarded.
inline Session stdlib_session() {
  SessionOptions opts;
  opts.print_normal_forms = false;
  Session s(opts);
  load_stdlib(s);
  return s;
}

// Host oracles, written independently of the object-language definitions.
namespace oracle {

inline std::uint64_t add(std::uint64_t a, std::uint64_t b) { return a + b; }
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) { return a * b; }
inline std::uint64_t min(std::uint64_t a, std::uint64_t b) { return a < b ? a : b; }
inline std::uint64_t max(std::uint64_t a, std::uint64_t b) { return a < b ? b : a; }
inline std::uint64_t dist(std::uint64_t a, std::uint64_t b) { return a < b ? b - a : a - b; }

inline std::uint64_t factorial(std::uint64_t n) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

inline std::uint64_t fib(std::uint64_t n) {
  std::uint64_t a = 0, b = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    std::uint64_t c = a + b;
    a = b;
    b = c;
  }
  return a;
}

// Multiplicative formula, exact at every step.
inline std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline std::uint64_t exp(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

inline std::uint64_t triangle(std::uint64_t n) { return n * (n + 1) / 2; }
inline std::uint64_t div2(std::uint64_t n) { return n / 2; }

// Elements of Fin k as paths: the top element of Fin (k+1) is reached by
// one inr, and each inl moves into the smaller type; iota reads off k.
inline std::uint64_t iota_top(std::uint64_t k_plus_one) { return k_plus_one - 1; }

}  // namespace oracle

}  // namespace hott::testing

#endif  // HOTT_TESTS_SUPPORT_HPP_
