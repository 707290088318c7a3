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

#include <doctest.h>

#include <sstream>

#include "hott/cli.hpp"
#include "support.hpp"

namespace hott {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "hott");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> stdlib_args() {
  std::vector<std::string> v;
  for (const auto& f : testing::stdlib_files()) v.push_back(testing::stdlib_path(f).string());
  return v;
}

std::string negative(const std::string& f) {
  return (testing::source_dir() / "tests" / "negative" / f).string();
}

TEST_CASE("check the stdlib") {
  auto args = stdlib_args();
  args.insert(args.begin(), "check");
  Run r = cli(args);
  CHECK(r.code == kExitOk);
  CHECK(r.err.empty());
  CHECK(r.out.find("120\n") != std::string::npos);
}

TEST_CASE("check exit codes") {
  CHECK(cli({"check", negative("type-in-type.hott")}).code == kExitOk);
  CHECK(cli({"check", "missing.hott"}).code == kExitUsage);
  CHECK(cli({"check"}).code == kExitUsage);
  CHECK(cli({"frobnicate"}).code == kExitUsage);
  CHECK(cli({"check", "--max-steps", "0", negative("unbound.hott")}).code == kExitUsage);
}

TEST_CASE("type errors exit 1 and parse errors exit 2") {
  auto dir = std::filesystem::temp_directory_path() / "hott-cli-test";
  std::filesystem::create_directories(dir);
  auto bad_type = dir / "bad-type.hott";
  auto bad_parse = dir / "bad-parse.hott";
  std::ofstream(bad_type) << "def a : Nat := star\n";
  std::ofstream(bad_parse) << "def a : Nat :=\n";
  Run t = cli({"check", bad_type.string()});
  CHECK(t.code == kExitCheckFailed);
  CHECK(t.out.empty());
  CHECK(t.err.find("error[type-mismatch]") != std::string::npos);
  Run p = cli({"check", bad_parse.string()});
  CHECK(p.code == kExitSyntax);
  CHECK(p.err.find("bad-parse.hott:2") != std::string::npos);
  // The first failing file decides.
  CHECK(cli({"check", bad_parse.string(), "missing.hott"}).code == kExitUsage);
}

TEST_CASE("eval prints decimal numerals") {
  namespace o = testing::oracle;
  auto args = stdlib_args();
  auto eval = [&](const std::string& expr) {
    std::vector<std::string> a = {"eval", "--expr", expr};
    a.insert(a.end(), args.begin(), args.end());
    return cli(a);
  };
  Run f = eval("factorial 5");
  CHECK(f.code == kExitOk);
  CHECK(f.out == std::to_string(o::factorial(5)) + "\n");
  CHECK(eval("dist 3 7").out == std::to_string(o::dist(3, 7)) + "\n");
  CHECK(eval("binom 5 2").out == std::to_string(o::binom(5, 2)) + "\n");
  CHECK(eval("pair 1 star").code == kExitCheckFailed);
  CHECK(eval("add 1 (").code == kExitSyntax);
  CHECK(eval("nope 1").code == kExitCheckFailed);

  // Positional expression after the files.
  std::vector<std::string> a = {"eval"};
  a.insert(a.end(), args.begin(), args.end());
  a.push_back("fib 10");
  Run r = cli(a);
  CHECK(r.out == std::to_string(o::fib(10)) + "\n");
}

TEST_CASE("budget exhaustion reports the step count") {
  std::vector<std::string> a = {"eval", "--max-steps", "5000", "--expr", "exp 10 10"};
  auto args = stdlib_args();
  a.insert(a.end(), args.begin(), args.end());
  Run r = cli(a);
  CHECK(r.code == kExitCheckFailed);
  CHECK(r.err.find("budget-exhausted") != std::string::npos);
  CHECK(r.err.find("5000") != std::string::npos);
}

TEST_CASE("trace and jobs") {
  auto args = stdlib_args();
  std::vector<std::string> a = {"check", "--trace", "--jobs", "4"};
  a.insert(a.end(), args.begin(), args.end());
  Run r = cli(a);
  CHECK(r.code == kExitOk);
  CHECK(r.err.find("def factorial (") != std::string::npos);
  CHECK(r.err.find("postulate ua0 (") != std::string::npos);
}

TEST_CASE("the installed binary honors the exit codes") {
  std::string bin = HOTT_BINARY;
  auto status = [&](const std::string& args) {
    int rc = std::system((bin + " " + args + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(rc);
  };
  CHECK(status("check " + negative("type-in-type.hott")) == 0);
  CHECK(status("check missing.hott") == 3);
  CHECK(status("--help") == 0);
}

}  // namespace
}  // namespace hott
