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

#include "hott/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "hott/driver.hpp"
#include "hott/pretty.hpp"
#include "hott/surface.hpp"
#include "hott/typecheck.hpp"

namespace hott {

namespace {

struct Loaded {
  std::vector<SurfaceModule> modules;
  int code = kExitOk;
};

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return ss.str();
}

// Reads every file, then parses them (concurrently when jobs > 1). The
// first failure in command-line order determines the exit code.
Loaded load(const RunConfig& cfg, std::ostream& err) {
  Loaded result;
  std::vector<std::string> texts;
  for (const auto& path : cfg.paths) {
    auto text = read_file(path);
    if (!text) {
      err << "error: cannot read '" << path << "'\n";
      result.code = kExitUsage;
      return result;
    }
    texts.push_back(std::move(*text));
  }

  using Parsed = std::pair<std::optional<SurfaceModule>, std::string>;
  auto parse_one = [&](std::size_t i) -> Parsed {
    try {
      return {parse_source(texts[i], cfg.paths[i]), {}};
    } catch (const SyntaxError& e) {
      return {std::nullopt, e.what()};
    }
  };

  std::vector<Parsed> parsed(texts.size());
  unsigned jobs = std::max(1u, cfg.jobs);
  for (std::size_t base = 0; base < texts.size(); base += jobs) {
    std::vector<std::future<Parsed>> batch;
    std::size_t end = std::min(texts.size(), base + jobs);
    for (std::size_t i = base; i < end; ++i)
      batch.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred,
                                 parse_one, i));
    for (std::size_t i = base; i < end; ++i) parsed[i] = batch[i - base].get();
  }

  for (auto& [module, message] : parsed) {
    if (!module) {
      err << message << "\n";
      result.code = kExitSyntax;
      return result;
    }
    result.modules.push_back(std::move(*module));
  }
  return result;
}

// Runs every module in one session. Returns false after reporting the
// first failure.
bool run_modules(Session& session, const std::vector<SurfaceModule>& modules,
                 std::ostream& err) {
  for (const auto& m : modules) {
    if (auto diag = session.run(m)) {
      err << format_diagnostic(*diag) << "\n";
      return false;
    }
  }
  return true;
}

Session make_session(const RunConfig& cfg, bool print_evals, std::ostream& out,
                     std::ostream& err) {
  SessionOptions opts;
  opts.max_steps = cfg.max_steps;
  opts.trace = cfg.trace;
  opts.print_normal_forms = print_evals;
  Session session(opts);
  session.set_output([&out](const std::string& s) { out << s << "\n"; });
  session.set_trace([&err](const std::string& s) { err << s << "\n"; });
  return session;
}

}  // namespace

int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.paths.empty()) {
    err << "error: check needs at least one file\n";
    return kExitUsage;
  }
  Loaded loaded = load(cfg, err);
  if (loaded.code != kExitOk) return loaded.code;
  Session session = make_session(cfg, cfg.print_normal_forms, out, err);
  return run_modules(session, loaded.modules, err) ? kExitOk : kExitCheckFailed;
}

int cmd_eval(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  RunConfig files = cfg;
  std::string expr;
  if (cfg.expr) {
    expr = *cfg.expr;
  } else if (!files.paths.empty()) {
    expr = files.paths.back();
    files.paths.pop_back();
  } else {
    err << "error: eval needs an expression (positional or --expr)\n";
    return kExitUsage;
  }

  Loaded loaded = load(files, err);
  if (loaded.code != kExitOk) return loaded.code;
  Session session = make_session(files, false, out, err);
  if (!run_modules(session, loaded.modules, err)) return kExitCheckFailed;

  try {
    EvalResult r = session.evaluate(expr);
    out << r.text << "\n";
    return kExitOk;
  } catch (const SyntaxError& e) {
    err << e.what() << "\n";
    return kExitSyntax;
  } catch (const TypeError& e) {
    Diagnostic d = e.diagnostic();
    if (!d.span) d.span = Span{"<expr>", 1, 1};
    err << format_diagnostic(d) << "\n";
    return kExitCheckFailed;
  } catch (const BudgetExhausted& e) {
    err << "error[budget-exhausted]: " << e.what() << "\n";
    return kExitCheckFailed;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Proof checker for a dependent type theory with univalent axioms",
               "hott"};
  app.require_subcommand(1);

  RunConfig cfg;
  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--max-steps", cfg.max_steps, "Reduction step budget")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--trace", cfg.trace, "Print per-declaration timing to stderr");
    sub->add_option("--jobs", cfg.jobs, "Files parsed concurrently")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* check = app.add_subcommand("check", "Check files in order");
  add_common(check);
  check->add_option("files", cfg.paths, "Proof files in dependency order")->required();

  CLI::App* eval = app.add_subcommand("eval", "Normalize an expression after loading files");
  add_common(eval);
  eval->add_option("--expr", cfg.expr, "Expression to normalize");
  eval->add_option("args", cfg.paths, "Files, then the expression unless --expr is given");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*check) {
    cfg.command = RunConfig::Command::Check;
    return cmd_check(cfg, out, err);
  }
  cfg.command = RunConfig::Command::Eval;
  return cmd_eval(cfg, out, err);
}

}  // namespace hott
