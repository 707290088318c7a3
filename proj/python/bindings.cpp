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

// Python bindings: sessions, diagnostics and the two CLI commands.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hott/cli.hpp"
#include "hott/driver.hpp"
#include "hott/pretty.hpp"
#include "hott/surface.hpp"
#include "hott/typecheck.hpp"

namespace py = pybind11;

namespace {

struct PyDiagnostic {
  std::string rule;
  std::string message;
  std::string file;
  std::uint32_t line = 0;
  std::uint32_t column = 0;
  std::string text;  // formatted as the CLI prints it
};

PyDiagnostic convert(const hott::Diagnostic& d) {
  PyDiagnostic p;
  p.rule = std::string(hott::rule_name(d.rule));
  p.message = d.message;
  if (d.span) {
    p.file = d.span->file;
    p.line = d.span->line;
    p.column = d.span->column;
  }
  p.text = hott::format_diagnostic(d);
  return p;
}

struct CommandResult {
  int code;
  std::string out;
  std::string err;
};

CommandResult run_command(int (*cmd)(const hott::RunConfig&, std::ostream&, std::ostream&),
                          hott::RunConfig cfg) {
  std::ostringstream out, err;
  int code = cmd(cfg, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

PYBIND11_MODULE(hottkernel, m) {
  m.doc() = "Proof checker for a dependent type theory with univalent axioms";

  static py::exception<hott::SyntaxError> syntax_error(m, "SyntaxError", PyExc_ValueError);
  static py::exception<hott::BudgetExhausted> budget_error(m, "BudgetExhausted",
                                                           PyExc_RuntimeError);
  static py::exception<hott::TypeError> type_error(m, "TypeError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const hott::SyntaxError& e) {
      py::set_error(syntax_error, e.what());
    } catch (const hott::BudgetExhausted& e) {
      py::set_error(budget_error, e.what());
    } catch (const hott::TypeError& e) {
      py::set_error(type_error, hott::format_diagnostic(e.diagnostic()).c_str());
    }
  });

  m.attr("DEFAULT_MAX_STEPS") = hott::kDefaultMaxSteps;
  m.attr("EXIT_OK") = static_cast<int>(hott::kExitOk);
  m.attr("EXIT_CHECK_FAILED") = static_cast<int>(hott::kExitCheckFailed);
  m.attr("EXIT_SYNTAX") = static_cast<int>(hott::kExitSyntax);
  m.attr("EXIT_USAGE") = static_cast<int>(hott::kExitUsage);

  py::class_<PyDiagnostic>(m, "Diagnostic")
      .def_readonly("rule", &PyDiagnostic::rule)
      .def_readonly("message", &PyDiagnostic::message)
      .def_readonly("file", &PyDiagnostic::file)
      .def_readonly("line", &PyDiagnostic::line)
      .def_readonly("column", &PyDiagnostic::column)
      .def("__str__", [](const PyDiagnostic& d) { return d.text; })
      .def("__repr__", [](const PyDiagnostic& d) {
        return "<Diagnostic " + d.rule + " at " + d.file + ":" + std::to_string(d.line) +
               ":" + std::to_string(d.column) + ">";
      });

  py::class_<hott::Session>(m, "Session")
      .def(py::init([](std::uint64_t max_steps) {
             hott::SessionOptions opts;
             opts.max_steps = max_steps;
             opts.print_normal_forms = false;
             return hott::Session(opts);
           }),
           py::arg("max_steps") = hott::kDefaultMaxSteps)
      .def(
          "run_source",
          [](hott::Session& s, const std::string& text, const std::string& file)
              -> std::optional<PyDiagnostic> {
            if (auto d = s.run_source(text, file)) return convert(*d);
            return std::nullopt;
          },
          py::arg("text"), py::arg("file") = "<string>",
          "Checks every item; returns the first failure or None.")
      .def(
          "run_file",
          [](hott::Session& s, const std::string& path) -> std::optional<PyDiagnostic> {
            std::ifstream in(path, std::ios::binary);
            if (!in) throw py::value_error("cannot read '" + path + "'");
            std::ostringstream text;
            text << in.rdbuf();
            if (auto d = s.run_source(text.str(), path)) return convert(*d);
            return std::nullopt;
          },
          py::arg("path"))
      .def(
          "evaluate", [](hott::Session& s, const std::string& expr) {
            return s.evaluate(expr).text;
          },
          py::arg("expr"), "Normal form of a closed expression, as printed by the CLI.")
      .def(
          "type_of", [](hott::Session& s, const std::string& expr) {
            return hott::pretty(s.evaluate(expr).type);
          },
          py::arg("expr"))
      .def("names",
           [](const hott::Session& s) {
             std::vector<std::string> names;
             for (const auto& d : s.signature().declarations()) names.push_back(d.name);
             return names;
           })
      .def("postulates", [](const hott::Session& s) { return s.signature().postulates(); })
      .def_property_readonly("steps_used", &hott::Session::steps_used);

  py::class_<CommandResult>(m, "CommandResult")
      .def_readonly("code", &CommandResult::code)
      .def_readonly("out", &CommandResult::out)
      .def_readonly("err", &CommandResult::err);

  m.def(
      "check",
      [](std::vector<std::string> paths, std::uint64_t max_steps) {
        hott::RunConfig cfg;
        cfg.paths = std::move(paths);
        cfg.max_steps = max_steps;
        return run_command(hott::cmd_check, cfg);
      },
      py::arg("paths"), py::arg("max_steps") = hott::kDefaultMaxSteps,
      "Same as `hott check PATHS...`.");
  m.def(
      "eval",
      [](std::vector<std::string> paths, const std::string& expr, std::uint64_t max_steps) {
        hott::RunConfig cfg;
        cfg.paths = std::move(paths);
        cfg.expr = expr;
        cfg.max_steps = max_steps;
        return run_command(hott::cmd_eval, cfg);
      },
      py::arg("paths"), py::arg("expr"), py::arg("max_steps") = hott::kDefaultMaxSteps,
      "Same as `hott eval PATHS... --expr EXPR`.");
}
