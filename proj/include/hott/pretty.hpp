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

#ifndef HOTT_PRETTY_HPP_
#define HOTT_PRETTY_HPP_

#include <string>
#include <vector>

#include "hott/diagnostic.hpp"
#include "hott/term.hpp"

namespace hott {

// Renders t in the concrete syntax accepted by the parser. `names` are the
// names of the free variables, innermost last. Binder names are freshened
// so that re-parsing yields the same term.
std::string pretty(const Term& t, const std::vector<std::string>& names = {});

// Multi-line rendering: "file:line:col: error[rule]: message" followed by
// expected/found lines when present.
std::string format_diagnostic(const Diagnostic& d);

}  // namespace hott

#endif  // HOTT_PRETTY_HPP_
