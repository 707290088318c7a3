#!/usr/bin/env python3
# Copyright 2026 The HoTT Kernel Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates stdlib/MANIFEST from the declarations in stdlib/*.hott.

Each line is `<file> <name> : <type>` with the type on one line.
"""

import pathlib
import re
import sys

MANDATED = {
    "prelude.hott": ["id", "comp", "const", "id1", "comp1", "pr1", "pr2", "prod",
                     "bool", "true", "false", "ind-bool"],
    "nat.hott": ["add", "mul", "exp", "min", "max", "triangle", "factorial",
                 "binom", "fib", "div2", "dist"],
    "int.hott": ["Int", "succ-Z", "pred-Z"],
    "identity.hott": ["concat", "inv", "assoc", "left-unit", "right-unit",
                      "left-inv", "right-inv", "ap", "ap-id", "ap-comp",
                      "ap-refl", "ap-inv", "ap-concat", "tr", "apd", "lift",
                      "left-unit-law-add", "right-unit-law-add",
                      "left-successor-law-add", "right-successor-law-add",
                      "associative-add", "commutative-add"],
    "eqnat.hott": ["Eq-nat", "refl-Eq-nat", "eq-to-Eq", "Eq-to-eq", "peano7",
                   "peano8"],
    "fin.hott": ["Fin", "iota", "fin-zero", "fin-succ"],
    "sigma-id.hott": ["Eq-Sigma", "pair-eq", "eq-pair", "pair-eq-sec",
                      "pair-eq-retr"],
    "equiv.hott": ["sec", "retr", "is-equiv", "has-inverse",
                   "has-inverse-to-is-equiv", "is-contr", "fiber",
                   "is-contr-total-path", "is-equiv-pair-eq", "htpy-eq",
                   "equiv-eq"],
    "axioms.hott": ["funext0", "funext1", "ua0", "trunc-eq0"],
    "circle.hott": ["S1", "base", "loop", "ind-S1", "comp-S1"],
}

DECL = re.compile(r"^(def|postulate)\s+(\S+)\s*:(.*?)(?=:=|\n(?:def|postulate|#)|\Z)",
                  re.S | re.M)


def strip_comments(text):
  return re.sub(r"--[^\n]*", "", text)


def main():
  root = pathlib.Path(__file__).resolve().parent.parent / "stdlib"
  lines = []
  for file, names in MANDATED.items():
    text = strip_comments((root / file).read_text())
    types = {m.group(2): " ".join(m.group(3).split()) for m in DECL.finditer(text)}
    for name in names:
      if name not in types:
        sys.exit(f"{file}: no declaration of {name}")
      lines.append(f"{file} {name} : {types[name]}")
  (root / "MANIFEST").write_text("\n".join(lines) + "\n")
  print(f"{len(lines)} entries")


if __name__ == "__main__":
  main()
