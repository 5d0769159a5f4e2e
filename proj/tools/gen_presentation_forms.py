#!/usr/bin/env python3
# Copyright 2026 The Qasida Authors. All Rights Reserved.
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

"""Regenerates include/qasida/detail/presentation_forms.hpp from NFKC data.

Each Arabic presentation-form codepoint is mapped to its compatibility
decomposition. Isolated and tatweel-carried forms of marks map to the bare
marks so they attach to the preceding letter.
"""
import sys
import unicodedata

RANGES = [(0xFB50, 0xFDFF), (0xFE70, 0xFEFF)]


def fold(cp):
    ch = chr(cp)
    if unicodedata.category(ch) == "Cn":
        return None
    out = unicodedata.normalize("NFKC", ch)
    if out == ch:
        return None
    if not all(c == " " or 0x0600 <= ord(c) <= 0x06FF for c in out):
        return None
    stripped = out.lstrip(" ـ")
    if stripped and all(unicodedata.combining(c) for c in stripped):
        out = stripped
    return out


LICENSE = open(__file__.replace("gen_presentation_forms.py", "license_header.txt")).read()


def main():
    rows = []
    for lo, hi in RANGES:
        for cp in range(lo, hi + 1):
            out = fold(cp)
            if out:
                body = "".join("\\U%08X" % ord(c) for c in out)
                rows.append('    {0x%04X, U"%s"},' % (cp, body))
    print(LICENSE, end="")
    print("// Generated by tools/gen_presentation_forms.py (Unicode %s). Do not edit."
          % unicodedata.unidata_version)
    print("#pragma once\n")
    print("#include <array>\n#include <string_view>\n")
    print("namespace qasida::detail {\n")
    print("struct PresentationFold {\n  char32_t from;\n  std::u32string_view to;\n};\n")
    print("// Sorted by `from`.")
    print("inline constexpr std::array<PresentationFold, %d> kPresentationFolds{{" % len(rows))
    print("\n".join(rows))
    print("}};\n")
    print("}  // namespace qasida::detail")


if __name__ == "__main__":
    sys.exit(main())
