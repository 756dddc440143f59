#!/usr/bin/env python3
"""Generates include/fada/unicode_tables.hpp from Python's unicodedata.

The tables cover full-range canonical decomposition (NFD), canonical
combining classes, primary composites (NFC), full lowercase mappings,
and the letter intervals used by the final-sigma rule. Hangul syllables
are handled algorithmically in C++ and are excluded here.

Run from the repository root:
    python3 scripts/gen_unicode_tables.py > include/fada/unicode_tables.hpp
"""

import sys
import unicodedata

MAX_CP = 0x110000
HANGUL_S_BASE = 0xAC00
HANGUL_S_COUNT = 11172


def is_hangul_syllable(cp: int) -> bool:
    return HANGUL_S_BASE <= cp < HANGUL_S_BASE + HANGUL_S_COUNT


def single_level_canonical_decomp(cp: int):
    raw = unicodedata.decomposition(chr(cp))
    if not raw or raw.startswith("<"):
        return None
    return [int(h, 16) for h in raw.split()]


def main() -> None:
    nfd = {}        # cp -> full canonical decomposition (list of cps)
    ccc = {}        # cp -> nonzero combining class
    lower = {}      # cp -> full lowercase mapping (list of cps)
    compose = {}    # (starter, combining) -> primary composite

    for cp in range(MAX_CP):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        ch = chr(cp)

        cls = unicodedata.combining(ch)
        if cls:
            ccc[cp] = cls

        if not is_hangul_syllable(cp):
            full = unicodedata.normalize("NFD", ch)
            if full != ch:
                nfd[cp] = [ord(c) for c in full]

        low = ch.lower()
        if low != ch:
            lower[cp] = [ord(c) for c in low]

        decomp = single_level_canonical_decomp(cp)
        if decomp and len(decomp) == 2 and not is_hangul_syllable(cp):
            # Primary composite iff NFC recomposes it (filters exclusions).
            if unicodedata.normalize("NFC", unicodedata.normalize("NFD", ch)) == ch:
                compose[(decomp[0], decomp[1])] = cp

    # Letter intervals (general category L*) for the final-sigma context rule.
    letter_ranges = []
    start = None
    for cp in range(MAX_CP):
        is_letter = (not 0xD800 <= cp <= 0xDFFF) and unicodedata.category(chr(cp)).startswith("L")
        if is_letter and start is None:
            start = cp
        elif not is_letter and start is not None:
            letter_ranges.append((start, cp - 1))
            start = None
    if start is not None:
        letter_ranges.append((start, MAX_CP - 1))

    # Case-ignorable approximation: Mn, Me, Cf, Lm, Sk.
    ci_ranges = []
    start = None
    for cp in range(MAX_CP):
        is_ci = (not 0xD800 <= cp <= 0xDFFF) and unicodedata.category(chr(cp)) in ("Mn", "Me", "Cf", "Lm", "Sk")
        if is_ci and start is None:
            start = cp
        elif not is_ci and start is not None:
            ci_ranges.append((start, cp - 1))
            start = None
    if start is not None:
        ci_ranges.append((start, MAX_CP - 1))

    out = sys.stdout
    w = out.write
    w("// Licensed under the Apache License, Version 2.0 (the \"License\");\n")
    w("// you may not use this file except in compliance with the License.\n")
    w("// You may obtain a copy of the License at\n//\n")
    w("//     http://www.apache.org/licenses/LICENSE-2.0\n//\n")
    w("// Unless required by applicable law or agreed to in writing, software\n")
    w("// distributed under the License is distributed on an \"AS IS\" BASIS,\n")
    w("// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.\n")
    w("// See the License for the specific language governing permissions and\n")
    w("// limitations under the License.\n//\n")
    w("// Generated by scripts/gen_unicode_tables.py (Unicode %s). Do not edit.\n\n"
      % unicodedata.unidata_version)
    w("#pragma once\n\n#include <cstdint>\n\nnamespace fada::unicode_tables {\n\n")

    # Decomposition pool + index.
    pool = []
    w("struct DecompEntry { char32_t cp; std::uint32_t offset; std::uint8_t length; };\n\n")
    w("inline constexpr DecompEntry kDecomp[] = {\n")
    for cp in sorted(nfd):
        seq = nfd[cp]
        w("    {0x%X, %d, %d},\n" % (cp, len(pool), len(seq)))
        pool.extend(seq)
    w("};\n\n")
    w("inline constexpr char32_t kDecompPool[] = {\n")
    for i in range(0, len(pool), 12):
        w("    " + ", ".join("0x%X" % c for c in pool[i:i + 12]) + ",\n")
    w("};\n\n")

    w("struct CccEntry { char32_t cp; std::uint8_t ccc; };\n\n")
    w("inline constexpr CccEntry kCcc[] = {\n")
    items = sorted(ccc.items())
    for i in range(0, len(items), 6):
        w("    " + " ".join("{0x%X, %d}," % kv for kv in items[i:i + 6]) + "\n")
    w("};\n\n")

    w("struct ComposeEntry { char32_t first; char32_t second; char32_t composite; };\n\n")
    w("inline constexpr ComposeEntry kCompose[] = {\n")
    for (a, b), c in sorted(compose.items()):
        w("    {0x%X, 0x%X, 0x%X},\n" % (a, b, c))
    w("};\n\n")

    lower_pool = []
    w("struct LowerEntry { char32_t cp; std::uint32_t offset; std::uint8_t length; };\n\n")
    w("inline constexpr LowerEntry kLower[] = {\n")
    for cp in sorted(lower):
        seq = lower[cp]
        w("    {0x%X, %d, %d},\n" % (cp, len(lower_pool), len(seq)))
        lower_pool.extend(seq)
    w("};\n\n")
    w("inline constexpr char32_t kLowerPool[] = {\n")
    for i in range(0, len(lower_pool), 12):
        w("    " + ", ".join("0x%X" % c for c in lower_pool[i:i + 12]) + ",\n")
    w("};\n\n")

    w("struct Range { char32_t first; char32_t last; };\n\n")
    w("inline constexpr Range kLetterRanges[] = {\n")
    for i in range(0, len(letter_ranges), 6):
        w("    " + " ".join("{0x%X, 0x%X}," % r for r in letter_ranges[i:i + 6]) + "\n")
    w("};\n\n")
    w("inline constexpr Range kCaseIgnorableRanges[] = {\n")
    for i in range(0, len(ci_ranges), 6):
        w("    " + " ".join("{0x%X, 0x%X}," % r for r in ci_ranges[i:i + 6]) + "\n")
    w("};\n\n")

    w("}  // namespace fada::unicode_tables\n")


if __name__ == "__main__":
    main()
