#!/usr/bin/env python3
"""Regenerates src/unicode_tables.cpp from the Python unicodedata database.

Emits two tables:
  - inclusive codepoint ranges whose general category is a letter (L*)
  - full case-folding entries for letter codepoints where str.casefold()
    differs from the identity (folds expand to at most three codepoints)

Run from the repository root:  python3 scripts/gen_unicode_tables.py
"""

import sys
import unicodedata


def letter_ranges():
    ranges = []
    start = None
    prev = None
    for cp in range(0x110000):
        ch = chr(cp)
        if unicodedata.category(ch).startswith("L"):
            if start is None:
                start = cp
            prev = cp
        else:
            if start is not None:
                ranges.append((start, prev))
                start = None
    if start is not None:
        ranges.append((start, prev))
    return ranges


def fold_entries():
    entries = []
    for cp in range(0x110000):
        ch = chr(cp)
        if not unicodedata.category(ch).startswith("L"):
            continue
        folded = ch.casefold()
        if folded == ch:
            continue
        cps = [ord(c) for c in folded]
        if len(cps) > 3:
            raise ValueError(f"fold of U+{cp:04X} expands to {len(cps)} codepoints")
        while len(cps) < 3:
            cps.append(0)
        entries.append((cp, cps))
    return entries


def main():
    ranges = letter_ranges()
    folds = fold_entries()
    out = sys.stdout
    out.write("// Generated by scripts/gen_unicode_tables.py -- do not edit.\n")
    out.write(f"// Unicode database version {unicodedata.unidata_version}\n\n")
    out.write('#include "registra/unicode.hpp"\n\n')
    out.write("namespace registra::uni {\n\n")
    out.write(f"const CodepointRange kLetterRanges[] = {{\n")
    for lo, hi in ranges:
        out.write(f"    {{0x{lo:X}, 0x{hi:X}}},\n")
    out.write("};\n")
    out.write(f"const std::size_t kLetterRangeCount = {len(ranges)};\n\n")
    out.write("const FoldEntry kFoldEntries[] = {\n")
    for cp, cps in folds:
        out.write(f"    {{0x{cp:X}, {{0x{cps[0]:X}, 0x{cps[1]:X}, 0x{cps[2]:X}}}}},\n")
    out.write("};\n")
    out.write(f"const std::size_t kFoldEntryCount = {len(folds)};\n\n")
    out.write("} // namespace registra::uni\n")


if __name__ == "__main__":
    main()
