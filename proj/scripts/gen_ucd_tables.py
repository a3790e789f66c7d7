#!/usr/bin/env python3
"""Generate Unicode property tables for the grapheme segmenter.

Emits:
  src/ucd_tables.cpp            range tables + lookups (grapheme cluster break
                                classes, Extended_Pictographic, general-category
                                groups used by the cleaner/classifier)
  src/inventory_default_data.inc  arrays backing the built-in brevigraph
                                inventory (incl. the canonical-equivalence
                                closure of the combining-mark set)
  data/brevigraph_inventory.json  the same inventory as a loadable config

Derives what it can from Python's unicodedata (general categories, NFD);
the properties unicodedata does not expose (Other_Grapheme_Extend, Prepend,
SpacingMark exceptions, Extended_Pictographic, emoji modifiers) are fixed
lists transcribed from UCD 13.0.

Run from the repository root:  python3 scripts/gen_ucd_tables.py
"""

import sys
import unicodedata

MAX_CP = 0x110000

# --- fixed lists (UCD 13.0) -------------------------------------------------

OTHER_GRAPHEME_EXTEND = [
    0x09BE, 0x09D7, 0x0B3E, 0x0B57, 0x0BBE, 0x0BD7, 0x0CC2,
    (0x0CD5, 0x0CD6), 0x0D3E, 0x0D57, 0x0DCF, 0x0DDF, 0x1B35,
    0x200C, (0x302E, 0x302F), (0xFF9E, 0xFF9F), 0x1133E, 0x11357,
    0x114B0, 0x114BD, 0x115AF, 0x11930, 0x1D165, (0x1D16E, 0x1D172),
    (0xE0020, 0xE007F),
]

EMOJI_MODIFIER = [(0x1F3FB, 0x1F3FF)]  # skin tones: GCB Extend

PREPEND = [
    (0x0600, 0x0605), 0x06DD, 0x070F, 0x08E2, 0x0D4E, 0x110BD,
    0x110CD, (0x111C2, 0x111C3), 0x1193F, 0x11941, 0x11A3A,
    (0x11A84, 0x11A89), 0x11D46,
]

SPACINGMARK_EXTRA = [0x0E33, 0x0EB3]
SPACINGMARK_EXCLUDE = [
    0x102B, 0x102C, 0x1038, (0x1062, 0x1064), (0x1067, 0x106D),
    0x1083, (0x1087, 0x108C), 0x108F, (0x109A, 0x109C), 0x1A61,
    0x1A63, 0x1A64, 0xAA7B, 0xAA7D, 0x11720, 0x11721,
]

EXTENDED_PICTOGRAPHIC = [
    0x00A9, 0x00AE, 0x203C, 0x2049, 0x2122, 0x2139, (0x2194, 0x2199),
    (0x21A9, 0x21AA), (0x231A, 0x231B), 0x2328, 0x2388, 0x23CF,
    (0x23E9, 0x23F3), (0x23F8, 0x23FA), 0x24C2, (0x25AA, 0x25AB),
    0x25B6, 0x25C0, (0x25FB, 0x25FE), (0x2600, 0x2605), (0x2607, 0x2612),
    (0x2614, 0x2685), (0x2690, 0x2705), (0x2708, 0x2712), 0x2714, 0x2716,
    0x271D, 0x2721, 0x2728, (0x2733, 0x2734), 0x2744, 0x2747, 0x274C,
    0x274E, (0x2753, 0x2755), 0x2757, (0x2763, 0x2767), (0x2795, 0x2797),
    0x27A1, 0x27B0, 0x27BF, (0x2934, 0x2935), (0x2B05, 0x2B07),
    (0x2B1B, 0x2B1C), 0x2B50, 0x2B55, 0x3030, 0x303D, 0x3297, 0x3299,
    (0x1F000, 0x1F0FF), (0x1F10D, 0x1F10F), 0x1F12F, (0x1F16C, 0x1F171),
    (0x1F17E, 0x1F17F), 0x1F18E, (0x1F191, 0x1F19A), (0x1F1AD, 0x1F1E5),
    (0x1F201, 0x1F20F), 0x1F21A, 0x1F22F, (0x1F232, 0x1F23A),
    (0x1F23C, 0x1F23F), (0x1F249, 0x1F3FA), (0x1F400, 0x1F53D),
    (0x1F546, 0x1F64F), (0x1F680, 0x1F6FF), (0x1F774, 0x1F77F),
    (0x1F7D5, 0x1F7FF), (0x1F80C, 0x1F80F), (0x1F848, 0x1F84F),
    (0x1F85A, 0x1F85F), (0x1F888, 0x1F88F), (0x1F8AE, 0x1F8FF),
    (0x1F90C, 0x1F93A), (0x1F93C, 0x1F945), (0x1F947, 0x1FAFF),
    (0x1FC00, 0x1FFFD),
]

HANGUL_L = [(0x1100, 0x115F), (0xA960, 0xA97C)]
HANGUL_V = [(0x1160, 0x11A7), (0xD7B0, 0xD7C6)]
HANGUL_T = [(0x11A8, 0x11FF), (0xD7CB, 0xD7FB)]
# LV/LVT (AC00..D7A3) are computed arithmetically in C++.

REGIONAL_INDICATOR = [(0x1F1E6, 0x1F1FF)]


def expand(spec):
    out = set()
    for item in spec:
        if isinstance(item, tuple):
            out.update(range(item[0], item[1] + 1))
        else:
            out.add(item)
    return out


def category_set(prefixes):
    out = set()
    for cp in range(MAX_CP):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        if unicodedata.category(chr(cp)).startswith(tuple(prefixes)):
            out.add(cp)
    return out


def to_ranges(cps):
    cps = sorted(cps)
    ranges = []
    for cp in cps:
        if ranges and cp == ranges[-1][1] + 1:
            ranges[-1][1] = cp
        else:
            ranges.append([cp, cp])
    return ranges


def emit_ranges(name, ranges, out):
    out.append(f"const CpRange {name}[] = {{")
    line = []
    for lo, hi in ranges:
        line.append(f"{{0x{lo:X},0x{hi:X}}}")
        if len(line) == 6:
            out.append("    " + ",".join(line) + ",")
            line = []
    if line:
        out.append("    " + ",".join(line) + ",")
    out.append("};")
    out.append(f"const std::size_t {name}_len = sizeof({name}) / sizeof(CpRange);")
    out.append("")


def emit_classed_ranges(name, table, out):
    out.append(f"const ClassedRange {name}[] = {{")
    line = []
    for lo, hi, cls in table:
        line.append(f"{{0x{lo:X},0x{hi:X},Gcb::{cls}}}")
        if len(line) == 4:
            out.append("    " + ",".join(line) + ",")
            line = []
    if line:
        out.append("    " + ",".join(line) + ",")
    out.append("};")
    out.append(f"const std::size_t {name}_len = sizeof({name}) / sizeof(ClassedRange);")
    out.append("")


def main():
    mn = category_set(["Mn"])
    me = category_set(["Me"])
    mc = category_set(["Mc"])
    cc = category_set(["Cc"])
    cf = category_set(["Cf"])
    zl_zp = category_set(["Zl", "Zp"])

    extend = mn | me | expand(OTHER_GRAPHEME_EXTEND) | expand(EMOJI_MODIFIER)
    prepend = expand(PREPEND)
    spacing = (mc - extend - expand(SPACINGMARK_EXCLUDE)) | set(SPACINGMARK_EXTRA)
    control = (cc | cf | zl_zp) - {0x0D, 0x0A, 0x200C, 0x200D} - prepend - extend
    ri = expand(REGIONAL_INDICATOR)

    assigned = {}  # cp -> class name; precedence via insertion checks
    def assign(cps, cls):
        for cp in cps:
            if cp not in assigned:
                assigned[cp] = cls

    assign({0x0D}, "CR")
    assign({0x0A}, "LF")
    assign({0x200D}, "ZWJ")
    assign(extend, "Extend")
    assign(prepend, "Prepend")
    assign(spacing, "SpacingMark")
    assign(control, "Control")
    assign(ri, "RegionalIndicator")
    assign(expand(HANGUL_L), "HangulL")
    assign(expand(HANGUL_V), "HangulV")
    assign(expand(HANGUL_T), "HangulT")

    # merge adjacent equal-class code points into ranges
    gcb_table = []
    for cp in sorted(assigned):
        cls = assigned[cp]
        if gcb_table and cp == gcb_table[-1][1] + 1 and gcb_table[-1][2] == cls:
            gcb_table[-1][1] = cp
        else:
            gcb_table.append([cp, cp, cls])

    punct = category_set(["P"])
    number = category_set(["Nd", "Nl", "No"])
    symbol = category_set(["Sm", "Sc", "Sk", "So"])
    other_base = number | symbol | cc | cf | zl_zp | punct

    out = []
    out.append("// Generated by scripts/gen_ucd_tables.py from UCD %s data. Do not edit."
               % unicodedata.unidata_version)
    out.append("")
    out.append('#include "scribe/ucd.hpp"')
    out.append("")
    out.append("namespace scribe::ucd {")
    out.append("")
    emit_classed_ranges("kGcbRanges", gcb_table, out)
    emit_ranges("kExtPict", to_ranges(expand(EXTENDED_PICTOGRAPHIC)), out)
    emit_ranges("kPunctuation", to_ranges(punct), out)
    emit_ranges("kNumber", to_ranges(number), out)
    emit_ranges("kOtherBase", to_ranges(other_base), out)
    out.append("} // namespace scribe::ucd")
    with open("src/ucd_tables.cpp", "w") as f:
        f.write("\n".join(out) + "\n")
    print("wrote src/ucd_tables.cpp (%d gcb ranges)" % len(gcb_table))

    # ------------------------------------------------------------------
    # Default brevigraph inventory.
    combining = sorted(expand([0x0303, 0x0304, 0x0305, 0x035B, (0x0363, 0x036F)]))

    seeds = expand([
        0x204A, 0x2E52,            # Tironian et, capital et
        (0x02B0, 0x02FF),          # spacing modifier letters
        (0x1D2C, 0x1D7F),          # phonetic extension modifiers
        0x2071, 0x207F,            # superscript i, n
        (0xA750, 0xA75F),          # p/q with stroke or flourish, r rotunda
        0xA76B, 0xA76D, 0xA76F, 0xA770,  # et, is, con, modifier us
        0x0110, 0x0111,            # d with stroke
    ])

    # closure: any code point whose NFD contains one of the combining marks
    marks = set(combining)
    closure = set()
    for cp in range(MAX_CP):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        if cp in marks:
            continue
        nfd = unicodedata.normalize("NFD", chr(cp))
        if len(nfd) > 1 and any(ord(ch) in marks for ch in nfd):
            closure.add(cp)

    code_points = sorted(seeds | closure)
    for cp in code_points:
        assert not (0x41 <= cp <= 0x5A or 0x61 <= cp <= 0x7A)

    pua_ranges = [(0xE000, 0xF8FF)]

    inc = []
    inc.append("// Generated by scripts/gen_ucd_tables.py. Do not edit.")
    inc.append("static const char32_t kDefaultCodePoints[] = {")
    line = []
    for cp in code_points:
        line.append("0x%X" % cp)
        if len(line) == 10:
            inc.append("    " + ",".join(line) + ",")
            line = []
    if line:
        inc.append("    " + ",".join(line) + ",")
    inc.append("};")
    inc.append("static const char32_t kDefaultCombiningMarks[] = {")
    inc.append("    " + ",".join("0x%X" % cp for cp in combining) + ",")
    inc.append("};")
    inc.append("static const std::pair<char32_t, char32_t> kDefaultPuaRanges[] = {")
    for lo, hi in pua_ranges:
        inc.append("    {0x%X, 0x%X}," % (lo, hi))
    inc.append("};")
    with open("src/inventory_default_data.inc", "w") as f:
        f.write("\n".join(inc) + "\n")
    print("wrote src/inventory_default_data.inc (%d code points, %d combining)"
          % (len(code_points), len(combining)))

    js = []
    js.append("{")
    js.append('  "code_points": [')
    for i, cp in enumerate(code_points):
        comma = "," if i + 1 < len(code_points) else ""
        js.append('    "%04X"%s' % (cp, comma))
    js.append("  ],")
    js.append('  "combining_marks": [')
    for i, cp in enumerate(combining):
        comma = "," if i + 1 < len(combining) else ""
        js.append('    "%04X"%s' % (cp, comma))
    js.append("  ],")
    js.append('  "pua_ranges": [')
    for i, (lo, hi) in enumerate(pua_ranges):
        comma = "," if i + 1 < len(pua_ranges) else ""
        js.append('    ["%04X", "%04X"]%s' % (lo, hi, comma))
    js.append("  ]")
    js.append("}")
    with open("data/brevigraph_inventory.json", "w") as f:
        f.write("\n".join(js) + "\n")
    print("wrote data/brevigraph_inventory.json")
    return 0


if __name__ == "__main__":
    sys.exit(main())
