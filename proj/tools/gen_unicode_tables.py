"""Regenerates src/models/unicode_tables.hpp from Python's unicodedata."""
import sys
import unicodedata as u


def ranges(pred, lo=0x80, hi=0x10000):
    rs, start = [], None
    for cp in range(lo, hi):
        p = pred(chr(cp))
        if p and start is None:
            start = cp
        if not p and start is not None:
            rs.append((start, cp - 1))
            start = None
    if start is not None:
        rs.append((start, hi - 1))
    return rs


def fmt(name, rs):
    body = ",\n".join("    {0x%04X, 0x%04X}" % r for r in rs)
    return f"inline constexpr CodepointRange {name}[] = {{\n{body},\n}};\n"


def lit(s):
    parts = []
    for ch in s:
        if ord(ch) < 128 and ch not in '"\\':
            parts.append('"%s"' % ch)
        else:
            parts.append('"' + "".join("\\x%02x" % b for b in ch.encode()) + '"')
    return " ".join(parts) if parts else '""'


def main(path):
    out = [
        "#pragma once\n",
        "// Generated from the Unicode database (Python unicodedata).\n",
        "#include <cstdint>\n#include <string_view>\n",
        "namespace aspectsim::models::unicode {\n",
        "struct CodepointRange {\n  char32_t first;\n  char32_t last;\n};\n",
        "struct FoldEntry {\n  char32_t cp;\n  std::string_view folded;\n};\n",
        fmt("kPunctuation", ranges(lambda c: u.category(c).startswith("P"))),
        fmt("kNonspacingMarks", ranges(lambda c: u.category(c) == "Mn")),
        fmt("kFormatControls", ranges(lambda c: u.category(c) in ("Cc", "Cf"))),
        fmt("kSpaceSeparators", ranges(lambda c: u.category(c) == "Zs")),
    ]
    ent = []
    for cp in range(0x80, 0x530):
        c = chr(cp)
        if u.category(c) == "Mn":
            continue
        s = "".join(ch for ch in u.normalize("NFD", c.lower()) if u.category(ch) != "Mn")
        if s != c:
            ent.append((cp, s))
    lines = ",\n".join("    {0x%04X, %s}" % (cp, lit(s)) for cp, s in ent)
    out.append("// Lowercased, accent-stripped form of non-ASCII letters (sorted by code point).\n")
    out.append(f"inline constexpr FoldEntry kLowerStrip[] = {{\n{lines},\n}};\n")
    out.append("}  // namespace aspectsim::models::unicode\n")
    with open(path, "w") as f:
        f.write("\n".join(out))


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "src/models/unicode_tables.hpp")
