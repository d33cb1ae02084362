#!/usr/bin/env python3
"""Extract the published CM-field table from its LaTeX source into a TSV file.

Output columns (tab-separated):
    degree  group_order  group_id  coeffs(low-to-high, comma-sep)  h  disc("p^e p^e ...")

Run from the repository root:
    python3 tools/gen/transcribe_appendix.py SOURCE.tex data/appendix_fields.tsv
"""

import re
import sys
from fractions import Fraction

# Galois group column -> small-group identifier.  Spellings as they appear in
# the table; whitespace is stripped before lookup.
GROUP_IDS = {
    r"\CC_2": (2, 1),
    r"\CC_4": (4, 1),
    r"\CC_2^2": (4, 2),
    r"\CC_6": (6, 2),
    r"\CC_8": (8, 1),
    r"\CC_2\times\CC_4": (8, 2),
    r"\DD_4": (8, 3),
    r"\CC_2^3": (8, 5),
    r"\CC_{10}": (10, 2),
    r"\CC_{12}": (12, 2),
    r"\DD_6": (12, 4),
    r"\CC_2\times\CC_6": (12, 5),
    r"\CC_{14}": (14, 2),
    r"\CC_{16}": (16, 1),
    r"\CC_4^2": (16, 2),
    r"\CC_2^2\rtimes\CC_4": (16, 3),
    r"\CC_2\times\CC_8": (16, 5),
    r"\DD_8": (16, 7),
    r"\CC_2^2\times\CC_4": (16, 10),
    r"\CC_2\times\DD_4": (16, 11),
    r"\CC_2\times\QQQ_8": (16, 12),
    r"\CC_4\circ\DD_4": (16, 13),
    r"\DD_4\rtimes\CC_2": (16, 13),
    r"\CC_{18}": (18, 2),
    r"\CC_3\times\CC_6": (18, 5),
    r"\CC_{20}": (20, 2),
    r"\DD_{10}": (20, 4),
    r"\CC_2\times\CC_{10}": (20, 5),
    r"{\rmSL}_2({\mathbfF}_3)": (24, 3),
    r"\CC_4\times\mathfrakS_3": (24, 5),
    r"\DD_{12}": (24, 6),
    r"\CC_2\times\CC_{12}": (24, 9),
    r"\CC_3\times\DD_4": (24, 10),
    r"\CC_2\times\mathfrakA_4": (24, 13),
    r"\CC_2^2\times\mathfrakS_3": (24, 14),
    r"\CC_2^2\times\CC_6": (24, 15),
    r"\CC_2^2\rtimes\CC_8": (32, 5),
    r"\CC_2\times\CC_4\rtimes\CC_4": (32, 23),
    r"\CC_2\times(\CC_4.\CC_4)": (32, 37),
    r"\CC_4\circ\DD_8": (32, 42),
    r"\mathfrakS_3\times\CC_6": (36, 12),
    r"\CC_2\times\mathbf{F}_5\rtimes\mathbf{F}_5^\times": (40, 12),
    r"\DD_4\rtimes_*\mathfrakS_3": (48, 15),
}

TERM_RE = re.compile(
    r"([+-]?)\s*(\d+)?\s*(x)?(?:\^\{(\d+)\})?"
)


def parse_poly(cell):
    """LaTeX polynomial -> list of integer coefficients, low degree first."""
    s = cell
    for env in (r"\begin{multline*}", r"\end{multline*}", r"\begin{aligned}",
                r"\end{aligned}", r"\begin{center}", r"\end{center}"):
        s = s.replace(env, " ")
    s = re.sub(r"\\vspace\{[^}]*\}", " ", s)
    s = re.sub(r"\\begin\{minipage\}\{[^}]*\}", " ", s)
    s = s.replace(r"\end{minipage}", " ")
    s = s.replace("$", " ").replace("\n", " ")
    s = s.strip()
    if not s:
        return None
    coeffs = {}
    pos = 0
    while pos < len(s):
        m = TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            if s[pos].isspace():
                pos += 1
                continue
            raise ValueError(f"cannot parse polynomial at ...{s[pos:pos+25]!r}")
        sign, coef, xs, expo = m.groups()
        if coef is None and xs is None:
            pos = m.end()
            continue
        c = int(coef) if coef is not None else 1
        if sign == "-":
            c = -c
        e = 0
        if xs:
            e = int(expo) if expo is not None else 1
        coeffs[e] = coeffs.get(e, 0) + c
        pos = m.end()
    deg = max(coeffs)
    return [coeffs.get(i, 0) for i in range(deg + 1)]


def parse_disc(cell):
    s = cell.replace("$", " ").replace(r"\cdot", " ").strip()
    out = []
    for m in re.finditer(r"(\d+)(?:\^\{(\d+)\})?", s):
        p, e = int(m.group(1)), int(m.group(2) or 1)
        out.append((p, e))
    if not out:
        raise ValueError(f"no disc in {cell!r}")
    return out


def group_key(cell):
    s = cell.replace("$", "")
    s = re.sub(r"\\hspace\{[^}]*\}", "", s)
    s = s.replace(r"\footnotemark", "")
    s = re.sub(r"\s+", "", s)
    return s


def main(paper_path, out_path):
    text = open(paper_path).read()
    start = text.index(r"\section{The CM-fields with (relative) class number one}")
    body = text[start:]

    rows = []
    for tab in re.finditer(r"\\begin\{tabular\}.*?\\end\{tabular\}", body, re.S):
        block = tab.group(0)
        block = block[block.index(r"\\\hline"):]  # skip header row
        block = block.replace(r"\end{tabular}", " ")
        # cell-internal line breaks inside multline environments
        block = re.sub(r"\\\\\[[^\]]*\]", " ", block)
        block = block.replace(r"\hline", " ").replace("\n", " ")
        block = re.sub(r"\\cline\{[^}]*\}", " ", block)
        carried = {}  # column-half index -> (degree, group key)
        for raw in block.split(r"\\"):
            if not raw.strip():
                continue
            cells = raw.split("&")
            if len(cells) not in (5, 10):
                if raw.strip(" $"):
                    raise ValueError(f"bad row ({len(cells)} cells): {raw[:90]!r}")
                continue
            for half in range(len(cells) // 5):
                d_c, g_c, f_c, h_c, disc_c = cells[5 * half:5 * half + 5]
                if not f_c.strip():
                    continue
                d = d_c.strip()
                g = group_key(g_c)
                if d:
                    carried[half] = (int(d), g)
                else:
                    d0, g0 = carried[half]
                    carried[half] = (d0, g if g else g0)
                degree, gkey = carried[half]
                order, gid = GROUP_IDS[gkey]
                if order != degree:
                    raise ValueError(f"group order {order} != degree {degree}")
                poly = parse_poly(f_c)
                if poly is None:
                    continue
                if len(poly) - 1 != degree:
                    raise ValueError(f"poly degree {len(poly)-1} != {degree}: {f_c[:60]}")
                h = int(h_c.strip().strip("$"))
                disc = parse_disc(disc_c)
                rows.append((degree, order, gid, poly, h, disc))

    with open(out_path, "w") as out:
        out.write("# degree\tgroup_order\tgroup_id\tcoefficients(low-to-high)\th\tdisc\n")
        for degree, order, gid, poly, h, disc in rows:
            coeffs = ",".join(str(c) for c in poly)
            d = " ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in disc)
            out.write(f"{degree}\t{order}\t{gid}\t{coeffs}\t{h}\t{d}\n")

    # summary for cross-checking against the published per-group counts
    from collections import Counter
    cnt = Counter((r[1], r[2]) for r in rows)
    print(f"{len(rows)} rows")
    for k in sorted(cnt):
        print(f"  ({k[0]},{k[1]}): {cnt[k]}")


if __name__ == "__main__":
    main(sys.argv[1], sys.argv[2])
