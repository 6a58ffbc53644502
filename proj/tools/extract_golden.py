#!/usr/bin/env python3
"""One-off extraction of the beta tables from the LaTeX source into golden files.

Usage: extract_golden.py SOURCE.tex OUTDIR

The output is committed under data/golden/ and is never regenerated by the build.
"""
import re
import sys
from fractions import Fraction
from pathlib import Path

SECTIONS = {1: "sec:output1", 2: "sec:output2", 3: "sec:output3", 4: "sec:output4"}
ROW = re.compile(r"\{\\beta\}_\{?(\d+)\}?\s*=")
# Misprinted rows: (case, beta index) -> (corrected integer vector, note).
ERRATA = {
    (4, 10): ([-3, -3, -3, -3, -3, 5, 5, 5],
              "beta 10 is printed with first entry 3; an element of t* must have coordinate sum 0, "
              "so it is corrected to -3"),
}
SCALE_VEC = re.compile(r"\\tfrac\s*\{\s*(\d+)\s*\}\s*\{\s*(\d+)\s*\}\s*\(([-\d,\s]+)\)")


def section_text(src, label):
    start = src.index("\\label{%s}" % label)
    end = src.find("\\section{", start)
    return src[start:end if end >= 0 else len(src)]


def index_cells(text):
    text = re.sub(r"\\cline\{[^}]*\}", " ", text)
    text = re.sub(r"\\hskip\s*[\d.]+in", " ", text)
    text = re.sub(r",\s*\\\\", ",", text)
    cells = []
    for cell in re.split(r"&|\\\\", text):
        nums = re.findall(r"\d+", re.sub(r"\\[a-zA-Z]+", " ", cell))
        if nums:
            cells.append([int(n) for n in nums])
        elif re.search(r"(?<![a-zA-Z])-(?![a-zA-Z\d])", re.sub(r"\\[a-zA-Z]+", " ", cell)):
            cells.append([])
    return cells


def rows_of(section):
    marks = list(ROW.finditer(section))
    for pos, m in enumerate(marks):
        end = marks[pos + 1].start() if pos + 1 < len(marks) else len(section)
        body = section[m.end():end]
        body = body.split("\\end{tabular}")[0] if pos + 1 == len(marks) else body
        sv = SCALE_VEC.search(body)
        if not sv:
            raise ValueError("row %s: no scale/vector" % m.group(1))
        vec = [int(x) for x in sv.group(3).split(",")]
        rest = body[:sv.start()] + " " + body[sv.end():]
        cells = index_cells(rest)
        if len(cells) != 2:
            raise ValueError("row %s: expected 2 index cells, got %r" % (m.group(1), cells))
        yield int(m.group(1)), Fraction(int(sv.group(1)), int(sv.group(2))), vec, cells[0], cells[1]


def main():
    src = Path(sys.argv[1]).read_text()
    out = Path(sys.argv[2])
    for case, label in SECTIONS.items():
        rows = list(rows_of(section_text(src, label)))
        lines = ["# beta table for built-in case %d (see FORMAT.md)" % case,
                 "case %d" % case, "rows %d" % len(rows)]
        for idx, scale, vec, z, w in rows:
            if (case, idx) in ERRATA:
                vec, note = ERRATA[(case, idx)]
                lines.insert(1, "# erratum: " + note)
            lines.append("beta %d %d/%d (%s) Z{%s} W{%s}" % (
                idx, scale.numerator, scale.denominator, ",".join(map(str, vec)),
                ",".join(map(str, z)), ",".join(map(str, w))))
        (out / ("case%d.txt" % case)).write_text("\n".join(lines) + "\n")
        print("case %d: %d rows" % (case, len(rows)))


if __name__ == "__main__":
    main()
