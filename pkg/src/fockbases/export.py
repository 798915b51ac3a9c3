"""Deterministic text renderings: CSV, JSON, LaTeX, DOT."""

from __future__ import annotations

import csv
import io
import json

from .matrix import PolyMatrix

FORMATS = ("csv", "json", "latex", "dot")


def _label(x) -> str:
    return str(x)


def matrix_to_csv(m: PolyMatrix) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([""] + [_label(c) for c in m.cols])
    for r in m.rows:
        w.writerow([_label(r)] + [str(m[r, c]) for c in m.cols])
    return buf.getvalue()


def matrix_to_json(m: PolyMatrix, meta: dict | None = None) -> str:
    obj = {
        "rows": [r.to_json() if hasattr(r, "to_json") else r for r in m.rows],
        "cols": [c.to_json() if hasattr(c, "to_json") else c for c in m.cols],
        "entries": [[str(m[r, c]) for c in m.cols] for r in m.rows],
    }
    if meta:
        obj["meta"] = meta
    return json.dumps(obj, sort_keys=True, indent=1) + "\n"


def _latex_poly(p) -> str:
    s = str(p)
    # q^-2 -> q^{-2}
    out, k = [], 0
    while k < len(s):
        if s[k] == "^":
            j = k + 1
            if j < len(s) and s[j] == "-":
                j += 1
            while j < len(s) and s[j].isdigit():
                j += 1
            out.append("^{" + s[k + 1:j] + "}")
            k = j
        else:
            out.append(s[k])
            k += 1
    return "".join(out)


def matrix_to_latex(m: PolyMatrix) -> str:
    colspec = "l|" + "c" * len(m.cols)
    lines = ["\\begin{tabular}{" + colspec + "}",
             " & " + " & ".join(f"${_label(c)}$" for c in m.cols) + " \\\\",
             "\\hline"]
    for r in m.rows:
        lines.append(f"${_label(r)}$ & " + " & ".join(f"${_latex_poly(m[r, c])}$" for c in m.cols) + " \\\\")
    lines.append("\\end{tabular}")
    return "\n".join(lines) + "\n"


def int_matrix_to_polymatrix(rows, cols, entries) -> PolyMatrix:
    from .laurent import LaurentPoly

    out = PolyMatrix(rows, cols)
    for a, r in enumerate(rows):
        for b, c in enumerate(cols):
            out[r, c] = LaurentPoly(entries[a][b])
    return out


def render_matrix(m: PolyMatrix, fmt: str, meta: dict | None = None) -> str:
    if fmt == "csv":
        return matrix_to_csv(m)
    if fmt == "json":
        return matrix_to_json(m, meta)
    if fmt == "latex":
        return matrix_to_latex(m)
    raise ValueError(f"format {fmt!r} is not available for matrices")
