"""Crystal operators on tableaux and the rectification bijections.

The multipartition model (addable/removable nodes read from top to bottom)
is the primary path.  :func:`tableau_signature` reads entries ``i``/``i+1``
off the column reading instead and is kept as an independent cross-check.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field

from .weights import (
    Charge,
    CSTableau,
    Multipartition,
    Structure,
    addable_nodes,
    columns,
    ground_state,
    is_restricted,
    is_reverse_restricted,
    removable_nodes,
    residue,
    tableau_from_columns,
    truncation_level,
    weight_of,
)

__all__ = [
    "SignatureReport",
    "CrystalGraph",
    "NotStandard",
    "NotReverseStandard",
    "signature",
    "tableau_signature",
    "e_tilde",
    "f_tilde",
    "tableau_e_tilde",
    "tableau_f_tilde",
    "crystal_component",
    "rectify_down",
    "rectify_up",
]


class NotStandard(ValueError):
    pass


class NotReverseStandard(ValueError):
    pass


@dataclass(frozen=True)
class SignatureReport:
    """``boxes`` holds ``(node, sign)``; ``reduced`` keeps ``0`` for cancelled slots."""

    boxes: tuple[tuple[tuple[int, int, int], str], ...]
    reduced: tuple[str, ...]

    @property
    def eps(self) -> int:
        return self.reduced.count("-")

    @property
    def phi(self) -> int:
        return self.reduced.count("+")

    def leftmost_minus(self):
        for (node, _), s in zip(self.boxes, self.reduced):
            if s == "-":
                return node
        return None

    def rightmost_plus(self):
        for (node, _), s in zip(reversed(self.boxes), reversed(self.reduced)):
            if s == "+":
                return node
        return None


def _reduce(signs: list[str]) -> tuple[str, ...]:
    # cancel "-+" pairs that are adjacent once zeros are ignored
    out = list(signs)
    stack: list[int] = []
    for r, s in enumerate(out):
        if s == "-":
            stack.append(r)
        elif s == "+" and stack:
            out[stack.pop()] = "0"
            out[r] = "0"
    return tuple(out)


def _component_order(t: CSTableau, structure: Structure) -> list[int]:
    ks = list(range(1, t.charge.level + 1))
    return ks if structure is Structure.STANDARD else ks[::-1]


def signature(t: CSTableau, i: int, structure: Structure = Structure.STANDARD) -> SignatureReport:
    """Reduced ``i``-signature from the addable (+) and removable (-) nodes of residue ``i``."""
    nodes = [(n, "+") for n in addable_nodes(t.mp) if residue(t.charge, *n) == i]
    nodes += [(n, "-") for n in removable_nodes(t.mp) if residue(t.charge, *n) == i]
    rank = {k: pos for pos, k in enumerate(_component_order(t, structure))}
    nodes.sort(key=lambda x: (rank[x[0][0]], x[0][1]))
    return SignatureReport(tuple(nodes), _reduce([s for _, s in nodes]))


def e_tilde(t: CSTableau, i: int, structure: Structure = Structure.STANDARD) -> CSTableau | None:
    """Remove the box at the leftmost ``-``; ``None`` stands for the absent value."""
    node = signature(t, i, structure).leftmost_minus()
    if node is None:
        return None
    k, row, _ = node
    return CSTableau(t.mp.remove_box(k, row), t.charge)


def f_tilde(t: CSTableau, i: int, structure: Structure = Structure.STANDARD) -> CSTableau | None:
    """Add a box at the rightmost ``+``, when ``i`` is an allowed residue."""
    if i not in t.charge.index_set:
        return None
    node = signature(t, i, structure).rightmost_plus()
    if node is None:
        return None
    k, row, _ = node
    return CSTableau(t.mp.add_box(k, row), t.charge)


# -- second path: entries i and i+1 on the tableau itself --------------------


def _entry_level(t: CSTableau, i: int) -> int:
    k = min(truncation_level(t.charge, weight_of(t)), i)
    lo = t.charge.index_set.min
    return k if lo is None else max(k, lo)


def tableau_signature(t: CSTableau, i: int, structure: Structure = Structure.STANDARD) -> SignatureReport:
    """Signature from the boxes holding ``i`` (+) or ``i+1`` (-) in (reverse) column reading."""
    level = _entry_level(t, i)
    cols = columns(t, level)
    order = range(len(cols)) if structure is Structure.STANDARD else range(len(cols) - 1, -1, -1)
    boxes = []
    for c in order:
        for pos, x in enumerate(cols[c]):
            if x == i:
                boxes.append(((c + 1, pos, level), "+"))
            elif x == i + 1:
                boxes.append(((c + 1, pos, level), "-"))
    return SignatureReport(tuple(boxes), _reduce([s for _, s in boxes]))


def _replace_entry(t: CSTableau, box, value: int) -> CSTableau:
    c, pos, level = box
    cols = [list(col) for col in columns(t, level)]
    cols[c - 1][pos] = value
    return tableau_from_columns(t.charge, cols, level)


def tableau_e_tilde(t: CSTableau, i: int, structure: Structure = Structure.STANDARD) -> CSTableau | None:
    box = tableau_signature(t, i, structure).leftmost_minus()
    return None if box is None else _replace_entry(t, box, i)


def tableau_f_tilde(t: CSTableau, i: int, structure: Structure = Structure.STANDARD) -> CSTableau | None:
    if i not in t.charge.index_set:
        return None
    box = tableau_signature(t, i, structure).rightmost_plus()
    return None if box is None else _replace_entry(t, box, i + 1)


# -- crystal graphs -----------------------------------------------------------


@dataclass
class CrystalGraph:
    charge: Charge
    structure: Structure
    vertices: list[CSTableau] = field(default_factory=list)
    edges: list[tuple[int, int, int]] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "structure": self.structure.value,
            "vertices": [t.to_json() for t in self.vertices],
            "edges": [list(e) for e in self.edges],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    def to_dot(self) -> str:
        lines = ["digraph crystal {"]
        for n, t in enumerate(self.vertices):
            lines.append(f'  v{n} [label="{t}"];')
        for s, e, i in self.edges:
            lines.append(f'  v{s} -> v{e} [label="{i}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def crystal_component(charge: Charge, structure: Structure = Structure.STANDARD, depth: int = 3) -> CrystalGraph:
    """Breadth-first closure of the ground state under all ``f~_i`` up to ``depth`` boxes."""
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    g = CrystalGraph(charge, structure)
    start = ground_state(charge)
    index = {start: 0}
    g.vertices.append(start)
    queue = deque([start])
    while queue:
        t = queue.popleft()
        if t.size >= depth:
            continue
        for i in sorted({residue(charge, *n) for n in addable_nodes(t.mp)}):
            u = f_tilde(t, i, structure)
            if u is None:
                continue
            if u not in index:
                index[u] = len(g.vertices)
                g.vertices.append(u)
                queue.append(u)
            g.edges.append((index[t], index[u], i))
    return g


# -- rectification ------------------------------------------------------------


def _rect_level(t: CSTableau) -> int:
    return truncation_level(t.charge, weight_of(t))


def rectify_down(t: CSTableau) -> CSTableau:
    """``A -> A_down``: row-insert the reverse column reading from the bottom row."""
    if not is_reverse_restricted(t):
        raise NotReverseStandard(f"{t} is not reverse-standard")
    m = t.charge.charges
    k = _rect_level(t)
    cols = columns(t, k)
    reading = [x for c in reversed(cols) for x in c]
    rows: dict[int, list[int]] = {rho: [] for rho in range(k, m[0] + 1)}
    for a in reading:
        rho = k
        while True:
            row = rows[rho]
            pos = next((j for j, b in enumerate(row) if b > a), None)
            if pos is None:
                row.append(a)
                break
            row[pos], a = a, row[pos]
            rho += 1
    new_cols = [[rows[rho][j] for rho in range(mj, k - 1, -1)] for j, mj in enumerate(m)]
    return tableau_from_columns(t.charge, new_cols, k)


def rectify_up(t: CSTableau) -> CSTableau:
    """``A -> A_up``: insert the column reading backwards into the top-aligned diagram."""
    if not is_restricted(t):
        raise NotStandard(f"{t} is not standard")
    m = t.charge.charges
    k = _rect_level(t)
    cols = columns(t, k)
    reading = [x for c in cols for x in c]
    top = m[0]
    bottom = k - (m[0] - m[-1])
    # after sliding column j up by m_1 - m_j it occupies rows k + m_1 - m_j .. m_1
    rows: dict[int, list[int]] = {rho: [] for rho in range(bottom, top + 1)}
    for a in reversed(reading):
        rho = top
        while True:
            row = rows[rho]
            pos = next((j for j, b in enumerate(row) if b < a), None)
            if pos is None:
                row.append(a)
                break
            row[pos], a = a, row[pos]
            rho -= 1
    new_cols = []
    for j, mj in enumerate(m):
        shift = m[0] - mj
        new_cols.append([rows[rho + shift][j] for rho in range(mj, k - 1, -1)])
    return tableau_from_columns(t.charge, new_cols, k)
