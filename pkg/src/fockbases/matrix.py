"""Dense matrices over the Laurent ring, indexed by ordered label lists.

Convention used throughout the package: column ``j`` of a matrix holds the
coordinates of the image (or of the basis vector) labelled ``cols[j]`` in
the basis labelled by ``rows``.  So a transition matrix whose columns are
the ``L_A`` in monomial coordinates is upper unitriangular when labels are
listed in a linear extension of the Bruhat order.
"""

from __future__ import annotations

from enum import Enum
from typing import Callable, Hashable, Sequence

from .laurent import ONE, ZERO, LaurentPoly

__all__ = [
    "PolyMatrix",
    "BarSemilinearMap",
    "Lattice",
    "NotUnitriangular",
    "NoSolution",
    "invert_unitriangular",
    "lusztig_solve",
    "linear_extension",
]

Order = Callable[[Hashable, Hashable], bool]


class NotUnitriangular(ValueError):
    pass


class NoSolution(ValueError):
    pass


class Lattice(Enum):
    BELOW = "qZ[q]"
    ABOVE = "q^-1Z[q^-1]"


class PolyMatrix:
    """Matrix of :class:`LaurentPoly` with row and column labels."""

    __slots__ = ("rows", "cols", "entries", "_row_pos", "_col_pos")

    def __init__(self, rows: Sequence, cols: Sequence, entries=None):
        self.rows = tuple(rows)
        self.cols = tuple(cols)
        if len(set(self.rows)) != len(self.rows) or len(set(self.cols)) != len(self.cols):
            raise ValueError("duplicate labels")
        if entries is None:
            entries = [[ZERO] * len(self.cols) for _ in self.rows]
        self.entries = [list(r) for r in entries]
        if len(self.entries) != len(self.rows) or any(len(r) != len(self.cols) for r in self.entries):
            raise ValueError("entries do not match label sizes")
        self._row_pos = {a: i for i, a in enumerate(self.rows)}
        self._col_pos = {a: i for i, a in enumerate(self.cols)}

    @classmethod
    def identity(cls, labels: Sequence) -> "PolyMatrix":
        n = len(labels)
        return cls(labels, labels, [[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: Sequence, cols: Sequence) -> "PolyMatrix":
        return cls(rows, cols)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, key):
        a, b = key
        return self.entries[self._row_pos[a]][self._col_pos[b]]

    def __setitem__(self, key, value):
        a, b = key
        self.entries[self._row_pos[a]][self._col_pos[b]] = value

    def row_index(self, label) -> int:
        return self._row_pos[label]

    def col_index(self, label) -> int:
        return self._col_pos[label]

    def column(self, label) -> dict:
        j = self._col_pos[label]
        return {a: self.entries[i][j] for i, a in enumerate(self.rows) if self.entries[i][j]}

    def copy(self) -> "PolyMatrix":
        return PolyMatrix(self.rows, self.cols, self.entries)

    def map(self, fn: Callable[[LaurentPoly], LaurentPoly]) -> "PolyMatrix":
        return PolyMatrix(self.rows, self.cols, [[fn(x) for x in r] for r in self.entries])

    def conj(self) -> "PolyMatrix":
        """Entrywise bar involution."""
        return self.map(LaurentPoly.bar)

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(self.cols, self.rows, [list(c) for c in zip(*self.entries)] if self.rows else [[] for _ in self.cols])

    def reindex(self, rows: Sequence, cols: Sequence) -> "PolyMatrix":
        """Same matrix with rows/columns permuted to the given label orders."""
        return PolyMatrix(rows, cols, [[self[a, b] for b in cols] for a in rows])

    def submatrix(self, rows: Sequence, cols: Sequence) -> "PolyMatrix":
        return self.reindex(rows, cols)

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.cols != other.rows:
            raise ValueError("label mismatch in matrix product")
        n, m = len(self.rows), len(other.cols)
        out = [[ZERO] * m for _ in range(n)]
        ocols = other.entries
        for i in range(n):
            ri = self.entries[i]
            oi = out[i]
            for k, a in enumerate(ri):
                if not a:
                    continue
                rk = ocols[k]
                for j in range(m):
                    b = rk[j]
                    if b:
                        oi[j] = oi[j] + a * b
        return PolyMatrix(self.rows, other.cols, out)

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        self._check_same(other)
        return PolyMatrix(self.rows, self.cols, [[x + y for x, y in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        self._check_same(other)
        return PolyMatrix(self.rows, self.cols, [[x - y for x, y in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def __neg__(self):
        return self.map(lambda x: -x)

    def scale(self, c) -> "PolyMatrix":
        return self.map(lambda x: x * c)

    def _check_same(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("label mismatch")

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.rows == other.rows and self.cols == other.cols and self.entries == other.entries

    def is_zero(self) -> bool:
        return not any(x for r in self.entries for x in r)

    def is_identity(self) -> bool:
        return self.is_square() and all(
            (x == ONE) if i == j else not x for i, r in enumerate(self.entries) for j, x in enumerate(r)
        )

    def at_one(self) -> list[list[int]]:
        return [[x.at_one() for x in r] for r in self.entries]

    def evaluate(self, value) -> list[list]:
        return [[x.evaluate(value) for x in r] for r in self.entries]

    def nonzero_items(self):
        for i, a in enumerate(self.rows):
            for j, b in enumerate(self.cols):
                x = self.entries[i][j]
                if x:
                    yield a, b, x

    def __repr__(self) -> str:
        return f"PolyMatrix({len(self.rows)}x{len(self.cols)})"


class BarSemilinearMap:
    """The map ``v -> M . conj(v)`` on coordinate vectors."""

    def __init__(self, matrix: PolyMatrix, check: bool = True):
        if not matrix.is_square():
            raise ValueError("bar matrix must be square")
        self.matrix = matrix
        if check and not (matrix @ matrix.conj()).is_identity():
            raise ValueError("bar matrix is not an involution")

    def apply(self, vec: dict) -> dict:
        out: dict = {}
        for b, c in vec.items():
            cb = c.bar()
            for a, x in self.matrix.column(b).items():
                out[a] = out.get(a, ZERO) + x * cb
        return {a: x for a, x in out.items() if x}


def linear_extension(labels: Sequence, leq: Order) -> list:
    """Labels sorted so that ``a`` precedes ``b`` whenever ``a < b``."""
    remaining = list(labels)
    out = []
    while remaining:
        for idx, a in enumerate(remaining):
            if not any(b != a and leq(b, a) for b in remaining):
                out.append(a)
                del remaining[idx]
                break
        else:
            raise ValueError("relation is not a partial order (cycle found)")
    return out


def invert_unitriangular(m: PolyMatrix, leq: Order) -> PolyMatrix:
    """Exact inverse of a unitriangular matrix.

    ``m[a, b]`` may be nonzero only when ``leq(a, b)``; the diagonal must be 1.
    """
    if not m.is_square():
        raise NotUnitriangular("matrix is not square")
    labels = m.rows
    for a, b, x in m.nonzero_items():
        if a == b:
            continue
        if not leq(a, b):
            raise NotUnitriangular(f"nonzero entry at ({a}, {b}) violates the order")
    for a in labels:
        if m[a, a] != ONE:
            raise NotUnitriangular(f"diagonal entry at {a} is {m[a, a]}")
    order = linear_extension(labels, leq)
    n = len(order)
    mm = m.reindex(order, order).entries
    inv = [[ZERO] * n for _ in range(n)]
    # back substitution, one column at a time: m . inv[:, j] = e_j
    for j in range(n):
        inv[j][j] = ONE
        for i in range(j - 1, -1, -1):
            acc = ZERO
            row = mm[i]
            for k in range(i + 1, j + 1):
                if row[k] and inv[k][j]:
                    acc = acc + row[k] * inv[k][j]
            inv[i][j] = -acc
    return PolyMatrix(order, order, inv).reindex(labels, labels)


def lusztig_solve(bar_map: BarSemilinearMap | PolyMatrix, leq: Order, lattice: Lattice) -> PolyMatrix:
    """Bar-invariant unitriangular basis with off-diagonal entries in ``lattice``.

    Column ``A`` of the result is ``e_A + sum_{B < A} f_B e_B`` with every
    ``f_B`` in the lattice, fixed by ``v -> bar_matrix . conj(v)``.
    """
    bm = bar_map.matrix if isinstance(bar_map, BarSemilinearMap) else bar_map
    labels = bm.rows
    for a, b, x in bm.nonzero_items():
        if a != b and not leq(a, b):
            raise NoSolution(f"bar matrix entry at ({a}, {b}) violates the order")
    for a in labels:
        if bm[a, a] != ONE:
            raise NoSolution(f"bar matrix diagonal at {a} is {bm[a, a]}")
    order = linear_extension(labels, leq)
    B = bm.reindex(order, order).entries
    n = len(order)
    out = [[ZERO] * n for _ in range(n)]
    for j in range(n):
        col = [ZERO] * n
        col[j] = ONE
        conj_col = [ZERO] * n
        conj_col[j] = ONE
        for i in range(j - 1, -1, -1):
            # f_i - bar(f_i) = sum_{k > i} B[i][k] bar(f_k)
            h = ZERO
            row = B[i]
            for k in range(i + 1, j + 1):
                if row[k] and conj_col[k]:
                    h = h + row[k] * conj_col[k]
            if not h:
                continue
            if not leq(order[i], order[j]):
                raise NoSolution(f"nonzero obstruction {h} outside the order at ({order[i]}, {order[j]})")
            if h.coeff(0) != 0 or h.bar() != -h:
                raise NoSolution(f"obstruction {h} at ({order[i]}, {order[j]})")
            f = h.positive_part() if lattice is Lattice.BELOW else h.negative_part()
            col[i] = f
            conj_col[i] = f.bar()
        for i in range(n):
            out[i][j] = col[i]
    return PolyMatrix(order, order, out).reindex(labels, labels)
