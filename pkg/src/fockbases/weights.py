"""Charges, roots, column-strict tableaux and multipartitions.

A column-strict tableau is stored through its multipartition: the parts of
the ``k``-th component are the entries of column ``k`` of ``A - A^Lambda``
read from the top.  Column arrays are derived on demand at a chosen
truncation level.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Mapping

__all__ = [
    "IndexSet",
    "Charge",
    "RootElement",
    "Multipartition",
    "CSTableau",
    "BlockFilter",
    "Structure",
    "ChargeMismatch",
    "ResidueOutsideIndexSet",
    "BoundedIndexSet",
    "TruncationError",
    "residue",
    "weight_of",
    "enumerate_block",
    "blocks_up_to",
    "bruhat_leq",
    "column_reading",
    "columns",
    "truncation_level",
    "transpose",
    "pairing_a",
    "is_restricted",
    "is_reverse_restricted",
    "ground_state",
    "tableau_from_columns",
    "partition_transpose",
    "addable_nodes",
    "removable_nodes",
    "component_content",
]


class ChargeMismatch(ValueError):
    pass


class ResidueOutsideIndexSet(ValueError):
    pass


class BoundedIndexSet(ValueError):
    pass


class TruncationError(ValueError):
    pass


@dataclass(frozen=True)
class IndexSet:
    """``I = {min, min+1, ...}`` or all of ``Z`` when ``min`` is None."""

    min: int | None = None

    @classmethod
    def Z(cls) -> "IndexSet":
        return cls(None)

    @property
    def unbounded(self) -> bool:
        return self.min is None

    def __contains__(self, i: int) -> bool:
        return self.min is None or i >= self.min

    def to_json(self):
        return "Z" if self.min is None else {"min": self.min}

    @classmethod
    def from_json(cls, obj) -> "IndexSet":
        if obj == "Z" or obj is None:
            return cls(None)
        return cls(int(obj["min"]))

    def __str__(self):
        return "Z" if self.min is None else f"Z>={self.min}"


@dataclass(frozen=True)
class Charge:
    """The dominant weight ``Lambda_{m_1} + ... + Lambda_{m_l}``."""

    charges: tuple[int, ...]
    index_set: IndexSet = field(default_factory=IndexSet)

    def __post_init__(self):
        object.__setattr__(self, "charges", tuple(int(m) for m in self.charges))
        if not self.charges:
            raise ValueError("level must be at least 1")
        if any(a < b for a, b in zip(self.charges, self.charges[1:])):
            raise ValueError(f"charges must be weakly decreasing, got {self.charges}")
        lo = self.index_set.min
        if lo is not None and self.charges[-1] < lo:
            raise ValueError(f"charge {self.charges[-1]} lies outside I_+ = Z>={lo}")

    @property
    def level(self) -> int:
        return len(self.charges)

    def transpose(self) -> "Charge":
        if not self.index_set.unbounded:
            raise BoundedIndexSet("transpose needs the index set Z")
        return Charge(tuple(-m for m in reversed(self.charges)), self.index_set)

    def __str__(self):
        return ",".join(map(str, self.charges))


class RootElement(Mapping):
    """A finitely supported map residue -> integer, hashable.

    Elements of ``Q_+`` have nonnegative values; differences (elements of
    ``Q``) use the same class with :meth:`is_nonnegative` as the test.
    """

    __slots__ = ("_items", "_hash")

    def __init__(self, mult: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = mult.items() if isinstance(mult, Mapping) else mult
        acc: dict[int, int] = {}
        for i, c in items:
            acc[int(i)] = acc.get(int(i), 0) + int(c)
        self._items = tuple(sorted((i, c) for i, c in acc.items() if c))
        self._hash = hash(self._items)

    @classmethod
    def from_residues(cls, residues: Iterable[int]) -> "RootElement":
        acc: dict[int, int] = {}
        for r in residues:
            acc[r] = acc.get(r, 0) + 1
        return cls(acc)

    def __getitem__(self, i):
        for j, c in self._items:
            if j == i:
                return c
        return 0

    def __iter__(self) -> Iterator[int]:
        return (i for i, _ in self._items)

    def __len__(self):
        return len(self._items)

    def __contains__(self, i):
        return any(j == i for j, _ in self._items)

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if isinstance(other, RootElement):
            return self._items == other._items
        if isinstance(other, Mapping):
            return self._items == RootElement(other)._items
        return NotImplemented

    def __add__(self, other: Mapping[int, int]) -> "RootElement":
        return RootElement(list(self._items) + list(other.items()))

    def __sub__(self, other: Mapping[int, int]) -> "RootElement":
        return RootElement(list(self._items) + [(i, -c) for i, c in other.items()])

    def plus_simple(self, i: int, sign: int = 1) -> "RootElement":
        return RootElement(list(self._items) + [(i, sign)])

    def negate_residues(self) -> "RootElement":
        return RootElement((-i, c) for i, c in self._items)

    @property
    def height(self) -> int:
        return sum(c for _, c in self._items)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for _, c in self._items)

    def min_residue(self) -> int | None:
        return self._items[0][0] if self._items else None

    def to_json(self) -> dict:
        return {str(i): c for i, c in self._items}

    @classmethod
    def from_json(cls, obj: Mapping) -> "RootElement":
        return cls({int(k): int(v) for k, v in obj.items()})

    def label(self) -> str:
        return ",".join(f"{i}:{c}" for i, c in self._items) or "0"

    def __repr__(self):
        return f"RootElement({dict(self._items)})"


@dataclass(frozen=True, order=True)
class Multipartition:
    parts: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        clean = []
        for p in self.parts:
            p = tuple(int(x) for x in p)
            while p and p[-1] == 0:
                p = p[:-1]
            if any(x < 0 for x in p) or any(a < b for a, b in zip(p, p[1:])):
                raise ValueError(f"not a partition: {p}")
            clean.append(p)
        object.__setattr__(self, "parts", tuple(clean))

    @property
    def size(self) -> int:
        return sum(sum(p) for p in self.parts)

    def __len__(self):
        return len(self.parts)

    def boxes(self) -> Iterator[tuple[int, int, int]]:
        """Boxes ``(component, row, col)``, 1-based, component-major."""
        for k, p in enumerate(self.parts, start=1):
            for i, length in enumerate(p, start=1):
                for j in range(1, length + 1):
                    yield k, i, j

    def add_box(self, k: int, row: int) -> "Multipartition":
        parts = [list(p) for p in self.parts]
        p = parts[k - 1]
        if row == len(p) + 1:
            p.append(1)
        else:
            p[row - 1] += 1
        return Multipartition(tuple(tuple(x) for x in parts))

    def remove_box(self, k: int, row: int) -> "Multipartition":
        parts = [list(p) for p in self.parts]
        parts[k - 1][row - 1] -= 1
        return Multipartition(tuple(tuple(x) for x in parts))

    def __str__(self):
        return "(" + ",".join("(" + ",".join(map(str, p)) + ("," if len(p) == 1 else "") + ")" for p in self.parts) + ")"


@dataclass(frozen=True, order=True)
class CSTableau:
    """Column-strict tableau, stored via its multipartition."""

    mp: Multipartition
    charge: Charge = field(compare=False)

    def __post_init__(self):
        if not isinstance(self.mp, Multipartition):
            object.__setattr__(self, "mp", Multipartition(tuple(tuple(p) for p in self.mp)))
        if len(self.mp) != self.charge.level:
            raise ValueError(f"multipartition has {len(self.mp)} components, level is {self.charge.level}")

    def __eq__(self, other):
        if not isinstance(other, CSTableau):
            return NotImplemented
        return self.mp == other.mp and self.charge == other.charge

    def __hash__(self):
        return hash((self.mp, self.charge.charges))

    @property
    def parts(self) -> tuple[tuple[int, ...], ...]:
        return self.mp.parts

    @property
    def size(self) -> int:
        return self.mp.size

    def to_json(self) -> dict:
        return {
            "charge": list(self.charge.charges),
            "index_set": self.charge.index_set.to_json(),
            "parts": [list(p) for p in self.mp.parts],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "CSTableau":
        charge = Charge(tuple(obj["charge"]), IndexSet.from_json(obj.get("index_set", "Z")))
        t = cls(Multipartition(tuple(tuple(p) for p in obj["parts"])), charge)
        weight_of(t)
        return t

    def __str__(self):
        return str(self.mp)

    def __repr__(self):
        return f"CSTableau({self.mp}, charge={self.charge.charges})"


def ground_state(charge: Charge) -> CSTableau:
    return CSTableau(Multipartition(((),) * charge.level), charge)


def residue(charge: Charge, component: int, row: int, col: int) -> int:
    """Residue ``m_k + j - i`` of box ``(i, j)`` in component ``k`` (1-based)."""
    return charge.charges[component - 1] + col - row


def weight_of(t: CSTableau) -> RootElement:
    """The ``alpha`` with ``wt(A) = Lambda - alpha``: the residue content of ``lambda(A)``."""
    res = [residue(t.charge, k, i, j) for k, i, j in t.mp.boxes()]
    bad = [r for r in res if r not in t.charge.index_set]
    if bad:
        raise ResidueOutsideIndexSet(f"residues {sorted(set(bad))} outside {t.charge.index_set}")
    return RootElement.from_residues(res)


def component_content(t: CSTableau, k: int) -> RootElement:
    m = t.charge.charges[k - 1]
    return RootElement.from_residues(m + j - i for i, length in enumerate(t.parts[k - 1], 1) for j in range(1, length + 1))


def truncation_level(charge: Charge, alpha: Mapping[int, int]) -> int:
    """Lowest row that can differ from the ground state in the block ``alpha``."""
    lo = min((i for i, c in alpha.items() if c), default=None)
    return charge.charges[-1] if lo is None else min(lo, charge.charges[-1])


def columns(t: CSTableau, level: int | None = None) -> list[tuple[int, ...]]:
    """Column entries, each read top to bottom, for rows ``>= level``."""
    k = _check_level(t, level)
    out = []
    for m, p in zip(t.charge.charges, t.parts):
        col = []
        for row in range(m, k - 1, -1):
            r = m + 1 - row
            col.append(row + (p[r - 1] if r <= len(p) else 0))
        out.append(tuple(col))
    return out


def _check_level(t: CSTableau, level: int | None) -> int:
    tl = truncation_level(t.charge, weight_of(t))
    if level is None:
        # bounded index sets have a natural finite tableau; otherwise truncate
        lo = t.charge.index_set.min
        return tl if lo is None else lo
    if level > tl:
        raise TruncationError(f"level {level} cuts through non-ground rows (need <= {tl})")
    lo = t.charge.index_set.min
    if lo is not None and level < lo:
        raise TruncationError(f"level {level} lies below the index set {t.charge.index_set}")
    return level


def column_reading(t: CSTableau, reversed: bool = False, level: int | None = None) -> tuple[int, ...]:
    """Entries read down columns, leftmost column first (rightmost if ``reversed``)."""
    cols = columns(t, level)
    if reversed:
        cols = cols[::-1]
    return tuple(x for c in cols for x in c)


def tableau_from_columns(charge: Charge, cols: Iterable[Iterable[int]], level: int) -> CSTableau:
    """Inverse of :func:`columns`; columns are given top to bottom."""
    parts = []
    for m, col in zip(charge.charges, cols):
        col = tuple(col)
        if len(col) != m - level + 1:
            raise ValueError(f"column of length {len(col)} does not fit charge {m} at level {level}")
        if any(a <= b for a, b in zip(col, col[1:])):
            raise ValueError(f"column {col} is not strictly decreasing from the top")
        rows = range(m, level - 1, -1)
        parts.append(tuple(x - row for x, row in zip(col, rows)))
    t = CSTableau(Multipartition(tuple(parts)), charge)
    weight_of(t)
    return t


def partition_transpose(p: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sum(1 for x in p if x > j) for j in range(p[0])) if p else ()


def transpose(t: CSTableau) -> CSTableau:
    """``A -> A^t`` with ``lambda(A^t) = lambda(A)^t`` for the charge ``Lambda^t``."""
    ct = t.charge.transpose()
    parts = tuple(partition_transpose(p) for p in reversed(t.parts))
    return CSTableau(Multipartition(parts), ct)


def pairing_a(charge: Charge, alpha: Mapping[int, int]) -> int:
    """``(Lambda, alpha) - (alpha, alpha)/2``."""
    lam = sum(alpha.get(m, 0) for m in charge.charges)
    sq = sum(c * c for c in alpha.values()) - sum(c * alpha.get(i + 1, 0) for i, c in alpha.items())
    return lam - sq


def is_restricted(t: CSTableau) -> bool:
    """Multipartition form of the standard condition."""
    m, p = t.charge.charges, t.parts
    for i in range(len(m) - 1):
        a, b, shift = p[i], p[i + 1], m[i] - m[i + 1]
        for j in range(1, len(a) - shift + 1):
            if a[j + shift - 1] > (b[j - 1] if j <= len(b) else 0):
                return False
    return True


def is_reverse_restricted(t: CSTableau) -> bool:
    """Multipartition form of the reverse-standard condition."""
    m, p = t.charge.charges, t.parts
    for i in range(len(m) - 1):
        a, b, shift = p[i], p[i + 1], m[i] - m[i + 1]
        for j in range(1, len(b) + 1):
            if (a[j - 1] if j <= len(a) else 0) + shift < b[j - 1]:
                return False
    return True


class Structure(Enum):
    """Which tensor order (and hence which crystal and monomial basis) is meant."""

    STANDARD = "standard"
    REVERSE = "reverse"


class BlockFilter(Enum):
    ALL = "all"
    STANDARD = "standard"
    REVERSE = "reverse"


def _partitions_with_content(m: int, avail: dict[int, int], row: int = 1, cap: int | None = None):
    """Partitions (rows from ``row`` on) whose boxes' residues fit in ``avail``."""
    yield ()
    start = m + 1 - row
    length = 0
    used: list[int] = []
    while cap is None or length < cap:
        r = start + length
        if avail.get(r, 0) <= 0:
            break
        avail[r] -= 1
        used.append(r)
        length += 1
        for rest in _partitions_with_content(m, avail, row + 1, length):
            yield (length,) + rest
    for r in used:
        avail[r] += 1


def enumerate_block(charge: Charge, alpha: Mapping[int, int], filter: BlockFilter = BlockFilter.ALL) -> list[CSTableau]:
    """All tableaux of weight ``Lambda - alpha``, sorted by part lists."""
    alpha = RootElement(alpha)
    if not alpha.is_nonnegative():
        return []
    if any(i not in charge.index_set for i in alpha):
        return []
    avail = dict(alpha.items())
    found: list[tuple[tuple[int, ...], ...]] = []

    def rec(k: int, acc: list):
        if k == charge.level:
            if all(v == 0 for v in avail.values()):
                found.append(tuple(acc))
            return
        for lam in list(_partitions_with_content(charge.charges[k], avail)):
            res = [charge.charges[k] + j - i for i, length in enumerate(lam, 1) for j in range(1, length + 1)]
            for r in res:
                avail[r] -= 1
            if all(v >= 0 for v in avail.values()):
                rec(k + 1, acc + [lam])
            for r in res:
                avail[r] += 1

    rec(0, [])
    out = [CSTableau(Multipartition(parts), charge) for parts in sorted(found)]
    if filter is BlockFilter.STANDARD:
        out = [t for t in out if is_restricted(t)]
    elif filter is BlockFilter.REVERSE:
        out = [t for t in out if is_reverse_restricted(t)]
    return out


def addable_nodes(mp: Multipartition) -> list[tuple[int, int, int]]:
    """Addable nodes ``(component, row, col)`` in top-to-bottom order."""
    out = []
    for k, p in enumerate(mp.parts, start=1):
        for row in range(1, len(p) + 2):
            cur = p[row - 1] if row <= len(p) else 0
            if row == 1 or p[row - 2] > cur:
                out.append((k, row, cur + 1))
    return out


def removable_nodes(mp: Multipartition) -> list[tuple[int, int, int]]:
    """Removable nodes ``(component, row, col)`` in top-to-bottom order."""
    out = []
    for k, p in enumerate(mp.parts, start=1):
        for row in range(1, len(p) + 1):
            nxt = p[row] if row < len(p) else 0
            if p[row - 1] > nxt:
                out.append((k, row, p[row - 1]))
    return out


def blocks_up_to(charge: Charge, max_height: int) -> list[RootElement]:
    """Every nonempty block ``alpha`` with ``ht(alpha) <= max_height``."""
    seen = {RootElement()}
    frontier = {ground_state(charge).mp}
    for _ in range(max_height):
        nxt = set()
        for mp in frontier:
            for k, row, col in addable_nodes(mp):
                if residue(charge, k, row, col) in charge.index_set:
                    nxt.add(mp.add_box(k, row))
        for mp in nxt:
            seen.add(weight_of(CSTableau(mp, charge)))
        frontier = nxt
    return sorted(seen, key=lambda a: (a.height, tuple(a.items())))


def bruhat_leq(a: CSTableau, b: CSTableau) -> bool:
    """Bruhat order: equal weights and dominance of partial column weights."""
    if a.charge != b.charge:
        raise ChargeMismatch("tableaux have different charges")
    if a == b:
        return True
    if weight_of(a) != weight_of(b):
        return False
    acc: dict[int, int] = {}
    for k in range(1, a.charge.level):
        for i, c in component_content(b, k).items():
            acc[i] = acc.get(i, 0) + c
        for i, c in component_content(a, k).items():
            acc[i] = acc.get(i, 0) - c
        if any(v < 0 for v in acc.values()):
            return False
    return True
