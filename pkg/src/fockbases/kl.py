"""Permutations, Bruhat order, R- and Kazhdan-Lusztig polynomials.

Permutations are tuples in one-line notation with values ``1..n``.  The
right action on sequences is place permutation: ``(a.w)_k = a_{w(k)}``, so
``x.s_r`` swaps positions ``r`` and ``r+1``.
"""

from __future__ import annotations

import itertools
import os
import threading
from pathlib import Path
from typing import Sequence

from .laurent import ONE, ZERO, LaurentPoly
from .weights import CSTableau, Structure, bruhat_leq, column_reading, truncation_level, weight_of

__all__ = [
    "SizeMismatch",
    "WeightMismatch",
    "KLCache",
    "length",
    "bruhat_leq_perm",
    "descents",
    "left_descents",
    "right_mult",
    "lower_covers",
    "interval",
    "compose",
    "r_polynomial",
    "kl_polynomial",
    "kl_polynomial_plain",
    "mu",
    "sorting_data",
    "young_subgroup",
    "parabolic_kl",
    "parabolic_kl_raw",
    "identity",
    "longest",
]

Perm = tuple[int, ...]
Q = LaurentPoly.q()


class SizeMismatch(ValueError):
    pass


class WeightMismatch(ValueError):
    pass


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def longest(n: int) -> Perm:
    return tuple(range(n, 0, -1))


def length(w: Sequence[int]) -> int:
    return sum(1 for i, j in itertools.combinations(range(len(w)), 2) if w[i] > w[j])


def _check(x, y):
    if len(x) != len(y):
        raise SizeMismatch(f"permutations of sizes {len(x)} and {len(y)}")


def bruhat_leq_perm(x: Sequence[int], y: Sequence[int]) -> bool:
    """Tableau criterion: sorted prefixes of ``x`` are dominated by those of ``y``."""
    _check(x, y)
    px: list[int] = []
    py: list[int] = []
    for a, b in zip(x[:-1], y[:-1]):
        _insort(px, a)
        _insort(py, b)
        if any(u > v for u, v in zip(px, py)):
            return False
    return True


def _insort(lst: list[int], v: int):
    lo, hi = 0, len(lst)
    while lo < hi:
        mid = (lo + hi) // 2
        if lst[mid] < v:
            lo = mid + 1
        else:
            hi = mid
    lst.insert(lo, v)


def descents(w: Sequence[int]) -> list[int]:
    """Right descents ``r`` (``w s_r < w``), 1-based."""
    return [r + 1 for r in range(len(w) - 1) if w[r] > w[r + 1]]


def left_descents(w: Sequence[int]) -> list[int]:
    """Left descents ``r`` (``s_r w < w``): ``r+1`` appears before ``r``."""
    pos = {v: k for k, v in enumerate(w)}
    return [r for r in range(1, len(w)) if pos[r + 1] < pos[r]]


def right_mult(w: Sequence[int], r: int) -> Perm:
    """``w s_r``: swap positions ``r`` and ``r+1``."""
    w = list(w)
    w[r - 1], w[r] = w[r], w[r - 1]
    return tuple(w)


def left_mult(r: int, w: Sequence[int]) -> Perm:
    """``s_r w``: swap the values ``r`` and ``r+1``."""
    return tuple(r + 1 if v == r else r if v == r + 1 else v for v in w)


def compose(x: Sequence[int], y: Sequence[int]) -> Perm:
    """``(xy)(k) = x(y(k))``."""
    return tuple(x[v - 1] for v in y)


def lower_covers(w: Sequence[int]) -> list[Perm]:
    """Elements ``w t`` covered by ``w`` in Bruhat order."""
    out = []
    n = len(w)
    for i in range(n):
        for j in range(i + 1, n):
            if w[i] > w[j] and not any(w[j] < w[k] < w[i] for k in range(i + 1, j)):
                v = list(w)
                v[i], v[j] = v[j], v[i]
                out.append(tuple(v))
    return out


def interval(x: Perm, y: Perm) -> list[Perm]:
    """All ``z`` with ``x <= z <= y``."""
    if not bruhat_leq_perm(x, y):
        return []
    seen = {y}
    stack = [y]
    while stack:
        w = stack.pop()
        for v in lower_covers(w):
            if v not in seen and bruhat_leq_perm(x, v):
                seen.add(v)
                stack.append(v)
    return list(seen)


# -- R-polynomials ------------------------------------------------------------

_R_MEMO: dict[tuple[Perm, Perm], LaurentPoly] = {}


def r_polynomial(x: Sequence[int], y: Sequence[int]) -> LaurentPoly:
    x, y = tuple(x), tuple(y)
    _check(x, y)
    key = (x, y)
    if key in _R_MEMO:
        return _R_MEMO[key]
    if x == y:
        out = ONE
    elif not bruhat_leq_perm(x, y):
        out = ZERO
    else:
        s = descents(y)[0]
        ys, xs = right_mult(y, s), right_mult(x, s)
        if x[s - 1] > x[s]:
            out = r_polynomial(xs, ys)
        else:
            out = (Q - 1) * r_polynomial(x, ys) + Q * r_polynomial(xs, ys)
    _R_MEMO[key] = out
    return out


# -- Kazhdan-Lusztig polynomials ----------------------------------------------


class KLCache:
    """Memo table for ``P_{x,y}``, optionally mirrored to an append-only file.

    File lines read ``n;x-word;y-word;poly`` with comma-separated one-line
    words.  Existing lines are loaded on first use; new values are appended.
    """

    def __init__(self, path: str | os.PathLike | None = None):
        self.path = Path(path) if path else None
        self.store: dict[tuple[Perm, Perm], LaurentPoly] = {}
        self._loaded = self.path is None
        self._lock = threading.Lock()
        self._pending: list[str] = []

    def _load(self):
        if self._loaded:
            return
        self._loaded = True
        if self.path and self.path.exists():
            for line in self.path.read_text().splitlines():
                if not line.strip():
                    continue
                n, xw, yw, poly = line.split(";")
                x = tuple(int(v) for v in xw.split(","))
                y = tuple(int(v) for v in yw.split(","))
                if len(x) != int(n) or len(y) != int(n):
                    raise ValueError(f"corrupt cache line {line!r}")
                self.store.setdefault((x, y), LaurentPoly.parse(poly))

    def get(self, x: Perm, y: Perm):
        self._load()
        return self.store.get((x, y))

    def put(self, x: Perm, y: Perm, p: LaurentPoly):
        self._load()
        with self._lock:
            if (x, y) in self.store:
                return
            self.store[(x, y)] = p
            if self.path is not None:
                self._pending.append(f"{len(x)};{','.join(map(str, x))};{','.join(map(str, y))};{p}\n")

    def flush(self):
        if self.path is None or not self._pending:
            return
        with self._lock:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with open(self.path, "a") as fh:
                fh.writelines(self._pending)
            self._pending.clear()

    def __len__(self):
        self._load()
        return len(self.store)


_DEFAULT_CACHE = KLCache()


def _normalize(x: Perm, y: Perm) -> Perm:
    # P_{x,y} = P_{xs,y} = P_{sx,y} for descents s of y, so push x upward
    rd, ld = descents(y), left_descents(y)
    changed = True
    while changed:
        changed = False
        for r in rd:
            if x[r - 1] < x[r]:
                x = right_mult(x, r)
                changed = True
        for r in ld:
            pos_r, pos_r1 = x.index(r), x.index(r + 1)
            if pos_r < pos_r1:
                x = left_mult(r, x)
                changed = True
    return x


def mu(z: Perm, v: Perm, cache: KLCache | None = None) -> int:
    d = length(v) - length(z)
    if d <= 0 or d % 2 == 0:
        return 0
    return kl_polynomial(z, v, cache).coeff((d - 1) // 2)


def kl_polynomial(x: Sequence[int], y: Sequence[int], cache: KLCache | None = None) -> LaurentPoly:
    """``P_{x,y}(q)`` by the right-descent recursion, memoized in ``cache``."""
    x, y = tuple(x), tuple(y)
    _check(x, y)
    cache = _DEFAULT_CACHE if cache is None else cache
    if x == y:
        return ONE
    if not bruhat_leq_perm(x, y):
        return ZERO
    x = _normalize(x, y)
    if x == y:
        return ONE
    hit = cache.get(x, y)
    if hit is not None:
        return hit
    out = _kl_step(x, y, cache, kl_polynomial)
    cache.put(x, y, out)
    return out


def _kl_step(x: Perm, y: Perm, cache, rec) -> LaurentPoly:
    s = descents(y)[0]
    v = right_mult(y, s)
    xs = right_mult(x, s)
    c = 1 if x[s - 1] > x[s] else 0
    out = rec(xs, v, cache).shift(1 - c) + rec(x, v, cache).shift(c)
    ly = length(y)
    lv = ly - 1
    for z in interval(x, v):
        if z == v or z[s - 1] < z[s]:
            continue
        lz = length(z)
        if (lv - lz) % 2 == 0:
            continue
        m = mu(z, v, cache) if rec is kl_polynomial else _plain_mu(z, v)
        if m:
            out = out - rec(x, z, cache) * LaurentPoly.q((ly - lz) // 2) * m
    return out


def _plain_mu(z: Perm, v: Perm) -> int:
    d = length(v) - length(z)
    return kl_polynomial_plain(z, v).coeff((d - 1) // 2) if d % 2 else 0


def kl_polynomial_plain(x: Sequence[int], y: Sequence[int], cache=None) -> LaurentPoly:
    """Same recursion with no memoization and no normalization (reference path)."""
    x, y = tuple(x), tuple(y)
    if x == y:
        return ONE
    if not bruhat_leq_perm(x, y):
        return ZERO
    return _kl_step(x, y, None, kl_polynomial_plain)


# -- parabolic polynomials ----------------------------------------------------


def sorting_data(reading: Sequence[int]) -> tuple[Perm, tuple[int, ...]]:
    """``w_A`` (stable sort of the reading) and the block sizes of ``Z_A``."""
    order = sorted(range(len(reading)), key=lambda k: (reading[k], k))
    w = tuple(k + 1 for k in order)
    srt = sorted(reading)
    comp = tuple(len(list(g)) for _, g in itertools.groupby(srt))
    return w, comp


def young_subgroup(comp: Sequence[int]) -> list[tuple[Perm, int]]:
    """Elements of ``S_{c_1} x S_{c_2} x ...`` with their lengths."""
    n = sum(comp)
    factors = []
    start = 1
    for c in comp:
        factors.append(list(itertools.permutations(range(start, start + c))))
        start += c
    out = []
    for choice in itertools.product(*factors):
        z = tuple(v for block in choice for v in block)
        out.append((z, length(z)))
    assert len(z) == n
    return out


def _readings(a: CSTableau, b: CSTableau, structure: Structure, level: int | None):
    if a.charge != b.charge:
        raise WeightMismatch("different charges")
    wa = weight_of(a)
    if wa != weight_of(b):
        raise WeightMismatch("different weights")
    if level is None:
        level = truncation_level(a.charge, wa)
    rev = structure is Structure.REVERSE
    return column_reading(a, rev, level), column_reading(b, rev, level)


def parabolic_kl_raw(a: CSTableau, b: CSTableau, structure: Structure = Structure.STANDARD,
                     cache: KLCache | None = None, level: int | None = None) -> LaurentPoly:
    """The signed sum over ``Z_A`` with no order prefilter."""
    ra, rb = _readings(a, b, structure, level)
    wa, comp = sorting_data(ra)
    wb, _ = sorting_data(rb)
    acc = ZERO
    for z, lz in young_subgroup(comp):
        p = kl_polynomial(compose(wa, z), wb, cache)
        if p:
            acc = acc + (p if lz % 2 == 0 else -p)
    if not acc:
        return ZERO
    return acc.subs_power(-2).shift(length(wb) - length(wa))


def parabolic_kl(a: CSTableau, b: CSTableau, structure: Structure = Structure.STANDARD,
                 cache: KLCache | None = None, level: int | None = None) -> LaurentPoly:
    """``p_{A,B}(q)``; zero unless ``A <= B`` (``A >= B`` for the reverse structure)."""
    _readings(a, b, structure, level)
    if a == b:
        return ONE
    ok = bruhat_leq(a, b) if structure is Structure.STANDARD else bruhat_leq(b, a)
    if not ok:
        return ZERO
    return parabolic_kl_raw(a, b, structure, cache, level)
