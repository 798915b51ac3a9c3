"""Integer Laurent polynomials in one variable ``q``.

>>> p = LaurentPoly({-2: 1, 0: 2, 2: 1})
>>> str(p)
'q^-2+2+q^2'
>>> str(LaurentPoly.parse("1-q") * LaurentPoly.q())
'q-q^2'
>>> bar(LaurentPoly.parse("q^2+3"))
LaurentPoly('q^-2+3')
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping

__all__ = ["LaurentPoly", "NotDivisible", "bar", "quantum_integer", "quantum_factorial", "ZERO", "ONE"]


class NotDivisible(ArithmeticError):
    """Raised when an exact division of Laurent polynomials leaves a remainder."""


class LaurentPoly:
    """Immutable Laurent polynomial with integer coefficients.

    Coefficients are stored as a sorted tuple of ``(exponent, coefficient)``
    pairs with no zero coefficient, so equality and hashing are structural.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] | int = ()):
        if isinstance(coeffs, int):
            coeffs = {0: coeffs}
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, int] = {}
        for e, c in items:
            if c:
                acc[e] = acc.get(e, 0) + c
        self._terms = tuple(sorted((e, c) for e, c in acc.items() if c))
        self._hash = None

    @classmethod
    def _raw(cls, terms: tuple[tuple[int, int], ...]) -> "LaurentPoly":
        obj = object.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def q(cls, k: int = 1) -> "LaurentPoly":
        """The monomial ``q^k``."""
        return cls._raw(((k, 1),))

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """Parse the canonical text form (any term order is accepted)."""
        s = text.replace(" ", "")
        if s in ("", "0"):
            return ZERO
        if s[0] not in "+-":
            s = "+" + s
        terms: dict[int, int] = {}
        for piece in _split_terms(s):
            sign = -1 if piece[0] == "-" else 1
            body = piece[1:]
            m = re.fullmatch(r"(\d+)?(\*?q(?:\^(-?\d+))?)?", body)
            if not m or (m.group(1) is None and m.group(2) is None):
                raise ValueError(f"cannot parse Laurent polynomial term {piece!r} in {text!r}")
            coeff = int(m.group(1)) if m.group(1) is not None else 1
            if m.group(2) is None:
                exp = 0
            elif m.group(3) is None:
                exp = 1
            else:
                exp = int(m.group(3))
            if m.group(2) is not None and m.group(1) is not None and not m.group(2).startswith("*"):
                raise ValueError(f"missing '*' in term {piece!r}")
            terms[exp] = terms.get(exp, 0) + sign * coeff
        return cls(terms)

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> tuple[tuple[int, int], ...]:
        return self._terms

    def coeff(self, e: int) -> int:
        for exp, c in self._terms:
            if exp == e:
                return c
        return 0

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def min_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return self._terms[0][0]

    def max_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return self._terms[-1][0]

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and self._terms[0][0] == 0)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        acc = dict(self._terms)
        for e, c in other._terms:
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly._raw(tuple(sorted((e, c) for e, c in acc.items() if c)))

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(tuple((e, -c) for e, c in self._terms))

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return ZERO
            return LaurentPoly._raw(tuple((e, c * other) for e, c in self._terms))
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self._terms or not other._terms:
            return ZERO
        if len(other._terms) == 1:
            k, a = other._terms[0]
            return LaurentPoly._raw(tuple((e + k, c * a) for e, c in self._terms))
        if len(self._terms) == 1:
            return other * self
        acc: dict[int, int] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly._raw(tuple(sorted((e, c) for e, c in acc.items() if c)))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) == 1 and self._terms[0][1] in (1, -1):
                e, c = self._terms[0]
                return LaurentPoly._raw(((-e * (-n), c ** (-n)),))
            raise ValueError("negative powers only for unit monomials")
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``q^k``."""
        return LaurentPoly._raw(tuple((e + k, c) for e, c in self._terms))

    def bar(self) -> "LaurentPoly":
        return LaurentPoly._raw(tuple((-e, c) for e, c in reversed(self._terms)))

    def subs_neg(self) -> "LaurentPoly":
        """Substitute ``q -> -q``."""
        return LaurentPoly._raw(tuple((e, -c if e % 2 else c) for e, c in self._terms))

    def subs_power(self, k: int) -> "LaurentPoly":
        """Substitute ``q -> q^k`` (``k`` may be negative)."""
        return LaurentPoly(tuple((e * k, c) for e, c in self._terms))

    def at_one(self) -> int:
        return sum(c for _, c in self._terms)

    def evaluate(self, value) -> Fraction:
        v = Fraction(value)
        return sum((Fraction(c) * v ** e for e, c in self._terms), Fraction(0))

    def positive_part(self) -> "LaurentPoly":
        return LaurentPoly._raw(tuple(t for t in self._terms if t[0] > 0))

    def negative_part(self) -> "LaurentPoly":
        return LaurentPoly._raw(tuple(t for t in self._terms if t[0] < 0))

    def divmod(self, other: "LaurentPoly") -> tuple["LaurentPoly", "LaurentPoly"]:
        """Division with remainder after clearing the low-degree shifts.

        Returns ``(quot, rem)`` with ``self == other * quot + rem``; the
        divisor must have a unit leading coefficient.
        """
        if not other._terms:
            raise ZeroDivisionError("division by zero polynomial")
        if not self._terms:
            return ZERO, ZERO
        lead_e, lead_c = other._terms[-1]
        if lead_c not in (1, -1):
            raise ValueError("divisor must have unit leading coefficient")
        shift = self._terms[0][0] - other._terms[0][0]
        rem = self
        quot: dict[int, int] = {}
        # the quotient exponents cannot drop below the shift of the lowest terms
        while rem._terms and rem._terms[-1][0] - lead_e >= shift:
            e, c = rem._terms[-1]
            qe, qc = e - lead_e, c * lead_c
            quot[qe] = quot.get(qe, 0) + qc
            rem = rem - other * LaurentPoly._raw(((qe, qc),))
        return LaurentPoly(quot), rem

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        quot, rem = self.divmod(other)
        if rem:
            raise NotDivisible(f"{self} is not divisible by {other}")
        return quot

    # -- comparison / display --------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            return self._terms == (((0, other),) if other else ())
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for e, c in self._terms:
            if e == 0:
                body = str(abs(c))
            else:
                mono = "q" if e == 1 else f"q^{e}"
                body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            out.append(body if (not out and sign == "+") else sign + body)
        return "".join(out)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"


def _split_terms(s: str) -> list[str]:
    # split "+a-b*q^-2+q" into signed terms, keeping the minus in "^-2"
    out: list[str] = []
    cur = ""
    for i, ch in enumerate(s):
        if ch in "+-" and i > 0 and s[i - 1] != "^":
            out.append(cur)
            cur = ch
        else:
            cur += ch
    out.append(cur)
    return [t for t in out if t]


ZERO = LaurentPoly()
ONE = LaurentPoly({0: 1})


def bar(p: LaurentPoly) -> LaurentPoly:
    """The ring involution ``q -> q^-1``."""
    return p.bar()


def quantum_integer(n: int) -> LaurentPoly:
    """``[n] = (q^n - q^-n)/(q - q^-1)``; defined for negative ``n`` as ``-[-n]``."""
    if n < 0:
        return -quantum_integer(-n)
    return LaurentPoly({n - 1 - 2 * k: 1 for k in range(n)})


def quantum_factorial(n: int) -> LaurentPoly:
    out = ONE
    for k in range(1, n + 1):
        out = out * quantum_integer(k)
    return out
