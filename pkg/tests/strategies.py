"""Shared hypothesis strategies."""

from hypothesis import strategies as st

from fockbases.laurent import LaurentPoly
from fockbases.weights import Charge, CSTableau, Multipartition

laurent = st.dictionaries(st.integers(-6, 6), st.integers(-5, 5), max_size=5).map(LaurentPoly)


@st.composite
def partitions(draw, max_size=4):
    n = draw(st.integers(0, max_size))
    parts = []
    left, cap = n, n
    while left:
        p = draw(st.integers(1, min(left, cap)))
        parts.append(p)
        left -= p
        cap = p
    return tuple(parts)


@st.composite
def charges(draw, max_level=3, min_level=1):
    level = draw(st.integers(min_level, max_level))
    ms = sorted((draw(st.integers(-2, 3)) for _ in range(level)), reverse=True)
    return Charge(tuple(ms))


@st.composite
def tableaux(draw, max_level=2, max_boxes=5, min_level=1):
    charge = draw(charges(max_level, min_level))
    budget = max_boxes
    parts = []
    for _ in range(charge.level):
        p = draw(partitions(budget))
        budget -= sum(p)
        parts.append(p)
    return CSTableau(Multipartition(tuple(parts)), charge)
