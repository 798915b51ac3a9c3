"""Exact canonical bases of level-l Fock spaces and decomposition numbers of degenerate cyclotomic Hecke algebras."""

from .laurent import LaurentPoly, bar, quantum_integer, quantum_factorial
from .weights import (
    BlockFilter,
    Charge,
    CSTableau,
    IndexSet,
    Multipartition,
    RootElement,
    bruhat_leq,
    column_reading,
    enumerate_block,
    pairing_a,
    transpose,
    truncation_level,
    weight_of,
)

__version__ = "0.1.0"
