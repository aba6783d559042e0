"""Python bindings for the partmeth library."""

from fractions import Fraction

from . import _partmeth
from ._partmeth import bessel_h, bessel_zero_estimate, emit_symbolic, p_poly, partitions, q_number, q_poly

__all__ = [
    "bessel_h",
    "bessel_zero_estimate",
    "count_distinct",
    "count_partitions",
    "emit_symbolic",
    "family_table",
    "p_poly",
    "partitions",
    "q_number",
    "q_poly",
]


def count_partitions(k: int) -> int:
    return int(_partmeth.count_partitions(k))


def count_distinct(k: int) -> int:
    return int(_partmeth.count_distinct(k))


def family_table(family: str, kmax: int) -> list[Fraction]:
    """c_k, d_k or A_k for k = 0..kmax; family is cosecant, secant or reciprocal-log."""
    return [Fraction(s) for s in _partmeth.family_table(family, kmax)]
