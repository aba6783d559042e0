from fractions import Fraction

import pytest

import partmeth


def test_counts():
    assert partmeth.count_partitions(6) == 11
    assert partmeth.count_partitions(100) == 190569292
    assert partmeth.count_distinct(100) == 444793


def test_partitions():
    got = sorted(sorted(p, reverse=True) for p in partmeth.partitions(5, order="ascending"))
    assert len(got) == 7
    assert [5] in got and [1, 1, 1, 1, 1] in got
    with pytest.raises(ValueError):
        partmeth.partitions(3, order="sideways")


def test_family_tables():
    assert partmeth.family_table("cosecant", 3) == [1, Fraction(1, 6), Fraction(7, 360), Fraction(31, 15120)]
    assert partmeth.family_table("secant", 2) == [1, Fraction(1, 2), Fraction(5, 24)]
    assert partmeth.family_table("reciprocal-log", 2) == [1, Fraction(1, 2), Fraction(-1, 12)]


def test_polynomials():
    assert partmeth.q_poly(6).replace(" ", "") == "w+2*w^2+w^3"
    assert [partmeth.q_number(k) for k in range(1, 8)] == [-1, -1, 0, 0, 1, 0, 1]


def test_bessel_and_emit():
    z = partmeth.bessel_zero_estimate(0.0, 17)
    assert abs(z - 2.404825557695773) < 1e-9
    assert partmeth.emit_symbolic("ds", 1) == "DS[1,n_]:= p[1,n] q[1] a\n"
    with pytest.raises(ValueError):
        partmeth.emit_symbolic("nonsense", 2)
