from fractions import Fraction

import pytest

from polylogvar.mpoly import MPoly, rational_functions_equal


def test_arithmetic():
    z = MPoly.var(2, 0)
    t = MPoly.var(2, 1)
    one = MPoly.const(2, 1)
    p = (one + z * t) ** 2
    q = one + 2 * z * t + (z * t) ** 2
    assert p == q
    assert (p - q).is_zero()


def test_diff():
    z = MPoly.var(2, 0)
    t = MPoly.var(2, 1)
    p = z ** 3 * t + 2 * z
    assert p.diff(0) == 3 * z ** 2 * t + MPoly.const(2, 2)
    assert p.diff(1) == z ** 3


def test_substitute():
    z = MPoly.var(2, 0)
    t = MPoly.var(2, 1)
    p = t * (MPoly.const(2, 1) - t) * z
    assert p.substitute(1, 0).is_zero()
    assert p.substitute(1, 1).is_zero()
    assert p.substitute(1, Fraction(1, 2)) == Fraction(1, 4) * z


def test_divide_exact():
    z = MPoly.var(2, 0)
    t = MPoly.var(2, 1)
    one = MPoly.const(2, 1)
    d = one - z * t
    p = d ** 3
    q = p.divide_exact(d)
    assert q == d ** 2
    assert p.divide_exact(one + z) is None


def test_divide_by_zero():
    one = MPoly.const(1, 1)
    with pytest.raises(ZeroDivisionError):
        one.divide_exact(MPoly(1, {}))


def test_eval():
    z = MPoly.var(2, 0)
    t = MPoly.var(2, 1)
    p = z ** 2 + 3 * t
    assert p.eval([Fraction(1, 2), Fraction(2)]) == Fraction(25, 4)


def test_cross_multiplied_equality():
    z = MPoly.var(1, 0)
    one = MPoly.const(1, 1)
    # (1 - z^2)/(1 - z) == (1 + z)/1
    assert rational_functions_equal(one - z ** 2, one - z, one + z, one)
    assert not rational_functions_equal(one - z ** 2, one - z, one, one)


def test_degree_in():
    z = MPoly.var(3, 0)
    t1 = MPoly.var(3, 1)
    p = z * t1 ** 4 + z ** 2
    assert p.degree_in(0) == 2
    assert p.degree_in(1) == 4
    assert p.degree_in(2) == 0
