import math
from fractions import Fraction

import mpmath as mp
import pytest

from polylogvar.analytic import (li_series, monodromy, principal_lambda,
                                 transport)
from polylogvar.errors import DomainError, PathError, ReconstructionError
from polylogvar.exact import RationalMatrix
from polylogvar.paths import LineTo, PathSpec, canonical_loop

from oracles import (LOG2, PI2_OVER_12, alternating_li2_minus1, ref_polylog,
                     ref_minus_log1m)

TOL = 1e-10


def expected_monodromy_loop1(n):
    """Continuation around 1 sends Li_k to Li_k - 2 pi i log^(k-1)/(k-1)!,
    i.e. row 0 maps to row 0 - row 1: the matrix I - E_{0,1}."""
    m = [[Fraction(int(i == j)) for j in range(n + 1)] for i in range(n + 1)]
    m[0][1] = Fraction(-1)
    return RationalMatrix(m)


def expected_monodromy_loop0(n):
    """Continuation around 0 sends log z to log z + 2 pi i and fixes row 0:
    rows i >= 1 pick up 1/(k-i)! in column k."""
    m = [[Fraction(0)] * (n + 1) for _ in range(n + 1)]
    m[0][0] = Fraction(1)
    for i in range(1, n + 1):
        for k in range(i, n + 1):
            m[i][k] = Fraction(1, math.factorial(k - i))
    return RationalMatrix(m)


class TestLiSeries:
    def test_log2(self):
        v = li_series(1, 0.5, tol=1e-20, prec=128)
        with mp.workprec(256):
            assert abs(v - mp.mpf(LOG2)) < mp.mpf("1e-19")

    def test_against_log_oracle(self):
        for z in (0.5, -0.3, mp.mpc(0.2, 0.4)):
            v = li_series(1, z, tol=1e-25, prec=160)
            with mp.workprec(256):
                assert abs(v - ref_minus_log1m(z)) < mp.mpf("1e-24")

    def test_li2_minus_one(self):
        v = li_series(2, -1, tol=1e-20, prec=128)
        with mp.workprec(256):
            assert abs(v + mp.mpf(PI2_OVER_12)) < mp.mpf("1e-19")
            assert abs(v - alternating_li2_minus1()) < mp.mpf("1e-19")

    def test_zero(self):
        assert li_series(5, 0) == 0

    def test_domain_gate(self):
        with pytest.raises(DomainError):
            li_series(1, 0.8)
        with pytest.raises(DomainError):
            li_series(1, mp.mpc(-0.8, 0.1))
        with pytest.raises(DomainError):
            li_series(0, 0.5)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_matches_reference_polylog(self, n):
        for z in (0.5, -0.75, mp.mpc(0.3, -0.3)):
            v = li_series(n, z, tol=1e-22, prec=160)
            with mp.workprec(256):
                assert abs(v - ref_polylog(n, z)) < mp.mpf("1e-21")


class TestPrincipalLambda:
    def test_weight_zero(self):
        lam = principal_lambda(0, 0.5)
        assert lam.entries[0][0] == 1

    def test_weight_one(self):
        lam = principal_lambda(1, 0.5, tol=1e-16)
        assert abs(lam.entries[0][1] - mp.mpf(LOG2)) < 1e-15
        with mp.workprec(128):
            assert abs(lam.entries[1][1] - 2j * mp.pi) < mp.mpf("1e-30")

    def test_weight_two_log_entry(self):
        lam = principal_lambda(2, 0.5, tol=1e-16)
        with mp.workprec(128):
            expected = 2j * mp.pi * mp.log(mp.mpf(1) / 2)
            assert abs(lam.entries[1][2] - expected) < mp.mpf("1e-30")

    def test_invariants(self):
        for n in range(5):
            assert principal_lambda(n, 0.5).validate_invariants()

    def test_domain(self):
        for bad in (0, 1, -0.5, 1.5, mp.mpc(0.5, 0.1), complex(0.5, 0.1)):
            with pytest.raises(DomainError):
                principal_lambda(2, bad)

    def test_exact_rational_input(self):
        lam = principal_lambda(1, Fraction(1, 2), tol=1e-16)
        with mp.workprec(256):
            assert abs(lam.entries[0][1] - mp.mpf(LOG2)) < mp.mpf("1e-15")


def square_loop_around_one():
    pts = [complex(0.6, -0.5), complex(1.4, -0.5), complex(1.4, 0.5),
           complex(0.6, 0.5), complex(0.6, -0.5), complex(0.5, 0.0)]
    return PathSpec(complex(0.5, 0.0), tuple(LineTo(p) for p in pts),
                    closed=True, name="square1")


def contractible_square():
    pts = [complex(0.6, 0.1), complex(0.4, 0.1), complex(0.4, -0.1),
           complex(0.6, -0.1), complex(0.6, 0.0), complex(0.5, 0.0)]
    return PathSpec(complex(0.5, 0.0), tuple(LineTo(p) for p in pts),
                    closed=True, name="smallbox")


class TestTransport:
    def test_contractible_loop_is_identity(self):
        n = 2
        start = principal_lambda(n, 0.5, tol=TOL)
        moved = transport(n, contractible_square(), start, tol=TOL)
        for i in range(n + 1):
            for j in range(n + 1):
                assert abs(moved.entries[i][j] - start.entries[i][j]) <= 10 * TOL

    def test_loop1_weight_one_endpoint(self):
        # by-hand continuation of -log(1-z): the value drops by 2 pi i
        start = principal_lambda(1, 0.5, tol=TOL)
        moved = transport(1, canonical_loop(1), start, tol=TOL)
        with mp.workprec(128):
            expected01 = start.entries[0][1] - 2j * mp.pi
            assert abs(moved.entries[0][1] - expected01) <= 10 * TOL
            assert abs(moved.entries[1][1] - start.entries[1][1]) <= 10 * TOL
        assert moved.entries[0][0] == 1

    def test_loop0_weight_one_endpoint(self):
        # -log(1-z) is single valued around 0
        start = principal_lambda(1, 0.5, tol=TOL)
        moved = transport(1, canonical_loop(0), start, tol=TOL)
        assert abs(moved.entries[0][1] - start.entries[0][1]) <= 10 * TOL

    def test_composition(self):
        n = 2
        start = principal_lambda(n, 0.5, tol=TOL)
        p1 = canonical_loop(0)
        p2 = canonical_loop(1)
        oneshot = transport(n, p1.then(p2), start, tol=TOL)
        twostep = transport(n, p2, transport(n, p1, start, tol=TOL), tol=TOL)
        for i in range(n + 1):
            for j in range(n + 1):
                assert abs(oneshot.entries[i][j] - twostep.entries[i][j]) <= 10 * TOL

    def test_margin_enforced(self):
        bad = PathSpec(complex(0.5, 0), (LineTo(complex(1.0 - 1e-6, 0)),
                                         LineTo(complex(0.5, 0))), closed=True)
        start = principal_lambda(1, 0.5, tol=TOL)
        with pytest.raises(PathError):
            transport(1, bad, start, tol=TOL)

    def test_triangular_structure_is_exact(self):
        n = 3
        start = principal_lambda(n, 0.5, tol=TOL)
        moved = transport(n, canonical_loop(0), start, tol=TOL)
        for i in range(n + 1):
            for j in range(i):
                assert moved.entries[i][j] == 0
        assert moved.entries[0][0] == 1
        # bottom row never moves
        for j in range(n):
            assert moved.entries[n][j] == 0
        assert moved.entries[n][n] == start.entries[n][n]
        assert moved.validate_invariants()
        assert moved.branch_tag.endswith("loop0")


class TestMonodromy:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_loop1(self, n):
        assert monodromy(n, canonical_loop(1), tol=TOL) == expected_monodromy_loop1(n)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_loop0(self, n):
        assert monodromy(n, canonical_loop(0), tol=TOL) == expected_monodromy_loop0(n)

    def test_loop0_weight_two_explicit(self):
        # identity plus a unit in entry (1, 2)
        M = monodromy(2, canonical_loop(0), tol=TOL)
        expected = RationalMatrix([[1, 0, 0], [0, 1, 1], [0, 0, 1]])
        assert M == expected

    @pytest.mark.parametrize("n", [2, 3])
    def test_homotopy_invariance(self, n):
        square = monodromy(n, square_loop_around_one(), tol=TOL)
        assert square == expected_monodromy_loop1(n)

    def test_inverse_loop(self):
        loop = canonical_loop(0)
        M = monodromy(2, loop, tol=TOL)
        Minv = monodromy(2, loop.reversed(), tol=TOL)
        assert M * Minv == RationalMatrix.identity(3)

    def test_upper_triangular(self):
        for which in (0, 1):
            assert monodromy(2, canonical_loop(which), tol=TOL).is_upper_triangular()

    def test_open_path_rejected(self):
        path = PathSpec(complex(0.5, 0), (LineTo(complex(0.6, 0)),))
        with pytest.raises(DomainError):
            monodromy(1, path)

    def test_tight_denominator_bound_fails(self):
        # weight 3 monodromy around 0 contains 1/2, so max_den = 1 cannot certify
        with pytest.raises(ReconstructionError):
            monodromy(3, canonical_loop(0), tol=TOL, max_den=1)

    def test_precision_independence(self):
        # the reconstructed matrix is exact, so precision cannot change it
        a = monodromy(2, canonical_loop(1), tol=1e-10, prec=128)
        b = monodromy(2, canonical_loop(1), tol=1e-14, prec=192)
        assert a == b


def test_invariant_validation_catches_corruption():
    lam = principal_lambda(2, 0.5)
    grid = [list(r) for r in lam.entries]
    grid[2][0] = mp.mpc(1)  # break column 0
    from polylogvar.analytic import PeriodMatrix
    bad = PeriodMatrix(2, tuple(tuple(r) for r in grid), "tampered")
    assert not bad.validate_invariants()
