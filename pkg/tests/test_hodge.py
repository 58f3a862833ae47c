import mpmath as mp
import pytest

from polylogvar.analytic import principal_lambda, transport
from polylogvar.errors import DomainError
from polylogvar.hodge import (FilteredFiber, OneForm,
                              connection, evaluate_connection,
                              flatness_residual, graded_dimensions,
                              hodge_transversality_check, kummer_block_check,
                              trivial_subobject_check)
from polylogvar.paths import canonical_loop


class TestConnection:
    def test_weight_zero(self):
        c = connection(0)
        assert c.entries == ((OneForm.ZERO,),)

    def test_weight_one(self):
        c = connection(1)
        assert c.entry(0, 1) == OneForm.DLOG_1MZ
        assert c.entry(0, 0) == OneForm.ZERO
        assert c.entry(1, 1) == OneForm.ZERO

    def test_weight_three_superdiagonal(self):
        c = connection(3)
        sup = tuple(c.entry(k, k + 1) for k in range(3))
        assert sup == (OneForm.DLOG_1MZ, OneForm.DLOG_Z, OneForm.DLOG_Z)
        for i in range(4):
            for j in range(4):
                if j != i + 1:
                    assert c.entry(i, j) == OneForm.ZERO

    def test_evaluate(self):
        A = evaluate_connection(connection(1), 0.5)
        assert A[0][1] == 2
        A = evaluate_connection(connection(2), 2)
        assert A[0][1] == -1
        assert A[1][2] == mp.mpf("0.5")

    def test_evaluate_at_puncture(self):
        with pytest.raises(DomainError):
            evaluate_connection(connection(1), 0)
        with pytest.raises(DomainError):
            evaluate_connection(connection(2), 1)


class TestFlatness:
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_residual_small(self, n):
        assert flatness_residual(n, 0.5, h=1e-6) <= 1e-4


class TestFiltrations:
    def test_graded_dimensions_n2(self):
        fib = FilteredFiber.from_period_matrix(principal_lambda(2, 0.5))
        assert graded_dimensions(fib) == [(0, 1), (2, 1), (4, 1)]

    def test_graded_dimensions_n0(self):
        fib = FilteredFiber.from_period_matrix(principal_lambda(0, 0.5))
        assert graded_dimensions(fib) == [(0, 1)]

    def test_graded_dimensions_n4(self):
        fib = FilteredFiber.from_period_matrix(principal_lambda(4, 0.5))
        dims = graded_dimensions(fib)
        assert len(dims) == 5
        assert all(d == 1 for _, d in dims)
        assert sum(d for _, d in dims) == 5

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_transversality_principal(self, n):
        fib = FilteredFiber.from_period_matrix(principal_lambda(n, 0.5))
        assert hodge_transversality_check(fib).passed

    def test_transversality_degenerate(self):
        lam = principal_lambda(2, 0.5)
        grid = [list(row) for row in lam.entries]
        for i in range(3):
            grid[i][1] = grid[i][0]  # hodge column 1 replaced by column 0
        fib = FilteredFiber(2, tuple(tuple(r) for r in grid))
        assert not hodge_transversality_check(fib).passed

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_transversality_survives_transport(self, n):
        start = principal_lambda(n, 0.5, tol=1e-10)
        for which in (0, 1):
            moved = transport(n, canonical_loop(which), start, tol=1e-10)
            fib = FilteredFiber.from_period_matrix(moved)
            assert hodge_transversality_check(fib).passed


class TestKummerBlock:
    def test_weight_one_block(self):
        assert kummer_block_check(1, 0.5).passed

    def test_weight_two_block_by_hand(self):
        # expected block: [[2 pi i, 2 pi i log z], [0, (2 pi i)^2]]
        lam = principal_lambda(2, 0.5)
        with mp.workprec(128):
            tpi = 2j * mp.pi
            lg = mp.log(mp.mpf("0.5"))
            assert abs(lam.entries[1][1] - tpi) < mp.mpf("1e-30")
            assert abs(lam.entries[1][2] - tpi * lg) < mp.mpf("1e-30")
            assert abs(lam.entries[2][2] - tpi ** 2) < mp.mpf("1e-28")
        assert kummer_block_check(2, 0.5).passed

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    @pytest.mark.parametrize("z", ["0.3", "0.5", "0.7"])
    def test_block_structure(self, n, z):
        assert kummer_block_check(n, mp.mpf(z), tol=1e-10).passed

    def test_needs_positive_weight(self):
        with pytest.raises(DomainError):
            kummer_block_check(0, 0.5)


class TestTrivialSub:
    @pytest.mark.parametrize("n", [1, 2])
    def test_e0_fixed(self, n):
        rep = trivial_subobject_check(n, tol=1e-10)
        assert rep.passed, rep.details

    @pytest.mark.parametrize("z", ["0.3", "0.5", "0.7"])
    def test_lambda_column_zero(self, z):
        for n in range(1, 5):
            lam = principal_lambda(n, mp.mpf(z))
            assert lam.entries[0][0] == 1
            assert all(lam.entries[i][0] == 0 for i in range(1, n + 1))
