import math

import pytest

from polylogvar.errors import DomainError
from polylogvar.partitions import (SetPartition, bell_number, partitions_of,
                                   paving_check, postnikov_graded_check,
                                   stirling_first_unsigned)


class TestPartitions:
    @pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 5), (4, 15)])
    def test_counts(self, n, count):
        assert len(partitions_of(n)) == count

    @pytest.mark.parametrize("n", range(1, 8))
    def test_counts_match_bell(self, n):
        assert len(partitions_of(n)) == bell_number(n)

    def test_canonical_block_order(self):
        for p in partitions_of(4):
            mins = [min(b) for b in p.blocks]
            assert mins == sorted(mins)
            for b in p.blocks:
                assert list(b) == sorted(b)

    def test_refinement(self):
        fine = SetPartition(((1,), (2,), (3, 4)))
        coarse = SetPartition(((1, 2), (3, 4)))
        assert fine.refines(coarse)
        assert not coarse.refines(fine)

    def test_validation(self):
        with pytest.raises(ValueError):
            SetPartition(((1, 2), (2, 3)))
        with pytest.raises(ValueError):
            SetPartition(((1, 3),))

    def test_size_guard(self):
        with pytest.raises(DomainError):
            partitions_of(10)


class TestStirling:
    def test_small_values(self):
        assert stirling_first_unsigned(3, 2) == 3
        assert stirling_first_unsigned(4, 2) == 11
        assert stirling_first_unsigned(4, 4) == 1

    @pytest.mark.parametrize("n", range(1, 9))
    def test_row_sum_is_factorial(self, n):
        assert sum(stirling_first_unsigned(n, k)
                   for k in range(n + 1)) == math.factorial(n)


class TestPostnikov:
    def test_weight_three(self):
        rep = postnikov_graded_check(3)
        assert rep.passed
        table = {k: (s, c) for k, s, c in rep.table}
        assert table[1] == (3, 3)  # three 2-block partitions, each worth 1
        assert table[0] == (1, 1)

    def test_weight_four_k2(self):
        rep = postnikov_graded_check(4)
        table = {k: (s, c) for k, s, c in rep.table}
        # type (3,1) gives 4 * 2, type (2,2) gives 3 * 1
        assert table[2] == (11, 11)

    @pytest.mark.parametrize("n", range(2, 9))
    def test_identity_holds(self, n):
        rep = postnikov_graded_check(n)
        assert rep.passed
        assert rep.total_matches_factorial

    def test_size_guard(self):
        with pytest.raises(DomainError):
            postnikov_graded_check(9)


class TestPaving:
    def test_square(self):
        rep = paving_check(2, 0.5, 10_000, seed=1)
        assert rep.passed
        assert rep.min_cover == rep.max_cover == 1
        assert rep.volume_identity_ok

    def test_interval_trivial(self):
        rep = paving_check(1, 0.5, 100, seed=0)
        assert rep.passed

    def test_duplicate_family_fails(self):
        import itertools
        fam = list(itertools.permutations(range(1, 3)))
        fam[1] = fam[0]  # one simplex listed twice, another missing
        rep = paving_check(2, 0.5, 1000, seed=0, family=fam)
        assert not rep.passed
        assert rep.max_cover == 2 or rep.min_cover == 0

    def test_deterministic(self):
        a = paving_check(3, 0.5, 5000, seed=42)
        b = paving_check(3, 0.5, 5000, seed=42)
        assert a == b

    def test_domain(self):
        with pytest.raises(DomainError):
            paving_check(7, 0.5, 10, seed=0)
        with pytest.raises(DomainError):
            paving_check(2, 1.5, 10, seed=0)
