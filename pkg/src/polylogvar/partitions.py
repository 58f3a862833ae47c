"""Set partitions of {1,...,n}, Bell and Stirling bookkeeping, the
Postnikov graded-dimension identity, and the simplex paving of the
rescaled hypercube.
"""

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import DomainError

MAX_PARTITION_N = 9


@dataclass(frozen=True)
class SetPartition:
    """Partition of {1,...,n} into disjoint nonempty blocks, each block
    sorted, blocks ordered by their minimum."""

    blocks: tuple

    def __post_init__(self):
        object.__setattr__(self, "blocks",
                           tuple(tuple(sorted(b)) for b in
                                 sorted(self.blocks, key=min)))
        seen = set()
        for b in self.blocks:
            if not b:
                raise ValueError("empty block")
            for x in b:
                if x in seen:
                    raise ValueError("blocks are not disjoint")
                seen.add(x)
        if seen != set(range(1, len(seen) + 1)):
            raise ValueError("blocks must cover {1,...,n}")

    @property
    def n(self):
        return sum(len(b) for b in self.blocks)

    def num_blocks(self):
        return len(self.blocks)

    def refines(self, other):
        """True when every block of self sits inside a block of other."""
        where = {}
        for bi, b in enumerate(other.blocks):
            for x in b:
                where[x] = bi
        return all(len({where[x] for x in b}) == 1 for b in self.blocks)


@lru_cache(maxsize=None)
def partitions_of(n):
    """All set partitions of {1,...,n}, encoded by restricted growth strings
    so the canonical block order comes out for free.  Count is Bell(n)."""
    if not 1 <= n <= MAX_PARTITION_N:
        raise DomainError(f"partitions_of supports 1 <= n <= {MAX_PARTITION_N}")
    out = []

    def rec(i, assignment, nblocks):
        if i == n:
            blocks = [[] for _ in range(nblocks)]
            for idx, b in enumerate(assignment):
                blocks[b].append(idx + 1)
            out.append(SetPartition(tuple(tuple(b) for b in blocks)))
            return
        for b in range(nblocks):
            assignment.append(b)
            rec(i + 1, assignment, nblocks)
            assignment.pop()
        assignment.append(nblocks)
        rec(i + 1, assignment, nblocks + 1)
        assignment.pop()

    rec(0, [], 0)
    return tuple(out)


def bell_number(n):
    """Bell numbers by the Bell-triangle recurrence."""
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[0]


@lru_cache(maxsize=None)
def stirling_first_unsigned(n, k):
    """Unsigned Stirling numbers of the first kind, c(n, k), by recurrence."""
    if n == 0 and k == 0:
        return 1
    if n == 0 or k == 0 or k > n:
        return 0
    return (n - 1) * stirling_first_unsigned(n - 1, k) + \
        stirling_first_unsigned(n - 1, k - 1)


def _block_factor(size):
    """Dimension of the top Arnol'd component on a block of this size; the
    exhaustive linear algebra route is used (and cached) up to size 6, the
    factorial formula above that."""
    if size == 1:
        return 1
    if size <= 6:
        from .arnold import arnold_dimension
        return arnold_dimension(size)
    return math.factorial(size - 1)


@dataclass(frozen=True)
class PostnikovReport:
    n: int
    passed: bool
    table: tuple  # (k, partition_sum, stirling) rows
    total_matches_factorial: bool


def postnikov_graded_check(n):
    """For every k, the sum over partitions with n-k blocks of the product of
    per-block top Arnol'd dimensions must equal c(n, n-k); the column sums
    over all k must add up to n!."""
    if not 2 <= n <= 8:
        raise DomainError("postnikov_graded_check supports 2 <= n <= 8")
    sums = {}
    for pi in partitions_of(n):
        k = n - pi.num_blocks()
        prod = 1
        for b in pi.blocks:
            prod *= _block_factor(len(b))
        sums[k] = sums.get(k, 0) + prod
    table = []
    ok = True
    for k in range(n):
        s = sums.get(k, 0)
        c = stirling_first_unsigned(n, n - k)
        table.append((k, s, c))
        if s != c:
            ok = False
    total_ok = sum(s for _, s, _ in table) == math.factorial(n)
    return PostnikovReport(n=n, passed=ok and total_ok, table=tuple(table),
                           total_matches_factorial=total_ok)


@dataclass(frozen=True)
class PavingReport:
    n: int
    passed: bool
    samples: int
    redraws: int
    min_cover: int
    max_cover: int
    volume_identity_ok: bool


def paving_check(n, z, samples, seed, family=None):
    """Sample points of the open cube (1, 1/z)^n and count, per point, the
    order simplices 1 < x_{s^{-1}(1)} < ... < x_{s^{-1}(n)} < 1/z containing
    it strictly; a paving means every point lies in exactly one.  Points with
    tied coordinates are redrawn.  Also checks the exact volume identity
    n! * vol(simplex) = vol(cube) symbolically.

    ``family`` overrides the permutation family (used to demonstrate that a
    defective family fails).
    """
    if not 1 <= n <= 6:
        raise DomainError("paving_check supports 1 <= n <= 6")
    zf = float(z)
    if not 0 < zf < 1:
        raise DomainError("z must lie in (0, 1)")
    if samples < 1:
        raise DomainError("need at least one sample")
    if family is None:
        family = list(itertools.permutations(range(1, n + 1)))
    rng = np.random.default_rng(seed)
    lo, hi = 1.0, 1.0 / zf

    pts = rng.uniform(lo, hi, size=(samples, n))
    redraws = 0
    for _ in range(100):
        bad = np.zeros(samples, dtype=bool)
        sorted_pts = np.sort(pts, axis=1)
        if n > 1:
            bad |= (np.diff(sorted_pts, axis=1) == 0).any(axis=1)
        bad |= (pts <= lo).any(axis=1) | (pts >= hi).any(axis=1)
        if not bad.any():
            break
        redraws += int(bad.sum())
        pts[bad] = rng.uniform(lo, hi, size=(int(bad.sum()), n))
    else:
        raise DomainError("could not draw tie-free samples")

    cover = np.zeros(samples, dtype=np.int64)
    for sigma in family:
        inv = [0] * n
        for pos, v in enumerate(sigma):
            inv[v - 1] = pos  # x_{sigma^{-1}(r)} is the r-th smallest
        ordered = pts[:, [inv[r] for r in range(n)]]
        inside = np.ones(samples, dtype=bool)
        inside &= ordered[:, 0] > lo
        inside &= ordered[:, -1] < hi
        if n > 1:
            inside &= (np.diff(ordered, axis=1) > 0).all(axis=1)
        cover += inside

    # exact volume identity: n! * (1/z - 1)^n / n! == (1/z - 1)^n
    zq = Fraction(str(z)) if not isinstance(z, Fraction) else z
    side = 1 / zq - 1
    vol_simplex = side ** n / math.factorial(n)
    volume_ok = math.factorial(n) * vol_simplex == side ** n

    return PavingReport(n=n, passed=bool((cover == 1).all()) and volume_ok,
                        samples=samples, redraws=redraws,
                        min_cover=int(cover.min()), max_cover=int(cover.max()),
                        volume_identity_ok=volume_ok)
