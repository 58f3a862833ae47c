"""Reduced homology of the proper part of the partition lattice, computed by
exact ranks of simplicial boundary maps over Q.
"""

from fractions import Fraction
from functools import lru_cache

from .errors import DomainError
from .linalg_exact import sparse_rank
from .partitions import partitions_of


def _proper_part(n):
    """Partitions strictly between the discrete and the one-block partition,
    plus the strict order relation as adjacency lists."""
    elems = [p for p in partitions_of(n) if 1 < p.num_blocks() < n]
    above = [[] for _ in elems]
    for i, p in enumerate(elems):
        for j, q in enumerate(elems):
            if p.num_blocks() > q.num_blocks() and p.refines(q):
                above[i].append(j)
    return elems, above


def _chains(elems, above):
    """All chains of the order complex, grouped by number of elements."""
    by_len = {}

    def extend(chain):
        by_len.setdefault(len(chain), []).append(chain)
        for j in above[chain[-1]]:
            extend(chain + (j,))

    for i in range(len(elems)):
        extend((i,))
    return by_len


@lru_cache(maxsize=None)
def poset_homology(n):
    """Reduced rational homology dimensions of the order complex, returned as
    a list of (degree, dimension) for every degree 0 .. n-3.

    Guarded at 3 <= n <= 7: below 3 the proper part is empty (the reduced
    homology of the empty complex lives in degree -1 and is left out), above
    7 the chain complex is too large for the exact elimination here.
    """
    if not 3 <= n <= 7:
        raise DomainError("poset_homology supports 3 <= n <= 7")
    elems, above = _proper_part(n)
    by_len = _chains(elems, above)
    maxlen = max(by_len)
    index = {L: {c: k for k, c in enumerate(by_len[L])} for L in by_len}

    # rank of boundary d_q : C_q -> C_{q-1}; the augmentation d_0 has rank 1
    ranks = {0: 1 if elems else 0}
    for L in range(2, maxlen + 1):
        tgt = index[L - 1]
        rows = []
        for c in by_len[L]:
            row = {}
            for drop in range(L):
                face = c[:drop] + c[drop + 1:]
                row[tgt[face]] = Fraction((-1) ** drop)
            rows.append(row)
        ranks[L - 1] = sparse_rank(rows)

    out = []
    for q in range(0, maxlen):
        dim_q = len(by_len.get(q + 1, ()))
        betti = dim_q - ranks.get(q, 0) - ranks.get(q + 1, 0)
        out.append((q, betti))
    return out
