"""High-precision polylogarithms, fundamental solution matrices, and their
parallel transport along paths in C \\ {0, 1}.

The fundamental solution at weight n is the (n+1) x (n+1) upper-triangular
matrix with first row (1, Li_1(z), ..., Li_n(z)) and rows i >= 1 given by
(2*pi*i)^i log(z)^(j-i)/(j-i)!.  Transport integrates the linear system
dL = L * A(z) dz, where A(z) has 1/(1-z) in slot (0,1) and 1/z on the rest
of the superdiagonal, with an embedded Dormand-Prince 5(4) pair.

Monodromy matrices come out of transport around a closed loop followed by
exact rational reconstruction of every entry; the normalization by powers of
2*pi*i is what makes those entries rational.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp

from .errors import DomainError, IntegrationError, ReconstructionError
from .exact import RationalMatrix, rational_reconstruct
from .paths import DEFAULT_MARGIN, LineTo

DEFAULT_PREC = 128
DEFAULT_TOL = 1e-12

_SERIES_CAP = 2_000_000

# Dormand-Prince 5(4) tableau, exact; converted to mpf at working precision.
_DP_C = (Fraction(0), Fraction(1, 5), Fraction(3, 10), Fraction(4, 5),
         Fraction(8, 9), Fraction(1), Fraction(1))
_DP_A = (
    (),
    (Fraction(1, 5),),
    (Fraction(3, 40), Fraction(9, 40)),
    (Fraction(44, 45), Fraction(-56, 15), Fraction(32, 9)),
    (Fraction(19372, 6561), Fraction(-25360, 2187), Fraction(64448, 6561),
     Fraction(-212, 729)),
    (Fraction(9017, 3168), Fraction(-355, 33), Fraction(46732, 5247),
     Fraction(49, 176), Fraction(-5103, 18656)),
    (Fraction(35, 384), Fraction(0), Fraction(500, 1113), Fraction(125, 192),
     Fraction(-2187, 6784), Fraction(11, 84)),
)
_DP_B5 = (Fraction(35, 384), Fraction(0), Fraction(500, 1113),
          Fraction(125, 192), Fraction(-2187, 6784), Fraction(11, 84),
          Fraction(0))
_DP_B4 = (Fraction(5179, 57600), Fraction(0), Fraction(7571, 16695),
          Fraction(393, 640), Fraction(-92097, 339200), Fraction(187, 2100),
          Fraction(1, 40))

assert sum(_DP_B5) == 1 and sum(_DP_B4) == 1
assert sum(b * c for b, c in zip(_DP_B5, _DP_C)) == Fraction(1, 2)
assert sum(b * c * c for b, c in zip(_DP_B5, _DP_C)) == Fraction(1, 3)


@dataclass(frozen=True)
class PeriodMatrix:
    """Fundamental solution matrix on some branch.

    ``entries`` is an (n+1) x (n+1) grid of mpmath complex numbers;
    ``branch_tag`` records the path from the canonical base point that was
    used to reach this branch.
    """

    n: int
    entries: tuple
    branch_tag: str = "principal"

    def __post_init__(self):
        if len(self.entries) != self.n + 1 or any(
                len(row) != self.n + 1 for row in self.entries):
            raise ValueError("entries must form an (n+1) x (n+1) grid")
        for row in self.entries:
            for v in row:
                if not mp.isfinite(v):
                    raise ValueError("period matrix entries must be finite")

    def entry(self, i, j):
        return self.entries[i][j]

    def rows(self):
        return [list(row) for row in self.entries]

    def validate_invariants(self):
        """Column 0 is e_0, row n is (0,...,0,(2 pi i)^n), upper triangular."""
        n = self.n
        two_pi_i_n = (2 * mp.pi * mp.mpc(0, 1)) ** n
        ok = self.entries[0][0] == 1
        ok = ok and all(self.entries[i][0] == 0 for i in range(1, n + 1))
        ok = ok and all(self.entries[n][j] == 0 for j in range(n))
        ok = ok and mp.almosteq(self.entries[n][n], two_pi_i_n)
        ok = ok and all(self.entries[i][j] == 0
                        for i in range(n + 1) for j in range(i))
        return ok


def li_series(n, z, tol=DEFAULT_TOL, prec=DEFAULT_PREC):
    """Li_n(z) by its defining power series, for |z| <= 0.75.

    The partial sum stops once the geometric tail bound
    |z|^(K+1) / ((K+1)^n (1-|z|)) drops below tol.  On the real interval
    [-1, -0.75] the series is summed with alternating-series acceleration
    instead (the plain tail bound is useless there).  Anywhere else outside
    the disk, callers must use transport.
    """
    if n < 1:
        raise DomainError("n must be a positive integer")
    with mp.workprec(prec):
        zc = mp.mpc(mp.mpmathify(z))
        if abs(zc) <= 0.75:
            return _li_unit_disk(n, zc, mp.mpf(tol))
        if zc.imag == 0 and -1 <= zc.real < 0:
            return _li_alternating(n, zc.real, tol, prec)
        raise DomainError("li_series requires |z| <= 0.75 or real z in "
                          "[-1, -0.75]; use transport elsewhere")


def _li_alternating(n, x, tol, prec):
    guard = max(16, int(-mp.log(mp.mpf(tol), 2)) + 16)
    with mp.workprec(max(prec, guard) + 16):
        val = mp.nsum(lambda k: mp.mpf(x) ** k / k ** n, [1, mp.inf],
                      method="a")
    return mp.mpc(val)


def _li_unit_disk(n, zc, tol):
    # same tail bound as li_series, valid on the whole open unit disk
    az = abs(zc)
    if az == 0:
        return mp.mpc(0)
    if az >= 1:
        raise DomainError("series evaluation requires |z| < 1")
    s = mp.mpc(0)
    zk = mp.mpc(zc)
    k = 1
    while True:
        s += zk / mp.mpf(k) ** n
        if az ** (k + 1) / ((k + 1) ** n * (1 - az)) <= tol:
            return s
        k += 1
        zk *= zc
        if k > _SERIES_CAP:
            raise IntegrationError("series did not reach tolerance "
                                   f"within {_SERIES_CAP} terms")


def principal_lambda(n, z, tol=DEFAULT_TOL, prec=DEFAULT_PREC):
    """Fundamental solution on the principal branch, at real z in (0, 1).

    Row 0 holds (1, Li_1(z), ..., Li_n(z)); row i >= 1 holds
    (2 pi i)^i log(z)^(j-i) / (j-i)! with the real principal logarithm.
    """
    if n < 0:
        raise DomainError("n must be nonnegative")
    with mp.workprec(prec):
        zm = mp.mpc(mp.mpmathify(z))
        if zm.imag != 0:
            raise DomainError("principal_lambda needs real z in (0, 1)")
        zr = zm.real
        if not 0 < zr < 1:
            raise DomainError("principal_lambda needs real z in (0, 1)")
        two_pi_i = 2 * mp.pi * mp.mpc(0, 1)
        lg = mp.log(zr)
        li_tol = mp.mpf(tol) * mp.mpf("1e-4")
        grid = [[mp.mpc(0)] * (n + 1) for _ in range(n + 1)]
        grid[0][0] = mp.mpc(1)
        for j in range(1, n + 1):
            grid[0][j] = _li_unit_disk(j, mp.mpc(zr), li_tol)
        for i in range(1, n + 1):
            for j in range(i, n + 1):
                grid[i][j] = two_pi_i ** i * lg ** (j - i) / mp.factorial(j - i)
        return PeriodMatrix(n, tuple(tuple(row) for row in grid), "principal")


def _segment_funcs(start, seg):
    """(z(s), z'(s)) for s in [0,1], in the active mpmath precision."""
    a = mp.mpc(start)
    if isinstance(seg, LineTo):
        b = mp.mpc(seg.end)
        d = b - a
        return (lambda s: a + s * d), (lambda s: d), abs(d)
    c = mp.mpc(seg.center)
    w0 = a - c
    sweep = mp.mpf(seg.sweep)
    i_sweep = mp.mpc(0, 1) * sweep
    zf = lambda s: c + w0 * mp.exp(i_sweep * s)
    zp = lambda s: w0 * i_sweep * mp.exp(i_sweep * s)
    return zf, zp, abs(w0 * sweep)


def _rhs(lam, z, zprime, n):
    # (Lambda A)[i][j] = Lambda[i][j-1] * a_j, a_1 = 1/(1-z), a_j = 1/z
    a = [None] * (n + 1)
    if n >= 1:
        a[1] = zprime / (1 - z)
        inv_z = zprime / z
        for j in range(2, n + 1):
            a[j] = inv_z
    out = [[mp.mpc(0)] * (n + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        row = lam[i]
        orow = out[i]
        for j in range(1, n + 1):
            v = row[j - 1]
            if v:
                orow[j] = v * a[j]
    return out


def _mat_axpy(y, c, x, n):
    return [[y[i][j] + c * x[i][j] for j in range(n + 1)] for i in range(n + 1)]


def transport(n, path, start, tol=DEFAULT_TOL, prec=DEFAULT_PREC,
              margin=DEFAULT_MARGIN):
    """Analytic continuation of ``start`` along ``path``.

    Integrates the matrix system row by row with an adaptive embedded 5(4)
    pair, targeting local error <= tol per unit arclength, with the step
    never exceeding a quarter of the distance to the nearest puncture.
    Raises IntegrationError (with the failing arclength position) if the
    step size underflows.
    """
    if n < 1:
        raise DomainError("transport needs n >= 1")
    if start.n != n:
        raise DomainError("start matrix has the wrong weight")
    path.validate(margin)
    with mp.workprec(prec):
        tol_m = mp.mpf(tol)
        C = [mp.mpf(c.numerator) / c.denominator for c in _DP_C]
        A = [[mp.mpf(x.numerator) / x.denominator for x in row] for row in _DP_A]
        B5 = [mp.mpf(x.numerator) / x.denominator for x in _DP_B5]
        B4 = [mp.mpf(x.numerator) / x.denominator for x in _DP_B4]
        lam = [[mp.mpc(v) for v in row] for row in start.entries]
        arclen = mp.mpf(0)
        starts, _ = path.segment_starts()
        for seg_start, seg in zip(starts, path.segments):
            zf, zp, seg_len = _segment_funcs(seg_start, seg)
            if seg_len == 0:
                continue
            s = mp.mpf(0)
            h = mp.mpf("0.05")
            k1 = None
            while s < 1:
                z0 = zf(s)
                speed = abs(zp(s))
                dist = min(abs(z0), abs(z0 - 1))
                h = min(h, dist / (4 * speed), 1 - s)
                if h < mp.mpf("1e-40"):
                    raise IntegrationError(
                        "step size underflow during transport",
                        position=float(arclen))
                if k1 is None:
                    k1 = _rhs(lam, z0, zp(s), n)
                ks = [k1]
                for stage in range(1, 7):
                    y = lam
                    for m, amult in enumerate(A[stage]):
                        if amult:
                            y = _mat_axpy(y, h * amult, ks[m], n)
                    sz = s + C[stage] * h
                    ks.append(_rhs(y, zf(sz), zp(sz), n))
                y5 = lam
                for m in range(7):
                    if B5[m]:
                        y5 = _mat_axpy(y5, h * B5[m], ks[m], n)
                err = mp.mpf(0)
                for i in range(n + 1):
                    for j in range(n + 1):
                        d = mp.mpc(0)
                        for m in range(7):
                            bd = B5[m] - B4[m]
                            if bd:
                                d += bd * ks[m][i][j]
                        e = abs(d) * h
                        if e > err:
                            err = e
                tol_step = tol_m * h * speed
                if err <= tol_step:
                    s += h
                    arclen += h * speed
                    lam = y5
                    k1 = ks[6]  # FSAL: last stage evaluated at (s+h, y5)
                else:
                    k1 = ks[0]
                if err > 0:
                    fac = mp.mpf("0.9") * (tol_step / err) ** mp.mpf("0.2")
                    h *= min(mp.mpf(5), max(mp.mpf("0.2"), fac))
                else:
                    h *= 5
        tag = f"{start.branch_tag} . {path.describe()}"
        return PeriodMatrix(n, tuple(tuple(row) for row in lam), tag)


def _solve_upper(lam, target, n):
    """M with M * lam = target, lam upper triangular; by forward substitution
    along each row."""
    M = [[mp.mpc(0)] * (n + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        for j in range(n + 1):
            acc = target[i][j]
            for k in range(j):
                if M[i][k]:
                    acc -= M[i][k] * lam[k][j]
            M[i][j] = acc / lam[j][j]
    return M


def monodromy(n, loop, tol=DEFAULT_TOL, prec=DEFAULT_PREC,
              margin=DEFAULT_MARGIN, max_den=None):
    """Exact monodromy matrix of the weight-n system along a closed loop.

    Transports the principal fundamental solution around the loop, divides by
    the start matrix, and certifies each entry as a rational number with
    denominator at most n! (tolerance 100 * tol).  Raises ReconstructionError
    when an entry fails to certify - a sign of insufficient precision or an
    inadmissible path.
    """
    if n < 1:
        raise DomainError("monodromy needs n >= 1")
    if not loop.closed:
        raise DomainError("monodromy needs a closed loop")
    base = loop.base_point
    if abs(base.imag) > 0 or not 0 < base.real < 1:
        raise DomainError("monodromy loops must be based at real z in (0, 1)")
    start = principal_lambda(n, base.real, tol=tol, prec=prec)
    moved = transport(n, loop, start, tol=tol, prec=prec, margin=margin)
    with mp.workprec(prec):
        M = _solve_upper(start.rows(), moved.rows(), n)
        rtol = mp.mpf(tol) * 100
        if max_den is None:
            max_den = math.factorial(n)
        out = []
        for i in range(n + 1):
            row = []
            for j in range(n + 1):
                v = M[i][j]
                if abs(v.imag) > rtol:
                    raise ReconstructionError(
                        f"entry ({i},{j}) has imaginary part {mp.nstr(v.imag, 5)}")
                r = rational_reconstruct(v.real, max_den, rtol)
                if r is None:
                    raise ReconstructionError(
                        f"entry ({i},{j}) = {mp.nstr(v.real, 20)} is not a "
                        f"rational with denominator <= {max_den}")
                row.append(r)
            out.append(row)
        return RationalMatrix(out)
