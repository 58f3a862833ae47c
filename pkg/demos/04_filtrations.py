"""The connection, the two flags on a fiber, and the block comparison with
the rank-2 logarithmic system.

The weight flag is spanned by leading basis vectors, the Hodge flag by
trailing columns of the solution matrix; each graded piece must be a line of
pure type (k, k).  The lower-right block of the solution matrix is the
2*pi*i-twist of a divided-power symmetric power of [[1, log z], [0, 2*pi*i]].
"""

import mpmath as mp

from polylogvar import (FilteredFiber, canonical_loop, connection,
                        evaluate_connection, flatness_residual,
                        graded_dimensions, hodge_transversality_check,
                        kummer_block_check, principal_lambda, transport)

n = 3
c = connection(n)
print("connection tags (weight 3):")
for row in c.entries:
    print("  [" + ", ".join(t.value.rjust(9) for t in row) + "]")
A = evaluate_connection(c, 0.5)
print("evaluated at z = 1/2, superdiagonal:",
      [mp.nstr(A[k][k + 1], 6) for k in range(n)])

print("\nfinite differences against the connection (residual at z = 1/2):")
for m in range(1, 5):
    print(f"  weight {m}: {flatness_residual(m, 0.5):.2e}")

lam = principal_lambda(n, 0.5)
fib = FilteredFiber.from_period_matrix(lam)
print("\nweight graded dimensions:", graded_dimensions(fib))
print("transversality (each graded piece pure of type (k,k)):",
      hodge_transversality_check(fib).passed)

moved = transport(n, canonical_loop(0), lam, tol=1e-10)
print("still transversal after a loop around 0:",
      hodge_transversality_check(FilteredFiber.from_period_matrix(moved)).passed)

print("\ndivided-power symmetric-power block, weights 1..4 at z = 0.3/0.5/0.7:")
ok = all(kummer_block_check(m, mp.mpf(z), tol=1e-10).passed
         for m in range(1, 5) for z in ("0.3", "0.5", "0.7"))
print("  all pass:", ok)
