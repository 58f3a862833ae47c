"""Independent reference values for the test suite.

Everything here goes through mpmath's own polylog/log/pi machinery at 256
bits, or through direct series with proven error bounds - never through the
package code paths being tested.
"""

import mpmath as mp

ORACLE_PREC = 256

# frozen at 256 bits
LOG2 = "0.6931471805599453094172321214581765680755"
PI2_OVER_12 = "0.8224670334241132182362075833230125946095"
LI2_HALF = "0.5822405264650125059026563201596801087442"
LI3_HALF = "0.5372131936080402009406232255949658266704"


def ref_polylog(n, z):
    """mpmath's independent polylogarithm at 256-bit precision."""
    with mp.workprec(ORACLE_PREC):
        return mp.polylog(n, mp.mpc(z))


def ref_minus_log1m(z):
    """-log(1-z) at 256-bit precision (equals Li_1)."""
    with mp.workprec(ORACLE_PREC):
        return -mp.log(1 - mp.mpc(z))


def alternating_li2_minus1():
    """Li_2(-1) summed as an accelerated alternating series."""
    with mp.workprec(ORACLE_PREC):
        return mp.nsum(lambda k: (-1) ** k / k ** 2, [1, mp.inf], method="a")
