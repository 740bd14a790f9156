"""
Multiple sine functions S_r and the triple cosine C_3
=====================================================

S_r(z) is a regularized product over n >= 1.  Its log expands in powers
of z with zeta-value coefficients, and that series is the default route.
"""

import mpmath
from mpmath import mp, mpf

from multisine import c3, s_r
from multisine.kurokawa import log_c3, log_s_r
from multisine.mp_core import agree_digits, working

# Everything below runs at 40 requested digits (55 working).
with working(40):
    half = mpf(1) / 2

    # S_1 is just 2 sin(pi z); S_2(1/2) is sqrt(2).
    print("S1(1/6)   =", s_r(1, mpf(1) / 6))
    print("S2(1/2)   =", s_r(2, half))
    print("sqrt(2)   =", mpmath.sqrt(2))

    # Even orders are odd-reciprocal, odd orders are even.
    x = mpf("0.37")
    print("S2(x)S2(-x) - 1 =", mpmath.nstr(s_r(2, x) * s_r(2, -x) - 1, 5))
    print("S3(x) - S3(-x)  =", mpmath.nstr(s_r(3, x) - s_r(3, -x), 5))

    # The same value by the truncated product with an Euler-Maclaurin tail.
    # This is much slower, but it is a genuinely different computation.
    series = log_s_r(3, mpf("0.3"))
    product = log_s_r(3, mpf("0.3"), route="regularized-product")
    print("log S3(0.3): series vs product agree to", agree_digits(series, product), "digits")

    # Duplication links S_3 at 2x with S_3 and C_3 at x.
    x = mpf("0.3")
    lhs = s_r(3, 2 * x)
    rhs = s_r(3, x) ** 4 * c3(x) ** 4
    print("S3(0.6) =", lhs)
    print("S3(0.3)^4 C3(0.3)^4 =", rhs)

    # S_r vanishes at z = 1, where the first factor of the product is zero.
    print("S3(1) =", s_r(3, 1), " C3(1/2) =", c3(half))

# A short table of log S_r(x) and log C_3 for a few orders.
with working(15):
    print()
    print(f"{'x':>5} " + " ".join(f"{'log S' + str(r):>12}" for r in (2, 3, 4, 5))
          + f" {'log C3':>12}")
    for x in ("0.1", "0.2", "0.3", "0.4"):
        x = mpf(x)
        row = [log_s_r(r, x) for r in (2, 3, 4, 5)] + [log_c3(x)]
        print(f"{mpmath.nstr(x, 2):>5} " + " ".join(f"{mpmath.nstr(v, 8):>12}" for v in row))
