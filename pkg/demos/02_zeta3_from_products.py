"""
Two routes to zeta(3) through the triple sine and cosine
========================================================

Both formulas below recover zeta(3) from the product functions with no
zeta(3) input.  The reference value comes from an independent
Euler-Maclaurin evaluation.
"""

import mpmath
from mpmath import mp, mpf

from multisine import c3, constant, s_r
from multisine.mp_core import agree_digits, working

with working(60):
    pi = mp.pi
    G = constant("catalan")
    zeta3 = constant("zeta3")

    # From the triple sine at 1/2.
    via_s3 = 8 * pi ** 2 / 7 * mpmath.log(mpf(2) ** (mpf(1) / 4) / s_r(3, mpf(1) / 2))

    # From the triple cosine at 1/4, which also needs Catalan's constant.
    inner = mpmath.exp(4 * G / pi) * c3(mpf(1) / 4) ** 16 / mpmath.sqrt(2)
    via_c3 = 4 * pi ** 2 / 21 * mpmath.log(inner)

    print("zeta(3)            ", zeta3)
    print("via S3(1/2)        ", via_s3)
    print("via C3(1/4)        ", via_c3)
    print("digits:", agree_digits(via_s3, zeta3), agree_digits(via_c3, zeta3))

    # The closed form of C3(1/4) has +21 zeta(3)/(64 pi^2) and -G/(4 pi).
    # With the sign of the Catalan term flipped, agreement collapses.
    good = mpf(2) ** (mpf(1) / 32) * mpmath.exp(21 * zeta3 / (64 * pi ** 2) - G / (4 * pi))
    flipped = mpf(2) ** (mpf(1) / 32) * mpmath.exp(21 * zeta3 / (64 * pi ** 2) + G / (4 * pi))
    print("C3(1/4) vs closed form:", agree_digits(c3(mpf(1) / 4), good), "digits;",
          "with +G/(4 pi):", agree_digits(c3(mpf(1) / 4), flipped), "digits")
