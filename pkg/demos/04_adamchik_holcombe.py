"""
Adamchik's E(x), the shifted product, and Holcombe's product
============================================================
"""

import mpmath
from mpmath import mp, mpf

from multisine import adamchik_shifted_product, c3, constant, e_func, holcombe_product, s_r
from multisine import s3_derivative_at_1
from multisine.mp_core import agree_digits, working

with working(50):
    G = constant("catalan")
    z3 = constant("zeta3")

    # E(1/4) in closed form.
    e14 = e_func(mpf(1) / 4)
    ref = mpmath.exp(mpf(1) / 8 - 2 * G / mp.pi + 7 * z3 / (2 * mp.pi ** 2))
    print("E(1/4) =", e14, f"[{agree_digits(e14, ref)} digits]")

    # E through S_3 and through C_3 at x = 1/5.
    x = mpf(1) / 5
    print("E(1/5)                   =", e_func(x))
    print("e^(2x^2) S3(2x)/S3(x)^8  =", mpmath.exp(2 * x * x) * s_r(3, 2 * x) / s_r(3, x) ** 8)
    print("e^(2x^2) C3(x)^8/S3(2x)  =", mpmath.exp(2 * x * x) * c3(x) ** 8 / s_r(3, 2 * x))

    # The k = 1 factor makes E(1/2) = 0.  Starting the product at k = 2
    # leaves a finite limit.
    print("E(1/2) =", e_func(mpf(1) / 2))
    shifted = adamchik_shifted_product()
    print("prod_{k>=2} =", shifted)
    print("(pi/4) exp(1/2 + 7 zeta(3)/pi^2) =",
          mp.pi / 4 * mpmath.exp(mpf(1) / 2 + 7 * z3 / mp.pi ** 2))

    # Holcombe: e^(3/2) prod_{n>=2} e (1 - 1/n^2)^(n^2) = pi.
    H = holcombe_product()
    print("e^(3/2) H =", mpmath.exp(mpf(3) / 2) * H)
    print("S3'(1)    =", s3_derivative_at_1(), " (-2 pi =", -2 * mp.pi, ")")
