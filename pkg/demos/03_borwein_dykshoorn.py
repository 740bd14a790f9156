"""
The function D(x) and Catalan-type products
===========================================

D(x) is the limit of prod (1 + x/k)^(k (-1)^(k+1)) over an odd number of
factors.  A plain truncation converges like 1/n.  The eta-coefficient
series converges geometrically for |x| < 1.
"""

import mpmath
from mpmath import mp, mpf

from multisine import constant, d_func, d_ratio, kachi_tzermias_catalan, s_r
from multisine.bd_adamchik import d_partial_log, kachi_tzermias_catalan_extrapolated
from multisine.mp_core import agree_digits, working

with working(40):
    # Melzak: D(2) = pi e / 2, which lies beyond the series disc.
    print("D(2)     =", d_func(2))
    print("pi e / 2 =", mp.pi * mp.e / 2)

    # The ratio D(x)/D(-x) in terms of the double sine.
    x = mpf(1) / 3
    lhs = d_func(x) / d_func(-x)
    rhs = mpmath.exp(x) * s_r(2, x / 2) ** 4 / s_r(2, x)
    print("D(1/3)/D(-1/3) =", lhs)
    print("via S2         =", rhs)

    # How slowly the raw partial products approach D(0.3).
    target = mpmath.log(d_func(mpf("0.3")))
    for n in (10, 100, 1000):
        err = d_partial_log(mpf("0.3"), n) - target
        print(f"  n = {n:>5}: log-error {mpmath.nstr(err, 3)}")

with working(50):
    # x = 1/2 turns the product into prod (1 - 2/(2k+1))^(k (-1)^k).
    G = constant("catalan")
    for parity, sign in (("odd", 1), ("even", -1)):
        closed = kachi_tzermias_catalan(parity)
        ref = mpmath.exp(2 * G / mp.pi + sign * mpf(1) / 2)
        print(f"{parity:>4} truncation: {mpmath.nstr(closed, 30)}  "
              f"({agree_digits(closed, ref)} digits vs exp(2G/pi {'+' if sign > 0 else '-'} 1/2))")

    # Richardson extrapolation of the raw partial products gets there too.
    direct = kachi_tzermias_catalan_extrapolated("odd", max_n=1000, order=12)
    print("extrapolated odd product:", mpmath.nstr(direct.value, 30),
          f"(self-estimate {direct.achieved_digits} digits)")

    print("D ratio at 1/2:", mpmath.nstr(d_ratio(mpf(1) / 2), 30))
