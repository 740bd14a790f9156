"""
Clausen function, dilogarithm family, and Barnes G ratios
=========================================================

S_2 on (0, 1) has a closed form through Cl_2, and log S_2 gives the ratio
G(1+t)/G(1-t) of Barnes functions.
"""

import mpmath
from mpmath import mp, mpf

from multisine import barnes_g_ratio, chi2, cl2, constant, li2, s2_closed_form, s_r, ti2
from multisine.mp_core import agree_digits, working

with working(40):
    G = constant("catalan")
    print("Cl2(pi/2) =", cl2(mp.pi / 2), " G =", G)
    print("Ti2(1)    =", ti2(1))
    print("chi2(1)   =", chi2(1), " pi^2/8 =", mp.pi ** 2 / 8)
    print("Li2(1/2)  =", li2(mpf(1) / 2))

    # Closed form against the series, at a few points.
    for z in ("0.2", "0.5", "0.8"):
        z = mpf(z)
        print(f"S2({z}) closed form vs series: {agree_digits(s2_closed_form(z), s_r(2, z))} digits")

    # Barnes G ratios.
    print("G(3/2)/G(1/2) =", barnes_g_ratio(mpf(1) / 2), " sqrt(pi) =", mpmath.sqrt(mp.pi))
    markov = mpf(2) ** (mpf(1) / 8) * mp.pi ** (mpf(1) / 4) * mpmath.exp(-G / (2 * mp.pi))
    print("G(5/4)/G(3/4) =", barnes_g_ratio(mpf(1) / 4), " closed form =", markov)
    t = mpf("0.3")
    print("against mpmath.barnesg at 0.3:",
          agree_digits(barnes_g_ratio(t), mpmath.barnesg(1 + t) / mpmath.barnesg(1 - t)), "digits")

# Cl_2 over one period.
with working(10):
    print()
    for k in range(0, 9):
        theta = 2 * mp.pi * k / 8
        bar = "#" * int(round(40 * max(cl2(theta), 0)))
        print(f"theta = {k}/8 * 2pi  Cl2 = {mpmath.nstr(cl2(theta), 8):>12}  {bar}")
