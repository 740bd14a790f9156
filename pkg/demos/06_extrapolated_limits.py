"""
Limits of slowly converging products by Richardson extrapolation
================================================================

Two limits are evaluated here as raw sequences in n.  Their logs have
asymptotic expansions in 1/n, so Richardson extrapolation over consecutive
n recovers many digits from a modest number of terms.
"""

import mpmath
from mpmath import mp, mpf

from multisine import constant, kachi_tzermias_zeta3
from multisine.harness.limits import ms_limit, ms_target, ms_target_glaisher
from multisine.mp_core import agree_digits, working

with working(30):
    target = mpmath.exp(7 * constant("zeta3") / (4 * mp.pi ** 2) + mpf(1) / 4)
    print("Kachi-Tzermias zeta(3) product, target", mpmath.nstr(target, 30))
    for max_n, order in ((200, 4), (1000, 8), (2000, 16)):
        r = kachi_tzermias_zeta3(max_n=max_n, order=order)
        print(f"  max_n={max_n:>5} order={order:>2}: self-estimate {r.achieved_digits:>2} digits, "
              f"true {agree_digits(r.value, target):>2}")

    # The Gamma-product limit; both closed forms agree.
    print("Gamma-product limit, target", mpmath.nstr(ms_target(), 30))
    print("  Glaisher form agrees to", agree_digits(ms_target(), ms_target_glaisher()), "digits")
    for max_n, order in ((400, 6), (2000, 16)):
        r = ms_limit(max_n=max_n, order=order)
        print(f"  max_n={max_n:>5} order={order:>2}: self-estimate {r.achieved_digits:>2} digits, "
              f"true {agree_digits(r.value, ms_target()):>2}")
