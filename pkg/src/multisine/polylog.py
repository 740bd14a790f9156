"""Clausen function, real polylogarithms, Ti_2, chi_2 and Barnes G ratios.

Cl_2 is evaluated from the log-sine integral

    Cl_2(theta) = -int_0^theta log|2 sin(t/2)| dt
                = theta - theta log theta
                  + sum_{k>=1} zeta(2k) theta^(2k+1) / (k (2k+1) (2 pi)^(2k)),

which converges for ``|theta| < 2 pi``; arguments are first reduced to
``[0, pi]`` by periodicity and oddness.
"""

from __future__ import annotations

import math
import threading

import mpmath
from mpmath import mp, mpf

from .errors import DomainError
from .mp_core import PrecLike, sum_alternating, to_mpf, working
from .zeta_constants import _bucket, constant, zeta_minus_one_table


def reduce_angle(theta) -> tuple:
    """Return ``(sign, t)`` with ``t`` in ``[0, pi]`` and ``f(theta) = sign*f(t)``
    for any odd 2 pi-periodic ``f``."""
    theta = to_mpf(theta)
    two_pi = 2 * mp.pi
    t = theta - two_pi * mpmath.nint(theta / two_pi)
    if t < 0:
        return -1, -t
    return 1, t


def cl2(theta, prec: PrecLike = None) -> mpf:
    """Clausen function ``Cl_2(theta) = sum_{n>=1} sin(n theta) / n^2``."""
    with working(prec) as dps:
        sign, t = reduce_angle(theta)
        if t == 0:
            return mpf(0)
        ratio = (t / (2 * mp.pi)) ** 2
        kmax = int(math.ceil(dps * math.log(10) / -float(mpmath.log(ratio)))) + 2
        table = zeta_minus_one_table(2 * kmax)
        total = t - t * mpmath.log(t)
        tk = t * ratio  # t^(2k+1) / (2pi)^(2k)
        for k in range(1, kmax + 1):
            total += (1 + table[2 * k]) * tk / (k * (2 * k + 1))
            tk *= ratio
        return sign * total


def _check_unit(z, name: str) -> mpf:
    z = to_mpf(z)
    if abs(z) > 1:
        raise DomainError(f"{name} needs |z| <= 1, got {mpmath.nstr(z, 10)}")
    return z


def _power_series(z: mpf, s: int) -> mpf:
    # sum z^n / n^s for |z| <= 1/2
    if z == 0:
        return mpf(0)
    total = mpf(0)
    zn = z
    n = 1
    tol = mpf(2) ** (-mp.prec - 4)
    while True:
        t = zn / mpf(n) ** s
        total += t
        if abs(t) < tol:
            return total
        n += 1
        zn *= z


def _alternating_series(y: mpf, s: int) -> mpf:
    # sum (-y)^n / n^s for 0 < y <= 1, accelerated
    return -sum_alternating(lambda n: y ** n / mpf(n) ** s, 1)


def li2(z, prec: PrecLike = None) -> mpf:
    """Dilogarithm ``sum z^n / n^2`` for real ``|z| <= 1``."""
    with working(prec):
        z = _check_unit(z, "li2")
        if z == 1:
            return mp.pi ** 2 / 6
        if abs(z) <= mpf(1) / 2:
            return _power_series(z, 2)
        if z < 0:
            return _alternating_series(-z, 2)
        # reflection maps (1/2, 1) onto (0, 1/2)
        return (mp.pi ** 2 / 6 - mpmath.log(z) * mpmath.log1p(-z)
                - _power_series(1 - z, 2))


def li3(z, prec: PrecLike = None) -> mpf:
    """Trilogarithm ``sum z^n / n^3`` for real ``|z| <= 1``."""
    with working(prec):
        z = _check_unit(z, "li3")
        if z == 1:
            return constant("zeta3")
        if abs(z) <= mpf(1) / 2:
            return _power_series(z, 3)
        if z < 0:
            return _alternating_series(-z, 3)
        # Li3(z) + Li3(1-z) + Li3(1-1/z) = zeta(3) + log^3 z/6
        #   + (pi^2/6) log z - (1/2) log^2 z log(1-z),  0 < z < 1
        lz = mpmath.log(z)
        w = 1 - 1 / z  # in (-1, 0)
        return (constant("zeta3") + lz ** 3 / 6 + mp.pi ** 2 / 6 * lz
                - lz ** 2 * mpmath.log1p(-z) / 2
                - _power_series(1 - z, 3) - _alternating_series(-w, 3))


def ti2(y, prec: PrecLike = None) -> mpf:
    """Inverse tangent integral ``sum_{j>=1} (-1)^(j+1) y^(2j-1) / (2j-1)^2``."""
    with working(prec):
        y = _check_unit(y, "ti2")
        if y == 0:
            return mpf(0)
        a = abs(y)
        value = sum_alternating(lambda j: a ** (2 * j - 1) / mpf(2 * j - 1) ** 2, 1)
        return value if y > 0 else -value


def chi2(y, prec: PrecLike = None) -> mpf:
    """Legendre chi ``sum_{k>=0} y^(2k+1) / (2k+1)^2``."""
    with working(prec):
        y = _check_unit(y, "chi2")
        if abs(y) > mpf(1) / 2:
            return (li2(y) - li2(-y)) / 2
        if y == 0:
            return mpf(0)
        total = mpf(0)
        y2 = y * y
        yk = y
        tol = mpf(2) ** (-mp.prec - 4)
        k = 0
        while True:
            t = yk / mpf(2 * k + 1) ** 2
            total += t
            if abs(t) < tol:
                return total
            yk *= y2
            k += 1


def barnes_g_ratio(t, prec: PrecLike = None) -> mpf:
    """``G(1+t) / G(1-t) = exp(t log(2 pi) - log S_2(t))`` for ``|t| < 1``."""
    from .kurokawa import log_s_r

    with working(prec):
        t = to_mpf(t)
        if abs(t) >= 1:
            raise DomainError(f"Barnes G ratio needs |t| < 1, got {mpmath.nstr(t, 10)}")
        return mpmath.exp(t * mpmath.log(2 * mp.pi) - log_s_r(2, t))


class _LogFactorials:
    """Cumulative ``log j!`` per precision bucket, extended on demand."""

    def __init__(self):
        self._tables = {}
        self._lock = threading.Lock()

    def get(self, n: int) -> mpf:
        bucket = _bucket(mp.dps)
        with self._lock:
            table = self._tables.setdefault(bucket, [mpf(0)])
            if n >= len(table):
                with mp.workdps(bucket + 5):
                    acc = table[-1]
                    for j in range(len(table), n + 1):
                        acc = acc + mpmath.log(j)
                        table.append(acc)
            return table[n]


_log_factorials = _LogFactorials()


def log_factorial(n: int) -> mpf:
    if n < 0:
        raise DomainError("log_factorial needs n >= 0")
    return +_log_factorials.get(n)


def log_gamma_half_integer(k: int, prec: PrecLike = None) -> mpf:
    """Exact ``log Gamma(1 + k/2)`` for integer ``k >= 1``.

    Even ``k = 2m``: ``log m!``.  Odd ``k = 2m+1``:
    ``Gamma(m + 3/2) = (2m+2)! sqrt(pi) / (4^(m+1) (m+1)!)``.
    """
    if int(k) != k or k < 1:
        raise DomainError(f"k must be a positive integer, got {k}")
    k = int(k)
    with working(prec):
        m, odd = divmod(k, 2)
        if not odd:
            return log_factorial(m)
        return (log_factorial(2 * m + 2) - (m + 1) * mpmath.log(4)
                - log_factorial(m + 1) + mpmath.log(mp.pi) / 2)
