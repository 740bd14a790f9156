"""Kurokawa multiple sine functions S_r and the triple cosine C_3.

For ``r >= 2``

    S_r(z) = exp(z^(r-1)/(r-1)) * prod_{n>=1} (P_{r-1}(z/n) P_{r-1}(-z/n)^((-1)^(r-1)))^(n^(r-1))

with ``P_r(w) = (1 - w) exp(w + w^2/2 + ... + w^r/r)``.  Expanding
``log P_{r-1}(w) = -sum_{k>=r} w^k/k`` and summing over ``n`` gives

    log S_r(z) = z^(r-1)/(r-1) - 2 sum_{j in J_r} zeta(j-r+1) z^j / j,

``J_r = {j >= r+1 : j = r-1 mod 2}``, valid for ``|z| < 1``.  The default
route keeps the ``n = 1`` factor in closed form and sums the remainder with
``zeta - 1`` coefficients, which decay like ``(|z|/2)^j``.

The triple cosine expands the same way over odd integers with
``lambda(s) = (1 - 2^-s) zeta(s)``:

    log C_3(x) = -(1/4) sum_{k>=2} (4x^2)^k lambda(2k-2) / k.
"""

from __future__ import annotations

import math

import mpmath
from mpmath import mp, mpf

from .errors import DomainError
from .mp_core import PrecLike, to_mpf, working
from .zeta_constants import power_tail, zeta_minus_one_table, lambda_minus_one_int

MAX_ORDER = 6
ROUTES = ("auto", "log-series", "regularized-product", "closed-form")
PRODUCT_TERMS = 10**4


def _check_order(r: int) -> int:
    if int(r) != r or not 1 <= r <= MAX_ORDER:
        raise DomainError(f"multiple sine order must be an integer in 1..{MAX_ORDER}, got {r}")
    return int(r)


def _series_length(ratio, dps: int, extra: float = 0.0) -> int:
    # smallest J with ratio^J < 10^-dps, ratio in (0, 1)
    ratio = float(ratio)
    if ratio <= 0:
        return 1
    return int(math.ceil((dps * math.log(10) + extra) / -math.log(ratio))) + 2


def log_weierstrass_p(r: int, w) -> mpf:
    """``log P_r(w)`` for real ``w < 1``."""
    w = to_mpf(w)
    if w >= 1:
        raise DomainError(f"log P_{r}(w) undefined for w >= 1, got {w}")
    return mpmath.log1p(-w) + mpmath.fsum(w ** k / k for k in range(1, r + 1))


def weierstrass_p(r: int, z, prec: PrecLike = None) -> mpf:
    """The factor ``P_r(z) = (1 - z) exp(z + z^2/2 + ... + z^r/r)``."""
    if int(r) != r or r < 0:
        raise DomainError(f"P_r needs an integer r >= 0, got {r}")
    with working(prec):
        z = to_mpf(z)
        if z == 1:
            raise DomainError("P_r(1) = 0; log P_r undefined at z = 1")
        return (1 - z) * mpmath.exp(mpmath.fsum(z ** k / k for k in range(1, int(r) + 1)))


def _first_factor_log(r: int, z: mpf) -> mpf:
    # log of the n = 1 factor: log P_{r-1}(z) + (-1)^(r-1) log P_{r-1}(-z)
    sign = -1 if (r - 1) % 2 else 1
    return log_weierstrass_p(r - 1, z) + sign * log_weierstrass_p(r - 1, -z)


def _log_s_r_series(r: int, z: mpf) -> mpf:
    total = z ** (r - 1) / (r - 1) + _first_factor_log(r, z)
    az = abs(z)
    if az == 0:
        return total
    jmax = _series_length(az / 2, mp.dps, (r - 1) * math.log(2))
    table = zeta_minus_one_table(jmax - r + 1)
    rest = mpf(0)
    zj = z ** (r + 1)
    z2 = z * z
    for j in range(r + 1, jmax + 1, 2):
        rest += table[j - r + 1] * zj / j
        zj *= z2
    return total - 2 * rest


def _log_s_r_product(r: int, z: mpf, N: int = PRODUCT_TERMS) -> mpf:
    sign = -1 if (r - 1) % 2 else 1
    head = z ** (r - 1) / (r - 1)
    terms = []
    for n in range(1, N + 1):
        w = z / n
        terms.append(mpf(n) ** (r - 1) * (log_weierstrass_p(r - 1, w)
                                          + sign * log_weierstrass_p(r - 1, -w)))
    body = mpmath.fsum(terms)
    # Euler-Maclaurin tail: -2 sum_j z^j/j * sum_{n>N} n^-(j-r+1)
    tail = mpf(0)
    tol = mpf(2) ** (-mp.prec - 4)
    j = r + 1
    while True:
        t = z ** j / j * power_tail(j - r + 1, N + 1)
        tail += t
        if abs(t) < tol:
            break
        j += 2
    return head + body - 2 * tail


def log_s_r(r: int, z, prec: PrecLike = None, route: str = "auto") -> mpf:
    """``log S_r(z)`` for ``2 <= r <= 6`` and real ``|z| < 1``."""
    r = _check_order(r)
    if r == 1:
        raise DomainError("log S_1 not provided; use s_r(1, z) = 2 sin(pi z)")
    if route not in ROUTES:
        raise ValueError(f"unknown route {route!r}")
    with working(prec):
        z = to_mpf(z)
        if abs(z) >= 1:
            raise DomainError(f"log S_{r}(z) needs |z| < 1, got z={mpmath.nstr(z, 10)}")
        if z == 0:
            return mpf(0)
        if route == "regularized-product":
            return _log_s_r_product(r, z)
        if route == "closed-form":
            if r != 2:
                raise DomainError("closed-form route exists for S_2 only")
            if z < 0:
                return -mpmath.log(s2_closed_form(-z))
            return mpmath.log(s2_closed_form(z))
        return _log_s_r_series(r, z)


def s_r(r: int, z, prec: PrecLike = None, route: str = "auto") -> mpf:
    """The multiple sine function ``S_r(z)``, ``S_1(z) = 2 sin(pi z)``.

    Real arguments with ``|z| < 1``; at ``z = 1`` (and ``z = -1`` for odd r)
    the vanishing ``n = 1`` factor gives exact zero.  ``S_r(-1)`` for even r
    is a pole.
    """
    r = _check_order(r)
    with working(prec):
        z = to_mpf(z)
        if r == 1:
            return 2 * mpmath.sinpi(z)
        if abs(z) == 1:
            if z == 1 or r % 2 == 1:
                return mpf(0)
            raise DomainError(f"S_{r} has a pole at z = -1")
        return mpmath.exp(log_s_r(r, z, route=route))


def s2_closed_form(z, prec: PrecLike = None) -> mpf:
    """``S_2(z) = (2 sin pi z)^z exp(Cl_2(2 pi z) / (2 pi))`` for ``0 < z < 1``."""
    from .polylog import cl2

    with working(prec):
        z = to_mpf(z)
        if not 0 < z < 1:
            raise DomainError(f"S_2 closed form needs 0 < z < 1, got {mpmath.nstr(z, 10)}")
        return (2 * mpmath.sinpi(z)) ** z * mpmath.exp(cl2(2 * mp.pi * z) / (2 * mp.pi))


def _log_c3_series(x: mpf) -> mpf:
    u = 4 * x * x
    total = x * x + mpmath.log1p(-u) / 4
    if u == 0:
        return total
    kmax = _series_length(u / 9, mp.dps)
    rest = mpf(0)
    uk = u * u
    for k in range(2, kmax + 1):
        rest += lambda_minus_one_int(2 * k - 2) * uk / k
        uk *= u
    return total - rest / 4


def _odd_power_tail(s: int, start: int) -> mpf:
    # sum over odd m >= start (start odd) of m^-s
    return power_tail(s, start) - mpf(2) ** (-s) * power_tail(s, (start + 1) // 2)


def _log_c3_product(x: mpf, N: int = PRODUCT_TERMS) -> mpf:
    x2 = x * x
    terms = []
    for n in range(1, N + 1):
        m2 = mpf(2 * n - 1) ** 2
        terms.append(x2 + m2 / 4 * mpmath.log1p(-4 * x2 / m2))
    body = mpmath.fsum(terms)
    u = 4 * x2
    tail = mpf(0)
    tol = mpf(2) ** (-mp.prec - 4)
    k = 2
    uk = u * u
    while True:
        t = uk / k * _odd_power_tail(2 * k - 2, 2 * N + 1)
        tail += t
        if abs(t) < tol:
            break
        k += 1
        uk *= u
    return body - tail / 4


def log_c3(x, prec: PrecLike = None, route: str = "auto") -> mpf:
    """``log C_3(x)`` for real ``|x| < 1/2``."""
    if route not in ROUTES:
        raise ValueError(f"unknown route {route!r}")
    with working(prec):
        x = to_mpf(x)
        if abs(x) >= mpf(1) / 2:
            raise DomainError(f"log C_3(x) needs |x| < 1/2, got {mpmath.nstr(x, 10)}")
        if route == "regularized-product":
            return _log_c3_product(x)
        if route == "closed-form":
            # duplication: 4 log C_3(x) = log S_3(2x) - 4 log S_3(x)
            return log_s_r(3, 2 * x) / 4 - log_s_r(3, x)
        return _log_c3_series(x)


def c3(x, prec: PrecLike = None, route: str = "auto") -> mpf:
    """Triple cosine ``C_3(x) = prod_{n>=1} e^(x^2) (1 - 4x^2/(2n-1)^2)^((2n-1)^2/4)``."""
    with working(prec):
        x = to_mpf(x)
        if abs(x) == mpf(1) / 2:
            return mpf(0)
        return mpmath.exp(log_c3(x, route=route))


def holcombe_product(prec: PrecLike = None) -> mpf:
    """``H = prod_{n>=2} e (1 - 1/n^2)^(n^2)``.

    ``log H = sum_{n>=2} [1 + n^2 log(1 - 1/n^2)] = -sum_{k>=2} (zeta(2k-2) - 1)/k``.
    """
    with working(prec):
        kmax = _series_length(mpf(1) / 4, mp.dps)
        table = zeta_minus_one_table(2 * kmax - 2)
        log_h = -mpmath.fsum(table[2 * k - 2] / k for k in range(2, kmax + 1))
        return mpmath.exp(log_h)


def s3_derivative_at_1(prec: PrecLike = None) -> mpf:
    """``S_3'(1) = -2 e^(3/2) H`` with ``H`` the Holcombe product."""
    with working(prec):
        return -2 * mpmath.exp(mpf(3) / 2) * holcombe_product()
