"""Borwein-Dykshoorn D, Adamchik E, gamma_alpha and the related limit products.

Both functions are limits of alternating products over truncations of a
fixed parity.  Their regularized forms

    D(x) = e^x prod_{k>=1} (e^-x (1 + x/k)^k)^((-1)^(k+1))
    E(x) = prod_{k>=1} (e^(4x^2) (1 - 4x^2/k^2)^(k^2))^((-1)^(k+1))

expand into Dirichlet-eta series

    log D(x) = x + sum_{m>=2} (-1)^(m+1) eta(m-1) x^m / m        (|x| < 1)
    log E(x) = -sum_{m>=2} (4x^2)^m eta(2m-2) / m                 (|x| < 1/2)

which are summed with the ``k = 1`` factor kept in closed form and
``eta - 1`` coefficients for the rest.

Note on the boundary: ``E(1/2) = 0`` because the ``k = 1`` factor vanishes.
The product over ``k >= 2`` at the same argument is a different, nonzero
quantity and is computed by :func:`adamchik_shifted_product`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath
from mpmath import mp, mpf

from .errors import DomainError
from .kurokawa import _series_length, log_s_r, s_r
from .mp_core import (PrecLike, SeriesSpec, richardson_limit, sum_alternating,
                      sum_series, to_mpf, working)
from .zeta_constants import eta_minus_one_int, zeta_minus_one_table


@dataclass(frozen=True)
class RegularizedProductValue:
    value: mpf
    achieved_digits: int
    method: str  # "log-series" or "accelerated-product"


def _log_d_series(x: mpf) -> mpf:
    total = mpmath.log1p(x)
    if x == 0:
        return total
    # m = 2 carries eta(1) - 1 = log 2 - 1
    total -= (mp.ln2 - 1) * x * x / 2
    mmax = _series_length(abs(x) / 2, mp.dps, math.log(2))
    zeta_minus_one_table(mmax)
    xm = x ** 3
    for m in range(3, mmax + 1):
        sign = 1 if m % 2 else -1
        total += sign * eta_minus_one_int(m - 1) * xm / m
        xm *= x
    return total


def _log_abs_d_accelerated(x: mpf) -> mpf:
    # log|D(x)| = log|1+x| + sum_{k>=2} (-1)^(k+1) [k log(1+x/k) - x]
    rest = sum_alternating(lambda k: k * mpmath.log1p(x / k) - x, 2)
    return mpmath.log(abs(1 + x)) + rest


def d_func(x, prec: PrecLike = None) -> mpf:
    """Borwein-Dykshoorn ``D(x) = lim prod_{k=1}^{2n+1} (1 + x/k)^(k (-1)^(k+1))``.

    Implemented for ``x > -2``; ``D(-1) = 0`` and ``x = -2`` is the first pole.
    """
    with working(prec):
        x = to_mpf(x)
        if x == -2:
            raise DomainError("D has a pole at x = -2")
        if x < -2:
            raise DomainError(f"D implemented for x > -2 only, got {mpmath.nstr(x, 10)}")
        if x == -1:
            return mpf(0)
        if abs(x) < 1:
            return mpmath.exp(_log_d_series(x))
        value = mpmath.exp(_log_abs_d_accelerated(x))
        return -value if x < -1 else value


def d_partial_log(x, n: int) -> mpf:
    """``log`` of the truncated product over ``k = 1 .. 2n+1`` (``x > -1``)."""
    x = to_mpf(x)
    return mpmath.fsum((1 if k % 2 else -1) * k * mpmath.log1p(x / k)
                       for k in range(1, 2 * n + 2))


def _s2_signed(z: mpf) -> mpf:
    # S_2 from its product definition on |z| < 2, where the n = 1 factor
    # (1-z)/(1+z) may be negative; zeros/poles at z = 1 / z = -1.
    if abs(z) < 1:
        return s_r(2, z)
    if abs(z) >= 2:
        raise DomainError(f"S_2 continuation implemented for |z| < 2, got {z}")
    first = (1 - z) / (1 + z) * mpmath.exp(2 * z)
    series = mpmath.exp(_log_s2_rest(z))
    return mpmath.exp(z) * first * series


def _log_s2_rest(z: mpf) -> mpf:
    # -2 sum_{j odd >= 3} (zeta(j-1) - 1) z^j / j
    jmax = _series_length(abs(z) / 2, mp.dps, math.log(2))
    table = zeta_minus_one_table(jmax)
    rest = mpf(0)
    zj = z ** 3
    for j in range(3, jmax + 1, 2):
        rest += table[j - 1] * zj / j
        zj *= z * z
    return -2 * rest


def d_ratio(x, prec: PrecLike = None) -> mpf:
    """``D(x)/D(-x) = e^x S_2(x/2)^4 / S_2(x)`` for ``|x| < 2``."""
    with working(prec):
        x = to_mpf(x)
        if abs(x) >= 2:
            raise DomainError(f"D ratio needs |x| < 2, got {mpmath.nstr(x, 10)}")
        if x == 1:
            raise DomainError("D(x)/D(-x) has a pole at x = 1 (D(-1) = 0)")
        if x == -1:
            return mpf(0)
        if abs(x) < 1:
            return mpmath.exp(x + 4 * log_s_r(2, x / 2) - log_s_r(2, x))
        return mpmath.exp(x) * s_r(2, x / 2) ** 4 / _s2_signed(x)


def kachi_tzermias_catalan(parity: str, prec: PrecLike = None) -> mpf:
    """Limit of ``prod (1 - 2/(2k+1))^(k (-1)^k)`` over 2n+1 or 2n factors.

    The odd truncation equals ``D(1/2)/D(-1/2)``; dropping the last factor
    ``(1 - 2/(4n+3))^-(2n+1) -> e`` gives the even one.
    """
    if parity not in ("odd", "even"):
        raise ValueError(f"parity must be 'odd' or 'even', got {parity!r}")
    with working(prec):
        odd = d_ratio(mpf(1) / 2)
        return odd if parity == "odd" else odd / mpmath.e


def kachi_tzermias_catalan_partial_log(parity: str, n: int) -> mpf:
    count = 2 * n + 1 if parity == "odd" else 2 * n
    return mpmath.fsum((1 if k % 2 == 0 else -1) * k * mpmath.log1p(-mpf(2) / (2 * k + 1))
                       for k in range(1, count + 1))


class _PrefixSums:
    """Prefix sums of ``term(k)`` extended lazily; ``get(K) = sum_{k<=K}``."""

    def __init__(self, term):
        self.term = term
        self.sums = [mpf(0)]

    def get(self, K: int) -> mpf:
        while len(self.sums) <= K:
            k = len(self.sums)
            self.sums.append(self.sums[-1] + self.term(k))
        return self.sums[K]


def _extrapolate_log(prefix: _PrefixSums, count, max_n: int, order: int,
                     method: str = "accelerated-product") -> RegularizedProductValue:
    log_limit, digits = richardson_limit(lambda n: prefix.get(count(n)), order, max_n)
    return RegularizedProductValue(mpmath.exp(log_limit), digits, method)


def kachi_tzermias_catalan_extrapolated(parity: str, prec: PrecLike = None,
                                        max_n: int = 2000, order: int = 20
                                        ) -> RegularizedProductValue:
    """The same limits from the raw partial products, Richardson-extrapolated."""
    if parity not in ("odd", "even"):
        raise ValueError(f"parity must be 'odd' or 'even', got {parity!r}")
    with working(prec):
        prefix = _PrefixSums(
            lambda k: (1 if k % 2 == 0 else -1) * k * mpmath.log1p(-mpf(2) / (2 * k + 1)))
        if parity == "odd":
            return _extrapolate_log(prefix, lambda n: 2 * n + 1, max_n, order)
        return _extrapolate_log(prefix, lambda n: 2 * n, max_n, order)


def kachi_tzermias_zeta3(prec: PrecLike = None, max_n: int = 2000,
                         order: int = 20) -> RegularizedProductValue:
    """``lim prod_{k=1}^{2n+1} e^(-1/4) (1 - 1/(k+1))^(k(k+1)/2 (-1)^k)``.

    Individual log-terms grow like k/2 with alternating sign; consecutive
    pairs decay, so prefix sums are taken over whole pairs (odd counts
    ``2n+1``) and the sequence in ``n`` is extrapolated.  Expected value
    ``exp(7 zeta(3)/(4 pi^2) + 1/4)``.
    """
    with working(prec):
        quarter = mpf(1) / 4

        def term(k):
            sign = 1 if k % 2 == 0 else -1
            return -quarter + sign * (mpf(k) * (k + 1) / 2) * mpmath.log1p(-mpf(1) / (k + 1))

        return _extrapolate_log(_PrefixSums(term), lambda n: 2 * n + 1, max_n, order)


def _log_e_series(x: mpf) -> mpf:
    u = 4 * x * x
    total = u + mpmath.log1p(-u)
    if u == 0:
        return total
    mmax = _series_length(x * x, mp.dps)
    zeta_minus_one_table(2 * mmax)
    rest = mpf(0)
    um = u * u
    for m in range(2, mmax + 1):
        rest += eta_minus_one_int(2 * m - 2) * um / m
        um *= u
    return total - rest


def e_func(x, prec: PrecLike = None) -> mpf:
    """Adamchik ``E(x) = lim prod_{k=1}^{2N} (1 - 4x^2/k^2)^(k^2 (-1)^(k+1))``.

    Real ``|x| <= 1/2``; ``E(+-1/2) = 0`` from the vanishing ``k = 1`` factor.
    """
    with working(prec):
        x = to_mpf(x)
        half = mpf(1) / 2
        if abs(x) > half:
            raise DomainError(f"E(x) needs |x| <= 1/2, got {mpmath.nstr(x, 10)}")
        if abs(x) == half:
            return mpf(0)
        return mpmath.exp(_log_e_series(x))


def e_partial_log(x, N: int) -> mpf:
    """``log`` of the truncated product over ``k = 1 .. 2N`` (``|x| < 1/2``)."""
    x = to_mpf(x)
    u = 4 * x * x
    return mpmath.fsum((1 if k % 2 else -1) * mpf(k) ** 2 * mpmath.log1p(-u / mpf(k) ** 2)
                       for k in range(1, 2 * N + 1))


def adamchik_shifted_product(prec: PrecLike = None) -> mpf:
    """``lim prod_{k=2}^{2N} (1 - 1/k^2)^(k^2 (-1)^(k+1))``.

    This is not ``E(1/2)`` (which is 0).  Adding ``(-1)^(k+1)`` to each
    log-term over ``k = 2 .. 2N`` shifts the sum by exactly ``-1``, so

        log P = 1 + sum_{k>=2} (-1)^(k+1) [k^2 log(1 - 1/k^2) + 1],

    whose terms decay like ``1/(2k^2)`` and are summed with acceleration.
    """
    with working(prec):
        rest = sum_alternating(
            lambda k: mpf(k) ** 2 * mpmath.log1p(-1 / mpf(k) ** 2) + 1, 2)
        return mpmath.exp(1 + rest)


def adamchik_shifted_log_series(prec: PrecLike = None) -> mpf:
    """``log`` of the shifted product as ``1 - sum_{m>=2} (eta(2m-2) - 1)/m``."""
    with working(prec):
        mmax = _series_length(mpf(1) / 4, mp.dps)
        zeta_minus_one_table(2 * mmax)
        return 1 - mpmath.fsum(eta_minus_one_int(2 * m - 2) / m for m in range(2, mmax + 1))


def gamma_alpha(alpha, z, prec: PrecLike = None) -> mpf:
    """``gamma_alpha(z) = sum_{n>=1} z^(n-1) (alpha - n log(1 + alpha/n))``."""
    with working(prec):
        alpha = to_mpf(alpha)
        z = to_mpf(z)
        if alpha <= -1:
            raise DomainError(f"gamma_alpha needs alpha > -1, got {mpmath.nstr(alpha, 10)}")
        if abs(z) >= 1:
            raise DomainError(f"gamma_alpha needs |z| < 1, got {mpmath.nstr(z, 10)}")
        if alpha == 0:
            return mpf(0)
        az = abs(z)
        a2 = alpha * alpha

        def bound(N):
            # |alpha - n log(1+alpha/n)| <= alpha^2 / (2 n min(1, 1 + alpha/n))
            n = N + 1
            return (a2 / (2 * n * min(mpf(1), 1 + alpha / n))
                    * az ** N / (1 - az))

        spec = SeriesSpec(
            term=lambda n: z ** (n - 1) * (alpha - n * mpmath.log1p(alpha / n)),
            tail_bound=bound,
            n0=1,
        )
        if z == 0:
            return alpha - mpmath.log1p(alpha)
        return sum_series(spec)
