"""Zeta-family values and the named constants the identities consume.

Riemann zeta on the real half-line ``s > 1`` is evaluated by Euler-Maclaurin
summation; its derivative at ``s = 2`` by the term-differentiated formula.
The Glaisher-Kinkelin constant and ``zeta'(-1)`` follow from ``zeta'(2)``
through

    log A = (gamma + log 2 pi) / 12 - zeta'(2) / (2 pi^2),
    zeta'(-1) = 1/12 - log A,

so no continuation of zeta to ``s < 1`` is needed.
"""

from __future__ import annotations

import math
import threading
from functools import lru_cache

import mpmath
from mpmath import mp, mpf

from .errors import ConvergenceError, DomainError, MultisineError
from .mp_core import PrecLike, sum_alternating, working

CACHE_QUANTUM = 50


def _bucket(dps: int) -> int:
    return -(-dps // CACHE_QUANTUM) * CACHE_QUANTUM


def _em_cutoff(dps: int) -> int:
    # Euler-Maclaurin remainder bottoms out near exp(-2 pi N).
    return int(math.ceil(dps * math.log(10) / (2 * math.pi))) + 10


@lru_cache(maxsize=None)
def _bernoulli_coeffs(prec_bits: int, m: int) -> mpf:
    # B_{2m} / (2m)! at the given binary precision.
    with mp.workprec(prec_bits):
        return mpmath.bernoulli(2 * m) / mpmath.factorial(2 * m)


def _em_tail(s, N: int, derivative: bool = False) -> mpf:
    """``sum_{n >= N} n^-s`` (or its s-derivative) by Euler-Maclaurin at N."""
    s = mpf(s)
    N = mpf(N)
    logN = mpmath.log(N)
    tol = mpf(2) ** (-mp.prec - 4)
    ns = N ** (-s)
    if derivative:
        total = (-logN * N * ns / (s - 1) - N * ns / (s - 1) ** 2
                 - logN * ns / 2)
    else:
        total = N * ns / (s - 1) + ns / 2
    rising = s  # (s)_{2m-1}
    psi_sum = 1 / s  # sum_{i<2m-1} 1/(s+i)
    power = ns / N  # N^{-s-2m+1}
    last = None
    m = 1
    while True:
        t = _bernoulli_coeffs(mp.prec, m) * rising * power
        if derivative:
            t = t * (psi_sum - logN)
        total += t
        if abs(t) < tol:
            break
        if last is not None and abs(t) > abs(last) and m > 4:
            raise ConvergenceError(
                f"Euler-Maclaurin diverging for s={s}, N={N}")
        last = t
        rising *= (s + 2 * m - 1) * (s + 2 * m)
        psi_sum += 1 / (s + 2 * m - 1) + 1 / (s + 2 * m)
        power /= N * N
        m += 1
        if m > 10 * mp.dps + 100:
            raise ConvergenceError("Euler-Maclaurin tail did not converge")
    return total


def power_tail(s, a: int, prec: PrecLike = None) -> mpf:
    """Hurwitz-type tail ``sum_{n >= a} n^-s`` for real ``s > 1``, ``a >= 1``."""
    if s <= 1:
        raise DomainError(f"power tail needs s > 1, got {s}")
    if a < 1:
        raise DomainError(f"power tail needs a >= 1, got {a}")
    with working(prec) as dps:
        N = max(a, _em_cutoff(dps))
        s = mpf(s)
        head = mpmath.fsum(mpf(n) ** (-s) for n in range(a, N))
        return head + _em_tail(s, N)


def zeta(s, prec: PrecLike = None) -> mpf:
    """Riemann zeta for real ``s > 1``."""
    if s <= 1:
        raise DomainError(f"zeta(s) implemented for s > 1 only, got {s}")
    return power_tail(s, 1, prec)


def zeta_minus_one(s, prec: PrecLike = None) -> mpf:
    """``zeta(s) - 1`` without cancellation (useful for large s)."""
    if s <= 1:
        raise DomainError(f"zeta(s) implemented for s > 1 only, got {s}")
    return power_tail(s, 2, prec)


def eta(s, prec: PrecLike = None) -> mpf:
    """Dirichlet eta ``(1 - 2^(1-s)) zeta(s)``, with ``eta(1) = log 2``."""
    if s < 1:
        raise DomainError(f"eta(s) implemented for s >= 1 only, got {s}")
    with working(prec):
        if s == 1:
            return +mp.ln2
        s = mpf(s)
        return (1 - mpf(2) ** (1 - s)) * zeta(s)


class _IntegerZetaTable:
    """``zeta(k) - 1`` for integers ``2 <= k <= kmax`` at one precision bucket.

    All entries share one Euler-Maclaurin cutoff, so the table for a bucket
    is the same no matter how far it has been extended.
    """

    def __init__(self, dps: int):
        self.dps = dps
        self.values = [None, None]

    def extend(self, kmax: int):
        k0 = len(self.values)
        if kmax < k0:
            return
        with mp.workdps(self.dps + 5):
            N = _em_cutoff(self.dps)
            ks = range(k0, kmax + 1)
            heads = {k: mpf(0) for k in ks}
            for n in range(2, N):
                inv = 1 / mpf(n)
                p = inv ** k0
                for k in ks:
                    heads[k] += p
                    p *= inv
            for k in ks:
                self.values.append(heads[k] + _em_tail(k, N))


class ConstantCache:
    """Append-only memo of constants keyed by ``(name, digit bucket)``.

    Digits are rounded up to a multiple of 50 so that nearby requests share
    one computation.  Reads are lock-free; writes are serialised.  Two
    threads computing the same entry is harmless: the results are identical.
    """

    def __init__(self):
        self.entries = {}
        self._lock = threading.Lock()

    def get(self, name: str, dps: int, compute):
        key = (name, _bucket(dps))
        value = self.entries.get(key)
        if value is None:
            with mp.workdps(key[1]):
                value = compute()
            with self._lock:
                self.entries.setdefault(key, value)
            value = self.entries[key]
        return value

    def clear(self):
        with self._lock:
            self.entries.clear()


_cache = ConstantCache()
_tables = {}
_tables_lock = threading.Lock()


def zeta_minus_one_table(kmax: int) -> list:
    """List ``t`` with ``t[k] = zeta(k) - 1`` for ``2 <= k <= kmax``."""
    bucket = _bucket(mp.dps)
    with _tables_lock:
        table = _tables.get(bucket)
        if table is None:
            table = _tables[bucket] = _IntegerZetaTable(bucket)
        table.extend(kmax)
        return table.values[: kmax + 1]


def zeta_int(k: int) -> mpf:
    return 1 + zeta_minus_one_table(k)[k]


def eta_minus_one_int(k: int) -> mpf:
    """``eta(k) - 1 = sum_{n>=2} (-1)^(n+1) n^-k`` for integer ``k >= 2``."""
    zm1 = zeta_minus_one_table(k)[k]
    return zm1 - mpf(2) ** (1 - k) * (1 + zm1)


def lambda_minus_one_int(k: int) -> mpf:
    """``lambda(k) - 1 = sum_{odd m >= 3} m^-k`` for integer ``k >= 2``."""
    zm1 = zeta_minus_one_table(k)[k]
    return zm1 - mpf(2) ** (-k) * (1 + zm1)


def _euler_gamma() -> mpf:
    N = _em_cutoff(mp.dps)
    h = mpmath.fsum(1 / mpf(n) for n in range(1, N))
    total = h - mpmath.log(N) + 1 / mpf(2 * N)
    tol = mpf(2) ** (-mp.prec - 4)
    m = 1
    while True:
        t = mpmath.bernoulli(2 * m) / (2 * m * mpf(N) ** (2 * m))
        total += t
        if abs(t) < tol:
            return total
        m += 1


def _zeta_prime_2() -> mpf:
    N = _em_cutoff(mp.dps)
    head = -mpmath.fsum(mpmath.log(n) / mpf(n) ** 2 for n in range(2, N))
    return head + _em_tail(2, N, derivative=True)


def _catalan() -> mpf:
    return sum_alternating(lambda k: 1 / mpf(2 * k - 1) ** 2, 1)


def _log_glaisher() -> mpf:
    g = constant("euler_gamma")
    zp2 = zeta_prime(2)
    return (g + mpmath.log(2 * mp.pi)) / 12 - zp2 / (2 * mp.pi ** 2)


_COMPUTE = {
    "pi": lambda: +mp.pi,
    "e": lambda: mpmath.e + 0,
    "log2": lambda: +mp.ln2,
    "catalan": _catalan,
    "zeta3": lambda: zeta(3),
    "euler_gamma": _euler_gamma,
    "zeta_prime_2": _zeta_prime_2,
    "glaisher": lambda: mpmath.exp(_log_glaisher()),
    "zeta_prime_neg1": lambda: mpf(1) / 12 - _log_glaisher(),
}

CONSTANT_NAMES = tuple(_COMPUTE)


def constant(name: str, prec: PrecLike = None) -> mpf:
    """Named constant at the working precision (cached)."""
    try:
        compute = _COMPUTE[name]
    except KeyError:
        raise MultisineError(f"unknown constant {name!r}") from None
    with working(prec) as dps:
        return +_cache.get(name, dps, compute)


def zeta_prime(point: int, prec: PrecLike = None) -> mpf:
    """``zeta'(2)`` or ``zeta'(-1)``."""
    if point == 2:
        return constant("zeta_prime_2", prec)
    if point == -1:
        return constant("zeta_prime_neg1", prec)
    raise DomainError(f"zeta' implemented at s=2 and s=-1 only, got {point}")


def clear_caches():
    _cache.clear()
    with _tables_lock:
        _tables.clear()
