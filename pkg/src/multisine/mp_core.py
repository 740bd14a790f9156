"""Precision handling and the generic summation / extrapolation engines.

All real quantities are :class:`mpmath.mpf` values.  A :class:`Precision`
fixes the number of decimal digits a caller wants; the numerical code runs at
``digits + guard`` working digits.  Every public function in the package
accepts ``prec`` as a :class:`Precision`, a plain ``int`` (requested digits)
or ``None``; ``None`` means "use the ambient mpmath precision", which is how
the modules call each other without re-entering a context.
"""

from __future__ import annotations

import contextlib
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Optional, Union

import mpmath
from mpmath import mp, mpf

from .errors import BudgetExceededError, ConvergenceError, DomainError

DEFAULT_GUARD = 15
MAX_TERMS = 10**7


@dataclass(frozen=True)
class Precision:
    """Requested decimal digits plus guard digits."""

    digits: int
    guard: int = DEFAULT_GUARD

    def __post_init__(self):
        if self.digits < 10:
            raise ValueError(f"digits must be >= 10, got {self.digits}")
        if self.guard < 0:
            raise ValueError(f"guard must be >= 0, got {self.guard}")

    @property
    def working(self) -> int:
        return self.digits + self.guard

    def with_extra_guard(self, extra: int) -> "Precision":
        return Precision(self.digits, self.guard + extra)


PrecLike = Union[Precision, int, None]


def as_precision(prec: PrecLike) -> Optional[Precision]:
    if prec is None or isinstance(prec, Precision):
        return prec
    return Precision(int(prec))


@contextlib.contextmanager
def working(prec: PrecLike) -> Iterator[int]:
    """Run the body at the working precision of ``prec``.

    Yields the working number of decimal digits.  With ``prec=None`` the
    ambient mpmath precision is kept.
    """
    p = as_precision(prec)
    if p is None:
        yield mp.dps
        return
    with mp.workdps(p.working):
        yield p.working


def eps() -> mpf:
    """Relative rounding unit of the ambient precision."""
    return mpf(2) ** (-mp.prec)


def to_mpf(x) -> mpf:
    """Convert ints, Fractions, strings and mpf to an mpf at ambient precision."""
    if isinstance(x, Fraction):
        return mpf(x.numerator) / x.denominator
    return mpf(x)


def ensure_finite(value, what: str = "value"):
    if not mpmath.isfinite(value):
        raise DomainError(f"{what} is not finite: {value}")
    return value


@dataclass
class SeriesSpec:
    """A series ``sum_{n >= n0} term(n)``.

    ``tail_bound(N)`` bounds the error committed after summing terms up to
    and including ``N``.  When ``tail`` is given, ``tail(N)`` is an estimate
    of ``sum_{n > N} term(n)`` that gets added to the partial sum, and
    ``tail_bound`` must then bound the error of that estimate instead.
    """

    term: Callable[[int], mpf]
    tail_bound: Callable[[int], mpf]
    n0: int = 1
    tail: Optional[Callable[[int], mpf]] = None
    check_every: int = 1


def sum_series(spec: SeriesSpec, prec: PrecLike = None, max_terms: int = MAX_TERMS) -> mpf:
    with working(prec) as dps:
        target = mpf(10) ** (-dps)
        s = mpf(0)
        n = spec.n0
        count = 0
        while True:
            s += spec.term(n)
            count += 1
            if count % spec.check_every == 0 and spec.tail_bound(n) < target:
                break
            if count >= max_terms:
                raise BudgetExceededError(
                    f"series not converged after {count} terms (n={n})")
            n += 1
        if spec.tail is not None:
            s += spec.tail(n)
        return +s


def _crvz(a: list, n: int) -> mpf:
    # Cohen, Rodriguez Villegas, Zagier, "Convergence acceleration of
    # alternating series", algorithm 1: sum_{k>=0} (-1)^k a[k].
    d = (3 + mpmath.sqrt(8)) ** n
    d = (d + 1 / d) / 2
    b = mpf(-1)
    c = -d
    s = mpf(0)
    for k in range(n):
        c = b - c
        s += c * a[k]
        b = (k + n) * (k - n) * b / ((k + mpf(1) / 2) * (k + 1))
    return s / d


def crvz_terms(dps: int) -> int:
    """Number of terms giving ``dps`` digits (error ~ 5.83^-n)."""
    return int(math.ceil(dps * math.log(10) / math.log(3 + math.sqrt(8)))) + 4


def sum_alternating(b: Callable[[int], mpf], n0: int = 1, prec: PrecLike = None,
                    check: bool = True) -> mpf:
    """``sum_{k >= n0} (-1)^(k+1) b(k)`` by CRVZ acceleration.

    The Cohen-Rodriguez Villegas-Zagier weights converge geometrically
    (rate 5.83^-n) when ``b`` is a smooth, totally monotone-like function of
    ``k``.  With ``check`` the sum is recomputed with ~25% more terms and the
    two estimates must agree, otherwise :class:`ConvergenceError` is raised.
    """
    with working(prec) as dps:
        n = crvz_terms(dps)
        n2 = n + n // 4 + 2 if check else n
        a = [b(n0 + j) for j in range(n2)]
        sign = 1 if n0 % 2 == 1 else -1
        s1 = _crvz(a, n)
        if check:
            s2 = _crvz(a, n2)
            scale = max(mpf(1), abs(a[0]), abs(s2))
            if abs(s1 - s2) > mpf(10) ** (-(dps - 8)) * scale:
                raise ConvergenceError(
                    f"alternating sum unstable: {mpmath.nstr(s1, 15)} vs "
                    f"{mpmath.nstr(s2, 15)}")
            s1 = s2
        return sign * s1


def _richardson_at(values: dict, n: int, k: int) -> mpf:
    # Bender-Orszag form for s(n) = L + c1/n + c2/n^2 + ...
    total = mpf(0)
    for j in range(k + 1):
        m = n + j
        w = mpf(m) ** k / (math.factorial(j) * math.factorial(k - j))
        total += (-1) ** (k + j) * w * values[m]
    return total


def richardson_limit(seq: Callable[[int], mpf], order: int, max_n: int,
                     prec: PrecLike = None) -> tuple:
    """Extrapolate ``lim seq(n)`` assuming an expansion in powers of 1/n.

    Uses the consecutive points ``max_n - order .. max_n``.  Returns
    ``(limit, achieved_digits)`` where the digit count is the agreement of
    the order ``order`` and ``order - 1`` extrapolants.  A sequence whose
    extrapolants do not shrink when the base index is halved raises
    :class:`ConvergenceError`.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    if max_n < order + 2:
        raise ValueError("max_n must exceed order + 1")
    with working(prec) as dps:
        base = max_n - order
        indices = set(range(base - 1, max_n + 1))
        halves = [base // 2, base // 4]
        if halves[-1] >= 1:
            for h in halves:
                indices.update(range(h, h + order + 1))
        # the weights sum to ~ (2n)^order / order!, so carry extra digits
        extra = int(math.ceil(order * math.log10(2 * max_n))) + 5
        with mp.workdps(dps + extra):
            values = {m: seq(m) for m in sorted(indices)}
            best = _richardson_at(values, base, order)
            if order == 0:
                prev = values[base - 1]
            else:
                prev = _richardson_at(values, base, order - 1)
            if halves[-1] >= 1:
                r_half = _richardson_at(values, halves[0], order)
                r_quarter = _richardson_at(values, halves[1], order)
        best = +best
        achieved = agree_digits(best, prev)

        if halves[-1] >= 1:
            d1 = abs(best - r_half)
            d2 = abs(r_half - r_quarter)
            tol = mpf(10) ** (-(dps - 5)) * max(mpf(1), abs(best))
            if d1 > tol and d1 > d2 / 2:
                raise ConvergenceError(
                    "extrapolants do not settle: "
                    f"|R(n)-R(n/2)|={mpmath.nstr(d1, 5)}, "
                    f"|R(n/2)-R(n/4)|={mpmath.nstr(d2, 5)}")
        return +best, achieved


def agree_digits(a, b, cap: Optional[int] = None) -> int:
    """Largest ``d >= 0`` with ``|a - b| <= 10^-d * max(1, |a|, |b|)``.

    A slack of a few units in the last place absorbs rounding of decimal
    inputs.  The result is capped at ``cap`` (default: working digits).
    """
    if cap is None:
        cap = mp.dps
    a = mpf(a)
    b = mpf(b)
    if a == b:
        return cap
    scale = max(mpf(1), abs(a), abs(b))
    r = abs(a - b) / scale
    slack = 1 + 16 * eps()
    d = max(0, int(math.floor(-float(mpmath.log10(r)))))
    while d > 0 and r > mpf(10) ** (-d) * slack:
        d -= 1
    while d < cap and r <= mpf(10) ** (-(d + 1)) * slack:
        d += 1
    return min(d, cap)
