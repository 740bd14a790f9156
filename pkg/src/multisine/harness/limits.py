"""The Gamma-product limit, evaluated by exact log-terms plus extrapolation.

    lim_{n->oo} e^(n(4n+1)/4) n^(-1/8 - n(n+1)) (2 pi)^(-n/2)
                prod_{k=1}^{2n} Gamma(1 + k/2)^(k (-1)^k)
      = 2^(1/12) exp(5/24 - (3/2) zeta'(-1) - 7 zeta(3) / (16 pi^2))
"""

from __future__ import annotations

import mpmath
from mpmath import mp, mpf

from ..bd_adamchik import RegularizedProductValue, _PrefixSums
from ..errors import DomainError
from ..mp_core import PrecLike, richardson_limit, working
from ..polylog import log_gamma_half_integer
from ..zeta_constants import constant

MS_MAX_N = 2000
MS_ORDER = 20


def ms_log_bracket(n: int, prefix: _PrefixSums = None) -> mpf:
    """Logarithm of the bracketed sequence at index ``n``."""
    if prefix is None:
        prefix = _gamma_prefix()
    n_ = mpf(n)
    return (n_ * (4 * n_ + 1) / 4 - (mpf(1) / 8 + n_ * (n_ + 1)) * mpmath.log(n_)
            - n_ / 2 * mpmath.log(2 * mp.pi) + prefix.get(2 * n))


def _gamma_prefix() -> _PrefixSums:
    return _PrefixSums(lambda k: (1 if k % 2 == 0 else -1) * k * log_gamma_half_integer(k))


def ms_target(prec: PrecLike = None) -> mpf:
    with working(prec):
        return (mpf(2) ** (mpf(1) / 12)
                * mpmath.exp(mpf(5) / 24 - mpf(3) / 2 * constant("zeta_prime_neg1")
                             - 7 * constant("zeta3") / (16 * mp.pi ** 2)))


def ms_target_glaisher(prec: PrecLike = None) -> mpf:
    with working(prec):
        return ((2 * mpmath.e) ** (mpf(1) / 12) * constant("glaisher") ** (mpf(3) / 2)
                * mpmath.exp(-7 * constant("zeta3") / (16 * mp.pi ** 2)))


def ms_limit(prec: PrecLike = None, max_n: int = MS_MAX_N,
             order: int = MS_ORDER) -> RegularizedProductValue:
    if max_n > 10**4:
        raise DomainError(f"max_n limited to 10^4, got {max_n}")
    with working(prec):
        prefix = _gamma_prefix()
        log_value, digits = richardson_limit(
            lambda n: ms_log_bracket(n, prefix), order, max_n)
        return RegularizedProductValue(mpmath.exp(log_value), digits, "accelerated-product")
