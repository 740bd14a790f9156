"""Evaluate expression trees at a requested precision.

Sub-expressions built only from literals and ``+ - * /`` (and integer
powers) stay exact :class:`~fractions.Fraction` values; everything else is
an mpf at the working precision.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Optional

import mpmath
from mpmath import mp, mpf

from .. import bd_adamchik, kurokawa, polylog, zeta_constants
from ..errors import DomainError, MultisineError
from ..mp_core import PrecLike, to_mpf, working
from .expr import BinOp, Call, Expr, Name, Neg, Number, parse, to_text
from .limits import ms_limit

_EXACT_POWER_LIMIT = 4096


class EvaluationError(DomainError):
    """A failure while evaluating ``subexpr``; wraps the underlying error."""

    def __init__(self, subexpr: str, cause: Exception):
        self.subexpr = subexpr
        self.cause = cause
        super().__init__(f"in {subexpr}: {cause}")


_CONSTANTS = {
    "pi": "pi", "e": "e", "log2": "log2", "catalan": "catalan", "zeta3": "zeta3",
    "glaisher": "glaisher", "zetaprime_neg1": "zeta_prime_neg1",
    "euler_gamma": "euler_gamma",
}


def _positive(v, what):
    if v <= 0:
        raise DomainError(f"{what} needs a positive argument, got {mpmath.nstr(v, 10)}")
    return v


def _log(v):
    return mpmath.log(_positive(v, "log"))


def _sqrt(v):
    if v < 0:
        raise DomainError(f"sqrt of negative number {mpmath.nstr(v, 10)}")
    return mpmath.sqrt(v)


def _extrapolated(fn):
    def call(*args):
        kwargs = {}
        if args:
            kwargs = {"max_n": int(args[0]), "order": int(args[1])}
        return fn(**kwargs).value
    return call


def _int_arg(v, what):
    if v != int(v):
        raise DomainError(f"{what} must be an integer, got {mpmath.nstr(v, 10)}")
    return int(v)


_FUNCTIONS = {
    "exp": mpmath.exp, "log": _log, "sqrt": _sqrt, "sin": mpmath.sin, "cos": mpmath.cos,
    "pow": lambda a, b: _power(a, b),
    "zeta": zeta_constants.zeta, "eta": zeta_constants.eta,
    "S": lambda r, z: kurokawa.s_r(_int_arg(r, "order r"), z),
    "S2": lambda z: kurokawa.s_r(2, z),
    "S3": lambda z: kurokawa.s_r(3, z),
    "C3": kurokawa.c3,
    "S3deriv1": kurokawa.s3_derivative_at_1,
    "cl2": polylog.cl2, "li2": polylog.li2, "li3": polylog.li3,
    "ti2": polylog.ti2, "chi2": polylog.chi2,
    "barnesGratio": polylog.barnes_g_ratio,
    "D": bd_adamchik.d_func, "Dratio": bd_adamchik.d_ratio, "E": bd_adamchik.e_func,
    "gammaAlpha": bd_adamchik.gamma_alpha,
    "holcombeProduct": kurokawa.holcombe_product,
    "shiftedAdamchik": bd_adamchik.adamchik_shifted_product,
    "ktCatalanOdd": lambda: bd_adamchik.kachi_tzermias_catalan("odd"),
    "ktCatalanEven": lambda: bd_adamchik.kachi_tzermias_catalan("even"),
    "ktZeta3": _extrapolated(bd_adamchik.kachi_tzermias_zeta3),
    "msLimit": _extrapolated(ms_limit),
}


def _power(a, b):
    if isinstance(a, Fraction) and isinstance(b, Fraction) and b.denominator == 1 \
            and abs(b.numerator) <= _EXACT_POWER_LIMIT:
        if a == 0 and b < 0:
            raise DomainError("0 raised to a negative power")
        return a ** b.numerator
    a, b = to_mpf(a), to_mpf(b)
    if a < 0 and b != int(b):
        raise DomainError(f"negative base {mpmath.nstr(a, 10)} to non-integer power")
    if a == 0 and b < 0:
        raise DomainError("0 raised to a negative power")
    return a ** b


def _binop(op, a, b):
    exact = isinstance(a, Fraction) and isinstance(b, Fraction)
    if op == "^":
        return _power(a, b)
    if op == "/" and b == 0:
        raise DomainError("division by zero")
    if not exact:
        a, b = to_mpf(a), to_mpf(b)
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op == "*":
        return a * b
    return a / b


def _eval(node: Expr, env: Mapping):
    if isinstance(node, Number):
        return node.value
    if isinstance(node, Name):
        if node.name in env:
            v = env[node.name]
            return v if isinstance(v, Fraction) else to_mpf(v)
        return zeta_constants.constant(_CONSTANTS[node.name])
    if isinstance(node, Neg):
        return -_eval(node.operand, env)
    if isinstance(node, BinOp):
        a = _eval(node.left, env)
        b = _eval(node.right, env)
        try:
            return _binop(node.op, a, b)
        except EvaluationError:
            raise
        except (MultisineError, ArithmeticError, ValueError) as exc:
            raise EvaluationError(to_text(node), exc) from exc
    if isinstance(node, Call):
        args = [_eval(a, env) for a in node.args]
        try:
            fn = _FUNCTIONS[node.name]
            if node.name != "pow":
                args = [to_mpf(a) for a in args]
            value = fn(*args)
            if isinstance(value, mpmath.mpc) or not mpmath.isfinite(value):
                raise DomainError(f"non-real or non-finite result {value}")
            return value
        except EvaluationError:
            raise
        except (MultisineError, ArithmeticError, ValueError) as exc:
            raise EvaluationError(to_text(node), exc) from exc
    raise TypeError(f"not an expression node: {node!r}")


def evaluate(e, prec: PrecLike = None, env: Optional[Mapping] = None) -> mpf:
    """Evaluate an :class:`Expr` (or expression text) at the working precision."""
    if isinstance(e, str):
        e = parse(e, variables=tuple(env or ()))
    with working(prec):
        value = _eval(e, env or {})
        value = to_mpf(value)
        if not mpmath.isfinite(value):
            raise EvaluationError(to_text(e), DomainError("non-finite result"))
        return +value
