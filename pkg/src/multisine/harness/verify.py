"""Two-sided verification of identities and report formatting."""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, List, Optional

import mpmath
from mpmath import mpf

from ..errors import MultisineError
from ..mp_core import PrecLike, Precision, agree_digits, as_precision, working
from .evaluator import evaluate
from .registry import IdentitySpec

RECOMPUTE_GUARD = 20


@dataclass
class VerificationReport:
    name: str
    lhs_value: Optional[mpf]
    rhs_value: Optional[mpf]
    matched_digits: int
    required_digits: int
    status: str  # PASS, FAIL or ERROR
    elapsed_ms: float
    error: Optional[str] = None

    def line(self) -> str:
        text = (f"{self.name} {self.status} matched={self.matched_digits} "
                f"required={self.required_digits} ms={self.elapsed_ms:.0f}")
        if self.error:
            text += f" error={self.error}"
        return text

    def as_dict(self, digits: int) -> dict:
        def show(v):
            return None if v is None else mpmath.nstr(v, digits, strip_zeros=False)

        return {
            "name": self.name, "status": self.status,
            "matched": self.matched_digits, "required": self.required_digits,
            "ms": round(self.elapsed_ms, 1), "lhs": show(self.lhs_value),
            "rhs": show(self.rhs_value), "error": self.error,
        }


def _two_precisions(prec: Precision):
    return prec, prec.with_extra_guard(RECOMPUTE_GUARD)


def verify(spec: IdentitySpec, prec: PrecLike = 50) -> VerificationReport:
    """Evaluate both sides at working precision and again with 20 more guard
    digits.  A side that disagrees with its own recomputation by more than
    the required digits makes the report ``ERROR``."""
    prec = as_precision(prec)
    required = spec.required_digits or prec.digits
    lo, hi = _two_precisions(prec)
    start = time.perf_counter()
    lhs = rhs = None
    try:
        lhs = evaluate(spec.lhs, lo)
        rhs = evaluate(spec.rhs, lo)
        lhs_hi = evaluate(spec.lhs, hi)
        rhs_hi = evaluate(spec.rhs, hi)
        with working(lo):
            unstable = [side for side, a, b in (("lhs", lhs, lhs_hi), ("rhs", rhs, rhs_hi))
                        if agree_digits(a, b) < required]
            matched = agree_digits(lhs, rhs)
    except MultisineError as exc:
        elapsed = (time.perf_counter() - start) * 1000
        return VerificationReport(spec.name, lhs, rhs, 0, required, "ERROR", elapsed,
                                  f"{type(exc).__name__}: {exc}")
    elapsed = (time.perf_counter() - start) * 1000
    if unstable:
        return VerificationReport(spec.name, lhs, rhs, matched, required, "ERROR", elapsed,
                                  f"{'/'.join(unstable)} failed recompute self-check")
    status = "PASS" if matched >= required else "FAIL"
    return VerificationReport(spec.name, lhs, rhs, matched, required, status, elapsed)


def _verify_star(args):
    return verify(*args)


def verify_all(specs: Iterable[IdentitySpec], prec: PrecLike = 50,
               jobs: int = 1) -> List[VerificationReport]:
    """Verify every identity; reports come back sorted by name.

    mpmath keeps its precision in a process-global context, so parallel
    runs use worker processes rather than threads.
    """
    prec = as_precision(prec)
    ordered = sorted(specs, key=lambda s: s.name)
    if jobs > 1 and len(ordered) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_verify_star, [(s, prec) for s in ordered]))
    return [verify(s, prec) for s in ordered]


def reports_json(reports: List[VerificationReport], digits: int) -> str:
    return json.dumps([r.as_dict(digits) for r in reports], indent=2)
