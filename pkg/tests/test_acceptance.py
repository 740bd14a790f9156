"""Acceptance gates, one recorded line each."""

import dataclasses
from fractions import Fraction
import random
import time

import mpmath
import pytest
from mpmath import mp, mpf

from multisine.bd_adamchik import (d_func, d_ratio, e_func, kachi_tzermias_catalan,
                                   kachi_tzermias_catalan_extrapolated, kachi_tzermias_zeta3)
from multisine.harness.evaluator import evaluate
from multisine.harness.expr import ParseError, parse
from multisine.harness.limits import ms_limit, ms_target
from multisine.harness.registry import builtin_registry
from multisine.harness.verify import verify_all
from multisine.kurokawa import c3, holcombe_product, log_c3, log_s_r, s3_derivative_at_1, s_r
from multisine.mp_core import Precision, agree_digits, to_mpf, working
from multisine.polylog import barnes_g_ratio
from multisine.zeta_constants import constant

import oracles

# 50 required digits carried at 65 working digits
P50 = Precision(50)


def _digits(a, b):
    with working(P50):
        return agree_digits(a, b)


def test_01_identity_suite(record_acceptance):
    specs = [dataclasses.replace(s, required_digits=50)
             for s in builtin_registry() if "extrapolated" not in s.tags]
    start = time.perf_counter()
    reports = verify_all(specs, P50)
    elapsed = time.perf_counter() - start
    failed = [r.name for r in reports if r.status != "PASS"]
    ok = len(specs) >= 18 and not failed and elapsed < 60
    record_acceptance(1, ok, f"{len(specs)} identities, failed={failed}, {elapsed:.1f}s")


def test_02_hu_kim(record_acceptance):
    lhs = evaluate("(4*pi^2/21)*log(exp(4*catalan/pi)*C3(1/4)^16/sqrt(2))", P50)
    ref = constant("zeta3", P50)
    d = _digits(lhs, ref)
    record_acceptance(2, d >= 50, f"Hu-Kim zeta(3) matched {d} digits")


def test_03_kurokawa(record_acceptance):
    lhs = evaluate("(8*pi^2/7)*log(2^(1/4)/S3(1/2))", P50)
    d = _digits(lhs, constant("zeta3", P50))
    record_acceptance(3, d >= 50, f"Kurokawa zeta(3) matched {d} digits")


def _rel(a, b):
    return abs(a - b) / abs(a)


def test_04_theorem_residuals(record_acceptance):
    worst = mpf(0)
    with working(P50):
        for x in (mpf("0.1"), mpf(1) / 3, mpf("0.45")):
            lhs = d_func(x) / d_func(-x)
            rhs = mpmath.exp(x) * s_r(2, x / 2) ** 4 / s_r(2, x)
            worst = max(worst, _rel(lhs, rhs))
        for x in (mpf("0.1"), mpf(1) / 5, mpf("0.24")):
            lhs = e_func(x)
            via_s3 = mpmath.exp(2 * x * x) * s_r(3, 2 * x) / s_r(3, x) ** 8
            via_c3 = mpmath.exp(2 * x * x) * c3(x) ** 8 / s_r(3, 2 * x)
            worst = max(worst, _rel(lhs, via_s3), _rel(lhs, via_c3))
        rng = random.Random(20261014)
        for _ in range(10):
            x = mpf(rng.uniform(0, 0.49))
            lhs = s_r(3, 2 * x)
            rhs = s_r(3, x) ** 4 * c3(x) ** 4
            worst = max(worst, _rel(lhs, rhs))
    record_acceptance(4, worst <= mpf(10) ** -48,
                      f"worst relative residual {mpmath.nstr(worst, 3)}")


ORACLE_CASES = {
    "S2": (oracles.log_s2_bruteforce, lambda x: log_s_r(2, x)),
    "S3": (oracles.log_s3_bruteforce, lambda x: log_s_r(3, x)),
    "C3": (oracles.log_c3_bruteforce, log_c3),
    "D": (oracles.log_d_bruteforce, lambda x: mpmath.log(d_func(x))),
    "E": (oracles.log_e_bruteforce, lambda x: mpmath.log(e_func(x))),
}


def _float_digits(a: float, b: float) -> float:
    err = abs(a - b) / max(1.0, abs(a), abs(b))
    return 17.0 if err == 0 else -mpmath.log10(err)


def test_05_oracle_equivalence(record_acceptance):
    worst = (99.0, "")
    with working(30):
        for name, (brute, series) in ORACLE_CASES.items():
            for x in (0.1, 0.3, 0.4):
                # compare the products themselves, not only their logs
                b = mpmath.exp(brute(x))
                s = mpmath.exp(series(mpf(x)))
                d = float(_float_digits(float(b), float(s)))
                worst = min(worst, (d, f"{name}({x})"))
    record_acceptance(5, worst[0] >= 10,
                      f"N=1e5 truncated products, worst {worst[0]:.1f} digits at {worst[1]}")


def test_06_holcombe(record_acceptance):
    with working(P50):
        h = holcombe_product()
        d1 = agree_digits(mpmath.exp(mpf(3) / 2) * h, mp.pi)
        d2 = agree_digits(-2 * mpmath.exp(mpf(3) / 2) * h, -2 * mp.pi)
        d3 = agree_digits(s3_derivative_at_1(), -2 * mp.pi)
    ok = min(d1, d2, d3) >= 50
    record_acceptance(6, ok, f"e^(3/2) H vs pi {d1} digits, -2 e^(3/2) H vs -2 pi {d2}, "
                             f"S3'(1) {d3}")


def test_07_catalan_products(record_acceptance):
    parts = []
    ok = True
    with working(P50):
        g = constant("catalan")
        for parity, sign in (("odd", 1), ("even", -1)):
            ref = mpmath.exp(2 * g / mp.pi + sign * mpf(1) / 2)
            closed = agree_digits(kachi_tzermias_catalan(parity), ref)
            extra = kachi_tzermias_catalan_extrapolated(parity, max_n=2000, order=20)
            direct = agree_digits(extra.value, ref)
            ok = ok and closed >= 50 and direct >= 8
            parts.append(f"{parity}: closed {closed}, extrapolated {direct}")
    record_acceptance(7, ok, "; ".join(parts))


@pytest.mark.slow
def test_08_extrapolated_identities(record_acceptance):
    with working(P50):
        kt = kachi_tzermias_zeta3(max_n=2000, order=20)
        kt_ref = mpmath.exp(7 * constant("zeta3") / (4 * mp.pi ** 2) + mpf(1) / 4)
        kt_true = agree_digits(kt.value, kt_ref)
        ms = ms_limit(max_n=2000, order=20)
        ms_true = agree_digits(ms.value, ms_target())
    floor = min(kt.achieved_digits, ms.achieved_digits, kt_true, ms_true)
    record_acceptance(8, floor >= 8,
                      f"max_n=2000: KT zeta(3) achieved {kt.achieved_digits} "
                      f"(true {kt_true}), Gamma limit achieved {ms.achieved_digits} "
                      f"(true {ms_true})")


def test_09_barnes_relation(record_acceptance):
    with working(P50):
        d1 = agree_digits(barnes_g_ratio(mpf(1) / 2), mpmath.sqrt(mp.pi))
        ref = (mpf(2) ** (mpf(1) / 8) * mp.pi ** (mpf(1) / 4)
               * mpmath.exp(-constant("catalan") / (2 * mp.pi)))
        d2 = agree_digits(barnes_g_ratio(mpf(1) / 4), ref)
    record_acceptance(9, min(d1, d2) >= 50, f"G ratio at 1/2: {d1} digits, at 1/4: {d2}")


PRECEDENCE = [
    ("2^3^2", 512), ("-2^2", -4), ("(-2)^2", 4), ("2-3-4", -5), ("2/4/2", "1/4"),
    ("1+2*3", 7), ("(1+2)*3", 9), ("2*3^2", 18), ("-3*-2", 6), ("1/3+1/6", "1/2"),
    ("2^-1", "1/2"), ("0.25*4", 1), ("--2", None), ("(2^(1/2))^2", 2),
    ("4^(1/2)^2", lambda: mpf(2) ** (mpf(1) / 2)), ("-2^-2", "-1/4"),
    ("1e2/8", "25/2"), ("10-2^2*3", -2),
]
MALFORMED = ["", "1+", "(1+2", "1+2)", "2**3", "foo(1)", "S2()", "S2(1,2)", "1 $ 2",
             "exp", "x+1", "3 4", "pi(", "2^", ".", "1e", "log(,)"]


def _expected(v):
    return v() if callable(v) else to_mpf(Fraction(v))


def test_10_parser(record_acceptance):
    failures = []
    for text, expected in PRECEDENCE:
        try:
            value = evaluate(text, 20)
            if expected is None:
                failures.append(f"{text!r} parsed")
            elif abs(value - _expected(expected)) > mpf(10) ** -15:
                failures.append(f"{text!r} -> {value}")
        except ParseError:
            if expected is not None:
                failures.append(f"{text!r} rejected")
    for text in MALFORMED:
        try:
            parse(text)
            failures.append(f"{text!r} accepted")
        except ParseError as exc:
            if not 0 <= exc.offset <= len(text.encode()):
                failures.append(f"{text!r} offset {exc.offset}")
        except Exception as exc:  # anything else is a crash
            failures.append(f"{text!r} raised {type(exc).__name__}")
    record_acceptance(10, not failures and len(PRECEDENCE) >= 12,
                      f"{len(PRECEDENCE)} precedence cases, {len(MALFORMED)} malformed inputs, "
                      f"failures={failures}")
