import mpmath
import pytest
from mpmath import mp, mpf

from multisine.errors import DomainError
from multisine.harness.limits import ms_limit, ms_log_bracket, ms_target, ms_target_glaisher
from multisine.mp_core import agree_digits, working


def test_bracket_n1():
    with working(30):
        # e^(5/4) (2 pi)^(-1/2) Gamma(3/2)^(-1) Gamma(2)^2
        ref = mpmath.log(mpmath.exp(mpf(5) / 4) / mpmath.sqrt(2 * mp.pi)
                         / mpmath.gamma(mpf(3) / 2) * mpmath.gamma(2) ** 2)
        assert abs(ms_log_bracket(1) - ref) < mpf(10) ** -35


def test_bracket_against_loggamma():
    with working(30):
        n = 7
        s = sum((-1) ** k * k * mpmath.loggamma(1 + mpf(k) / 2) for k in range(1, 2 * n + 1))
        ref = (mpf(n) * (4 * n + 1) / 4 - (mpf(1) / 8 + n * (n + 1)) * mpmath.log(n)
               - mpf(n) / 2 * mpmath.log(2 * mp.pi) + s)
        assert abs(ms_log_bracket(n) - ref) < mpf(10) ** -30


def test_two_targets_agree():
    with working(60):
        assert agree_digits(ms_target(), ms_target_glaisher()) >= 70


def test_low_order_recorded():
    with working(20):
        result = ms_limit(max_n=400, order=6)
        true_digits = agree_digits(result.value, ms_target())
    print(f"Gamma-product limit, max_n=400, order=6: achieved {result.achieved_digits}, "
          f"true {true_digits}")
    assert result.achieved_digits >= 6 and true_digits >= 6


def test_max_n_limit():
    with pytest.raises(DomainError):
        ms_limit(20, max_n=10**4 + 1)
