import math

import mpmath
import pytest
from hypothesis import given, settings, strategies as st
from mpmath import mp, mpf

from multisine.errors import DomainError
from multisine.mp_core import agree_digits, working
from multisine.polylog import (barnes_g_ratio, chi2, cl2, li2, li3, log_factorial,
                               log_gamma_half_integer, reduce_angle, ti2)
from multisine.zeta_constants import constant


def _float_clausen(theta, terms=200000):
    # slow direct sum, accurate to ~1/terms
    return math.fsum(math.sin(k * theta) / (k * k) for k in range(1, terms + 1))


class TestClausen:
    def test_special_values(self):
        with working(50):
            assert cl2(0) == 0
            assert cl2(mp.pi) == 0 or abs(cl2(mp.pi)) < mpf(10) ** -60
            assert agree_digits(cl2(mp.pi / 2), constant("catalan")) >= 60
            # Cl2(pi/3) = (3/2) Cl2(2pi/3)
            assert agree_digits(cl2(mp.pi / 3), cl2(2 * mp.pi / 3) * 3 / 2) >= 60

    def test_against_mpmath(self):
        with working(40):
            for t in ("0.2", "1", "2.5", "3.1", "-4", "10"):
                assert agree_digits(cl2(mpf(t)), mpmath.clsin(2, mpf(t))) >= 50

    def test_against_direct_sum(self):
        assert abs(float(cl2(0.7, 15)) - _float_clausen(0.7)) < 1e-5

    @settings(max_examples=30, deadline=None)
    @given(st.floats(min_value=-20, max_value=20))
    def test_odd_and_periodic(self, t):
        with working(20):
            t = mpf(t)
            assert abs(cl2(-t) + cl2(t)) < mpf(10) ** -28
            assert abs(cl2(t + 2 * mp.pi) - cl2(t)) < mpf(10) ** -28

    def test_reduce_angle(self):
        with working(20):
            sign, t = reduce_angle(-mp.pi / 3)
            assert sign == -1 and abs(t - mp.pi / 3) < mpf(10) ** -30
            sign, t = reduce_angle(5 * mp.pi / 2)
            assert sign == 1 and abs(t - mp.pi / 2) < mpf(10) ** -30


class TestPolylog:
    @pytest.mark.parametrize("z", ["-1", "-0.7", "-0.3", "0.2", "0.5", "0.8", "0.99", "1"])
    def test_li2_li3_against_mpmath(self, z):
        with working(40):
            z = mpf(z)
            assert agree_digits(li2(z), mpmath.polylog(2, z)) >= 50
            assert agree_digits(li3(z), mpmath.polylog(3, z)) >= 50

    def test_li2_identities(self):
        with working(50):
            half = mpf(1) / 2
            assert agree_digits(li2(half), mp.pi ** 2 / 12 - mp.ln2 ** 2 / 2) >= 60
            assert agree_digits(li2(-1), -mp.pi ** 2 / 12) >= 60
            # Li2(z) + Li2(-z) = Li2(z^2)/2
            z = mpf("0.6")
            assert agree_digits(li2(z) + li2(-z), li2(z * z) / 2) >= 60

    def test_li3_half(self):
        with working(50):
            ref = (7 * constant("zeta3") / 8 - mp.pi ** 2 * mp.ln2 / 12
                   + mp.ln2 ** 3 / 6)
            assert agree_digits(li3(mpf(1) / 2), ref) >= 60

    def test_outside_unit_interval(self):
        for f in (li2, li3, ti2, chi2):
            with pytest.raises(DomainError):
                f(mpf("1.5"))

    def test_ti2(self):
        with working(40):
            assert agree_digits(ti2(1), constant("catalan")) >= 50
            assert ti2(0) == 0
            y = mpf("0.4")
            assert agree_digits(ti2(-y), -ti2(y)) >= 50
            # Ti2(y) = Im Li2(i y)
            assert agree_digits(ti2(y), mpmath.im(mpmath.polylog(2, 1j * y))) >= 50

    def test_chi2(self):
        with working(40):
            assert agree_digits(chi2(1), mp.pi ** 2 / 8) >= 50
            for y in ("0.3", "0.5", "0.8"):
                y = mpf(y)
                ref = (mpmath.polylog(2, y) - mpmath.polylog(2, -y)) / 2
                assert agree_digits(chi2(y), ref) >= 50


class TestBarnes:
    def test_star_relation(self):
        with working(50):
            assert agree_digits(barnes_g_ratio(mpf(1) / 2), mpmath.sqrt(mp.pi)) >= 60

    @pytest.mark.parametrize("t", ["0.1", "0.25", "0.6", "-0.3"])
    def test_against_mpmath_barnesg(self, t):
        with working(40):
            t = mpf(t)
            ref = mpmath.barnesg(1 + t) / mpmath.barnesg(1 - t)
            assert agree_digits(barnes_g_ratio(t), ref) >= 50

    def test_domain(self):
        with pytest.raises(DomainError):
            barnes_g_ratio(1)

    def test_clausen_cross_check(self):
        # Cl2(2 pi z) = 2 pi log S2(z) - 2 pi z log(2 sin pi z) at z = 0.2
        from multisine.kurokawa import log_s_r

        with working(50):
            z = mpf("0.2")
            rhs = 2 * mp.pi * log_s_r(2, z) - 2 * mp.pi * z * mpmath.log(2 * mpmath.sinpi(z))
            assert agree_digits(cl2(2 * mp.pi * z), rhs) >= 60


class TestLogGamma:
    @pytest.mark.parametrize("k", [1, 2, 3, 7, 20, 51])
    def test_half_integers(self, k):
        with working(40):
            assert agree_digits(log_gamma_half_integer(k),
                                mpmath.loggamma(1 + mpf(k) / 2)) >= 50

    def test_factorials(self):
        with working(30):
            assert log_factorial(0) == 0
            assert agree_digits(log_factorial(30), mpmath.log(mpmath.factorial(30))) >= 40

    def test_bad_input(self):
        with pytest.raises(DomainError):
            log_gamma_half_integer(0)
        with pytest.raises(DomainError):
            log_gamma_half_integer(1.5)
        with pytest.raises(DomainError):
            log_factorial(-1)
