import mpmath
import pytest
from mpmath import mp, mpf

from multisine.errors import DomainError
from multisine.harness.evaluator import EvaluationError, evaluate
from multisine.harness.expr import parse
from multisine.mp_core import Precision, agree_digits, working


def test_pi_at_50_digits():
    value = evaluate("pi", 50)
    with working(50):
        assert agree_digits(value, mp.pi) >= 60


def test_bound_variable_duplication():
    value = evaluate("S3(2*x) - S3(x)^4*C3(x)^4", 40, env={"x": mpf("0.3")})
    assert abs(value) < mpf(10) ** -45


def test_simple_values():
    assert evaluate("E(0)", 20) == 1
    assert evaluate("2^3^2", 20) == 512
    assert evaluate("-2^2", 20) == -4
    assert abs(evaluate("S2(1/2) - sqrt(2)", 40)) < mpf(10) ** -45


def test_exact_rational_folding():
    # 1/3 stays exact until the final conversion
    with working(30):
        assert evaluate("1/3 + 1/3 + 1/3 - 1") == 0
        assert evaluate("(1/10)^3 * 1000") == 1


def test_catalogue_dispatch():
    with working(30):
        checks = {
            "zeta(2)": mp.pi ** 2 / 6, "eta(1)": mp.ln2, "S(1, 1/6)": mpf(1),
            "li2(1)": mp.pi ** 2 / 6, "chi2(0)": 0, "ti2(1)": evaluate("catalan"),
            "barnesGratio(0)": 1, "Dratio(0)": 1, "gammaAlpha(0, 0.5)": 0,
            "pow(2, 10)": 1024, "cos(0)": 1, "sin(0)": 0, "log2": mp.ln2,
            "exp(1/12 - zetaprime_neg1)": mpmath.glaisher, "euler_gamma": mpmath.euler,
        }
        for text, ref in checks.items():
            assert agree_digits(evaluate(text), ref) >= 35, text


@pytest.mark.parametrize("text, fragment", [
    ("S2(1.5)", "S2(1.5)"),
    ("log(0)", "log(0)"),
    ("sqrt(-1)", "sqrt((-(1)))"),
    ("1/(1-1)", "(1 / (1 - 1))"),
    ("(-8)^(1/3)", "((-(8)) ^ (1 / 3))"),
    ("D(-2)", "D((-(2)))"),
    ("S(2.5, 0.1)", "S(2.5, 0.1)"),
    ("zeta(1)", "zeta(1)"),
])
def test_errors_name_subexpression(text, fragment):
    with pytest.raises(EvaluationError) as info:
        evaluate(text, 20)
    assert info.value.subexpr == fragment
    assert isinstance(info.value, DomainError)


def test_nested_error_reports_innermost():
    with pytest.raises(EvaluationError) as info:
        evaluate("1 + exp(S2(1.5))", 20)
    assert info.value.subexpr == "S2(1.5)"


def test_deterministic():
    a = evaluate("C3(1/4)^16", Precision(30))
    b = evaluate(parse("C3(1/4)^16"), Precision(30))
    assert a == b


def test_extrapolated_arguments():
    with working(20):
        v = evaluate("ktZeta3(400, 6)")
        ref = mpmath.exp(7 * mpmath.zeta(3) / (4 * mp.pi ** 2) + mpf(1) / 4)
        assert agree_digits(v, ref) >= 8
