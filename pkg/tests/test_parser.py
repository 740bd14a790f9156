from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from multisine.harness.expr import (BinOp, Call, Name, Neg, Number, ParseError, parse, to_text,
                                    tokenize)
from multisine.harness.registry import builtin_registry


def num(v):
    return Number(Fraction(v))


@pytest.mark.parametrize("text, tree", [
    ("2^3^2", BinOp("^", num(2), BinOp("^", num(3), num(2)))),
    ("-2^2", Neg(BinOp("^", num(2), num(2)))),
    ("2^-3", BinOp("^", num(2), Neg(num(3)))),
    ("1-2-3", BinOp("-", BinOp("-", num(1), num(2)), num(3))),
    ("1/2/3", BinOp("/", BinOp("/", num(1), num(2)), num(3))),
    ("1+2*3", BinOp("+", num(1), BinOp("*", num(2), num(3)))),
    ("2*-3", BinOp("*", num(2), Neg(num(3)))),
    ("(1+2)^2", BinOp("^", BinOp("+", num(1), num(2)), num(2))),
    ("S2(1/2)", Call("S2", (BinOp("/", num(1), num(2)),))),
    ("pi^2/6", BinOp("/", BinOp("^", Name("pi"), num(2)), num(6))),
    ("S(3, 0.25)", Call("S", (num(3), num("0.25")))),
    ("ktZeta3()", Call("ktZeta3", ())),
    ("-pi", Neg(Name("pi"))),
])
def test_precedence_trees(text, tree):
    assert parse(text) == tree


def test_literals_are_exact():
    assert parse("0.1").value == Fraction(1, 10)
    assert parse("21").value == 21
    assert parse("1.5e-3").value == Fraction(3, 2000)
    assert parse(".5").value == Fraction(1, 2)


@pytest.mark.parametrize("text, offset", [
    ("1 +", 3),
    ("(1+2", 4),
    ("1+2)", 3),
    ("2 ** 3", 3),
    ("foo(1)", 0),
    ("1 + bar", 4),
    ("S2(1, 2)", 0),
    ("exp", 0),
    ("3 # 4", 2),
    ("π + 1", 0),
    ("1 + π", 4),
    ("x + π", 4),  # lexing runs before name resolution
])
def test_error_offsets(text, offset):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.offset == offset
    assert f"offset {offset}" in str(info.value)


def test_variables():
    tree = parse("S3(2*x)", variables=["x"])
    assert tree == Call("S3", (BinOp("*", num(2), Name("x")),))
    with pytest.raises(ParseError):
        parse("S3(2*x)")


def test_tokenize_end_marker():
    toks = tokenize("1+ 2")
    assert [t.kind for t in toks] == ["number", "op", "number", "end"]
    assert toks[-1].offset == 4


def test_builtin_round_trip():
    for spec in builtin_registry():
        for text in (spec.lhs_text, spec.rhs_text):
            tree = parse(text)
            assert parse(to_text(tree)) == tree


_atoms = st.sampled_from(["1", "2", "0.5", "pi", "e", "catalan", "3/4"])


def _exprs():
    return st.recursive(
        _atoms,
        lambda inner: st.one_of(
            st.tuples(inner, st.sampled_from(["+", "-", "*", "/", "^"]), inner).map(
                lambda t: f"{t[0]} {t[1]} {t[2]}"),
            inner.map(lambda s: f"({s})"),
            inner.map(lambda s: f"-({s})"),
            inner.map(lambda s: f"exp({s})"),
            st.tuples(inner, inner).map(lambda t: f"pow({t[0]}, {t[1]})"),
        ),
        max_leaves=12,
    )


@settings(max_examples=200, deadline=None)
@given(_exprs())
def test_round_trip_property(text):
    tree = parse(text)
    assert parse(to_text(tree)) == tree


@settings(max_examples=300, deadline=None)
@given(st.text(alphabet="0123456789+-*/^(). ,piSe_xé", max_size=20))
def test_garbage_never_crashes(text):
    try:
        parse(text)
    except ParseError as exc:
        assert 0 <= exc.offset <= len(text.encode("utf-8"))
