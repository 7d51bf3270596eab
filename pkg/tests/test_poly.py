import cmath
import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from strategies import polys
from toricsolve import DimensionMismatch, PolySyntaxError, PolySystem, SparsePoly, evaluate, parse_polynomial, support


def test_parse_pencil_polynomial():
    f = parse_polynomial("1 + 3*l + 2*w + 4*l*w", ["l", "w"])
    assert len(f) == 4
    assert support(f) == {(0, 0), (1, 0), (0, 1), (1, 1)}
    assert f.coeff((1, 1)) == 4


def test_parse_zero_and_laurent():
    assert parse_polynomial("0", ["x"]).is_zero()
    assert support(parse_polynomial("0", ["x"])) == frozenset()
    assert support(parse_polynomial("x^-1 + x", ["x"])) == {(-1,), (1,)}
    assert support(parse_polynomial("x^2*y^-1", ["x", "y"])) == {(2, -1)}


def test_parse_coefficients():
    f = parse_polynomial("3/4*x - 1.5*y + 2*x", ["x", "y"])
    assert f.coeff((1, 0)) == Fraction(11, 4)
    assert f.coeff((0, 1)) == Fraction(-3, 2)
    assert parse_polynomial("x**3", ["x"]) == SparsePoly.monomial((3,))


def test_cancellation_leaves_no_zero_terms():
    f = parse_polynomial("x - x + y", ["x", "y"])
    assert f.support() == {(0, 1)}


@pytest.mark.parametrize("text, pos", [("x y", 2), ("3x", 1), ("x^", 2), ("1 + * x", 4)])
def test_syntax_errors_report_position(text, pos):
    with pytest.raises(PolySyntaxError) as info:
        parse_polynomial(text, ["x", "y"])
    assert info.value.position == pos


def test_unknown_variable():
    with pytest.raises(PolySyntaxError, match="unknown variable"):
        parse_polynomial("x + z", ["x", "y"])


def test_evaluate_examples():
    f = parse_polynomial("1 + 3*l + 2*w + 4*l*w", ["l", "w"])
    assert evaluate(f, (0, 0)) == 1
    g = parse_polynomial("x^2 - 3*x + 2", ["x"])
    assert evaluate(g, (2,)) == 0
    assert g.evaluate_exact((Fraction(1, 2),)) == Fraction(3, 4)


def test_evaluate_negative_exponent_at_zero():
    f = parse_polynomial("x^-1 + 1", ["x"])
    with pytest.raises(ZeroDivisionError):
        f.evaluate((0,))


def test_evaluate_wrong_length():
    with pytest.raises(DimensionMismatch):
        parse_polynomial("x", ["x"]).evaluate((1, 2))


def test_system_json_roundtrip():
    sys_ = PolySystem.from_strings(["3/2*x - y^-1", "x*y + 7"], ["x", "y"])
    again = PolySystem.loads(sys_.dumps())
    assert again == sys_
    raw = json.loads(sys_.dumps())
    assert {"c": "3/2", "e": [1, 0]} in raw["polys"][0]


def test_system_json_errors():
    with pytest.raises(PolySyntaxError):
        PolySystem.loads("{not json")
    with pytest.raises(PolySyntaxError):
        PolySystem.loads('{"polys": []}')
    with pytest.raises(DimensionMismatch):
        PolySystem.loads('{"vars": ["x"], "polys": [[{"c": "1", "e": [1, 0]}]]}')


def test_system_rejects_empty():
    with pytest.raises(ValueError):
        PolySystem(("x",), ())


@given(polys(2))
def test_roundtrip_text(f):
    names = ["x", "y"]
    assert parse_polynomial(f.to_text(names), names) == f


@given(polys(3, max_terms=4))
def test_roundtrip_text_three_vars(f):
    names = ["a", "b", "c"]
    text = f.to_text(names)
    assert parse_polynomial(text, names) == f
    assert parse_polynomial(text, names).to_text(names) == text


@given(polys(2), polys(2))
def test_support_of_product(f, g):
    mink = {(a[0] + b[0], a[1] + b[1]) for a in f.support() for b in g.support()}
    assert (f * g).support() <= mink


def test_support_of_product_generic():
    f = parse_polynomial("1 + 3*x + 5*y - 7*x*y^2", ["x", "y"])
    g = parse_polynomial("2 - x^2 + 11*y", ["x", "y"])
    mink = {(a[0] + b[0], a[1] + b[1]) for a in f.support() for b in g.support()}
    assert (f * g).support() == mink


points = st.tuples(*[st.complex_numbers(min_magnitude=0.5, max_magnitude=2.0, allow_nan=False,
                                        allow_infinity=False)] * 2)


@given(polys(2), polys(2), points)
def test_evaluate_is_ring_homomorphism(f, g, p):
    fp, gp = evaluate(f, p), evaluate(g, p)
    scale = max(1.0, abs(fp) + abs(gp), abs(fp) * abs(gp))
    assert cmath.isclose(evaluate(f + g, p), fp + gp, rel_tol=1e-12, abs_tol=1e-12 * scale)
    assert cmath.isclose(evaluate(f * g, p), fp * gp, rel_tol=1e-12, abs_tol=1e-12 * scale)


@given(polys(2), st.tuples(st.integers(-3, 3), st.integers(-3, 3)))
def test_shift_matches_monomial_product(f, beta):
    assert f.shift(beta) == f * SparsePoly.monomial(beta)


def test_terms_iterate_in_sorted_order():
    f = SparsePoly(2, {(1, 0): 1, (0, 0): 2, (0, 1): 3})
    assert [e for e, _ in f.items()] == [(0, 0), (0, 1), (1, 0)]
