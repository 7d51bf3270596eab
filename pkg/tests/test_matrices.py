import json
import random
from fractions import Fraction
from itertools import product

import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from toricsolve import (
    DimensionMismatch,
    LatticePolytope,
    SparsePoly,
    canny_emiris_matrix,
    koszul_bilinear_matrix,
    macaulay_matrix_dense,
    mixed_volume,
    newton_polytope,
    parse_polynomial,
    sylvester_matrix,
)
from toricsolve.matrices import KOSZUL_COLS, KOSZUL_ROWS, koszul_symbolic_pattern

X = ["x"]


def uni(text):
    return parse_polynomial(text, X)


def test_sylvester_examples():
    assert sylvester_matrix(uni("x^2 - 1"), uni("x - 1")).det() == 0
    assert sylvester_matrix(uni("x^2 - 3*x + 2"), uni("x - 3")).det() == 2
    assert abs(sylvester_matrix(uni("x"), uni("x - 1")).det()) == 1
    assert sylvester_matrix(uni("x^3 + 2*x - 5"), uni("x^2 + 1")).shape == (5, 5)


def test_sylvester_errors():
    with pytest.raises(ValueError):
        sylvester_matrix(uni("3"), uni("x"))
    with pytest.raises(DimensionMismatch):
        sylvester_matrix(parse_polynomial("x + y", ["x", "y"]), parse_polynomial("x", ["x", "y"]))


def _sympy_uni(f):
    x = sympy.Symbol("x")
    return sum(sympy.Rational(c.numerator, c.denominator) * x ** e[0] for e, c in f.items()), x


coeffs = st.integers(-6, 6)
univariate = st.integers(1, 4).flatmap(
    lambda d: st.lists(coeffs, min_size=d, max_size=d).map(
        lambda cs: SparsePoly(1, {(k,): c for k, c in enumerate(cs)} | {(d,): 1})))


def _product_formula(f, g):
    """lc(f)^deg(g) * prod g(r) over the roots r of f."""
    d = f.total_degree()
    coeffs = [float(f.coeff((k,))) for k in range(d, -1, -1)]
    out = complex(coeffs[0]) ** g.total_degree()
    for r in np.roots(coeffs):
        out *= g.evaluate((r,))
    return out.real


@given(univariate, univariate)
def test_sylvester_matches_resultant_oracles(f, g):
    sf, x = _sympy_uni(f)
    sg, _ = _sympy_uni(g)
    det = sylvester_matrix(f, g).det()
    # sympy's sign convention differs, so only the magnitude is compared there
    assert abs(det) == abs(Fraction(str(sympy.resultant(sf, sg, x))))
    assert float(det) == pytest.approx(_product_formula(f, g), rel=1e-6, abs=1e-6)


@settings(max_examples=30)
@given(univariate, univariate, univariate)
def test_sylvester_multiplicative(f, g, h):
    assert sylvester_matrix(f, g * h).det() == sylvester_matrix(f, g).det() * sylvester_matrix(f, h).det()


def test_macaulay_univariate_is_resultant():
    f, g = uni("x^2 - 3*x + 2"), uni("x - 3")
    M = macaulay_matrix_dense([f, g])
    assert M.is_square()
    assert abs(M.det()) == 2


def test_macaulay_linear_forms():
    names = ["x", "y"]
    planted = [parse_polynomial(s, names) for s in ("2*x - 3*y + 1", "x + y - 2", "5*x - y - 4")]
    assert macaulay_matrix_dense(planted).det() == 0
    generic = [parse_polynomial(s, names) for s in ("2*x - 3*y + 1", "x + y - 7", "5*x - y - 4")]
    M = macaulay_matrix_dense(generic)
    coeff = [[f.coeff((0, 0)), f.coeff((1, 0)), f.coeff((0, 1))] for f in generic]
    assert M.shape == (3, 3)
    assert abs(M.det()) == abs(Fraction(str(sympy.Matrix(coeff).det()))) != 0


def test_macaulay_shape_and_audit():
    rng = random.Random(0)
    fs = []
    for d in (1, 2, 2):
        fs.append(SparsePoly(2, {a: rng.randint(1, 9) for a in product(range(d + 1), repeat=2) if sum(a) <= d}))
    M = macaulay_matrix_dense(fs)
    # D = 5 - 2 = 3: monomials of degree <= 3 in 2 variables
    assert M.shape == (10, 10)
    assert M.audit()
    assert [i for i, _ in M.rows] == sorted(i for i, _ in M.rows)


def test_macaulay_errors():
    f = parse_polynomial("x^3 + y", ["x", "y"])
    with pytest.raises(ValueError):
        macaulay_matrix_dense([f, f, f], degrees=[2, 3, 3])
    with pytest.raises(DimensionMismatch):
        macaulay_matrix_dense([f, f])
    with pytest.raises(ValueError):
        macaulay_matrix_dense([parse_polynomial("x^-1", ["x"]), uni("x")])


def test_canny_emiris_pencil():
    names = ["l", "w"]
    fs = [parse_polynomial(s, names) for s in
          ("7 + 3*l - 5*w", "1 + 3*l + 2*w + 4*l*w", "3 - 2*l + 4*w - 4*l*w")]
    ce = canny_emiris_matrix(fs, seed=0)
    assert len(ce.B[0]) == 2 == mixed_volume([newton_polytope(f) for f in fs[1:]])
    assert ce.matrix.is_square()
    assert sum(len(b) for b in ce.B) == ce.size
    assert ce.matrix.audit()
    assert ce.matrix.det() != 0


def test_canny_emiris_linear_size():
    rng = random.Random(4)
    for n in (1, 2, 3):
        fs = [SparsePoly(n, {a: rng.randint(1, 50) for a in [(0,) * n] +
                              [tuple(int(i == j) for j in range(n)) for i in range(n)]}) for _ in range(n + 1)]
        ce = canny_emiris_matrix(fs, seed=n)
        P = LatticePolytope.standard_simplex(n, n + 1)
        box = product(range(-1, n + 3), repeat=n)
        shifted = [p for p in box if P.contains(tuple(x - d for x, d in zip(p, ce.delta)))]
        assert ce.size == len(shifted)
        assert ce.matrix.det() != 0


def test_canny_emiris_reproducible():
    names = ["x", "y"]
    fs = [parse_polynomial(s, names) for s in ("1 + x + 2*y", "3 + x*y - y^2", "x^2 - 2 + y")]
    a = canny_emiris_matrix(fs, seed=5, delta_seed=5)
    b = canny_emiris_matrix(fs, seed=5, delta_seed=5)
    assert a.matrix.dumps() == b.matrix.dumps()


def test_canny_emiris_dimension():
    with pytest.raises(DimensionMismatch):
        canny_emiris_matrix([uni("x + 1")])


def test_matrix_json():
    M = sylvester_matrix(uni("x^2 - 3*x + 2"), uni("x - 3"))
    data = json.loads(M.dumps())
    assert data["provenance"] == "sylvester"
    assert data["rows"][0] == {"poly": 0, "shift": [0]}
    assert data["entries"][0] == ["1", "-3", "2"]
    assert M.entry((1, (1,)), (2,)) == 1


GOLDEN = [
    ["0", "0", "b10", "-c10", "b00", "-c00"],
    ["0", "0", "b11", "-c11", "b01", "-c01"],
    ["-c01", "-c11", "a11", "0", "a01", "0"],
    ["-b01", "-b11", "0", "a11", "0", "a01"],
    ["-c00", "-c10", "a10", "0", "a00", "0"],
    ["-b00", "-b10", "0", "a10", "0", "a00"],
]


def test_koszul_labels_and_pattern():
    assert KOSZUL_ROWS == ("y0e0", "y1e0", "y1e1", "y1e2", "y0e1", "y0e2")
    assert KOSZUL_COLS == ("x0e0", "x1e0", "x1e2", "x1e1", "x0e2", "x0e1")
    assert koszul_symbolic_pattern() == GOLDEN


def bilinear(grid):
    """grid[k][j] is the coefficient of x_k * y_j."""
    return SparsePoly(4, {(int(k == 0), int(k == 1), int(j == 0), int(j == 1)): grid[k][j]
                          for k in range(2) for j in range(2)})


def _symbol_values():
    """Distinct primes for every coefficient symbol, so entries identify their symbol."""
    primes = iter([2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37])
    vals = {}
    for name in "abc":
        for k in range(2):
            for j in range(2):
                vals[f"{name}{k}{j}"] = next(primes)
    return vals


def test_koszul_numeric_matches_pattern():
    vals = _symbol_values()
    fs = [bilinear([[vals[f"{s}{k}{j}"] for j in range(2)] for k in range(2)]) for s in "abc"]
    K = koszul_bilinear_matrix(*fs)
    for row, pattern in zip(K.entries, GOLDEN):
        for got, sym in zip(row, pattern):
            want = 0 if sym == "0" else (-vals[sym[1:]] if sym.startswith("-") else vals[sym])
            assert got == want


def test_koszul_planted_root():
    rng = random.Random(8)
    for _ in range(10):
        fs = []
        for _ in range(3):
            g = [[rng.randint(-9, 9) for _ in range(2)] for _ in range(2)]
            g[1][1] = -(g[0][0] + g[0][1] + g[1][0])  # vanish at (1:1) x (1:1)
            fs.append(bilinear(g))
        assert koszul_bilinear_matrix(*fs).det() == 0


def test_koszul_matches_elimination_oracle():
    # resultant of two maximal minors of [A_0 y | A_1 y | A_2 y] equals -det(A_0) * det(K)
    rng = random.Random(3)
    y = sympy.Symbol("y")
    for _ in range(8):
        grids = [[[rng.randint(-9, 9) for _ in range(2)] for _ in range(2)] for _ in range(3)]
        K = koszul_bilinear_matrix(*[bilinear(g) for g in grids]).det()
        v = [[g[k][0] + g[k][1] * y for k in range(2)] for g in grids]

        def minor(a, b):
            return sympy.expand(v[a][0] * v[b][1] - v[a][1] * v[b][0])

        R = Fraction(str(sympy.resultant(minor(0, 1), minor(0, 2), y)))
        d0 = Fraction(str(sympy.Matrix(grids[0]).det()))
        assert R == -d0 * K


def test_koszul_rejects_non_bilinear():
    f = parse_polynomial("x0^2*y0", ["x0", "x1", "y0", "y1"])
    g = bilinear([[1, 2], [3, 4]])
    with pytest.raises(ValueError):
        koszul_bilinear_matrix(f, g, g)


def test_koszul_json_and_text():
    K = koszul_bilinear_matrix(*(bilinear([[1, 2], [3, 4]]),) * 3)
    data = K.to_json()
    assert data["provenance"] == "koszul-bilinear"
    assert K.det() == 0
    assert K.to_text().splitlines()[0].split() == list(KOSZUL_COLS)


@settings(max_examples=25)
@given(st.integers(0, 10 ** 6))
def test_audit_random_canny_emiris(seed):
    rng = random.Random(seed)
    n = 2
    fs = []
    for _ in range(n + 1):
        pts = {(rng.randint(0, 2), rng.randint(0, 2)) for _ in range(4)} | {(0, 0)}
        fs.append(SparsePoly(n, {a: rng.randint(1, 20) for a in pts}))
    try:
        ce = canny_emiris_matrix(fs, seed=seed)
    except ValueError:
        return
    assert ce.matrix.is_square()
    assert sum(len(b) for b in ce.B) == ce.size
    assert ce.matrix.audit()
    assert len(ce.B[0]) >= mixed_volume([newton_polytope(f) for f in fs[1:]])
