import random
from fractions import Fraction
from math import comb

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import load
from oracles import buchberger, leading_monomials, minimal_generators, random_dense, staircase
from strategies import rationals
from toricsolve import (
    DimensionUnstable,
    GradedMonomialOrder,
    LatticePolytope,
    PolySystem,
    SparsePoly,
    build_algebra,
    default_setup,
    dehomogenize_gb,
    fglm_lex,
    homogenize_system,
    macaulay_matrix_graded,
    mixed_volume,
    multiplication_maps,
    newton_polytope,
    parse_polynomial,
    truncated_gb,
)
from toricsolve.toric_gb import eliminant, find_d0, leading_monomial

XY = ["x", "y"]
TRI = LatticePolytope.standard_simplex(2)
SQUARE = LatticePolytope.cube(2)


def system(*texts, names=XY):
    return PolySystem.from_strings(list(texts), names)


def test_algebra_dense_and_square():
    alg = build_algebra([TRI])
    for b in range(5):
        assert len(alg.monomials((b,))) == comb(b + 2, 2)
    sq = build_algebra([SQUARE])
    for b in range(5):
        assert len(sq.monomials((b,))) == (b + 1) ** 2
    assert sq.monomials((-1,)) == frozenset()


def test_algebra_needs_origin_vertex():
    with pytest.raises(ValueError):
        build_algebra([[(1, 0), (0, 1), (1, 1)]])


def test_divides():
    alg = build_algebra([TRI])
    assert alg.divides(((1, 0), (1,)), ((2, 1), (3,)))
    assert not alg.divides(((1, 0), (1,)), ((0, 1), (3,)))
    assert not alg.divides(((0, 0), (2,)), ((0, 0), (1,)))


def test_homogenize_examples():
    H = homogenize_system(system("x + y - 1"), build_algebra([TRI]), [(1,)])
    assert len(H.terms(0)) == 3
    assert all(deg == (1,) for (_, deg), _ in H.terms(0))
    pencil = load("pencil.json")
    H = homogenize_system(PolySystem(pencil.names, pencil.polys[:1]), build_algebra([SQUARE]), [(1,)])
    assert {a for (a, _), _ in H.terms(0)} == H.algebra.monomials((1,))
    with pytest.raises(ValueError):
        homogenize_system(system("x^2"), build_algebra([TRI]), [(1,)])


def test_homogenize_translates_support():
    alg = build_algebra([LatticePolytope.standard_simplex(2)])
    with pytest.raises(ValueError):
        homogenize_system(system("x^2*y + x^3*y"), alg, [(1,)])
    H = homogenize_system(system("x^2*y + x^3*y"), alg, [(1,)], translate=True)
    assert H.shifts[0] == (-2, -1)
    assert H.polys[0] == parse_polynomial("1 + x", XY)


def test_auto_setup_uses_newton_polytopes():
    H = default_setup(load("mixed2.json"))
    assert H.degrees == ((1, 0), (0, 1))
    assert [Q.vertices for Q in H.algebra.summands] == [TRI.vertices, SQUARE.vertices]


def test_graded_order_compares_degree_first():
    order = GradedMonomialOrder()
    assert order.key((0, 0), (2,)) > order.key((3, 0), (1,))
    assert order.key((1, 0), (1,)) > order.key((0, 1), (1,)) > order.key((0, 0), (1,))
    with pytest.raises(ValueError):
        GradedMonomialOrder("revlex")


def test_first_degree_single_row():
    H = default_setup(system("x + 2*y - 1", "x - y + 3"), "dense")
    M, skipped = macaulay_matrix_graded(H, (1,))
    assert M.shape == (2, 3)
    assert skipped == []
    H1 = default_setup(system("x + 2*y - 1", "x^2 - y + 3"), "dense")
    M, skipped = macaulay_matrix_graded(H1, (1,))
    assert M.shape == (1, 3) and skipped == []


def test_f5_skips_leading_monomial_multiples():
    # f2 = x * f1: at degree 3 the row x * f2 is predicted to vanish
    f1 = parse_polynomial("x + y - 1", XY)
    H = default_setup(PolySystem(("x", "y"), (f1, f1 * parse_polynomial("x", XY))), "dense")
    gb = truncated_gb(H, b_stop=(3,))
    assert gb.skipped_rows[(2,)] == []
    assert gb.skipped_rows[(3,)] == [(1, (1, 0))]
    assert gb.reduces_to_zero((3,), 1, (1, 0))
    # the unpredicted syzygy shows up as zero reductions
    assert gb.total_zero_reductions > 0


def test_truncated_gb_linear():
    gb = truncated_gb(default_setup(system("x - 1", "y - 2"), "dense"), b_stop=(2,))
    lms = {e.lm[0] for e in gb.elements}
    assert lms == {(1, 0), (0, 1)}
    assert gb.standard_monomials((2,)) == [(0, 0)]


def test_truncated_gb_pencil_square():
    pencil = load("pencil.json")
    H = homogenize_system(pencil, build_algebra([SQUARE]), [(1,), (1,)])
    gb = truncated_gb(H, b_stop=(2,))
    assert len(gb.standard_monomials((2,))) == 2 == mixed_volume([SQUARE, SQUARE])


def test_single_polynomial_principal():
    H = default_setup(system("x^2 + 3*x*y - y + 5"), "dense")
    for b in (2, 3, 4):
        gb = truncated_gb(H, b_stop=(b,))
        assert len(gb.elements) == 1
        assert dehomogenize_gb(gb)[0] == parse_polynomial("x^2 + 3*x*y - y + 5", XY)
        assert gb.total_zero_reductions == 0


def test_f5_off_keeps_every_row():
    H = default_setup(system("x^2 + y - 3", "x*y - 2*x + 1"), "dense")
    with_f5 = truncated_gb(H)
    without = truncated_gb(H, f5=False)
    assert without.total_skipped == 0
    assert {e.lm for e in with_f5.elements} == {e.lm for e in without.elements}
    assert without.total_zero_reductions == with_f5.total_skipped


def test_dehomogenized_leading_monomials():
    H = default_setup(system("x^2 + 2*y^2 - 3", "x*y - x + 4"), "dense")
    gb = truncated_gb(H)
    for e, p in zip(gb.elements, dehomogenize_gb(gb)):
        assert leading_monomial(p) == e.lm[0]
        assert p.coeff(e.lm[0]) == 1


small_polys = st.dictionaries(st.tuples(st.integers(0, 2), st.integers(0, 2)), rationals,
                              min_size=1, max_size=4).map(lambda d: SparsePoly(2, d)).filter(
    lambda f: not f.is_zero())


@given(small_polys, small_polys)
def test_dehomogenization_is_multiplicative(g, h):
    # in S^h, (alpha, b) * (alpha', b') = (alpha + alpha', b + b'); pi forgets b
    alg = build_algebra([TRI])
    bg = max(sum(a) for a in g.support())
    bh = max(sum(a) for a in h.support())
    prod_terms = {}
    for a, c in g.items():
        for a2, c2 in h.items():
            key = (tuple(x + y for x, y in zip(a, a2)), (bg + bh,))
            prod_terms[key] = prod_terms.get(key, 0) + c * c2
    assert all(alg.monomials(b) >= {a} for (a, b) in prod_terms)
    assert SparsePoly(2, {a: c for (a, _), c in prod_terms.items()}) == g * h


@settings(max_examples=30)
@given(small_polys)
def test_leading_monomial_commutes_with_pi(g):
    # a graded order compares degree first, so inside one degree it is order1
    order = GradedMonomialOrder()
    b = (max(sum(a) for a in g.support()) + 1,)
    lm = max(((a, b) for a in g.support()), key=lambda m: order.key(*m))
    assert lm[0] == leading_monomial(g)


def test_find_d0():
    order = GradedMonomialOrder()
    assert find_d0(build_algebra([TRI]), order) == (1,)
    assert find_d0(build_algebra([SQUARE, TRI]), order) == (0, 1)
    seg = LatticePolytope.from_points([(0, 0), (1, 0)])
    assert find_d0(build_algebra([seg]), order) is None


def test_multiplication_maps_univariate():
    H = default_setup(system("x^2 - 3*x + 2", names=["x"]), "dense")
    mm = multiplication_maps(H)
    assert mm.size == 2
    assert sorted(np.linalg.eigvals(mm.as_numpy(mm.maps[0])).real) == pytest.approx([1, 2])


def test_multiplication_maps_pencil():
    H = default_setup(load("pencil.json"))
    f0 = parse_polynomial("3 + 5*l - 2*w", ["l", "w"])
    mm = multiplication_maps(H, f0=f0)
    assert mm.size == 2
    Ml, Mw = mm.maps
    assert all(isinstance(x, Fraction) for row in Ml for x in row)
    prod = lambda A, B: [[sum(a * b for a, b in zip(r, c)) for c in zip(*B)] for r in A]
    assert prod(Ml, Mw) == prod(Mw, Ml)
    vals = sorted(np.linalg.eigvals(mm.as_numpy(Ml)), key=lambda z: z.imag)
    assert vals == pytest.approx([-1j / np.sqrt(2), 1j / np.sqrt(2)])


def test_fglm_examples():
    H = default_setup(system("x - 1", "y - 2"), "dense")
    mm = multiplication_maps(H)
    assert fglm_lex(mm.maps, mm.one) == [parse_polynomial("y - 2", XY), parse_polynomial("x - 1", XY)]
    H = default_setup(system("x^2 - 3*x + 2", names=["x"]), "dense")
    mm = multiplication_maps(H)
    assert fglm_lex(mm.maps, mm.one) == [parse_polynomial("x^2 - 3*x + 2", ["x"])]


def test_fglm_pencil_eliminant():
    H = default_setup(load("pencil.json"))
    mm = multiplication_maps(H)
    e = eliminant(fglm_lex(mm.maps, mm.one))
    assert e == parse_polynomial("l^2 + 1/2", ["l", "w"])


def test_fglm_float_matches_exact():
    H = default_setup(load("mixed2.json"))
    mm = multiplication_maps(H)
    exact = fglm_lex(mm.maps, mm.one)
    approx = fglm_lex([[[float(x) for x in r] for r in M] for M in mm.maps], [float(x) for x in mm.one])
    assert [sorted(f.support()) for f in exact] == [sorted(f.support()) for f in approx]
    for f, g in zip(exact, approx):
        for a, c in f.items():
            assert complex(g.coeff(a)) == pytest.approx(float(c), rel=1e-8, abs=1e-8)


def test_fglm_rejects_noncommuting():
    with pytest.raises(ValueError):
        fglm_lex([[[0, 1], [0, 0]], [[0, 0], [1, 0]]], [1, 0])


def test_saturation_drops_hyperplane_root():
    sys_ = load("sat.json")
    mm = multiplication_maps(default_setup(sys_))
    assert mm.size == 2
    lex = fglm_lex(mm.maps, mm.one)
    assert lex == [parse_polynomial("y - x", XY), parse_polynomial("x^2 - 3*x + 2", XY)]


def test_no_affine_roots_is_unstable():
    with pytest.raises(DimensionUnstable):
        multiplication_maps(default_setup(system("x + y", "x + y + 1"), "dense"))


def test_quotient_dimension_is_mixed_volume():
    rng = random.Random(5)
    for _ in range(6):
        polys = []
        for _ in range(2):
            pts = {(0, 0), (1, 0), (0, 1)} | {(rng.randint(0, 2), rng.randint(0, 2)) for _ in range(3)}
            polys.append(SparsePoly(2, {a: rng.randint(1, 30) for a in pts}))
        sys_ = PolySystem(("x", "y"), tuple(polys))
        mv = mixed_volume([newton_polytope(f) for f in polys])
        assert multiplication_maps(default_setup(sys_)).size == mv


@pytest.mark.parametrize("degrees, seed", [((2, 2), 0), ((1, 3), 1), ((2, 1, 2), 2), ((3, 2), 3)])
def test_dense_staircase_matches_buchberger(degrees, seed):
    rng = random.Random(seed)
    n = len(degrees)
    dicts = [random_dense(rng, n, d) for d in degrees]
    sys_ = PolySystem(tuple(f"x{i}" for i in range(n)), tuple(SparsePoly(n, f) for f in dicts))
    gb = truncated_gb(default_setup(sys_, "dense"))
    ours = minimal_generators(e.lm[0] for e in gb.elements)
    oracle = leading_monomials(buchberger(dicts))
    assert ours == oracle
    bound = sum(degrees)
    assert staircase(ours, n, bound) == staircase(oracle, n, bound)
    assert gb.total_zero_reductions == 0


def test_f5_skipped_rows_reduce_to_zero():
    rng = random.Random(11)
    dicts = [random_dense(rng, 3, d) for d in (2, 2, 2)]
    sys_ = PolySystem(("x", "y", "z"), tuple(SparsePoly(3, f) for f in dicts))
    gb = truncated_gb(default_setup(sys_, "dense"))
    skipped = [(b, i, beta) for b, rows in gb.skipped_rows.items() for i, beta in rows]
    assert skipped
    assert all(gb.reduces_to_zero(b, i, beta) for b, i, beta in skipped)


def test_stats_json():
    gb = truncated_gb(default_setup(load("pencil.json")))
    stats = gb.stats_json()
    assert stats[0]["degree"] == [0, 0]
    assert {"rows", "cols", "skipped", "zero_reductions", "new_elements"} <= set(stats[0])
    assert sum(s["skipped"] for s in stats) == gb.total_skipped
