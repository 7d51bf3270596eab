"""Gröbner bases over graded semigroup algebras.

A system is homogenized into ``S^h``, whose degree-``b`` monomials are the
lattice points of ``sum_k b_k Q_k`` (tagged with ``b``). Degree by degree a
Macaulay matrix is eliminated top-down without pivoting, skipping rows by the
F5 criterion. The truncated basis feeds multiplication maps on the quotient
and FGLM produces a lexicographic basis of the saturated ideal.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import DimensionMismatch, DimensionUnstable, ToricSolveError
from .linalg import rref
from .matrices import MacaulayMatrix
from .poly import PolySystem, SparsePoly
from .polytope import LatticePolytope, minkowski_sum_all, newton_polytope

FGLM_FLOAT_TOL = 1e-10


# --------------------------------------------------------------------------
# orders


def _grevlex_key(alpha):
    return (sum(alpha), tuple(-a for a in reversed(alpha)))


def _lex_key(alpha):
    return tuple(alpha)


def _grlex_key(b):
    return (sum(b), tuple(b))


class GradedMonomialOrder:
    """Compare ``(alpha, b)`` by ``order2`` on ``b`` first, then ``order1`` on ``alpha``.

    Keys grow with the monomial: ``key(m1) < key(m2)`` iff ``m1 < m2``.
    """

    ORDER1 = {"grevlex": _grevlex_key, "lex": _lex_key}
    ORDER2 = {"grlex": _grlex_key}

    def __init__(self, order1: str = "grevlex", order2: str = "grlex"):
        if order1 not in self.ORDER1:
            raise ValueError(f"unknown exponent order {order1!r}")
        if order2 not in self.ORDER2:
            raise ValueError(f"unknown degree order {order2!r}")
        self.order1 = order1
        self.order2 = order2
        self.key1 = self.ORDER1[order1]
        self.key2 = self.ORDER2[order2]

    def key(self, alpha, b):
        return (self.key2(b), self.key1(alpha))

    def sort_desc(self, monos):
        return sorted(monos, key=self.key1, reverse=True)

    def __repr__(self):
        return f"GradedMonomialOrder({self.order1!r}, {self.order2!r})"


# --------------------------------------------------------------------------
# algebra and homogenization


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


class GradedSemigroupAlgebra:
    """Monomials ``(alpha, b)`` with ``alpha`` a lattice point of ``sum_k b_k Q_k``."""

    def __init__(self, summands: Sequence[LatticePolytope]):
        summands = tuple(summands)
        if not summands:
            raise ValueError("need at least one summand")
        n = summands[0].dim
        if any(Q.dim != n for Q in summands):
            raise DimensionMismatch("summands live in different dimensions")
        for k, Q in enumerate(summands):
            if (0,) * n not in Q.vertices:
                raise ValueError(f"summand {k} does not have the origin as a vertex")
        self.summands = summands
        self.nvars = n
        self._cache = {}

    @property
    def rank(self) -> int:
        return len(self.summands)

    def polytope(self, b) -> LatticePolytope:
        b = tuple(b)
        parts = [Q.scale(k) for Q, k in zip(self.summands, b) if k]
        return minkowski_sum_all(parts, self.nvars)

    def monomials(self, b) -> frozenset:
        b = tuple(b)
        if len(b) != self.rank:
            raise DimensionMismatch(f"degree {b} does not have {self.rank} entries")
        if any(k < 0 for k in b):
            return frozenset()
        got = self._cache.get(b)
        if got is None:
            got = self.polytope(b).lattice_points()
            self._cache[b] = got
        return got

    def divides(self, small, big) -> bool:
        """Whether monomial ``small = (alpha', b')`` divides ``big = (alpha, b)``."""
        (a1, b1), (a2, b2) = small, big
        c = _sub(b2, b1)
        if any(k < 0 for k in c):
            return False
        return _sub(a2, a1) in self.monomials(c)

    def augmented(self, Q: LatticePolytope) -> "GradedSemigroupAlgebra":
        return GradedSemigroupAlgebra(self.summands + (Q,))


def build_algebra(summands) -> GradedSemigroupAlgebra:
    """Algebra from summand polytopes (or point lists), each with the origin as a vertex."""
    polys = [Q if isinstance(Q, LatticePolytope) else LatticePolytope.from_points(Q) for Q in summands]
    return GradedSemigroupAlgebra(polys)


@dataclass
class HomogenizedSystem:
    algebra: GradedSemigroupAlgebra
    polys: tuple
    degrees: tuple
    shifts: tuple
    names: tuple

    @property
    def nvars(self):
        return self.algebra.nvars

    def degree_sum(self):
        return tuple(sum(col) for col in zip(*self.degrees))

    def augmented(self, Q: LatticePolytope) -> "HomogenizedSystem":
        return HomogenizedSystem(
            self.algebra.augmented(Q), self.polys, tuple(d + (0,) for d in self.degrees), self.shifts,
            self.names,
        )

    def terms(self, i):
        """Terms of the homogenized polynomial as ``((alpha, d_i), c)`` pairs."""
        return [((a, self.degrees[i]), c) for a, c in self.polys[i].items()]


def homogenize_system(sys: PolySystem, alg: GradedSemigroupAlgebra, degrees,
                      translate: bool = False) -> HomogenizedSystem:
    """Place every term ``alpha`` of ``f_i`` at the monomial ``(alpha, d_i)``.

    With ``translate`` set, a support that does not fit ``sum_k d_ik Q_k`` as
    given is first translated so that its lex-smallest vertex lands on that
    of the target polytope (a monomial factor, harmless on the torus).
    """
    degrees = tuple(tuple(int(x) for x in d) for d in degrees)
    if len(degrees) != len(sys.polys):
        raise DimensionMismatch("one multidegree per polynomial is required")
    if sys.nvars != alg.nvars:
        raise DimensionMismatch("system and algebra have different numbers of variables")
    polys, shifts = [], []
    for f, d in zip(sys.polys, degrees):
        if f.is_zero():
            raise ValueError("cannot homogenize the zero polynomial")
        if len(d) != alg.rank or any(k < 0 for k in d):
            raise DimensionMismatch(f"degree {d} is not in N^{alg.rank}")
        target = alg.monomials(d)
        shift = (0,) * alg.nvars
        if not f.support() <= target:
            if not translate:
                raise ValueError(f"support of {f} escapes the polytope of degree {d}")
            shift = _sub(alg.polytope(d).lex_min_vertex(), newton_polytope(f).lex_min_vertex())
            if not {_add(a, shift) for a in f.support()} <= target:
                raise ValueError(f"support of {f} escapes the polytope of degree {d}")
            f = f.shift(shift)
        polys.append(f)
        shifts.append(shift)
    return HomogenizedSystem(alg, tuple(polys), degrees, tuple(shifts), tuple(sys.names))


def default_setup(sys: PolySystem, summands="auto", spec=None) -> HomogenizedSystem:
    """Homogenize with a standard summand choice.

    ``auto``: ``Q_k`` is the ``k``-th Newton polytope translated to the origin
    and ``d_i = e_i``. ``dense``: a single summand ``Delta_n`` with ``d_i`` the
    total degree. ``file``: ``spec`` holds ``{"summands": [...], "degrees": [...]}``.
    """
    n = sys.nvars
    m = len(sys.polys)
    if summands == "auto":
        Qs = []
        for f in sys.polys:
            P = newton_polytope(f)
            Qs.append(P.translate(tuple(-x for x in P.lex_min_vertex())))
        degrees = [tuple(int(i == k) for k in range(m)) for i in range(m)]
        return homogenize_system(sys, GradedSemigroupAlgebra(Qs), degrees, translate=True)
    if summands == "dense":
        if any(f.has_negative_exponents() for f in sys.polys):
            raise ValueError("dense homogenization needs nonnegative exponents")
        alg = GradedSemigroupAlgebra([LatticePolytope.standard_simplex(n)])
        return homogenize_system(sys, alg, [(f.total_degree(),) for f in sys.polys])
    if summands == "file":
        if spec is None:
            raise ValueError("summand file contents are required")
        alg = build_algebra(spec["summands"])
        return homogenize_system(sys, alg, spec["degrees"], translate=True)
    raise ValueError(f"unknown summand mode {summands!r}")


# --------------------------------------------------------------------------
# Macaulay matrices per degree


def _degrees_upto(bound, order: GradedMonomialOrder):
    return sorted(itertools.product(*(range(k + 1) for k in bound)), key=order.key2)


def _graded_rows(H: HomogenizedSystem, b, order, prefix_tables):
    """Rows ``(i, beta)`` in elimination order plus the F5-skipped ones."""
    alg = H.algebra
    rows, skipped = [], []
    for i, d in enumerate(H.degrees):
        c = _sub(b, d)
        shifts = alg.monomials(c)
        if not shifts:
            continue
        known = None
        if i > 0 and prefix_tables is not None and c in prefix_tables:
            known = prefix_tables[c][i - 1]
        for beta in sorted(shifts, key=order.key1):
            if known is not None and beta in known:
                skipped.append((i, beta))
            else:
                rows.append((i, beta))
    return rows, skipped


def macaulay_matrix_graded(H: HomogenizedSystem, b, order: GradedMonomialOrder | None = None,
                           prefix_tables: dict | None = None):
    """Degree-``b`` Macaulay matrix of ``H`` and the rows skipped by F5.

    Columns are the degree-``b`` monomials in decreasing order; rows go by
    increasing polynomial index and, within one index, increasing shift.
    ``prefix_tables[c][i]`` is the leading-monomial set of the span of
    ``f_0..f_i`` in degree ``c``; degrees absent from it are built without
    skipping.
    """
    order = order or GradedMonomialOrder()
    b = tuple(b)
    cols = order.sort_desc(H.algebra.monomials(b))
    rows, skipped = _graded_rows(H, b, order, prefix_tables)
    M = MacaulayMatrix.build(H.polys, rows, cols, f"graded b={list(b)}")
    return M, skipped


class _Echelon:
    """Incremental row echelon form; rows are dicts ``column -> value``.

    A new row is top-reduced by existing pivots until its leading column
    (smallest index, i.e. largest monomial) is free; then it becomes a pivot.
    """

    def __init__(self):
        self.pivots = {}

    def reduce(self, row):
        row = dict(row)
        while row:
            lead = min(row)
            p = self.pivots.get(lead)
            if p is None:
                break
            c = row[lead]
            for k, v in p.items():
                nv = row.get(k, 0) - c * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
        return row

    def add(self, row):
        row = self.reduce(row)
        if not row:
            return None
        lead = min(row)
        inv = 1 / row[lead]
        self.pivots[lead] = {k: v * inv for k, v in row.items()}
        return lead


@dataclass
class DegreeStats:
    degree: tuple
    rows: int
    cols: int
    skipped: int
    zero_reductions: int
    new_elements: int

    def to_json(self):
        return {
            "degree": list(self.degree),
            "rows": self.rows,
            "cols": self.cols,
            "skipped": self.skipped,
            "zero_reductions": self.zero_reductions,
            "new_elements": self.new_elements,
        }


@dataclass
class GBElement:
    degree: tuple
    poly: SparsePoly
    lm: tuple


@dataclass
class TruncatedGB:
    system: HomogenizedSystem
    order: GradedMonomialOrder
    b_stop: tuple
    elements: list
    lm_tables: dict
    prefix_tables: dict
    stats: list
    skipped_rows: dict = field(default_factory=dict, repr=False)
    echelons: dict = field(default_factory=dict, repr=False)
    columns: dict = field(default_factory=dict, repr=False)

    @property
    def total_zero_reductions(self) -> int:
        return sum(s.zero_reductions for s in self.stats)

    @property
    def total_skipped(self) -> int:
        return sum(s.skipped for s in self.stats)

    def standard_monomials(self, b):
        b = tuple(b)
        lms = self.lm_tables[b]
        return self.order.sort_desc(a for a in self.system.algebra.monomials(b) if a not in lms)

    def reduces_to_zero(self, b, i, beta) -> bool:
        """Whether the row ``x^beta f_i`` lies in the span of the rows kept at degree ``b``."""
        b = tuple(b)
        index = {a: k for k, a in enumerate(self.columns[b])}
        row = {index[_add(a, beta)]: Fraction(c) for a, c in self.system.polys[i].items()}
        return not self.echelons[b].reduce(row)

    def stats_json(self):
        return [s.to_json() for s in self.stats]


def truncated_gb(H: HomogenizedSystem, order: GradedMonomialOrder | None = None, b_stop=None,
                 f5: bool = True) -> TruncatedGB:
    """Truncated Gröbner basis of ``H`` up to multidegree ``b_stop`` (default ``sum d_i``).

    Every degree ``b <= b_stop`` (componentwise) is eliminated in increasing
    ``order2`` order; new pivots whose leading monomial is not a multiple of
    an earlier leading monomial become basis elements.
    """
    order = order or GradedMonomialOrder()
    alg = H.algebra
    if b_stop is None:
        b_stop = H.degree_sum()
    b_stop = tuple(int(x) for x in b_stop)
    if len(b_stop) != alg.rank:
        raise DimensionMismatch(f"b_stop needs {alg.rank} entries")
    elements, lm_tables, prefix_tables, stats = [], {}, {}, []
    skipped_rows, echelons, columns = {}, {}, {}
    m = len(H.polys)
    for b in _degrees_upto(b_stop, order):
        cols = order.sort_desc(alg.monomials(b))
        index = {a: k for k, a in enumerate(cols)}
        rows, skipped = _graded_rows(H, b, order, prefix_tables if f5 else None)
        ech = _Echelon()
        prefix = []
        zero = 0
        r = 0
        for i in range(m):
            while r < len(rows) and rows[r][0] == i:
                beta = rows[r][1]
                row = {index[_add(a, beta)]: Fraction(c) for a, c in H.polys[i].items()}
                if ech.add(row) is None:
                    zero += 1
                r += 1
            prefix.append(frozenset(cols[k] for k in ech.pivots))
        prefix_tables[b] = prefix
        full = prefix[-1] if prefix else frozenset()
        lm_tables[b] = full
        new = 0
        for lead in sorted(ech.pivots):
            lm = (cols[lead], b)
            if any(alg.divides(e.lm, lm) for e in elements):
                continue
            poly = SparsePoly(alg.nvars, {cols[k]: v for k, v in ech.pivots[lead].items()})
            elements.append(GBElement(b, poly, lm))
            new += 1
        stats.append(DegreeStats(b, len(rows), len(cols), len(skipped), zero, new))
        skipped_rows[b] = skipped
        echelons[b] = ech
        columns[b] = cols
    return TruncatedGB(H, order, b_stop, elements, lm_tables, prefix_tables, stats, skipped_rows,
                       echelons, columns)


def dehomogenize_gb(gb: TruncatedGB) -> list:
    """Apply ``(alpha, b) -> x^alpha`` to every element; results are made monic."""
    out = []
    for e in gb.elements:
        lc = e.poly.coeff(e.lm[0])
        out.append(SparsePoly(e.poly.nvars, {a: c / lc for a, c in e.poly.items()}))
    return out


def leading_monomial(f: SparsePoly, order1: str = "grevlex"):
    key = GradedMonomialOrder.ORDER1[order1]
    return max(f.support(), key=key)


# --------------------------------------------------------------------------
# multiplication maps


def _simplex_points(n):
    return [(0,) * n] + [tuple(int(i == j) for j in range(n)) for i in range(n)]


def find_d0(alg: GradedSemigroupAlgebra, order: GradedMonomialOrder, max_total: int | None = None):
    """Smallest degree (in ``order2``) whose monomials contain ``0, e_1, ..., e_n``."""
    need = _simplex_points(alg.nvars)
    max_total = max_total if max_total is not None else alg.nvars + 1
    cands = [b for b in itertools.product(range(max_total + 1), repeat=alg.rank) if 0 < sum(b) <= max_total]
    for b in sorted(cands, key=order.key2):
        mons = alg.monomials(b)
        if all(p in mons for p in need):
            return b
    return None


@dataclass
class MultiplicationMaps:
    basis: list
    maps: list
    f0: SparsePoly | None
    f0_map: list | None
    one: list
    b: tuple
    d0: tuple
    system: HomogenizedSystem
    gb: TruncatedGB

    @property
    def size(self):
        return len(self.basis)

    def as_numpy(self, M):
        return np.array([[complex(x) for x in row] for row in M], dtype=complex)


def _matmul(A, B):
    cols = list(zip(*B))
    return [[sum((a * b for a, b in zip(row, col) if a and b), Fraction(0)) for col in cols] for row in A]


def multiplication_maps(H: HomogenizedSystem, order: GradedMonomialOrder | None = None,
                        f0: SparsePoly | None = None, gb: TruncatedGB | None = None) -> MultiplicationMaps:
    """Multiplication by ``x_1..x_n`` (and ``f0``) on the quotient, basis ``B_0``.

    ``B_0`` are the standard monomials at ``b = sum d_i``. The degree
    ``b + d0`` Macaulay matrix is brought to reduced echelon form with the
    columns ``x^(0, d0) * B_0`` placed last, so each product
    ``x^(e_i, d0) x^(beta, b)`` is rewritten in that basis.
    """
    order = order or GradedMonomialOrder()
    n = H.nvars
    d0 = find_d0(H.algebra, order)
    if d0 is None:
        H = H.augmented(LatticePolytope.standard_simplex(n))
        gb = None
        d0 = tuple(int(k == H.algebra.rank - 1) for k in range(H.algebra.rank))
    b = H.degree_sum()
    if gb is None or gb.b_stop != b or gb.system.algebra is not H.algebra:
        gb = truncated_gb(H, order, b)
    basis = gb.standard_monomials(b)
    delta = len(basis)
    if delta == 0:
        raise DimensionUnstable("the quotient is zero at the truncation degree")
    top = _add(b, d0)
    alg = H.algebra
    last = [beta for beta in basis]
    last_set = set(last)
    first = [a for a in order.sort_desc(alg.monomials(top)) if a not in last_set]
    cols = first + last
    rows, _ = _graded_rows(H, top, order, None)
    M = MacaulayMatrix.build(H.polys, rows, cols, f"graded b={list(top)}")
    R, piv = rref(M.entries) if M.entries else ([], [])
    if len(cols) - len(piv) != delta or any(p >= len(first) for p in piv):
        raise DimensionUnstable(
            f"quotient dimension {len(cols) - len(piv)} at degree {list(top)} vs {delta} at {list(b)}"
        )
    pivot_row = {p: r for r, p in enumerate(piv)}
    col_index = {a: k for k, a in enumerate(cols)}
    off = len(first)

    def normal_form(alpha):
        k = col_index[alpha]
        if k >= off:
            vec = [Fraction(0)] * delta
            vec[k - off] = Fraction(1)
            return vec
        row = R[pivot_row[k]]
        return [-row[off + j] for j in range(delta)]

    maps = []
    for i in range(n):
        e = tuple(int(j == i) for j in range(n))
        images = [normal_form(_add(e, beta)) for beta in basis]
        maps.append([list(r) for r in zip(*images)])
    for i in range(n):
        for j in range(i + 1, n):
            if _matmul(maps[i], maps[j]) != _matmul(maps[j], maps[i]):
                raise DimensionUnstable("multiplication maps do not commute")
    one = normal_form((0,) * n)
    f0_map = None
    if f0 is not None:
        f0_map = [[Fraction(0)] * delta for _ in range(delta)]
        for e, c in f0.items():
            if sum(e) > 1 or any(x < 0 for x in e):
                raise ValueError("f0 must be an affine linear form")
            if sum(e) == 0:
                for k in range(delta):
                    f0_map[k][k] += c
            else:
                Mi = maps[e.index(1)]
                for r in range(delta):
                    for k in range(delta):
                        f0_map[r][k] += c * Mi[r][k]
    return MultiplicationMaps(basis, maps, f0, f0_map, one, b, d0, H, gb)


# --------------------------------------------------------------------------
# FGLM


def lex_key(alpha):
    """Lex with ``x_n > ... > x_1``."""
    return tuple(reversed(alpha))


class _ExactSpan:
    def __init__(self, k):
        self.rows = []
        self.k = k

    def express(self, v):
        """Coefficients over earlier staircase vectors, or None if ``v`` is independent."""
        v = list(v)
        combo = [Fraction(0)] * self.k
        for pivot, row, coef in self.rows:
            c = v[pivot]
            if c:
                v = [a - c * b for a, b in zip(v, row)]
                combo = [a + c * b for a, b in zip(combo, coef)]
        if any(v):
            return None, v, combo
        return combo, v, combo

    def add(self, residue, combo, index):
        pivot = next(k for k, x in enumerate(residue) if x)
        inv = 1 / residue[pivot]
        row = [x * inv for x in residue]
        coef = [-x * inv for x in combo]
        coef[index] += inv
        self.rows.append((pivot, row, coef))


class _FloatSpan:
    def __init__(self, k, tol):
        self.vecs = []
        self.tol = tol

    def express(self, v):
        v = np.asarray(v, dtype=complex)
        if not self.vecs:
            return (None, v, None) if np.linalg.norm(v) > self.tol else ([], v, None)
        A = np.array(self.vecs, dtype=complex).T
        sol, *_ = np.linalg.lstsq(A, v, rcond=None)
        resid = np.linalg.norm(A @ sol - v)
        if resid > self.tol * max(1.0, np.linalg.norm(v)):
            return None, v, None
        return list(sol), v, None

    def add(self, residue, combo, index):
        self.vecs.append(residue)


def fglm_lex(maps, one, nvars: int | None = None, exact: bool | None = None,
             tol: float = FGLM_FLOAT_TOL) -> list:
    """Lexicographic Gröbner basis (``x_n > ... > x_1``) from commuting multiplication maps.

    Monomials are visited in increasing lex order; a monomial whose normal
    form depends linearly on the staircase so far yields a basis element.
    """
    n = len(maps) if nvars is None else nvars
    if exact is None:
        exact = all(isinstance(x, (Fraction, int)) for M in maps for row in M for x in row)
    delta = len(one)
    if exact:
        maps = [[[Fraction(x) for x in row] for row in M] for M in maps]
        for i in range(n):
            for j in range(i + 1, n):
                if _matmul(maps[i], maps[j]) != _matmul(maps[j], maps[i]):
                    raise ValueError("multiplication maps do not commute")

        def apply(M, v):
            return [sum((a * b for a, b in zip(row, v) if a and b), Fraction(0)) for row in M]

        span = _ExactSpan(delta)
    else:
        arr = [np.asarray(M, dtype=complex) for M in maps]
        for i in range(n):
            for j in range(i + 1, n):
                if np.linalg.norm(arr[i] @ arr[j] - arr[j] @ arr[i]) > 1e3 * tol * max(1.0, np.linalg.norm(arr[i])):
                    raise ValueError("multiplication maps do not commute")

        def apply(M, v):
            return list(np.asarray(M, dtype=complex) @ np.asarray(v, dtype=complex))

        span = _FloatSpan(delta, tol)
        maps = arr
    staircase, vectors, gb, leads = [], {}, [], []
    todo = {(0,) * n}
    while todo:
        mono = min(todo, key=lex_key)
        todo.discard(mono)
        if mono in vectors or any(all(a >= b for a, b in zip(mono, L)) for L in leads):
            continue
        if not any(mono):
            v = list(one) if exact else [complex(x) for x in one]
        else:
            i = next(k for k in range(n) if mono[k] > 0 and
                     tuple(x - int(j == k) for j, x in enumerate(mono)) in vectors)
            prev = tuple(x - int(j == i) for j, x in enumerate(mono))
            v = apply(maps[i], vectors[prev])
        combo, residue, partial = span.express(v)
        if combo is not None:
            terms = {mono: 1}
            for s, c in zip(staircase, combo):
                if (c if exact else abs(c) > tol):
                    terms[s] = terms.get(s, 0) - c
            gb.append(SparsePoly(n, terms))
            leads.append(mono)
        else:
            span.add(residue, partial if exact else None, len(staircase))
            staircase.append(mono)
            vectors[mono] = v
            if len(staircase) > delta:
                raise ToricSolveError("FGLM staircase exceeds the quotient dimension")
            for k in range(n):
                todo.add(tuple(x + int(j == k) for j, x in enumerate(mono)))
    gb.sort(key=lambda f: lex_key(max(f.support(), key=lex_key)), reverse=True)
    return gb


def eliminant(lex_gb) -> SparsePoly:
    """The basis element involving only the smallest variable ``x_1``."""
    for f in lex_gb:
        if all(all(x == 0 for x in e[1:]) for e in f.support()):
            return f
    raise ValueError("no univariate element in the basis")


__all__ = [
    "GradedMonomialOrder",
    "GradedSemigroupAlgebra",
    "HomogenizedSystem",
    "TruncatedGB",
    "GBElement",
    "DegreeStats",
    "MultiplicationMaps",
    "build_algebra",
    "homogenize_system",
    "default_setup",
    "macaulay_matrix_graded",
    "truncated_gb",
    "dehomogenize_gb",
    "leading_monomial",
    "find_d0",
    "multiplication_maps",
    "fglm_lex",
    "eliminant",
    "lex_key",
]
