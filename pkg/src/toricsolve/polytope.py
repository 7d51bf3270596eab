"""Lattice polytopes: Newton polytopes, Minkowski sums, lattice points and mixed volumes.

Convex hulls use Qhull only to propose facets; every facet is rebuilt from
its lattice points with integer arithmetic and verified against the whole
point set, so the stored H- and V-descriptions are exact.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import reduce
from math import factorial, gcd
from typing import Iterable, Sequence

import numpy as np
from scipy.spatial import ConvexHull, QhullError

from .errors import DimensionMismatch
from .linalg import exact_determinant, rref
from .poly import SparsePoly

MAX_DIM = 4


def _int_det(rows) -> int:
    d = exact_determinant(rows)
    assert d.denominator == 1
    return int(d.numerator)


def _normalize(vec):
    g = reduce(gcd, (abs(int(x)) for x in vec), 0)
    if g == 0:
        return tuple(int(x) for x in vec)
    return tuple(int(x) // g for x in vec)


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _cross(vectors, k):
    """Integer vector orthogonal to ``k - 1`` vectors in Z^k (generalized cross product)."""
    out = []
    for i in range(k):
        minor = [[v[j] for j in range(k) if j != i] for v in vectors]
        out.append((-1) ** i * (_int_det(minor) if minor else 1))
    return out


class LatticePolytope:
    """Convex hull of finitely many integer points.

    ``vertices`` are the extreme points (sorted). ``facets`` is a tuple of
    ``(normal, offset)`` pairs with the polytope ``{x : <normal, x> <= offset}``
    inside its affine hull; ``equations`` pins down the affine hull itself as
    ``<a, x> == c`` pairs. For full-dimensional polytopes ``equations`` is empty.
    """

    __slots__ = ("dim", "vertices", "facets", "equations", "affine_dim", "_lattice", "_hull_simplices")

    def __init__(self, dim, vertices, facets, equations, affine_dim, hull_simplices=None):
        self.dim = dim
        self.vertices = tuple(sorted(vertices))
        self.facets = tuple(facets)
        self.equations = tuple(equations)
        self.affine_dim = affine_dim
        self._lattice = None
        self._hull_simplices = hull_simplices

    # construction -----------------------------------------------------
    @classmethod
    def from_points(cls, points: Iterable[Sequence[int]]) -> "LatticePolytope":
        pts = sorted({tuple(int(x) for x in p) for p in points})
        if not pts:
            raise ValueError("a polytope needs at least one point")
        n = len(pts[0])
        if any(len(p) != n for p in pts):
            raise DimensionMismatch("points of different lengths")
        if n > MAX_DIM:
            raise DimensionMismatch(f"ambient dimension {n} exceeds the supported maximum {MAX_DIM}")
        return _hull(pts, n)

    @classmethod
    def standard_simplex(cls, n: int, scale: int = 1) -> "LatticePolytope":
        pts = [(0,) * n] + [tuple(scale * int(i == j) for j in range(n)) for i in range(n)]
        return cls.from_points(pts)

    @classmethod
    def cube(cls, n: int) -> "LatticePolytope":
        return cls.from_points(itertools.product((0, 1), repeat=n))

    # predicates -------------------------------------------------------
    @property
    def halfspaces(self):
        """All constraints as ``<a, x> <= b``, equations split into two inequalities."""
        hs = list(self.facets)
        for a, c in self.equations:
            hs.append((a, c))
            hs.append((tuple(-x for x in a), -c))
        return hs

    def contains(self, x) -> bool:
        return all(_dot(a, x) <= b for a, b in self.facets) and all(
            _dot(a, x) == c for a, c in self.equations
        )

    def is_full_dimensional(self) -> bool:
        return self.affine_dim == self.dim

    def lattice_points(self) -> frozenset:
        """Every integer point of the polytope (bounding box filtered by the facets)."""
        if self._lattice is None:
            lo = [min(v[i] for v in self.vertices) for i in range(self.dim)]
            hi = [max(v[i] for v in self.vertices) for i in range(self.dim)]
            ranges = [range(a, b + 1) for a, b in zip(lo, hi)]
            self._lattice = frozenset(p for p in itertools.product(*ranges) if self.contains(p))
        return self._lattice

    def translate(self, t) -> "LatticePolytope":
        return LatticePolytope.from_points([tuple(a + b for a, b in zip(v, t)) for v in self.vertices])

    def scale(self, k: int) -> "LatticePolytope":
        if k < 0:
            raise ValueError("dilation factor must be nonnegative")
        return LatticePolytope.from_points([tuple(k * a for a in v) for v in self.vertices])

    def lex_min_vertex(self):
        return self.vertices[0]

    def normalized_volume(self) -> int:
        """``n! * vol(P)``, exact; zero for lower-dimensional polytopes."""
        if not self.is_full_dimensional() or self.dim == 0:
            return 0 if self.dim else 1
        if self.dim == 1:
            return self.vertices[-1][0] - self.vertices[0][0]
        v0 = self.vertices[0]
        total = 0
        for simplex in self._hull_simplices:
            rows = [[a - b for a, b in zip(p, v0)] for p in simplex]
            total += abs(_int_det(rows))
        return total

    def volume(self) -> Fraction:
        return Fraction(self.normalized_volume(), factorial(self.dim))

    def __eq__(self, other):
        return isinstance(other, LatticePolytope) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __add__(self, other):
        return minkowski_sum(self, other)

    def __repr__(self):
        return f"LatticePolytope(vertices={list(self.vertices)})"

    def to_json(self):
        return {"vertices": [list(v) for v in self.vertices]}


def _affine_frame(pts, n):
    """Affine dimension, independent coordinate indices and integer equations of the hull."""
    p0 = pts[0]
    vecs = [[a - b for a, b in zip(p, p0)] for p in pts[1:]]
    if not vecs:
        R, piv = [], []
    else:
        R, piv = rref(vecs)
    k = len(piv)
    equations = []
    for f in range(n):
        if f in piv:
            continue
        vec = [Fraction(0)] * n
        vec[f] = Fraction(1)
        for row_idx, pc in enumerate(piv):
            vec[pc] = -R[row_idx][f]
        den = reduce(lambda a, b: a * b // gcd(a, b), (x.denominator for x in vec), 1)
        a = _normalize([int(x * den) for x in vec])
        equations.append((a, _dot(a, p0)))
    return k, piv, equations


def _hull(pts, n):
    if n == 0:
        return LatticePolytope(0, [()], [], [], 0)
    k, coords, equations = _affine_frame(pts, n)
    if k == 0:
        return LatticePolytope(n, [pts[0]], [], equations, 0)
    proj = [tuple(p[c] for c in coords) for p in pts]
    if k == 1:
        c = coords[0]
        lo = min(pts, key=lambda p: p[c])
        hi = max(pts, key=lambda p: p[c])
        normal = tuple(int(j == c) for j in range(n))
        facets = [(normal, hi[c]), (tuple(-x for x in normal), -lo[c])]
        simplices = None
        if n == 1:
            simplices = [(lo,), (hi,)]
        return LatticePolytope(n, [lo, hi], facets, equations, 1, simplices)
    try:
        qh = ConvexHull(np.array(proj, dtype=float))
    except QhullError as exc:  # pragma: no cover - full-dimensional integer input
        raise RuntimeError(f"Qhull failed on a {k}-dimensional point set: {exc}") from exc
    found = {}
    simplices = []
    for simplex in qh.simplices:
        sp = [proj[i] for i in simplex]
        base = sp[0]
        diffs = [[a - b for a, b in zip(q, base)] for q in sp[1:]]
        normal = _cross(diffs, k)
        if not any(normal):
            continue
        normal = _normalize(normal)
        offset = _dot(normal, base)
        vals = [_dot(normal, q) for q in proj]
        if max(vals) > offset:
            if min(vals) < offset:
                raise RuntimeError("Qhull proposed a non-supporting hyperplane")
            normal = tuple(-x for x in normal)
            offset = -offset
        simplices.append(tuple(pts[i] for i in simplex))
        found[normal] = offset
    facets_proj = sorted(found.items())
    vertices = []
    for p, q in zip(pts, proj):
        tight = [a for a, b in facets_proj if _dot(a, q) == b]
        if len(tight) >= k and len(rref(tight)[1]) == k:
            vertices.append(p)
    facets = []
    for a, b in facets_proj:
        full = [0] * n
        for c, x in zip(coords, a):
            full[c] = x
        facets.append((tuple(full), b))
    return LatticePolytope(n, vertices, facets, equations, k, simplices if k == n else None)


# --------------------------------------------------------------------------


def newton_polytope(f: SparsePoly) -> LatticePolytope:
    """Convex hull of the support of ``f``."""
    if f.is_zero():
        raise ValueError("the zero polynomial has no Newton polytope")
    return LatticePolytope.from_points(f.support())


def minkowski_sum(P: LatticePolytope, Q: LatticePolytope) -> LatticePolytope:
    if P.dim != Q.dim:
        raise DimensionMismatch(f"Minkowski sum of polytopes in R^{P.dim} and R^{Q.dim}")
    return LatticePolytope.from_points(
        tuple(a + b for a, b in zip(v, w)) for v in P.vertices for w in Q.vertices
    )


def minkowski_sum_all(Ps: Sequence[LatticePolytope], dim: int | None = None) -> LatticePolytope:
    if not Ps:
        if dim is None:
            raise ValueError("empty sum needs an ambient dimension")
        return LatticePolytope.from_points([(0,) * dim])
    return reduce(minkowski_sum, Ps)


def lattice_points(P: LatticePolytope) -> frozenset:
    return P.lattice_points()


def mixed_volume_terms(Ps: Sequence[LatticePolytope]):
    """Signed lattice-point counts of the inclusion-exclusion formula, keyed by subset."""
    n = len(Ps)
    terms = {(): (-1) ** n}
    for k in range(1, n + 1):
        for I in itertools.combinations(range(n), k):
            count = len(minkowski_sum_all([Ps[i] for i in I]).lattice_points())
            terms[I] = (-1) ** (n - k) * count
    return terms


def mixed_volume(Ps: Sequence[LatticePolytope]) -> int:
    """Mixed volume through the alternating sum of lattice-point counts of subset sums."""
    if not Ps:
        raise DimensionMismatch("mixed volume of an empty list")
    n = Ps[0].dim
    if len(Ps) != n or any(P.dim != n for P in Ps):
        raise DimensionMismatch(f"mixed volume needs {n} polytopes in R^{n}, got {len(Ps)}")
    mv = sum(mixed_volume_terms(Ps).values())
    assert mv >= 0, "inclusion-exclusion produced a negative mixed volume"
    return mv
