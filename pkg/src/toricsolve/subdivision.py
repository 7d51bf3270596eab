"""Regular mixed subdivisions induced by integer liftings.

Two independent routes produce cells:

* :func:`mixed_subdivision` enumerates every fine cell by brute force over
  candidate face tuples, solving for the lifting normal exactly;
* :class:`CellLocator` finds the cell above a single point with an exact
  revised simplex (the lower-hull LP), warm-started from the previous cell.

Both certify genericity exactly and raise :class:`DegenerateLifting` otherwise.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, prod

from .errors import DegenerateLifting, DeltaNotGeneric, DimensionMismatch
from .linalg import exact_determinant, inverse
from .polytope import LatticePolytope, minkowski_sum_all, mixed_volume

DEFAULT_HEIGHT_BOUND = 2 ** 20
MAX_RETRIES = 16


def _canon_supports(supports):
    out = []
    for A in supports:
        pts = tuple(sorted({tuple(int(x) for x in a) for a in A}))
        if not pts:
            raise ValueError("empty support")
        out.append(pts)
    n = len(out[0][0])
    if any(len(a) != n for A in out for a in A):
        raise DimensionMismatch("supports live in different dimensions")
    return out, n


@dataclass(frozen=True)
class Lifting:
    """Integer heights for each point of each support.

    ``heights[i]`` maps points of the ``i``-th support to integers in
    ``[0, bound]``; random liftings are reproducible from ``seed``.
    """

    heights: tuple
    seed: int | None = None
    bound: int = DEFAULT_HEIGHT_BOUND

    @classmethod
    def random(cls, supports, seed: int, bound: int = DEFAULT_HEIGHT_BOUND) -> "Lifting":
        supports, _ = _canon_supports(supports)
        rng = random.Random(seed)
        heights = tuple({a: rng.randint(0, bound) for a in A} for A in supports)
        return cls(heights, seed, bound)

    @classmethod
    def explicit(cls, supports, values) -> "Lifting":
        supports, _ = _canon_supports(supports)
        heights = []
        for A, vals in zip(supports, values):
            if isinstance(vals, dict):
                heights.append({tuple(a): int(vals[tuple(a)]) for a in A})
            else:
                heights.append(dict(zip(A, (int(v) for v in vals))))
        bound = max((h for H in heights for h in H.values()), default=0)
        return cls(tuple(heights), None, bound)

    def height(self, i: int, a) -> int:
        return self.heights[i][tuple(a)]

    def with_support_heights(self, i: int, values: dict) -> "Lifting":
        hs = list(self.heights)
        hs[i] = {tuple(a): int(v) for a, v in values.items()}
        return Lifting(tuple(hs), self.seed, max(self.bound, max(values.values())))

    def __hash__(self):
        return hash((self.seed, tuple(tuple(sorted(h.items())) for h in self.heights)))


@dataclass(frozen=True)
class Cell:
    """A fine cell ``F_0 + ... + F_m`` of a mixed subdivision.

    ``normal`` is the vector ``u`` such that ``F_i`` minimizes
    ``w_i(a) + <u, a>`` over the ``i``-th support.
    """

    faces: tuple
    normal: tuple
    edge_det: int = field(compare=False)

    @property
    def type(self):
        return tuple(len(F) - 1 for F in self.faces)

    @property
    def dim(self):
        return sum(self.type)

    @property
    def normalized_volume(self) -> int:
        n = self.dim
        return factorial(n) * abs(self.edge_det) // prod(factorial(k) for k in self.type)

    @property
    def volume(self) -> Fraction:
        return Fraction(abs(self.edge_det), prod(factorial(k) for k in self.type))

    def is_mixed(self) -> bool:
        return all(k == 1 for k in self.type)

    def barycentric(self, q):
        """Unique coefficients writing ``q`` as a sum of convex combinations of the faces."""
        m = len(self.faces)
        cols = []
        for i, F in enumerate(self.faces):
            for a in F:
                cols.append(list(a) + [int(j == i) for j in range(m)])
        M = [list(r) for r in zip(*cols)]
        rhs = [Fraction(x) for x in q] + [Fraction(1)] * m
        Minv = inverse(M)
        return [sum((r * b for r, b in zip(row, rhs)), Fraction(0)) for row in Minv]

    def contains(self, q, strict=False) -> bool:
        lam = self.barycentric(q)
        return all(x > 0 for x in lam) if strict else all(x >= 0 for x in lam)


@dataclass(frozen=True)
class MixedSubdivision:
    supports: tuple
    cells: tuple
    lifting: Lifting

    @property
    def dim(self):
        return len(self.supports[0][0])

    def total_normalized_volume(self) -> int:
        return sum(c.normalized_volume for c in self.cells)

    def cell_containing(self, q):
        for c in self.cells:
            if c.contains(q, strict=True):
                return c
        return None


@dataclass(frozen=True)
class MixedCellReport:
    cells: tuple
    volumes: tuple

    @property
    def total(self) -> int:
        return sum(self.volumes)


def _solve_normal(vectors, rhs):
    """Return (D, numerators) with u = numerators / D solving vectors . u = rhs."""
    D = int(exact_determinant(vectors))
    if D == 0:
        return 0, None
    n = len(vectors)
    nums = []
    for j in range(n):
        Mj = [row[:j] + [r] + row[j + 1:] for row, r in zip(vectors, rhs)]
        nums.append(int(exact_determinant(Mj)))
    return D, nums


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for k in range(total + 1):
        for rest in _compositions(total - k, parts - 1):
            yield (k,) + rest


def mixed_subdivision(supports, lifting: Lifting) -> MixedSubdivision:
    """Every fine cell of the regular mixed subdivision induced by ``lifting``.

    Candidate face tuples with ``sum(#F_i - 1) == n`` are tested by solving
    for the normal ``u`` and checking that all other lifted points lie
    strictly above. A tie anywhere means the lifting is not generic.
    """
    supports, n = _canon_supports(supports)
    m = len(supports)
    P = minkowski_sum_all([LatticePolytope.from_points(A) for A in supports])
    if not P.is_full_dimensional():
        return MixedSubdivision(tuple(supports), (), lifting)
    H = lifting.heights
    cells = []
    for extra in _compositions(n, m):
        choices = [itertools.combinations(A, k + 1) for A, k in zip(supports, extra)]
        for faces in itertools.product(*map(list, choices)):
            vectors, rhs = [], []
            for i, F in enumerate(faces):
                a0 = F[0]
                for a in F[1:]:
                    vectors.append([x - y for x, y in zip(a, a0)])
                    rhs.append(H[i][a0] - H[i][a])
            D, nums = _solve_normal(vectors, rhs)
            if D == 0:
                continue
            if D < 0:
                D, nums = -D, [-x for x in nums]
            ok = True
            tie = False
            for i, (A, F) in enumerate(zip(supports, faces)):
                level = D * H[i][F[0]] + sum(x * y for x, y in zip(nums, F[0]))
                for a in A:
                    if a in F:
                        continue
                    val = D * H[i][a] + sum(x * y for x, y in zip(nums, a))
                    if val < level:
                        ok = False
                        break
                    if val == level:
                        tie = True
                if not ok:
                    break
            if not ok:
                continue
            if tie:
                raise DegenerateLifting(f"lower face through {faces} is not fine")
            u = tuple(Fraction(x, D) for x in nums)
            edet = int(exact_determinant(vectors))
            cells.append(Cell(tuple(faces), u, edet))
    cells.sort(key=lambda c: c.faces)
    sub = MixedSubdivision(tuple(supports), tuple(cells), lifting)
    if sub.total_normalized_volume() != P.normalized_volume():
        raise DegenerateLifting("cells do not tile the Minkowski sum")
    return sub


def generic_mixed_subdivision(supports, seed: int = 0, bound: int = DEFAULT_HEIGHT_BOUND,
                              retries: int = MAX_RETRIES) -> MixedSubdivision:
    """Random lifting with retry on degeneracy (``seed``, ``seed + 1``, ...)."""
    last = None
    for k in range(retries):
        lifting = Lifting.random(supports, seed + k, bound)
        try:
            return mixed_subdivision(supports, lifting)
        except DegenerateLifting as exc:
            last = exc
    raise DegenerateLifting(f"no generic lifting after {retries} seeds: {last}")


def mixed_cells(sub: MixedSubdivision) -> MixedCellReport:
    """Cells whose faces are all edges, with exact volumes |det(edge vectors)|."""
    n = sub.dim
    if len(sub.supports) != n:
        raise DimensionMismatch(f"mixed cells need {n} supports in R^{n}, got {len(sub.supports)}")
    cells = tuple(c for c in sub.cells if c.is_mixed())
    return MixedCellReport(cells, tuple(abs(c.edge_det) for c in cells))


def mixed_volume_by_cells(supports, seed: int = 0) -> int:
    return mixed_cells(generic_mixed_subdivision(supports, seed)).total


# --------------------------------------------------------------------------
# exact lower-hull LP


class CellLocator:
    """Find the cell of the lifted subdivision lying above a point.

    Solves ``min sum w_i(a) lam_{i,a}`` subject to ``sum lam_{i,a} a = q`` and
    ``sum_a lam_{i,a} = 1`` for each support, exactly over the rationals.
    The first query runs a two-phase primal simplex; later queries run the
    dual simplex from the previous optimal basis, which stays dual feasible
    because only the right-hand side changes.
    """

    def __init__(self, supports, lifting: Lifting):
        self.supports, self.n = _canon_supports(supports)
        self.lifting = lifting
        self.m = len(self.supports)
        self.vars = [(i, a) for i, A in enumerate(self.supports) for a in A]
        self.cols = [
            tuple(Fraction(x) for x in a) + tuple(Fraction(int(j == i)) for j in range(self.m))
            for i, a in self.vars
        ]
        self.cost = [Fraction(lifting.height(i, a)) for i, a in self.vars]
        self.rows = self.n + self.m
        self._basis = None
        self._binv = None
        self.cells = {}

    # helpers -------------------------------------------------------------
    def _rhs(self, q):
        return [Fraction(x) for x in q] + [Fraction(1)] * self.m

    @staticmethod
    def _matvec(M, v):
        return [sum((a * b for a, b in zip(row, v) if a), Fraction(0)) for row in M]

    def _column(self, j):
        return self.cols[j]

    def _pivot(self, binv, r, w):
        piv = w[r]
        binv[r] = [x / piv for x in binv[r]]
        for i in range(len(binv)):
            if i != r and w[i] != 0:
                f = w[i]
                binv[i] = [a - f * b for a, b in zip(binv[i], binv[r])]

    def _duals(self, basis, binv, cost):
        cb = [cost[j] for j in basis]
        return [sum((cb[i] * binv[i][k] for i in range(self.rows) if cb[i]), Fraction(0))
                for k in range(self.rows)]

    def _reduced(self, basis, binv, cost, ncols):
        y = self._duals(basis, binv, cost)
        return [cost[j] - sum((a * b for a, b in zip(y, self._col_any(j)) if b), Fraction(0))
                for j in range(ncols)], y

    def _col_any(self, j):
        if j < len(self.cols):
            return self.cols[j]
        k = j - len(self.cols)
        return self._art[k]

    # primal two-phase ----------------------------------------------------
    def _primal(self, q):
        b = self._rhs(q)
        nv = len(self.cols)
        sign = [(-1 if x < 0 else 1) for x in b]
        self._art = [tuple(Fraction(sign[r]) if k == r else Fraction(0) for k in range(self.rows))
                     for r in range(self.rows)]
        ncols = nv + self.rows
        basis = list(range(nv, ncols))
        binv = [[Fraction(sign[r]) if k == r else Fraction(0) for k in range(self.rows)]
                for r in range(self.rows)]
        phase1 = [Fraction(0)] * nv + [Fraction(1)] * self.rows
        basis, binv = self._primal_loop(b, basis, binv, phase1, ncols)
        xb = self._matvec(binv, b)
        if any(basis[r] >= nv and xb[r] != 0 for r in range(self.rows)):
            raise ValueError(f"point {q} lies outside the Minkowski sum")
        # drive zero-level artificials out of the basis
        for r in range(self.rows):
            if basis[r] < nv:
                continue
            for j in range(nv):
                if j in basis:
                    continue
                w = self._matvec(binv, self.cols[j])
                if w[r] != 0:
                    self._pivot(binv, r, w)
                    basis[r] = j
                    break
            else:
                raise ValueError("constraint matrix is rank deficient (Minkowski sum not full-dimensional)")
        cost = self.cost + [Fraction(0)] * self.rows
        basis, binv = self._primal_loop(b, basis, binv, cost, nv)
        return basis, binv

    def _primal_loop(self, b, basis, binv, cost, ncols):
        while True:
            d, _ = self._reduced(basis, binv, cost, ncols)
            entering = next((j for j in range(ncols) if j not in basis and d[j] < 0), None)
            if entering is None:
                return basis, binv
            w = self._matvec(binv, self._col_any(entering))
            xb = self._matvec(binv, b)
            best = None
            for r in range(self.rows):
                if w[r] > 0:
                    ratio = xb[r] / w[r]
                    key = (ratio, basis[r])
                    if best is None or key < best[0]:
                        best = (key, r)
            if best is None:
                raise RuntimeError("lower-hull LP is unbounded")
            r = best[1]
            self._pivot(binv, r, w)
            basis[r] = entering

    # dual simplex --------------------------------------------------------
    def _dual(self, q, basis, binv):
        b = self._rhs(q)
        nv = len(self.cols)
        basis = list(basis)
        binv = [row[:] for row in binv]
        for _ in range(10000):
            xb = self._matvec(binv, b)
            neg = [(xb[r], basis[r], r) for r in range(self.rows) if xb[r] < 0]
            if not neg:
                return basis, binv
            r = min(neg)[2]
            d, _ = self._reduced(basis, binv, self.cost, nv)
            best = None
            for j in range(nv):
                if j in basis:
                    continue
                alpha = sum((a * c for a, c in zip(binv[r], self.cols[j]) if c), Fraction(0))
                if alpha < 0:
                    key = (d[j] / -alpha, j)
                    if best is None or key < best:
                        best = key
            if best is None:
                raise ValueError(f"point {q} lies outside the Minkowski sum")
            j = best[1]
            w = self._matvec(binv, self.cols[j])
            self._pivot(binv, r, w)
            basis[r] = j
        raise RuntimeError("dual simplex did not terminate")  # pragma: no cover

    # public ----------------------------------------------------------------
    def locate(self, q) -> Cell:
        """Cell containing ``q`` in its interior.

        Raises :class:`DeltaNotGeneric` if ``q`` sits on a cell boundary and
        :class:`DegenerateLifting` if the optimal lower face is not fine.
        """
        if self._basis is None:
            basis, binv = self._primal(q)
        else:
            basis, binv = self._dual(q, self._basis, self._binv)
        self._basis, self._binv = basis, binv
        b = self._rhs(q)
        xb = self._matvec(binv, b)
        d, y = self._reduced(basis, binv, self.cost, len(self.cols))
        if any(d[j] == 0 for j in range(len(self.cols)) if j not in basis):
            raise DegenerateLifting("lower face above the point is not a fine cell")
        if any(x == 0 for x in xb):
            raise DeltaNotGeneric(f"point {q} lies on a cell boundary")
        key = tuple(sorted(basis))
        cell = self.cells.get(key)
        if cell is None:
            faces = [[] for _ in range(self.m)]
            for j in key:
                i, a = self.vars[j]
                faces[i].append(a)
            faces = tuple(tuple(sorted(F)) for F in faces)
            vectors = [[x - y0 for x, y0 in zip(a, F[0])] for F in faces for a in F[1:]]
            u = tuple(-x for x in y[: self.n])
            cell = Cell(faces, u, int(exact_determinant(vectors)))
            self.cells[key] = cell
        return cell


__all__ = [
    "Lifting",
    "Cell",
    "MixedSubdivision",
    "MixedCellReport",
    "mixed_subdivision",
    "generic_mixed_subdivision",
    "mixed_cells",
    "mixed_volume_by_cells",
    "CellLocator",
    "mixed_volume",
]
