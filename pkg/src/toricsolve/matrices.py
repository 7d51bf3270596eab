"""Resultant matrices: Sylvester, dense Macaulay, Canny-Emiris and the bilinear Koszul formula.

Every construction returns a :class:`MacaulayMatrix` (or a
:class:`KoszulMatrix`), an exact rational matrix whose rows are labelled by
``(i, beta)`` and hold the coefficients of ``x**beta * f_i``.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import DegenerateLifting, DeltaNotGeneric, DimensionMismatch
from .linalg import exact_determinant
from .linalg import to_text as grid_text
from .poly import SparsePoly
from .polytope import LatticePolytope, minkowski_sum_all, mixed_volume, newton_polytope
from .subdivision import MAX_RETRIES, CellLocator, Lifting

DELTA_BITS = 10


def _exp_str(e):
    return "(" + ",".join(str(x) for x in e) + ")"


@dataclass
class MacaulayMatrix:
    """Rows ``(i, beta)`` and columns (exponents) of an exact coefficient matrix.

    The entry at row ``(i, beta)`` and column ``alpha`` is the coefficient of
    ``x**alpha`` in ``x**beta * f_i``.
    """

    rows: list
    cols: list
    entries: list
    provenance: str
    polys: tuple = field(default=(), repr=False)

    @classmethod
    def build(cls, polys, rows, cols, provenance):
        index = {tuple(c): j for j, c in enumerate(cols)}
        entries = []
        for i, beta in rows:
            row = [Fraction(0)] * len(cols)
            for e, c in polys[i].items():
                alpha = tuple(a + b for a, b in zip(e, beta))
                j = index.get(alpha)
                if j is None:
                    raise ValueError(f"monomial {alpha} of row {(i, beta)} is not a column")
                row[j] = Fraction(c)
            entries.append(row)
        return cls([(i, tuple(b)) for i, b in rows], [tuple(c) for c in cols], entries, provenance,
                   tuple(polys))

    @property
    def shape(self):
        return len(self.rows), len(self.cols)

    def is_square(self) -> bool:
        return len(self.rows) == len(self.cols)

    def det(self) -> Fraction:
        return exact_determinant(self.entries)

    def entry(self, row, col) -> Fraction:
        return self.entries[self.rows.index((row[0], tuple(row[1])))][self.cols.index(tuple(col))]

    def audit(self) -> bool:
        """Check every entry against the polynomial it came from."""
        for (i, beta), row in zip(self.rows, self.entries):
            shifted = self.polys[i].shift(beta)
            for alpha, v in zip(self.cols, row):
                if shifted.coeff(alpha) != v:
                    return False
            if not shifted.support() <= set(self.cols):
                return False
        return True

    def submatrix(self, row_idx, col_idx):
        return [[self.entries[r][c] for c in col_idx] for r in row_idx]

    def to_json(self) -> dict:
        return {
            "provenance": self.provenance,
            "rows": [{"poly": i, "shift": list(b)} for i, b in self.rows],
            "cols": [list(c) for c in self.cols],
            "entries": [[str(x) for x in row] for row in self.entries],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    def to_text(self) -> str:
        labels = [f"f{i}*x^{_exp_str(b)}" for i, b in self.rows]
        w = max((len(x) for x in labels), default=0)
        header = " " * w + " | " + " ".join(_exp_str(c) for c in self.cols)
        body = grid_text(self.entries).splitlines() if self.entries else []
        return "\n".join([header] + [f"{lab.ljust(w)} | {line}" for lab, line in zip(labels, body)])


# --------------------------------------------------------------------------
# Sylvester and dense Macaulay


def _univariate_degree(f: SparsePoly, what: str) -> int:
    if f.nvars != 1:
        raise DimensionMismatch(f"{what} is not univariate")
    if f.is_zero() or f.has_negative_exponents():
        raise ValueError(f"{what} must be a nonzero polynomial with nonnegative exponents")
    d = f.total_degree()
    if d < 1:
        raise ValueError(f"{what} is constant")
    return d


def sylvester_matrix(f: SparsePoly, g: SparsePoly) -> MacaulayMatrix:
    """The ``(d0 + d1)``-square Sylvester matrix; its determinant is ``Res(f, g)``."""
    d0 = _univariate_degree(f, "f")
    d1 = _univariate_degree(g, "g")
    rows = [(0, (k,)) for k in reversed(range(d1))] + [(1, (k,)) for k in reversed(range(d0))]
    cols = [(k,) for k in reversed(range(d0 + d1))]
    return MacaulayMatrix.build((f, g), rows, cols, "sylvester")


def _homogeneous_exponents(nvars, degree):
    """All exponents in ``nvars`` variables of total degree ``degree``."""
    for cut in itertools.combinations(range(degree + nvars - 1), nvars - 1):
        prev = -1
        out = []
        for c in cut + (degree + nvars - 1,):
            out.append(c - prev - 1)
            prev = c
        yield tuple(out)


def grlex_desc_key(alpha):
    return (-sum(alpha), tuple(-a for a in alpha))


def macaulay_matrix_dense(fs: Sequence[SparsePoly], degrees=None) -> MacaulayMatrix:
    """Classical Macaulay matrix of ``n + 1`` dense polynomials in ``n`` variables.

    ``f_i`` is homogenized with respect to ``degrees[i]``; the homogenizing
    variable sits in slot 0 of the homogeneous exponents and pairs with
    ``f_0``. Monomials of degree ``D = sum(d) - n`` are assigned to the first
    ``i`` with ``x_i**d_i`` dividing them.
    """
    fs = list(fs)
    if not fs:
        raise DimensionMismatch("empty system")
    n = fs[0].nvars
    if n == 0:
        raise DimensionMismatch("need at least one variable")
    if len(fs) != n + 1 or any(f.nvars != n for f in fs):
        raise DimensionMismatch(f"need {n + 1} polynomials in {n} variables")
    if any(f.is_zero() or f.has_negative_exponents() for f in fs):
        raise ValueError("dense Macaulay matrices need nonzero polynomials with nonnegative exponents")
    if degrees is None:
        degrees = [f.total_degree() for f in fs]
    degrees = [int(d) for d in degrees]
    for f, d in zip(fs, degrees):
        if f.total_degree() > d:
            raise ValueError(f"polynomial of degree {f.total_degree()} exceeds its bound {d}")
    D = sum(degrees) - n
    if D < max(degrees):
        raise ValueError(f"target degree {D} is below the largest degree {max(degrees)}")
    gammas = sorted(_homogeneous_exponents(n + 1, D), key=lambda g: grlex_desc_key(g[1:]))
    rows, cols = [], []
    for gamma in gammas:
        i = next(k for k in range(n + 1) if gamma[k] >= degrees[k])
        shifted = list(gamma)
        shifted[i] -= degrees[i]
        rows.append((i, tuple(shifted[1:])))
        cols.append(gamma[1:])
    order = sorted(range(len(rows)), key=lambda r: rows[r][0])
    rows = [rows[r] for r in order]
    return MacaulayMatrix.build(fs, rows, cols, "macaulay-dense")


# --------------------------------------------------------------------------
# Canny-Emiris


@dataclass
class CannyEmirisData:
    matrix: MacaulayMatrix
    points: list
    delta: tuple
    B: list
    lifting: Lifting
    row_points: list
    cells: list
    delta_seed: int = 0

    @property
    def size(self):
        return len(self.points)


def random_delta(n, seed):
    """Small generic rational shift with power-of-two denominators."""
    rng = random.Random(seed)
    den = 2 ** DELTA_BITS
    while True:
        nums = [rng.randint(1, den // 8) * rng.choice((-1, 1)) for _ in range(n)]
        if len(set(map(abs, nums))) == n:
            return tuple(Fraction(x, den) for x in nums)


def _shifted_lattice_points(P: LatticePolytope, delta):
    lo = [min(v[i] for v in P.vertices) for i in range(P.dim)]
    hi = [max(v[i] for v in P.vertices) for i in range(P.dim)]
    ranges = [range(int(a + d) - 1, int(b + d) + 2) for a, b, d in zip(lo, hi, delta)]
    out = []
    for p in itertools.product(*ranges):
        if P.contains(tuple(x - d for x, d in zip(p, delta))):
            out.append(p)
    return sorted(out)


def _ce_attempt(fs, supports, P, lifting, delta):
    locator = CellLocator(supports, lifting)
    m = len(fs)
    points = _shifted_lattice_points(P, delta)
    rows, B, row_cells = [], [[] for _ in range(m)], []
    for p in points:
        cell = locator.locate(tuple(x - d for x, d in zip(p, delta)))
        i = max(k for k, F in enumerate(cell.faces) if len(F) == 1)
        a = cell.faces[i][0]
        beta = tuple(x - y for x, y in zip(p, a))
        rows.append((i, beta))
        B[i].append(beta)
        row_cells.append(cell)
    M = MacaulayMatrix.build(fs, rows, points, "canny-emiris")
    return M, points, B, row_cells


def canny_emiris_matrix(fs: Sequence[SparsePoly], lifting: Lifting | None = None, delta_seed: int = 0,
                        *, seed: int = 0, retries: int = MAX_RETRIES) -> CannyEmirisData:
    """Square Canny-Emiris matrix of ``n + 1`` Laurent polynomials in ``n`` variables.

    Without an explicit ``lifting`` a random one is drawn from ``seed`` and
    redrawn on degeneracy; the shift ``delta`` is redrawn when a shifted
    lattice point lands on a cell wall.
    """
    fs = list(fs)
    n = fs[0].nvars
    if len(fs) != n + 1 or any(f.nvars != n for f in fs):
        raise DimensionMismatch(f"need {n + 1} polynomials in {n} variables")
    supports = [sorted(f.support()) for f in fs]
    P = minkowski_sum_all([newton_polytope(f) for f in fs])
    if not P.is_full_dimensional():
        raise DimensionMismatch("the Minkowski sum of the Newton polytopes is not full-dimensional")
    last = None
    for k in range(retries):
        lift = lifting if lifting is not None else Lifting.random(supports, seed + k)
        for j in range(retries):
            delta = random_delta(n, delta_seed + j)
            try:
                M, points, B, cells = _ce_attempt(fs, supports, P, lift, delta)
            except DeltaNotGeneric as exc:
                last = exc
                continue
            except DegenerateLifting as exc:
                last = exc
                break
            return CannyEmirisData(M, points, delta, B, lift, [r[1] for r in M.rows], cells,
                                   delta_seed + j)
        else:
            raise DeltaNotGeneric(f"no generic shift found after {retries} draws")
        if lifting is not None:
            raise last
    raise DegenerateLifting(f"no generic lifting after {retries} seeds: {last}")


# --------------------------------------------------------------------------
# bilinear Koszul formula

KOSZUL_ROWS = ("y0e0", "y1e0", "y1e1", "y1e2", "y0e1", "y0e2")
KOSZUL_COLS = ("x0e0", "x1e0", "x1e2", "x1e1", "x0e2", "x0e1")
_SYMBOLS = "abc"


def _koszul_terms():
    """For each row label, the signed coefficient references ``(sign, poly, xk, col)``.

    Row ``y_i e_j`` maps to ``(y_i * f_{J1}) e_{J2} - (y_i * f_{J2}) e_{J1}``
    with ``{J1 < J2} = {0,1,2} - {j}``; contracting ``y_i`` against
    ``x_k y_j`` keeps ``x_k`` when ``i == j``.
    """
    out = {}
    for label in KOSZUL_ROWS:
        i, j = int(label[1]), int(label[3])
        J1, J2 = [t for t in range(3) if t != j]
        refs = []
        for sign, poly, e in ((1, J1, J2), (-1, J2, J1)):
            for k in range(2):
                refs.append((sign, poly, k, i, f"x{k}e{e}"))
        out[label] = refs
    return out


def koszul_symbolic_pattern():
    """The 6x6 pattern with entries like ``'b10'``, ``'-c01'`` or ``'0'``."""
    terms = _koszul_terms()
    table = []
    for r in KOSZUL_ROWS:
        row = ["0"] * 6
        for sign, poly, k, i, col in terms[r]:
            row[KOSZUL_COLS.index(col)] = ("-" if sign < 0 else "") + f"{_SYMBOLS[poly]}{k}{i}"
        table.append(row)
    return table


def bilinear_grid(f: SparsePoly):
    """Coefficients ``g[k][j]`` of ``x_k y_j`` for a form in ``(x0, x1, y0, y1)``."""
    if f.nvars != 4:
        raise DimensionMismatch("bilinear forms live in the variables (x0, x1, y0, y1)")
    grid = [[Fraction(0)] * 2 for _ in range(2)]
    for e, c in f.items():
        if any(x < 0 for x in e) or e[0] + e[1] != 1 or e[2] + e[3] != 1:
            raise ValueError(f"term with exponent {e} is not bilinear in (x0, x1) x (y0, y1)")
        grid[e.index(1)][e[2:].index(1)] = Fraction(c)
    return grid


@dataclass
class KoszulMatrix:
    row_labels: tuple
    col_labels: tuple
    entries: list

    def det(self) -> Fraction:
        return exact_determinant(self.entries)

    def to_json(self) -> dict:
        return {
            "provenance": "koszul-bilinear",
            "row_labels": list(self.row_labels),
            "col_labels": list(self.col_labels),
            "entries": [[str(x) for x in row] for row in self.entries],
        }

    def to_text(self) -> str:
        w = max(max(len(str(x)) for row in self.entries for x in row), max(map(len, self.col_labels)))
        body = grid_text(self.entries, width=w).splitlines()
        header = "     " + " ".join(c.rjust(w) for c in self.col_labels)
        return "\n".join([header] + [f"{lab} {line}" for lab, line in zip(self.row_labels, body)])


def koszul_bilinear_matrix(f0: SparsePoly, f1: SparsePoly, f2: SparsePoly) -> KoszulMatrix:
    """The determinantal 6x6 matrix of three bilinear forms on P1 x P1."""
    grids = [bilinear_grid(f) for f in (f0, f1, f2)]
    terms = _koszul_terms()
    entries = []
    for r in KOSZUL_ROWS:
        row = [Fraction(0)] * 6
        for sign, poly, k, i, col in terms[r]:
            row[KOSZUL_COLS.index(col)] = sign * grids[poly][k][i]
        entries.append(row)
    return KoszulMatrix(KOSZUL_ROWS, KOSZUL_COLS, entries)


__all__ = [
    "MacaulayMatrix",
    "CannyEmirisData",
    "KoszulMatrix",
    "sylvester_matrix",
    "macaulay_matrix_dense",
    "canny_emiris_matrix",
    "koszul_bilinear_matrix",
    "koszul_symbolic_pattern",
    "bilinear_grid",
    "random_delta",
    "mixed_volume",
]
