"""Multiplication matrices from Schur complements and root extraction by eigenvalues.

Everything up to the Schur complement is exact; :func:`eigen_decomposition`
is the single place where floating point enters.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
import scipy.linalg

from .errors import (
    CoordinateRecoveryFailed,
    DegenerateLifting,
    DeltaNotGeneric,
    DimensionMismatch,
    EigenConvergenceError,
    SingularM11,
    ToricSolveError,
)
from .linalg import SingularMatrixError, exact_determinant, solve
from .matrices import (
    CannyEmirisData,
    canny_emiris_matrix,
    koszul_bilinear_matrix,
)
from .poly import PolySystem, SparsePoly
from .polytope import mixed_volume, newton_polytope
from .subdivision import DEFAULT_HEIGHT_BOUND, MAX_RETRIES, Lifting

DEFAULT_TOL = 1e-8
CLUSTER_TOL = 1e-6
F0_COEFF_BOUND = 2 ** 16
MAX_EIGEN_SIZE = 500


class ZeroMixedVolume(ToricSolveError):
    """The square system has no certified torus roots (mixed volume zero)."""


# --------------------------------------------------------------------------
# block split and Schur complement


@dataclass
class BlockSplit:
    """``M`` reordered so that the ``f_0`` rows and the ``B_0`` columns come last."""

    M11: list
    M12: list
    M21: list
    M22: list
    top_rows: list
    bottom_rows: list
    left_cols: list
    right_cols: list
    basis: list
    ce: CannyEmirisData | None = None
    _solved: list | None = field(default=None, repr=False)

    def eliminated(self):
        """``M11^{-1} M12``, computed once and shared by every multiplication matrix."""
        if self._solved is None:
            if not self.M11:
                self._solved = []
            else:
                try:
                    self._solved = solve(self.M11, self.M12)
                except SingularMatrixError:
                    raise SingularM11("the eliminated block M11 is singular") from None
        return self._solved


def split_canny_emiris(ce: CannyEmirisData) -> BlockSplit:
    """Deterministic reorder of a Canny-Emiris matrix built with ``f_0`` in slot 0."""
    M = ce.matrix
    top = [r for r, (i, _) in enumerate(M.rows) if i > 0]
    bottom = [r for r, (i, _) in enumerate(M.rows) if i == 0]
    if not bottom:
        raise ZeroMixedVolume("no row is assigned to f_0 (empty B_0)")
    right_pts = [ce.row_points[r] for r in bottom]
    col_index = {c: j for j, c in enumerate(M.cols)}
    right = [col_index[p] for p in right_pts]
    rset = set(right)
    left = [j for j in range(len(M.cols)) if j not in rset]
    return BlockSplit(
        M11=M.submatrix(top, left),
        M12=M.submatrix(top, right),
        M21=M.submatrix(bottom, left),
        M22=M.submatrix(bottom, right),
        top_rows=top,
        bottom_rows=bottom,
        left_cols=left,
        right_cols=right,
        basis=[M.rows[r][1] for r in bottom],
        ce=ce,
    )


@dataclass
class MultiplicationMatrix:
    basis: list
    entries: list
    label: str = "f0"

    @property
    def size(self):
        return len(self.basis)

    def to_numpy(self):
        return np.array([[complex(x) for x in row] for row in self.entries], dtype=complex)


def _bottom_rows_for(split: BlockSplit, g: SparsePoly):
    """Rows ``x^beta g`` for the ``f_0`` row labels, split into left and right blocks."""
    M = split.ce.matrix
    col_index = {c: j for j, c in enumerate(M.cols)}
    full = []
    for r in split.bottom_rows:
        beta = M.rows[r][1]
        row = [Fraction(0)] * len(M.cols)
        for e, c in g.items():
            alpha = tuple(a + b for a, b in zip(e, beta))
            j = col_index.get(alpha)
            if j is None:
                raise ValueError(f"{g} times x^{beta} leaves the column set")
            row[j] = Fraction(c)
        full.append(row)
    return ([[row[j] for j in split.left_cols] for row in full],
            [[row[j] for j in split.right_cols] for row in full])


def schur_multiplication_matrix(split: BlockSplit, g: SparsePoly | None = None,
                                label: str | None = None) -> MultiplicationMatrix:
    """Exact ``M22 - M21 M11^{-1} M12`` on the basis ``B_0``.

    With ``g`` given, the ``f_0`` rows are rebuilt from ``g`` (whose support
    must fit the same columns), giving the multiplication matrix of ``g``.
    """
    if g is None:
        M21, M22 = split.M21, split.M22
    else:
        M21, M22 = _bottom_rows_for(split, g)
    X = split.eliminated()
    d = len(split.basis)
    S = [row[:] for row in M22]
    if X:
        for r in range(d):
            row21 = M21[r]
            nz = [(k, v) for k, v in enumerate(row21) if v]
            for c in range(d):
                S[r][c] -= sum((v * X[k][c] for k, v in nz), Fraction(0))
    return MultiplicationMatrix(list(split.basis), S, label or ("f0" if g is None else str(g)))


# --------------------------------------------------------------------------
# eigen stage


@dataclass
class EigenResult:
    values: np.ndarray
    vectors: np.ndarray
    clusters: list
    defective: list


def _cluster(values, tol=CLUSTER_TOL):
    clusters = []
    for k, v in enumerate(values):
        for cl in clusters:
            ref = values[cl[0]]
            if abs(v - ref) <= tol * max(1.0, abs(ref)):
                cl.append(k)
                break
        else:
            clusters.append([k])
    return clusters


def eigen_decomposition(M, check_tol: float = 1e-8) -> EigenResult:
    """All eigenpairs of a dense complex matrix (LAPACK ``geev`` via NumPy).

    Eigenvalues within ``1e-6`` (relative) are clustered; a cluster whose
    eigenvectors do not span its multiplicity is flagged as defective.
    """
    A = np.asarray(M, dtype=complex)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise DimensionMismatch("eigen_decomposition needs a square matrix")
    n = A.shape[0]
    if not 1 <= n <= MAX_EIGEN_SIZE:
        raise DimensionMismatch(f"matrix size {n} outside [1, {MAX_EIGEN_SIZE}]")
    if not np.all(np.isfinite(A)):
        raise EigenConvergenceError("matrix has non-finite entries")
    try:
        values, vectors = np.linalg.eig(A)
    except np.linalg.LinAlgError as exc:
        raise EigenConvergenceError(f"eigensolver failed: {exc}") from None
    norm = max(np.linalg.norm(A, 2), 1e-300)
    bad = [k for k in range(n)
           if np.linalg.norm(A @ vectors[:, k] - values[k] * vectors[:, k]) > check_tol * norm]
    if bad:
        raise EigenConvergenceError(f"eigenpairs {bad} fail the residual check",
                                    partial=(values, vectors))
    clusters = _cluster(values)
    defective = []
    for cl in clusters:
        if len(cl) > 1:
            sv = np.linalg.svd(vectors[:, cl], compute_uv=False)
            if sv[-1] < CLUSTER_TOL * sv[0]:
                defective.append(cl)
    return EigenResult(values, vectors, clusters, defective)


# --------------------------------------------------------------------------
# solving


@dataclass
class SolutionSet:
    points: list
    residuals: list
    multiplicities: list
    mv: int | None = None
    seed: int | None = None
    rejected: list = field(default_factory=list)
    warnings: list = field(default_factory=list)
    f0: SparsePoly | None = None
    f0_values: list = field(default_factory=list)
    basis: list = field(default_factory=list)
    ce: CannyEmirisData | None = field(default=None, repr=False)

    @property
    def count(self) -> int:
        return sum(self.multiplicities)

    def to_json(self) -> dict:
        def cplx(z):
            z = complex(z)
            return {"re": z.real, "im": z.imag}

        out = {
            "points": [[cplx(z) for z in p] for p in self.points],
            "residuals": [float(r) for r in self.residuals],
            "multiplicities": list(self.multiplicities),
            "mv": self.mv,
            "seed": self.seed,
        }
        if self.rejected:
            out["rejected"] = [{"point": [cplx(z) for z in p], "residual": float(r)}
                               for p, r in self.rejected]
        if self.warnings:
            out["warnings"] = list(self.warnings)
        return out


def residual(sys, p) -> float:
    """Scale-invariant residual ``max_i |f_i(p)| / sum |c| |p^alpha|``."""
    polys = sys.polys if isinstance(sys, PolySystem) else list(sys)
    worst = 0.0
    for f in polys:
        if f.is_zero():
            raise ValueError("residual of the zero polynomial is undefined")
        num = 0j
        den = 0.0
        for e, c in f.items():
            m = complex(c)
            for x, k in zip(p, e):
                if k:
                    m *= complex(x) ** k
            num += m
            den += abs(m)
        if den == 0:
            raise ZeroDivisionError("all monomials vanish at the point")
        worst = max(worst, abs(num) / den)
    return worst


def random_linear_form(n, rng, bound=F0_COEFF_BOUND):
    def draw():
        while True:
            c = rng.randint(-bound, bound)
            if c:
                return c

    terms = {(0,) * n: draw()}
    for i in range(n):
        terms[tuple(int(j == i) for j in range(n))] = draw()
    return SparsePoly(n, terms)


def solving_lifting(supports, seed, bound=DEFAULT_HEIGHT_BOUND, scale=1):
    """Random lifting whose ``f_0`` slot puts the origin far below ``e_1..e_n``.

    With that choice every cell where ``F_0`` is a vertex uses the origin,
    so the ``f_0`` rows are plain shifts ``x^beta f_0`` with ``beta`` in ``E``.
    """
    lift = Lifting.random(supports, seed, bound)
    n = len(supports[0][0])
    spread = max(max(a[k] for a in A) - min(a[k] for a in A) for A in supports for k in range(n)) + 1
    H = scale * 4 * bound * (n * spread) ** n
    heights = {tuple(a): (0 if not any(a) else H) for a in supports[0]}
    return lift.with_support_heights(0, heights)


def _ratio_coordinates(basis, v, n):
    index = {b: k for k, b in enumerate(basis)}
    coords = []
    for i in range(n):
        best = None
        for b, k in index.items():
            up = tuple(x + int(j == i) for j, x in enumerate(b))
            if up in index and (best is None or abs(v[k]) > abs(v[best[0]])):
                best = (k, index[up])
        if best is None or abs(v[best[0]]) < 1e-14 * np.linalg.norm(v):
            return None
        coords.append(v[best[1]] / v[best[0]])
    return coords


def _schur_coordinates(S0, Sx):
    """Coordinates from a shared Schur basis: diagonals of ``Q^H M_{x_i} Q``."""
    T, Q = scipy.linalg.schur(S0, output="complex")
    return np.diag(T), [np.diag(Q.conj().T @ M @ Q) for M in Sx]


def solving_canny_emiris(fs, seed: int = 0, retries: int = MAX_RETRIES):
    """Canny-Emiris matrix for ``fs`` (``f_0`` first) on a solving lifting, and its split.

    Retries with ``seed + 1, ...`` on degenerate liftings, non-generic shifts
    and singular ``M11``.
    """
    supports = [sorted(f.support()) for f in fs]
    last = None
    for k in range(retries):
        for scale in (1, 2, 4, 8):
            lift = solving_lifting(supports, seed + k, scale=scale)
            try:
                ce = canny_emiris_matrix(fs, lifting=lift, delta_seed=seed + k)
            except (DegenerateLifting, DeltaNotGeneric) as exc:
                last = exc
                break
            if all(p == row[1] for p, row in zip(ce.row_points, ce.matrix.rows) if row[0] == 0):
                split = split_canny_emiris(ce)
                try:
                    split.eliminated()
                except SingularM11 as exc:
                    last = exc
                    break
                return ce, split
        else:
            last = DegenerateLifting("origin of f_0 never dominated the lifting")
    if isinstance(last, SingularM11):
        raise SingularM11(f"M11 singular for {retries} liftings; the system looks non-generic")
    raise last


def solve_torus(sys: PolySystem, seed: int = 0, tol: float = DEFAULT_TOL,
                retries: int = MAX_RETRIES) -> SolutionSet:
    """Roots in the torus of a square Laurent system.

    A random linear form ``f_0`` is appended in slot 0, the Canny-Emiris
    matrix is split and Schur-complemented into the multiplication matrix of
    ``f_0`` on ``B_0``, and coordinates are read off its eigenvectors.
    """
    if not sys.is_square:
        raise DimensionMismatch(f"{len(sys)} polynomials in {sys.nvars} variables is not square")
    n = sys.nvars
    polys = list(sys.polys)
    mv = mixed_volume([newton_polytope(f) for f in polys])
    if mv == 0:
        raise ZeroMixedVolume("mixed volume is zero; no torus roots are certified")
    rng = random.Random(seed)
    f0 = random_linear_form(n, rng)
    ce, split = solving_canny_emiris([f0] + polys, seed, retries)
    if len(split.basis) != mv:
        raise DegenerateLifting(f"#B_0 = {len(split.basis)} differs from the mixed volume {mv}")
    S0 = schur_multiplication_matrix(split)
    eig = eigen_decomposition(S0.to_numpy())
    xs = [schur_multiplication_matrix(split, SparsePoly.variable(n, i), f"x{i + 1}").to_numpy()
          for i in range(n)]
    warnings = []
    points, mults, fvals = [], [], []
    schur_fallback = None
    for cl in eig.clusters:
        k = cl[0]
        coords = None
        if len(cl) == 1:
            coords = _ratio_coordinates(split.basis, eig.vectors[:, k], n)
        else:
            warnings.append(f"eigenvalue {complex(eig.values[k]):.6g} has multiplicity {len(cl)}")
        if coords is None:
            if schur_fallback is None:
                schur_fallback = _schur_coordinates(S0.to_numpy(), xs)
            diag, xdiag = schur_fallback
            cands = [j for j in range(len(diag)) if abs(diag[j] - eig.values[k]) <= CLUSTER_TOL * max(1, abs(diag[j]))]
            if not cands:
                raise CoordinateRecoveryFailed("eigenvalue missing from the Schur form")
            j = cands[0]
            coords = [xd[j] for xd in xdiag]
        points.append(tuple(complex(c) for c in coords))
        mults.append(len(cl))
        fvals.append(complex(np.mean(eig.values[cl])))
    accepted, residuals, keep_mults, keep_f = [], [], [], []
    rejected = []
    for p, m, fv in zip(points, mults, fvals):
        try:
            r = residual(polys, p)
        except ZeroDivisionError:
            r = float("inf")
        if r <= tol:
            accepted.append(p)
            residuals.append(r)
            keep_mults.append(m)
            keep_f.append(fv)
        else:
            rejected.append((p, r))
    return SolutionSet(accepted, residuals, keep_mults, mv, seed, rejected, warnings, f0, keep_f,
                       list(split.basis), ce)


# --------------------------------------------------------------------------
# bilinear systems through the Koszul formula

_TOP = 4


def _koszul_schur(g, f1, f2):
    K = koszul_bilinear_matrix(g, f1, f2)
    E = K.entries
    M11 = [row[:_TOP] for row in E[:_TOP]]
    M12 = [row[_TOP:] for row in E[:_TOP]]
    M21 = [row[:_TOP] for row in E[_TOP:]]
    M22 = [row[_TOP:] for row in E[_TOP:]]
    if exact_determinant(M11) == 0:
        raise SingularM11("M11 of the Koszul matrix is singular (a root leaves the chart x0*y0 != 0)")
    X = solve(M11, M12)
    S = [[M22[r][c] - sum((M21[r][k] * X[k][c] for k in range(_TOP)), Fraction(0))
          for c in range(2)] for r in range(2)]
    return S


def solve_bilinear_koszul(f1: SparsePoly, f2: SparsePoly, seed: int = 0,
                          tol: float = DEFAULT_TOL) -> SolutionSet:
    """Both roots of two bilinear forms on P1 x P1, in the chart ``x0 = y0 = 1``.

    The Schur complement of the ``f_0`` block is the multiplication matrix of
    ``f_0 / (x0 y0)``; taking ``f_0`` as ``x1 y0``, ``x0 y1`` and a random
    combination gives ``X``, ``Y`` and a consistency check to pair them.
    """
    rng = random.Random(seed)
    g = [rng.randint(1, 97) for _ in range(3)]
    mono = {"00": (1, 0, 1, 0), "10": (0, 1, 1, 0), "01": (1, 0, 0, 1)}
    gen = SparsePoly(4, {mono["00"]: g[0], mono["10"]: g[1], mono["01"]: g[2]})
    SX = _koszul_schur(SparsePoly(4, {mono["10"]: 1}), f1, f2)
    SY = _koszul_schur(SparsePoly(4, {mono["01"]: 1}), f1, f2)
    SG = _koszul_schur(gen, f1, f2)
    ex = eigen_decomposition([[complex(x) for x in r] for r in SX]).values
    ey = eigen_decomposition([[complex(x) for x in r] for r in SY]).values
    eg = eigen_decomposition([[complex(x) for x in r] for r in SG]).values
    best = None
    for perm in itertools.permutations(range(2)):
        pred = sorted((g[0] + g[1] * ex[k] + g[2] * ey[perm[k]] for k in range(2)),
                      key=lambda z: (z.real, z.imag))
        obs = sorted(eg, key=lambda z: (z.real, z.imag))
        err = sum(abs(a - b) for a, b in zip(pred, obs))
        if best is None or err < best[0]:
            best = (err, perm)
    perm = best[1]
    warnings = []
    if best[0] > 1e-6 * max(1.0, max(abs(z) for z in eg)):
        warnings.append("pairing of X and Y eigenvalues is ambiguous")
    points = [(1 + 0j, complex(ex[k]), 1 + 0j, complex(ey[perm[k]])) for k in range(2)]
    accepted, residuals, rejected = [], [], []
    for p in points:
        r = residual([f1, f2], p)
        if r <= tol:
            accepted.append(p)
            residuals.append(r)
        else:
            rejected.append((p, r))
    return SolutionSet(accepted, residuals, [1] * len(accepted), 2, seed, rejected, warnings)


__all__ = [
    "BlockSplit",
    "MultiplicationMatrix",
    "EigenResult",
    "SolutionSet",
    "ZeroMixedVolume",
    "split_canny_emiris",
    "schur_multiplication_matrix",
    "eigen_decomposition",
    "solve_torus",
    "solve_bilinear_koszul",
    "solving_lifting",
    "solving_canny_emiris",
    "random_linear_form",
    "residual",
]
