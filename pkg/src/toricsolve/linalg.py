"""Exact rational linear algebra kernels.

Matrices are plain lists of rows holding :class:`~fractions.Fraction` (or int)
entries. Determinants always go through fraction-free Bareiss elimination.
Linear solves use python-flint when it is importable and fall back to a
pure-Python Gauss-Jordan otherwise; both return ``Fraction`` matrices.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

try:  # optional accelerator
    import flint
except ImportError:  # pragma: no cover - exercised only without flint
    flint = None

USE_FLINT = flint is not None


class SingularMatrixError(ZeroDivisionError):
    pass


def _shape(M):
    rows = len(M)
    cols = len(M[0]) if rows else 0
    for r in M:
        if len(r) != cols:
            raise ValueError("ragged matrix")
    return rows, cols


def to_fractions(M):
    return [[Fraction(x) for x in row] for row in M]


def _integer_rows(M):
    """Scale each row to integers; returns (rows, product of scale factors)."""
    out = []
    scale = 1
    for row in M:
        row = [Fraction(x) for x in row]
        d = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * d) for x in row])
        scale *= d
    return out, scale


def exact_determinant(M) -> Fraction:
    """Determinant by fraction-free (Bareiss) elimination.

    Rational rows are first cleared of denominators; the integer Bareiss
    recurrence keeps every intermediate entry an exact minor.
    """
    n, m = _shape(M)
    if n != m:
        raise ValueError(f"determinant of a non-square {n}x{m} matrix")
    if n == 0:
        return Fraction(1)
    A, scale = _integer_rows(M)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for r in range(k + 1, n):
                if A[r][k] != 0:
                    A[k], A[r] = A[r], A[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        akk = A[k][k]
        rowk = A[k]
        for i in range(k + 1, n):
            rowi = A[i]
            aik = rowi[k]
            for j in range(k + 1, n):
                rowi[j] = (rowi[j] * akk - aik * rowk[j]) // prev
            rowi[k] = 0
        prev = akk
    return Fraction(sign * A[n - 1][n - 1], scale)


def rank(M) -> int:
    if not M:
        return 0
    if USE_FLINT:
        return _to_flint(M).rank()
    return len(_echelon(to_fractions(M))[1])


def _echelon(A):
    """In-place reduced row echelon form; returns (A, pivot columns)."""
    rows, cols = len(A), len(A[0]) if A else 0
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        pivot_row = A[r]
        for i in range(rows):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], pivot_row)]
        pivots.append(c)
        r += 1
    return A, pivots


def rref(M):
    """Reduced row echelon form over the rationals and its pivot columns."""
    if USE_FLINT and M and M[0]:
        R, rk = _to_flint(M).rref()
        R = _from_flint(R)
        pivots = []
        for row in R[:rk]:
            pivots.append(next(j for j, x in enumerate(row) if x))
        return R, pivots
    return _echelon(to_fractions(M))


def _to_flint(M):
    rows, cols = _shape(M)
    flat = []
    for row in M:
        for x in row:
            x = Fraction(x)
            flat.append(flint.fmpq(x.numerator, x.denominator))
    return flint.fmpq_mat(rows, cols, flat)


def _from_flint(F):
    return [
        [Fraction(int(F[i, j].p), int(F[i, j].q)) for j in range(F.ncols())]
        for i in range(F.nrows())
    ]


def solve(A, B):
    """Solve ``A X = B`` exactly for square nonsingular ``A``.

    Raises :class:`SingularMatrixError` when ``A`` is singular.
    """
    n, m = _shape(A)
    if n != m:
        raise ValueError("solve needs a square matrix")
    if len(B) != n:
        raise ValueError("right-hand side has the wrong number of rows")
    k = len(B[0]) if n else 0
    if n == 0:
        return []
    if USE_FLINT:
        try:
            return _from_flint(_to_flint(A).solve(_to_flint(B)))
        except ZeroDivisionError:
            raise SingularMatrixError("singular matrix") from None
    aug = [list(map(Fraction, ra)) + list(map(Fraction, rb)) for ra, rb in zip(A, B)]
    aug, piv = _echelon(aug)
    if len(piv) < n or piv[n - 1] != n - 1:
        raise SingularMatrixError("singular matrix")
    return [row[n:n + k] for row in aug]


def inverse(A):
    n = len(A)
    eye = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    return solve(A, eye)


def matmul(A, B):
    if not A or not B:
        return [[] for _ in A]
    cols = list(zip(*B))
    return [[sum((a * b for a, b in zip(row, col) if a and b), Fraction(0)) for col in cols] for row in A]


def matsub(A, B):
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def identity(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def to_text(M, width=None) -> str:
    """Plain text grid, one row per line, columns right-aligned."""
    cells = [[str(Fraction(x)) for x in row] for row in M]
    if width is None:
        width = max((len(c) for row in cells for c in row), default=1)
    return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)
