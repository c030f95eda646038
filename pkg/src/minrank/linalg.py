"""Exact dense linear algebra over Q and GF(p).

Everything here is Gauss-Jordan elimination with the pivot taken as the
first nonzero entry of the current column (top to bottom, columns left to
right), so outputs are deterministic. Rank over GF(p) is delegated to the
compiled kernel when it is available.
"""

from __future__ import annotations

from typing import List, Tuple

from . import kernels
from .errors import DimensionMismatch, Inconsistent, Singular
from .matrix import Matrix


def rref(M: Matrix) -> Tuple[List[list], List[int]]:
    """Reduced row echelon form of ``M``.

    Returns the reduced rows (as lists, zero rows at the bottom) and the
    list of pivot columns.
    """
    f = M.field
    rows = M.tolist()
    pivots: List[int] = []
    r = 0
    nrows = M.rows
    for c in range(M.cols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        inv = f.inv(prow[c])
        if prow[c] != 1:
            prow = rows[r] = [f.mul(inv, x) for x in prow]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [f.sub(a, f.mul(factor, b)) for a, b in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return rows, pivots


def _flat(M: Matrix) -> list:
    return [x for row in M for x in row]


def rank(M: Matrix) -> int:
    """Dimension of the column space of ``M``; 0 for empty shapes."""
    if M.rows == 0 or M.cols == 0:
        return 0
    p = M.field.modulus
    if p is not None and p < kernels.MAX_KERNEL_MODULUS:
        return kernels.rank_mod_p(_flat(M), M.rows, M.cols, p)
    return len(rref(M)[1])


def kernel_dim(M: Matrix) -> int:
    return M.cols - rank(M)


def kernel_basis(M: Matrix) -> Matrix:
    """Columns form a basis of ``{x : M x = 0}`` (shape ``cols x nullity``)."""
    f = M.field
    R, pivots = rref(M)
    free = [j for j in range(M.cols) if j not in set(pivots)]
    basis = []
    for fc in free:
        v = [f.zero] * M.cols
        v[fc] = f.one
        for r, pc in enumerate(pivots):
            v[pc] = f.neg(R[r][fc])
        basis.append(v)
    return Matrix._raw(f, M.cols, len(free),
                       tuple(tuple(b[i] for b in basis) for i in range(M.cols)))


def det(M: Matrix) -> object:
    if not M.is_square():
        raise DimensionMismatch("determinant of a non-square matrix")
    f = M.field
    rows = M.tolist()
    n = M.rows
    d = f.one
    for c in range(n):
        piv = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if piv is None:
            return f.zero
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            d = f.neg(d)
        d = f.mul(d, rows[c][c])
        inv = f.inv(rows[c][c])
        for i in range(c + 1, n):
            if rows[i][c] != 0:
                factor = f.mul(rows[i][c], inv)
                rows[i] = [f.sub(a, f.mul(factor, b)) for a, b in zip(rows[i], rows[c])]
    return d


def inverse(M: Matrix) -> Matrix:
    if not M.is_square():
        raise DimensionMismatch(f"inverse of a non-square {M.rows}x{M.cols} matrix")
    n = M.rows
    aug = M.hstack(Matrix.identity(M.field, n))
    R, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise Singular(f"matrix has rank {sum(1 for p in pivots if p < n)} < {n}")
    return Matrix._raw(M.field, n, n, tuple(tuple(row[n:]) for row in R))


def is_invertible(M: Matrix) -> bool:
    return M.is_square() and rank(M) == M.rows


def solve_linear(A: Matrix, B: Matrix) -> Matrix:
    """Solve ``A X = B`` exactly.

    Non-pivot coordinates of each solution column are zero. Raises
    :class:`Inconsistent` when a column of ``B`` is outside ``colspace(A)``.
    """
    if A.rows != B.rows:
        raise DimensionMismatch(f"A has {A.rows} rows but B has {B.rows}")
    f = A.field
    R, pivots = rref(A.hstack(B))
    if pivots and pivots[-1] >= A.cols:
        bad = pivots[-1] - A.cols
        raise Inconsistent(f"column {bad + 1} of the right-hand side is outside the column space")
    X = [[f.zero] * B.cols for _ in range(A.cols)]
    for r, pc in enumerate(pivots):
        X[pc] = list(R[r][A.cols:])
    return Matrix._raw(f, A.cols, B.cols, tuple(tuple(x) for x in X))


def spanning_column_select(A: Matrix, B: Matrix) -> List[int]:
    """Leftmost minimal set of columns of ``B`` completing ``colspace(A)``.

    The returned indices ``S`` satisfy
    ``colspace([A, B[:, S]]) == colspace([A, B])`` with
    ``len(S) == rank([A B]) - rank(A)``.
    """
    if A.rows != B.rows:
        raise DimensionMismatch(f"A has {A.rows} rows but B has {B.rows}")
    _, pivots = rref(A.hstack(B))
    return [c - A.cols for c in pivots if c >= A.cols]


def factor_rank(M: Matrix) -> Tuple[Matrix, Matrix]:
    """Rank factorization ``M = F @ G`` with ``F`` having ``rank(M)`` columns.

    ``F`` is the pivot columns of ``M`` and ``G`` the nonzero rows of its RREF.
    """
    R, pivots = rref(M)
    k = len(pivots)
    F = M.submatrix(range(M.rows), pivots)
    G = Matrix._raw(M.field, k, M.cols, tuple(tuple(R[i]) for i in range(k)))
    return F, G

