"""Rank relations between a matrix and its inverse.

Covers the lower/strictly-lower duality for block partitions, the nullity
theorem, the diagonal characterization of full minimal rank, banded
matrices and their semiseparable inverses, and the 4x4 partial matrix that
defeats the rank-2 density heuristic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from . import linalg
from .completion import MinRankCertificate, staircase_complete, staircase_min_rank
from .errors import (BadPartition, BadSplit, ConsistencyError, DegenerateField, NotHessenberg,
                     NotLowerTriangularPattern, RegionRankTooHigh)
from .field import FieldSpec, Q
from .matrix import Matrix
from .oracle import DEFAULT_MAX_ASSIGNMENTS, exhaustive_min_rank
from .pattern import BlockPartition, PartialMatrix, Pattern, block_patterns
from .poly import Poly, matmul2


@dataclass(frozen=True)
class DualityReport:
    lower_min_rank: int
    strict_lower_min_rank: int
    N: int
    lower_certificate: MinRankCertificate
    strict_lower_certificate: MinRankCertificate

    @property
    def holds(self) -> bool:
        return self.lower_min_rank + self.strict_lower_min_rank == self.N


def _check_partition(T: Matrix, bp: BlockPartition):
    if len(bp.row_sizes) != len(bp.col_sizes):
        raise BadPartition("need the same number of block rows and block columns")
    if bp.N != T.rows or bp.M != T.cols:
        raise BadPartition(f"block sizes sum to {bp.N}x{bp.M}, matrix is {T.rows}x{T.cols}")


def verify_duality(T: Matrix, bp: BlockPartition) -> DualityReport:
    """Minimal ranks of the block lower part of ``T`` and strictly lower part of ``T^-1``.

    ``bp`` partitions ``T`` (rows by ``row_sizes``, columns by ``col_sizes``);
    the inverse is partitioned the transposed way. The two minimal ranks of
    an invertible ``T`` always sum to its size.
    """
    _check_partition(T, bp)
    if not T.is_square():
        raise BadPartition("matrix must be square")
    S = linalg.inverse(T)
    lower, _ = block_patterns(bp)
    nu, mu = bp.row_sizes, bp.col_sizes
    # strictly lower blocks of S (mu x nu blocks) are the block lower part of
    # the partition shifted by one: rows (mu..., 0), columns (0, nu...)
    shifted = BlockPartition(mu + (0,), (0,) + nu)
    strict = block_patterns(shifted)[0]
    lo, lo_cert = staircase_min_rank(PartialMatrix.from_matrix(T, lower), bp)
    st, st_cert = staircase_min_rank(PartialMatrix.from_matrix(S, strict), shifted)
    return DualityReport(lo, st, T.rows, lo_cert, st_cert)


def _split(T: Matrix, row_split: int, col_split: int):
    if not T.is_square():
        raise BadSplit("matrix must be square")
    if not (0 <= row_split <= T.rows and 0 <= col_split <= T.cols):
        raise BadSplit(f"split ({row_split}, {col_split}) outside 0..{T.rows}")
    S = linalg.inverse(T)
    N = T.rows
    A = T.block(0, row_split, 0, col_split)
    C = T.block(row_split, N, 0, col_split)
    R = S.block(col_split, N, 0, row_split)
    return A, C, R


def nullity_check(T: Matrix, row_split: int, col_split: int) -> Tuple[int, int]:
    """``(dim ker C, dim ker R)`` for the lower-left blocks of ``T`` and ``T^-1``.

    ``T = [[A, B], [C, D]]`` with ``A`` of size ``row_split x col_split`` and
    ``T^-1 = [[P, Q], [R, S]]`` partitioned conformally (``P`` is
    ``col_split x row_split``).
    """
    _, C, R = _split(T, row_split, col_split)
    return linalg.kernel_dim(C), linalg.kernel_dim(R)


def kernel_map_check(T: Matrix, row_split: int, col_split: int) -> bool:
    """Check that ``A`` maps ``ker C`` onto ``ker R``.

    Every image ``A k`` of a kernel basis vector of ``C`` must lie in
    ``ker R`` and together they must span it.
    """
    A, C, R = _split(T, row_split, col_split)
    image = A @ linalg.kernel_basis(C)
    if not (R @ image).is_zero():
        return False
    return linalg.rank(image) == linalg.kernel_dim(R)


def _is_lower_pattern(PM: PartialMatrix) -> bool:
    return PM.rows == PM.cols and PM.pattern == Pattern.lower_triangular(PM.rows)


def prop4_structural(PM: PartialMatrix) -> bool:
    n = PM.rows
    return (all(PM[i, i] != 0 for i in range(n))
            and all(PM[i, j] == 0 for i in range(n) for j in range(i)))


def prop4_check(PM: PartialMatrix) -> bool:
    """Whether a scalar lower-triangular partial matrix has minimal rank ``n``.

    Returns the structural answer (nonzero diagonal, zero below it) after
    confirming it against the minimal rank formula.
    """
    if not _is_lower_pattern(PM):
        raise NotLowerTriangularPattern("pattern must be {(i, j) : j <= i} on a square matrix")
    structural = prop4_structural(PM)
    by_formula = staircase_min_rank(PM)[0] == PM.rows
    if structural != by_formula:
        raise ConsistencyError(f"structural predicate {structural} but formula says {by_formula}")
    return structural


def asplund_check(A: Matrix, p: int) -> bool:
    """Zero above the ``p``-th superdiagonal and nonzero on it."""
    if not A.is_square():
        raise BadPartition("matrix must be square")
    n = A.rows
    for i in range(n):
        for j in range(n):
            if j > i + p and A[i, j] != 0:
                return False
            if j == i + p and A[i, j] == 0:
                return False
    return True


def asplund_region(n: int, p: int) -> Pattern:
    """``{(i, j) : i < j + p}``: on and above the ``(p-1)``-th subdiagonal."""
    return Pattern(n, n, ((i, j) for i in range(n) for j in range(n) if i < j + p))


@dataclass(frozen=True)
class Generators:
    F: Matrix
    G: Matrix
    region: Pattern

    def agrees_on_region(self, target: Matrix) -> bool:
        prod = self.F @ self.G
        return all(prod[i, j] == target[i, j] for i, j in self.region.specified)


def asplund_generators(B: Matrix, p: int) -> Generators:
    """``F`` (N x p) and ``G`` (p x N) with ``(F G)_ij = b_ij`` whenever ``i < j + p``.

    The region is upper-right closed, so its transpose is a staircase and
    can be completed at minimal rank; that completion is then factored and
    padded with zero columns/rows to exactly ``p``.
    """
    if not B.is_square():
        raise BadPartition("matrix must be square")
    n = B.rows
    region = asplund_region(n, p)
    PM = PartialMatrix.from_matrix(B, region)
    low, _ = staircase_min_rank(PM.transpose())
    if low > p:
        raise RegionRankTooHigh(f"region {{i < j + {p}}} has minimal rank {low} > {p}")
    full = staircase_complete(PM.transpose()).T
    F, G = linalg.factor_rank(full)
    pad = p - F.cols
    if pad > 0:
        F = F.hstack(Matrix.zeros(B.field, n, pad))
        G = G.vstack(Matrix.zeros(B.field, pad, n))
    return Generators(F, G, region)


def is_upper_hessenberg(T: Matrix) -> bool:
    """Zero below the subdiagonal, nonzero on it."""
    n = T.rows
    return (T.is_square()
            and all(T[i, j] == 0 for i in range(n) for j in range(n) if i > j + 1)
            and all(T[i + 1, i] != 0 for i in range(n - 1)))


def hessenberg_semiseparable(T: Matrix) -> Tuple[List, List]:
    """``u, v`` with ``(T^-1)_ij = u_i v_j`` for ``i >= j``.

    ``T`` must be upper Hessenberg with a nonzero subdiagonal. The scaling
    freedom is fixed by making the first nonzero entry of ``v`` equal to 1.
    """
    if not is_upper_hessenberg(T):
        raise NotHessenberg("need zeros below the subdiagonal and a nonzero subdiagonal")
    f = T.field
    S = linalg.inverse(T)
    n = T.rows
    PM = PartialMatrix.from_matrix(S, Pattern.lower_triangular(n))
    rank, _ = staircase_min_rank(PM)
    if rank > 1:
        raise ConsistencyError(f"lower part of the inverse has minimal rank {rank}")
    if rank == 0:
        return [f.zero] * n, [f.zero] * n
    F, G = linalg.factor_rank(staircase_complete(PM))
    u, v = list(F.col(0)), list(G.row(0))
    k = next(j for j, x in enumerate(v) if x != 0)
    scale = v[k]
    inv = f.inv(scale)
    return [f.mul(x, scale) for x in u], [f.mul(x, inv) for x in v]


# -- the rank-2 counterexample -----------------------------------------------

COUNTEREXAMPLE_GRID = [
    [6, 3, None, 1],
    [3, 1, 1, None],
    [None, 1, 2, 3],
    [1, None, 1, 1],
]
COUNTEREXAMPLE_UNKNOWNS = ("x", "y", "z", "w")
# differences that must be nonzero: 9-6, 6-1, 3-1, 9-1, 10-8
_NONDEGENERACY = (("6", "9"), ("6", "1"), ("3", "1"), ("9", "1"), ("8", "10"))


def counterexample_matrix(field: FieldSpec = Q) -> PartialMatrix:
    return PartialMatrix.from_grid(COUNTEREXAMPLE_GRID, field)


@dataclass(frozen=True)
class CounterexampleReport:
    field: FieldSpec
    pivot_determinant: Poly
    residuals: Tuple[Poly, Poly]
    inconsistency_gap: object
    oracle_min_rank: Optional[int]

    @property
    def rank2_infeasible(self) -> bool:
        return self.inconsistency_gap != 0


def counterexample_report(field: FieldSpec = Q, max_assignments: int = DEFAULT_MAX_ASSIGNMENTS) -> CounterexampleReport:
    """Derive the two incompatible rank-2 conditions for the 4x4 example.

    If the example had rank 2, the invertible lower-right block
    ``W = [[2, 3], [1, 1]]`` would force ``[[z, 1], [1, w]] = W X^-1 [[6, 3], [3, 1]]``
    with ``X = [[x, 1], [1, y]]``. Clearing the denominator ``xy - 1`` via
    the adjugate, the two off-diagonal entries give polynomials in ``x, y``
    that differ by a nonzero constant.
    """
    for a, b in _NONDEGENERACY:
        if field(a) == field(b):
            raise DegenerateField(f"{a} = {b} in {field}: the example's hypotheses fail")
    nv = 2
    x, y = Poly.var(field, nv, 0), Poly.var(field, nv, 1)

    def c(v):
        return Poly.const(field, nv, v)

    top_left = [[c(6), c(3)], [c(3), c(1)]]
    W = [[c(2), c(3)], [c(1), c(1)]]
    X = [[x, c(1)], [c(1), y]]
    det_x = X[0][0] * X[1][1] - X[0][1] * X[1][0]
    adj_x = [[X[1][1], -X[0][1]], [-X[1][0], X[0][0]]]
    # (xy - 1) * [[z, 1], [1, w]] - W adj(X) top_left = 0; z and w only sit on the diagonal
    rhs = matmul2(matmul2(W, adj_x), top_left)
    residual_12 = det_x * c(1) - rhs[0][1]
    residual_21 = det_x * c(1) - rhs[1][0]
    gap_poly = residual_12 - residual_21
    if not gap_poly.is_constant():
        raise ConsistencyError("off-diagonal residuals differ by a non-constant")
    gap = gap_poly.constant()
    oracle = None
    if field.is_finite and field.modulus ** 4 <= max_assignments:
        oracle = exhaustive_min_rank(counterexample_matrix(field), max_assignments)
    return CounterexampleReport(field, det_x, (residual_12, residual_21), gap, oracle)
