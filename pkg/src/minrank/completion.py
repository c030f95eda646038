"""Minimal ranks and minimal-rank completions.

Staircase (block lower-triangular) patterns have a closed-form minimal rank
and a constructive completion; patterns that fit inside ``r`` rows and ``r``
columns are completed through the cross formula ``C W^-1 R``; banded
patterns get the maximum over their triangular pieces.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Optional, Tuple

from . import linalg
from .errors import (CoverFillFailed, IncompleteCoverLines, NoCover, OverlapSingular,
                     SpecifiedOutsideCover)
from .graphs import LineCover, line_cover
from .matrix import Matrix
from .pattern import (BlockPartition, PartialMatrix, Pattern, check_blocking,
                      staircase_blocking, triangular_subpatterns)


@dataclass(frozen=True)
class MinRankCertificate:
    """Rank terms whose telescoping sum is the minimal rank.

    ``forward_ranks[i]`` is the rank of block rows ``i..n`` by block columns
    ``1..i``; ``backward_ranks[i]`` drops the first of those block rows.
    ``increments[i]`` (for ``i >= 1``) is ``forward_ranks[i] -
    backward_ranks[i - 1]``, the extra rank contributed by block column ``i``.
    """

    blocking: BlockPartition
    forward_ranks: Tuple[int, ...]
    backward_ranks: Tuple[int, ...]

    @property
    def min_rank(self) -> int:
        return sum(self.forward_ranks) - sum(self.backward_ranks)

    @property
    def increments(self) -> Tuple[int, ...]:
        return tuple(a - b for a, b in zip(self.forward_ranks[1:], self.backward_ranks))

    def terms(self) -> Tuple[int, ...]:
        """First-column rank followed by the increments; these sum to min_rank."""
        return self.forward_ranks[:1] + self.increments


def staircase_certificate(PM: PartialMatrix, blocking: Optional[BlockPartition] = None) -> MinRankCertificate:
    if blocking is None:
        blocking = staircase_blocking(PM.pattern)
    else:
        check_blocking(PM.pattern, blocking)
    ro, co = blocking.row_offsets, blocking.col_offsets
    n = len(blocking.row_sizes)
    N = PM.rows
    forward = tuple(linalg.rank(PM.block(ro[i], N, 0, co[i + 1])) for i in range(n))
    backward = tuple(linalg.rank(PM.block(ro[i + 1], N, 0, co[i + 1])) for i in range(n - 1))
    return MinRankCertificate(blocking, forward, backward)


def staircase_min_rank(PM: PartialMatrix, blocking: Optional[BlockPartition] = None) -> Tuple[int, MinRankCertificate]:
    """Minimal rank of a staircase partial matrix and its certificate.

    ``blocking`` defaults to the coarsest one; any valid blocking gives the
    same value.
    """
    cert = staircase_certificate(PM, blocking)
    return cert.min_rank, cert


def _two_by_two_fill(T11: Matrix, T21: Matrix, T22: Matrix) -> Matrix:
    """Fill ``?`` in ``[[T11, ?], [T21, T22]]`` at minimal rank.

    Columns of T22 that (leftmost first) extend the span of T21 get zeros on
    top; every other column of ``[T21 T22]`` is a combination ``T21 x + T22_S y``
    and its top entry becomes ``T11 x``.
    """
    f = T11.field
    S = linalg.spanning_column_select(T21, T22)
    rest = [j for j in range(T22.cols) if j not in set(S)]
    top = [[f.zero] * T22.cols for _ in range(T11.rows)]
    if rest:
        basis = T21.hstack(T22.submatrix(range(T22.rows), S))
        X = linalg.solve_linear(basis, T22.submatrix(range(T22.rows), rest))
        coeff = X.block(0, T21.cols, 0, X.cols)
        fill = T11 @ coeff
        for k, j in enumerate(rest):
            for i in range(T11.rows):
                top[i][j] = fill[i, k]
    return Matrix(f, T11.rows, T22.cols, top)


def staircase_complete(PM: PartialMatrix) -> Matrix:
    """Completion of a staircase partial matrix with rank equal to its minimal rank.

    Block rows are folded bottom-up: with ``n`` blocks, the pair of block
    rows ``n-1, n`` against block columns ``1..n-1 | n`` is a 2x2 problem
    whose only unknown block is ``(n-1, n)``. Filling it and merging the two
    block rows and two block columns leaves a staircase with ``n-1`` blocks
    and the same minimal rank.
    """
    bp = staircase_blocking(PM.pattern)
    f = PM.field
    grid = PM.grid()
    ro, co = list(bp.row_offsets), list(bp.col_offsets)
    # ro/co hold boundaries of the current (partially merged) blocks
    while len(ro) > 2:
        n = len(ro) - 1
        top0, bot0, end = ro[n - 2], ro[n - 1], ro[n]
        left1, right0, right1 = co[n - 1], co[n - 1], co[n]

        def blk(r0, r1, c0, c1):
            return Matrix(f, r1 - r0, c1 - c0, [grid[i][c0:c1] for i in range(r0, r1)])

        T11 = blk(top0, bot0, 0, left1)
        T21 = blk(bot0, end, 0, left1)
        T22 = blk(bot0, end, right0, right1)
        top = _two_by_two_fill(T11, T21, T22)
        for a, i in enumerate(range(top0, bot0)):
            grid[i][right0:right1] = list(top.row(a))
        del ro[n - 1]
        del co[n - 1]
    return Matrix(f, PM.rows, PM.cols, grid)


# -- cross patterns and the generic rank-r completion -----------------------

def cross_complete(PM: PartialMatrix, cover: LineCover) -> Matrix:
    """Rank-``r`` completion of a fully specified ``r``-row, ``r``-column cross.

    With ``W`` the overlap of the cover rows and columns, ``C`` the cover
    columns on the other rows and ``R`` the cover rows on the other columns,
    the unknown block becomes ``C W^-1 R``.
    """
    rows = sorted(cover.cover_rows)
    cols = sorted(cover.cover_cols)
    if len(rows) != len(cols):
        raise OverlapSingular(f"overlap is {len(rows)}x{len(cols)}, not square")
    rset, cset = set(rows), set(cols)
    spec = PM.pattern.specified
    for i in range(PM.rows):
        for j in range(PM.cols):
            on_lines = i in rset or j in cset
            if on_lines and (i, j) not in spec:
                raise IncompleteCoverLines(f"cover line entry ({i + 1}, {j + 1}) is unknown")
            if not on_lines and (i, j) in spec:
                raise SpecifiedOutsideCover(f"entry ({i + 1}, {j + 1}) lies outside the cover")
    other_rows = [i for i in range(PM.rows) if i not in rset]
    other_cols = [j for j in range(PM.cols) if j not in cset]
    W = PM.restrict(rows, cols).to_matrix()
    C = PM.restrict(other_rows, cols).to_matrix()
    R = PM.restrict(rows, other_cols).to_matrix()
    if linalg.rank(W) < len(rows):
        raise OverlapSingular("the overlap of the cover rows and columns is singular")
    fill = C @ linalg.inverse(W) @ R
    values = PM.values
    for a, i in enumerate(other_rows):
        for b, j in enumerate(other_cols):
            values[(i, j)] = fill[a, b]
    return PM.fill(values)


def pad_cover(cover: LineCover, rows: int, cols: int, r: int) -> LineCover:
    """Extend a cover to exactly ``r`` rows and ``r`` columns (lowest indices first)."""
    if rows < r or cols < r:
        raise NoCover(f"a {rows}x{cols} matrix has no {r} rows and {r} columns")
    cr, cc = set(cover.cover_rows), set(cover.cover_cols)
    for i in range(rows):
        if len(cr) >= r:
            break
        cr.add(i)
    for j in range(cols):
        if len(cc) >= r:
            break
        cc.add(j)
    return LineCover(frozenset(cr), frozenset(cc))


MAX_FILL_TRIALS = 1 << 16


def fill_cover_lines(PM: PartialMatrix, cover: LineCover) -> PartialMatrix:
    """Specify every unknown on the cover lines so that the overlap is invertible.

    Unknowns outside the overlap ``W`` become 0. Unknowns inside ``W`` run
    through ``{0, 1}`` in lexicographic order (row-major unknowns, first
    most significant) until ``det W != 0``. ``det W`` is affine in each entry,
    so if some filling works, one from ``{0, 1}`` does.
    """
    f = PM.field
    rows, cols = sorted(cover.cover_rows), sorted(cover.cover_cols)
    rset, cset = set(rows), set(cols)
    values = PM.values
    inner = []
    for i in range(PM.rows):
        for j in range(PM.cols):
            if (i, j) in values or not (i in rset or j in cset):
                continue
            if i in rset and j in cset:
                inner.append((i, j))
            else:
                values[(i, j)] = f.zero
    if 2 ** len(inner) > MAX_FILL_TRIALS:
        raise CoverFillFailed(f"{len(inner)} unknowns in the overlap exceed the search cap")
    for choice in product((0, 1), repeat=len(inner)):
        for pos, v in zip(inner, choice):
            values[pos] = f(v)
        W = Matrix(f, len(rows), len(cols), [[values[(i, j)] for j in cols] for i in rows])
        if linalg.rank(W) == len(rows):
            return PartialMatrix(f, Pattern(PM.rows, PM.cols, values), values)
    raise CoverFillFailed("no filling of the cover lines makes the overlap invertible")


def generic_rank_r_complete(PM: PartialMatrix, r: int) -> Matrix:
    """Rank-``r`` completion of a pattern that fits in ``r`` rows and ``r`` columns."""
    cover = pad_cover(line_cover(PM.pattern, r), PM.rows, PM.cols, r)
    return cross_complete(fill_cover_lines(PM, cover), cover)


# -- banded patterns -------------------------------------------------------

@dataclass(frozen=True)
class BandedBound:
    value: int
    # (orientation, rows, cols, min rank) per triangular piece
    pieces: Tuple[Tuple[str, Tuple[int, ...], Tuple[int, ...], int], ...] = field(default=())


def banded_bound_report(PM: PartialMatrix) -> BandedBound:
    pieces = []
    for box in triangular_subpatterns(PM.pattern):
        sub = PM.restrict(box.rows, box.cols)
        if box.orientation == "upper":
            sub = sub.transpose()
        value, _ = staircase_min_rank(sub)
        pieces.append((box.orientation, box.rows, box.cols, value))
    return BandedBound(max((p[3] for p in pieces), default=0), tuple(pieces))


def banded_min_rank_bound(PM: PartialMatrix) -> int:
    """Largest staircase minimal rank over the triangular pieces of a band.

    Always a lower bound for the minimal rank; for banded patterns it is
    the minimal rank itself by the triangular-reduction theorem for bands.
    """
    return banded_bound_report(PM).value
