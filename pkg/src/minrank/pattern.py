"""Patterns of specified entries and partial matrices.

Positions are 0-based ``(row, col)`` pairs everywhere in the library; only
user-facing reports (the CLI) print them 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, accumulate
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

from . import linalg
from .errors import BadPartition, DimensionMismatch, NotBanded, NotStaircase, TooLarge
from .field import FieldSpec, Q
from .matrix import Matrix

Position = Tuple[int, int]


@dataclass(frozen=True)
class Pattern:
    rows: int
    cols: int
    specified: FrozenSet[Position]

    def __init__(self, rows: int, cols: int, specified: Iterable[Position] = ()):
        spec = frozenset((int(i), int(j)) for i, j in specified)
        for i, j in spec:
            if not (0 <= i < rows and 0 <= j < cols):
                raise DimensionMismatch(f"position ({i}, {j}) outside {rows}x{cols}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "specified", spec)

    @classmethod
    def full(cls, rows: int, cols: int) -> "Pattern":
        return cls(rows, cols, ((i, j) for i in range(rows) for j in range(cols)))

    @classmethod
    def lower_triangular(cls, n: int) -> "Pattern":
        return cls(n, n, ((i, j) for i in range(n) for j in range(i + 1)))

    @classmethod
    def strictly_lower(cls, n: int) -> "Pattern":
        return cls(n, n, ((i, j) for i in range(n) for j in range(i)))

    @classmethod
    def banded(cls, rows: int, cols: int, q_low: int, q_up: int) -> "Pattern":
        """``{(i, j) : -q_low <= j - i <= q_up}`` clipped to the rectangle."""
        return cls(rows, cols, ((i, j) for i in range(rows) for j in range(cols)
                                if -q_low <= j - i <= q_up))

    def __len__(self):
        return len(self.specified)

    def __contains__(self, pos):
        return pos in self.specified

    def sorted(self) -> List[Position]:
        return sorted(self.specified)

    @property
    def unspecified(self) -> List[Position]:
        return [(i, j) for i in range(self.rows) for j in range(self.cols)
                if (i, j) not in self.specified]

    def transpose(self) -> "Pattern":
        return Pattern(self.cols, self.rows, ((j, i) for i, j in self.specified))

    def row_cols(self, i: int) -> List[int]:
        return sorted(j for (a, j) in self.specified if a == i)

    def restrict(self, rows: Sequence[int], cols: Sequence[int]) -> "Pattern":
        """Subpattern on the given rows/cols, reindexed from 0."""
        ri = {r: k for k, r in enumerate(rows)}
        ci = {c: k for k, c in enumerate(cols)}
        return Pattern(len(rows), len(cols),
                       ((ri[i], ci[j]) for i, j in self.specified if i in ri and j in ci))

    def is_subpattern_of(self, other: "Pattern") -> bool:
        return (self.rows, self.cols) == (other.rows, other.cols) and self.specified <= other.specified

    def count_in(self, rows: Iterable[int], cols: Iterable[int]) -> int:
        cols = set(cols)
        return sum(1 for i in rows for j in cols if (i, j) in self.specified)


class PartialMatrix:
    """A matrix with some entries known (``values``) and the rest unknown."""

    __slots__ = ("field", "pattern", "_values")

    def __init__(self, field: FieldSpec, pattern: Pattern, values: Mapping[Position, object]):
        if set(values) != set(pattern.specified):
            raise DimensionMismatch("values must be given exactly on the specified positions")
        self.field = field
        self.pattern = pattern
        self._values = {pos: field(v) for pos, v in values.items()}

    @classmethod
    def from_grid(cls, grid: Sequence[Sequence], field: FieldSpec = Q, cols: Optional[int] = None) -> "PartialMatrix":
        """Build from nested rows where ``None`` (or ``"?"``) marks an unknown."""
        rows = len(grid)
        if cols is None:
            cols = len(grid[0]) if rows else 0
        values = {}
        for i, row in enumerate(grid):
            if len(row) != cols:
                raise DimensionMismatch(f"row {i} has {len(row)} entries, expected {cols}")
            for j, x in enumerate(row):
                if x is not None and x != "?":
                    values[(i, j)] = x
        return cls(field, Pattern(rows, cols, values), values)

    @classmethod
    def from_matrix(cls, M: Matrix, pattern: Optional[Pattern] = None) -> "PartialMatrix":
        if pattern is None:
            pattern = Pattern.full(M.rows, M.cols)
        if (pattern.rows, pattern.cols) != M.shape:
            raise DimensionMismatch("pattern and matrix shapes differ")
        return cls(M.field, pattern, {(i, j): M[i, j] for i, j in pattern.specified})

    @property
    def rows(self) -> int:
        return self.pattern.rows

    @property
    def cols(self) -> int:
        return self.pattern.cols

    @property
    def values(self) -> Dict[Position, object]:
        return dict(self._values)

    def __getitem__(self, pos):
        return self._values.get(tuple(pos))

    def __eq__(self, other):
        if not isinstance(other, PartialMatrix):
            return NotImplemented
        return (self.field == other.field and self.pattern == other.pattern
                and self._values == other._values)

    def __hash__(self):
        return hash((self.field, self.pattern, frozenset(self._values.items())))

    def __repr__(self):
        return f"PartialMatrix[{self.field}, {self.rows}x{self.cols}]({self.grid()})"

    @property
    def unknowns(self) -> List[Position]:
        return self.pattern.unspecified

    def is_complete(self) -> bool:
        return len(self.pattern) == self.rows * self.cols

    def grid(self) -> List[list]:
        return [[self._values.get((i, j)) for j in range(self.cols)] for i in range(self.rows)]

    def fill(self, assignment: Mapping[Position, object]) -> Matrix:
        """Full matrix with unknowns taken from ``assignment``."""
        data = []
        for i in range(self.rows):
            row = []
            for j in range(self.cols):
                if (i, j) in self._values:
                    row.append(self._values[(i, j)])
                else:
                    row.append(assignment[(i, j)])
            data.append(row)
        return Matrix(self.field, self.rows, self.cols, data)

    def to_matrix(self) -> Matrix:
        if not self.is_complete():
            raise DimensionMismatch("partial matrix has unknown entries")
        return self.fill({})

    def block(self, r0: int, r1: int, c0: int, c1: int) -> Matrix:
        """A fully specified contiguous block as a Matrix."""
        f = self.field
        data = []
        for i in range(r0, r1):
            row = []
            for j in range(c0, c1):
                v = self._values.get((i, j))
                if v is None:
                    raise DimensionMismatch(f"block contains unknown entry ({i}, {j})")
                row.append(v)
            data.append(tuple(row))
        return Matrix._raw(f, r1 - r0, c1 - c0, tuple(data))

    def restrict(self, rows: Sequence[int], cols: Sequence[int]) -> "PartialMatrix":
        pat = self.pattern.restrict(rows, cols)
        vals = {(a, b): self._values[(i, j)]
                for a, i in enumerate(rows) for b, j in enumerate(cols) if (i, j) in self._values}
        return PartialMatrix(self.field, pat, vals)

    def transpose(self) -> "PartialMatrix":
        return PartialMatrix(self.field, self.pattern.transpose(),
                             {(j, i): v for (i, j), v in self._values.items()})

    def agrees_with(self, M: Matrix) -> bool:
        return (M.shape == (self.rows, self.cols) and M.field == self.field
                and all(M[i, j] == v for (i, j), v in self._values.items()))

    def drop(self, pos: Position) -> "PartialMatrix":
        """Copy with one specified entry turned into an unknown."""
        vals = self.values
        del vals[pos]
        return PartialMatrix(self.field, Pattern(self.rows, self.cols, vals), vals)


@dataclass(frozen=True)
class BlockPartition:
    row_sizes: Tuple[int, ...]
    col_sizes: Tuple[int, ...]

    def __init__(self, row_sizes: Sequence[int], col_sizes: Sequence[int]):
        row_sizes, col_sizes = tuple(int(x) for x in row_sizes), tuple(int(x) for x in col_sizes)
        if any(x < 0 for x in row_sizes + col_sizes):
            raise BadPartition("block sizes must be nonnegative")
        object.__setattr__(self, "row_sizes", row_sizes)
        object.__setattr__(self, "col_sizes", col_sizes)

    @property
    def N(self) -> int:
        return sum(self.row_sizes)

    @property
    def M(self) -> int:
        return sum(self.col_sizes)

    @property
    def row_offsets(self) -> Tuple[int, ...]:
        """``n + 1`` cumulative offsets starting at 0."""
        return (0,) + tuple(accumulate(self.row_sizes))

    @property
    def col_offsets(self) -> Tuple[int, ...]:
        return (0,) + tuple(accumulate(self.col_sizes))

    def row_block_of(self) -> List[int]:
        return [b for b, s in enumerate(self.row_sizes) for _ in range(s)]

    def col_block_of(self) -> List[int]:
        return [b for b, s in enumerate(self.col_sizes) for _ in range(s)]

    def transpose(self) -> "BlockPartition":
        return BlockPartition(self.col_sizes, self.row_sizes)


def block_patterns(bp: BlockPartition) -> Tuple[Pattern, Pattern]:
    """Scalar patterns of the block lower (j <= i) and strictly lower (j < i) parts."""
    rb, cb = bp.row_block_of(), bp.col_block_of()
    lower = Pattern(bp.N, bp.M, ((i, j) for i in range(bp.N) for j in range(bp.M) if cb[j] <= rb[i]))
    strict = Pattern(bp.N, bp.M, ((i, j) for i in range(bp.N) for j in range(bp.M) if cb[j] < rb[i]))
    return lower, strict


def staircase_profile(P: Pattern) -> List[int]:
    """Number of specified entries in each row, if ``P`` is lower-left closed.

    Lower-left closed means ``(i, j)`` specified implies every ``(i', j')``
    with ``i' >= i`` and ``j' <= j`` specified; equivalently, each row is a
    prefix and the prefix lengths never decrease going down.
    """
    lengths = []
    for i in range(P.rows):
        cols = P.row_cols(i)
        if cols != list(range(len(cols))):
            raise NotStaircase(f"row {i + 1} is not a prefix of the columns")
        if lengths and len(cols) < lengths[-1]:
            raise NotStaircase(f"row {i + 1} is shorter than the row above it")
        lengths.append(len(cols))
    return lengths


def is_staircase(P: Pattern) -> bool:
    try:
        staircase_profile(P)
    except NotStaircase:
        return False
    return True


def staircase_blocking(P: Pattern) -> BlockPartition:
    """Coarsest partition making ``P`` exactly ``{block (i, j) : j <= i}``.

    Rows with equal prefix length share a block row. Zero-size blocks appear
    when some rows have no specified entries (leading column block of width
    zero) or no row is fully specified (trailing row block of height zero).
    """
    lengths = staircase_profile(P)
    bounds: List[int] = []
    row_sizes: List[int] = []
    for c in lengths:
        if bounds and bounds[-1] == c:
            row_sizes[-1] += 1
        else:
            bounds.append(c)
            row_sizes.append(1)
    if not bounds or bounds[-1] < P.cols:
        bounds.append(P.cols)
        row_sizes.append(0)
    col_sizes = [b - a for a, b in zip([0] + bounds[:-1], bounds)]
    return BlockPartition(row_sizes, col_sizes)


def check_blocking(P: Pattern, bp: BlockPartition) -> None:
    """Raise unless ``bp`` realizes ``P`` as a block lower-triangular pattern."""
    if len(bp.row_sizes) != len(bp.col_sizes):
        raise BadPartition("staircase blockings need as many block rows as block columns")
    if (bp.N, bp.M) != (P.rows, P.cols):
        raise BadPartition(f"partition is {bp.N}x{bp.M}, pattern is {P.rows}x{P.cols}")
    if block_patterns(bp)[0] != P:
        raise NotStaircase("pattern is not the block lower-triangular pattern of this partition")


# -- banded patterns -------------------------------------------------------

def band_offsets(P: Pattern) -> Tuple[int, int]:
    """``(q_low, q_up)`` with ``P == Pattern.banded(rows, cols, q_low, q_up)``.

    Raises :class:`NotBanded` for patterns that are not a full diagonal band.
    An empty pattern is reported as ``(0, -1)`` (the empty band).
    """
    if not P.specified:
        return 0, -1
    diffs = [j - i for i, j in P.specified]
    q_low, q_up = -min(diffs), max(diffs)
    if Pattern.banded(P.rows, P.cols, q_low, q_up) != P:
        raise NotBanded(f"pattern is not the full band {-q_low} <= j - i <= {q_up}")
    return q_low, q_up


def is_banded(P: Pattern) -> bool:
    try:
        band_offsets(P)
    except NotBanded:
        return False
    return True


@dataclass(frozen=True)
class TriangularBox:
    """A rectangle of a banded pattern on which the pattern is a staircase.

    ``orientation`` is ``"lower"`` (lower-left closed inside the box) or
    ``"upper"`` (upper-right closed).
    """

    orientation: str
    rows: Tuple[int, ...]
    cols: Tuple[int, ...]


def triangular_subpatterns(P: Pattern) -> List[TriangularBox]:
    """Maximal lower- and upper-staircase rectangles of a banded pattern.

    For the band ``-q_low <= j - i <= q_up``, a rectangle is lower-left closed
    exactly when its bottom-left corner lies on or above the lower band edge;
    maximal ones run from row 0 down to some row ``i1`` and from column
    ``max(0, i1 - q_low)`` to the last column. Upper boxes are the mirror
    image, bounded by the upper band edge.
    """
    q_low, q_up = band_offsets(P)
    boxes = []
    for i1 in range(P.rows):
        j0 = max(0, i1 - q_low)
        if j0 < P.cols:
            boxes.append(TriangularBox("lower", tuple(range(i1 + 1)), tuple(range(j0, P.cols))))
    for i0 in range(P.rows):
        j1 = min(P.cols - 1, i0 + q_up)
        if j1 >= 0:
            boxes.append(TriangularBox("upper", tuple(range(i0, P.rows)), tuple(range(j1 + 1))))
    return boxes


# -- generic minimal rank hypotheses --------------------------------------

@dataclass(frozen=True)
class CheckResult:
    """Outcome of a combinatorial check; ``rows``/``cols`` hold a 0-based witness."""

    passed: bool
    rows: Tuple[int, ...] = ()
    cols: Tuple[int, ...] = ()
    detail: str = ""

    def __bool__(self):
        return self.passed


def _cap(rows: int, cols: int, size_cap: int):
    if rows > size_cap or cols > size_cap:
        raise TooLarge(f"{rows}x{cols} exceeds the enumeration cap {size_cap}")


def density_bound(k: int, r: int) -> int:
    return (2 * k - r) * r


def density_check(P: Pattern, r: int, size_cap: int = 10) -> CheckResult:
    """Every ``k x k`` submatrix (``k >= r``) has at most ``(2k - r) r`` entries.

    Sizes ``k < r`` are exempt: any ``k x k`` block may then be fully
    specified without forcing rank above ``r``. Row subsets are scanned in
    increasing ``k`` and lexicographic order; for a row subset the largest
    possible count is the sum of the ``k`` largest column counts, and the
    witness column subset is the lexicographically first violating one.
    """
    _cap(P.rows, P.cols, size_cap)
    by_row = [set(P.row_cols(i)) for i in range(P.rows)]
    for k in range(max(r, 1), min(P.rows, P.cols) + 1):
        bound = density_bound(k, r)
        if k * k <= bound:
            continue
        for rs in combinations(range(P.rows), k):
            counts = [sum(1 for i in rs if j in by_row[i]) for j in range(P.cols)]
            if sum(sorted(counts, reverse=True)[:k]) <= bound:
                continue
            for cs in combinations(range(P.cols), k):
                total = sum(counts[j] for j in cs)
                if total > bound:
                    return CheckResult(False, rs, cs, f"{total} specified > (2*{k}-{r})*{r} = {bound}")
    return CheckResult(True)


def fully_specified_squares(P: Pattern, size_cap: int = 10):
    """Yield ``(rows, cols)`` of every fully specified square submatrix.

    Order: increasing size, then lexicographic in rows, then columns.
    """
    _cap(P.rows, P.cols, size_cap)
    by_row = [set(P.row_cols(i)) for i in range(P.rows)]
    for k in range(1, min(P.rows, P.cols) + 1):
        for rs in combinations(range(P.rows), k):
            common = set.intersection(*(by_row[i] for i in rs))
            if len(common) < k:
                continue
            for cs in combinations(sorted(common), k):
                yield rs, cs


def full_rank_specified_check(PM: PartialMatrix, size_cap: int = 10) -> CheckResult:
    """Every fully specified square submatrix of ``PM`` is invertible.

    A fully specified rectangle has full rank as soon as one maximal square
    subblock is invertible, and all of those are fully specified too, so
    checking squares covers the rectangular case.
    """
    for rs, cs in fully_specified_squares(PM.pattern, size_cap):
        sub = Matrix(PM.field, len(rs), len(cs), [[PM[i, j] for j in cs] for i in rs])
        if linalg.rank(sub) < len(rs):
            return CheckResult(False, rs, cs, f"{len(rs)}x{len(rs)} submatrix is singular")
    return CheckResult(True)
