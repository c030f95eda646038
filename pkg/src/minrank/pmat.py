"""The ``pmat`` text format for matrices and partial matrices.

Example::

    # 4x4 partial matrix, ? marks an unknown
    field Q
    rows 4
    cols 4
    6 3 ? 1
    3 1 1 ?
    ? 1 2 3
    1 ? 1 1

Directives: ``field Q`` or ``field GF(p)``, ``rows n``, ``cols m``,
``rowblocks n1 n2 ...`` and ``colblocks m1 m2 ...`` (zeros allowed). Several
directives may share a line. Entries are signed integers or, over Q only,
``a/b`` fractions; over GF(p) integers are reduced mod p. ``#`` starts a
comment. Missing ``rows``/``cols`` are inferred from the grid.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Union

from .errors import BadDimensions, FieldMismatch, MinRankError, ParseError
from .field import FieldSpec, Q
from .matrix import Matrix
from .pattern import BlockPartition, PartialMatrix

_KEYWORDS = ("field", "rows", "cols", "rowblocks", "colblocks")
_ENTRY = re.compile(r"^[+-]?\d+(?:/[+-]?\d+)?$")
_FIELD = re.compile(r"^(?:Q|GF\((\d+)\))$")


@dataclass
class PmatDocument:
    field: FieldSpec
    rows: int
    cols: int
    grid: List[list]
    blocks: Optional[BlockPartition] = None

    @property
    def value(self) -> Union[Matrix, PartialMatrix]:
        if any(x is None for row in self.grid for x in row):
            return PartialMatrix.from_grid(self.grid, self.field, cols=self.cols)
        return Matrix(self.field, self.rows, self.cols, self.grid)

    def partial(self) -> PartialMatrix:
        return PartialMatrix.from_grid(self.grid, self.field, cols=self.cols)


def _parse_field(token: str, line: int, col: int) -> FieldSpec:
    m = _FIELD.match(token)
    if not m:
        raise ParseError(f"unknown field {token!r} (expected Q or GF(p))", line, col)
    if m.group(1) is None:
        return Q
    try:
        return FieldSpec(int(m.group(1)))
    except MinRankError as exc:
        raise ParseError(str(exc), line, col) from None


def _parse_count(token: str, line: int, col: int) -> int:
    if not token.isdigit():
        raise ParseError(f"expected a nonnegative integer, got {token!r}", line, col)
    return int(token)


def _tokens(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        toks = [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", body)]
        if toks:
            yield lineno, toks


def parse_document(text: str) -> PmatDocument:
    field: Optional[FieldSpec] = None
    rows = cols = None
    rowblocks = colblocks = None
    raw_grid = []
    for lineno, toks in _tokens(text):
        if toks[0][0] not in _KEYWORDS:
            raw_grid.append((lineno, toks))
            continue
        if raw_grid:
            raise ParseError("directives must precede the entry grid", lineno, toks[0][1])
        k = 0
        while k < len(toks):
            word, col = toks[k]
            if word not in _KEYWORDS:
                raise ParseError(f"unexpected token {word!r}", lineno, col)
            args = []
            k += 1
            while k < len(toks) and toks[k][0] not in _KEYWORDS:
                args.append(toks[k])
                k += 1
            if word in ("field", "rows", "cols") and len(args) != 1:
                raise ParseError(f"{word} takes exactly one argument", lineno, col)
            if word == "field":
                field = _parse_field(args[0][0], lineno, args[0][1])
            elif word == "rows":
                rows = _parse_count(args[0][0], lineno, args[0][1])
            elif word == "cols":
                cols = _parse_count(args[0][0], lineno, args[0][1])
            elif word == "rowblocks":
                rowblocks = [_parse_count(t, lineno, c) for t, c in args]
            else:
                colblocks = [_parse_count(t, lineno, c) for t, c in args]
    field = field or Q
    if rows is None:
        rows = len(raw_grid)
    if cols is None:
        cols = len(raw_grid[0][1]) if raw_grid else 0
    grid_rows = len(raw_grid) if cols > 0 or raw_grid else rows
    if grid_rows != rows:
        raise BadDimensions(f"declared {rows} rows but the grid has {len(raw_grid)}")
    grid = []
    for lineno, toks in raw_grid:
        if len(toks) != cols:
            raise BadDimensions(f"expected {cols} entries, found {len(toks)}", lineno, toks[0][1])
        row = []
        for tok, col in toks:
            if tok == "?":
                row.append(None)
                continue
            if not _ENTRY.match(tok):
                raise ParseError(f"bad entry {tok!r}", lineno, col)
            if "/" in tok and field.is_finite:
                raise FieldMismatch(f"fraction {tok!r} in a {field} document", lineno, col)
            try:
                row.append(field(Fraction(tok)))
            except ZeroDivisionError:
                raise ParseError(f"zero denominator in {tok!r}", lineno, col) from None
        grid.append(row)
    if cols == 0:
        grid = [[] for _ in range(rows)]
    blocks = None
    if rowblocks is not None or colblocks is not None:
        if rowblocks is None or colblocks is None:
            raise ParseError("rowblocks and colblocks must be given together")
        if sum(rowblocks) != rows or sum(colblocks) != cols:
            raise BadDimensions(f"block sizes sum to {sum(rowblocks)}x{sum(colblocks)}, "
                                f"matrix is {rows}x{cols}")
        blocks = BlockPartition(rowblocks, colblocks)
    return PmatDocument(field, rows, cols, grid, blocks)


def parse_pmat(text: str) -> Union[Matrix, PartialMatrix]:
    """Parse a document: a ``Matrix`` if fully specified, else a ``PartialMatrix``."""
    return parse_document(text).value


def emit_pmat(value: Union[Matrix, PartialMatrix], blocks: Optional[BlockPartition] = None,
              comment: Optional[str] = None) -> str:
    f = value.field
    if isinstance(value, Matrix):
        grid = value.tolist()
    else:
        grid = value.grid()
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines += [f"field {f}", f"rows {value.rows}", f"cols {value.cols}"]
    if blocks is not None:
        lines.append("rowblocks " + " ".join(map(str, blocks.row_sizes)))
        lines.append("colblocks " + " ".join(map(str, blocks.col_sizes)))
    for row in grid:
        if row:
            lines.append(" ".join("?" if x is None else f.format(x) for x in row))
    return "\n".join(lines) + "\n"
