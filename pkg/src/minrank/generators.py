"""Seeded random instances for test suites and benchmarks.

Every function takes an explicit ``random.Random``; equal seeds give equal
instances.
"""

from __future__ import annotations

import random
from typing import Optional, Tuple

from . import linalg
from .field import FieldSpec
from .matrix import Matrix
from .pattern import BlockPartition, PartialMatrix, Pattern


def random_entry(rng: random.Random, field: FieldSpec, lo: int = -9, hi: int = 9):
    if field.is_finite:
        return rng.randrange(field.modulus)
    return field(rng.randint(lo, hi))


def random_matrix(rng: random.Random, field: FieldSpec, rows: int, cols: int, lo: int = -9, hi: int = 9) -> Matrix:
    return Matrix(field, rows, cols, [[random_entry(rng, field, lo, hi) for _ in range(cols)] for _ in range(rows)])


def random_low_rank(rng: random.Random, field: FieldSpec, rows: int, cols: int, rank: int) -> Matrix:
    return random_matrix(rng, field, rows, rank, -3, 3) @ random_matrix(rng, field, rank, cols, -3, 3)


def random_invertible(rng: random.Random, field: FieldSpec, n: int, lo: int = -9, hi: int = 9) -> Matrix:
    while True:
        M = random_matrix(rng, field, n, n, lo, hi)
        if linalg.rank(M) == n:
            return M


def random_composition(rng: random.Random, total: int, parts: int) -> Tuple[int, ...]:
    """``parts`` nonnegative integers summing to ``total``; zeros are likely."""
    cuts = sorted(rng.randint(0, total) for _ in range(parts - 1))
    bounds = [0] + cuts + [total]
    return tuple(b - a for a, b in zip(bounds, bounds[1:]))


def random_partition(rng: random.Random, n: int, max_blocks: Optional[int] = None) -> BlockPartition:
    blocks = rng.randint(1, max_blocks or n + 1)
    return BlockPartition(random_composition(rng, n, blocks), random_composition(rng, n, blocks))


def random_staircase_pattern(rng: random.Random, rows: int, cols: int) -> Pattern:
    lengths = sorted(rng.randint(0, cols) for _ in range(rows))
    return Pattern(rows, cols, ((i, j) for i in range(rows) for j in range(lengths[i])))


def random_staircase(rng: random.Random, field: FieldSpec, rows: int, cols: int,
                     max_unknowns: Optional[int] = None) -> PartialMatrix:
    """Random staircase partial matrix.

    Half the time the data comes from a random low-rank matrix, so minimal
    ranks well below ``min(rows, cols)`` are common.
    """
    while True:
        pattern = random_staircase_pattern(rng, rows, cols)
        if max_unknowns is None or rows * cols - len(pattern) <= max_unknowns:
            break
    if rng.random() < 0.5:
        source = random_low_rank(rng, field, rows, cols, rng.randint(0, min(rows, cols)))
    else:
        source = random_matrix(rng, field, rows, cols, -4, 4)
    # sprinkle zeros so degenerate ranks show up
    vals = {pos: (source[pos] if rng.random() > 0.15 else 0) for pos in pattern.specified}
    return PartialMatrix(field, pattern, vals)


def random_banded_invertible(rng: random.Random, field: FieldSpec, n: int, p: int) -> Matrix:
    """Invertible ``A`` with ``a_ij = 0`` for ``j > i + p`` and nonzero ``a_{i,i+p}``."""
    while True:
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                if j > i + p:
                    row.append(0)
                elif j == i + p:
                    v = 0
                    while v == 0:
                        v = random_entry(rng, field, -5, 5)
                    row.append(v)
                else:
                    row.append(random_entry(rng, field, -5, 5))
            rows.append(row)
        A = Matrix(field, n, n, rows)
        if linalg.rank(A) == n:
            return A


def random_cross(rng: random.Random, field: FieldSpec, rows: int, cols: int, r: int,
                 hole_rate: float = 0.3) -> PartialMatrix:
    """Entries only on ``r`` random rows and ``r`` random columns, some left unknown."""
    cr = rng.sample(range(rows), r)
    cc = rng.sample(range(cols), r)
    vals = {}
    for i in range(rows):
        for j in range(cols):
            if (i in cr or j in cc) and rng.random() >= hole_rate:
                vals[(i, j)] = random_entry(rng, field, -9, 9)
    return PartialMatrix(field, Pattern(rows, cols, vals), vals)
