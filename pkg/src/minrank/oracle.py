"""Brute-force minimal rank over a prime field.

Independent of the structural formulas: it simply tries every filling of
the unknowns. The enumeration itself runs in the compiled kernel when that
is available.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .errors import FieldNotFinite, TooManyAssignments
from .matrix import Matrix
from .pattern import PartialMatrix

DEFAULT_MAX_ASSIGNMENTS = 10 ** 6


@dataclass(frozen=True)
class OracleResult:
    min_rank: int
    witness: Matrix
    assignments: int
    visited: int


def oracle_search(PM: PartialMatrix, max_assignments: int = DEFAULT_MAX_ASSIGNMENTS,
                  floor: int = 0) -> OracleResult:
    """Exhaustive search returning the minimum and a completion attaining it.

    Stops early once a completion of rank ``<= floor`` turns up, so a floor
    above 0 only makes sense when it is a proven lower bound.
    """
    p = PM.field.modulus
    if p is None:
        raise FieldNotFinite("the exhaustive oracle needs a prime field")
    unknowns = PM.unknowns
    total = p ** len(unknowns)
    if total > max_assignments:
        raise TooManyAssignments(
            f"{p}^{len(unknowns)} = {total} assignments exceed the cap {max_assignments}")
    if p >= kernels.MAX_KERNEL_MODULUS:
        raise TooManyAssignments(f"modulus {p} is too large for the enumeration kernel")
    flat = [PM[i, j] if (i, j) in PM.pattern else 0 for i in range(PM.rows) for j in range(PM.cols)]
    pos = [i * PM.cols + j for i, j in unknowns]
    best, assign, visited = kernels.min_rank_assignments(flat, PM.rows, PM.cols, pos, p, floor)
    witness = PM.fill(dict(zip(unknowns, assign)))
    return OracleResult(best, witness, total, visited)


def exhaustive_min_rank(PM: PartialMatrix, max_assignments: int = DEFAULT_MAX_ASSIGNMENTS) -> int:
    """Minimum rank over all ``p**u`` completions of ``PM`` over GF(p)."""
    return oracle_search(PM, max_assignments).min_rank
