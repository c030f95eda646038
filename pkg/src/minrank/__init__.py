"""Exact minimal rank completions and matrix/inverse rank dualities."""

from .completion import (banded_min_rank_bound, cross_complete, generic_rank_r_complete,
                         staircase_complete, staircase_min_rank)
from .field import GF, FieldSpec, Q
from .matrix import Matrix
from .oracle import exhaustive_min_rank
from .pattern import BlockPartition, PartialMatrix, Pattern
from .pmat import emit_pmat, parse_pmat

__all__ = [
    "BlockPartition", "FieldSpec", "GF", "Matrix", "PartialMatrix", "Pattern", "Q",
    "banded_min_rank_bound", "cross_complete", "emit_pmat", "exhaustive_min_rank",
    "generic_rank_r_complete", "parse_pmat", "staircase_complete", "staircase_min_rank",
]
