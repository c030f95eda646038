from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from minrank import linalg
from minrank.errors import NotBanded, NotStaircase, TooLarge
from minrank.field import GF, Q
from minrank.generators import random_staircase_pattern
from minrank.inverse_structure import counterexample_matrix
from minrank.matrix import Matrix
from minrank.pattern import (BlockPartition, PartialMatrix, Pattern, band_offsets, block_patterns,
                             density_check, full_rank_specified_check, is_staircase,
                             staircase_blocking, triangular_subpatterns)

CE = counterexample_matrix().pattern


def test_staircase_blocking_lower_triangular():
    assert staircase_blocking(Pattern.lower_triangular(3)) == BlockPartition((1, 1, 1), (1, 1, 1))


def test_staircase_blocking_strictly_lower_uses_zero_blocks():
    bp = staircase_blocking(Pattern.strictly_lower(3))
    assert bp == BlockPartition((1, 1, 1, 0), (0, 1, 1, 1))
    assert block_patterns(bp)[0].specified == {(1, 0), (2, 0), (2, 1)}


def test_staircase_blocking_rejects_counterexample():
    with pytest.raises(NotStaircase):
        staircase_blocking(CE)


def test_staircase_blocking_edge_shapes():
    assert block_patterns(staircase_blocking(Pattern(3, 2)))[0] == Pattern(3, 2)
    assert block_patterns(staircase_blocking(Pattern.full(2, 3)))[0] == Pattern.full(2, 3)
    assert block_patterns(staircase_blocking(Pattern(0, 3)))[0] == Pattern(0, 3)
    assert block_patterns(staircase_blocking(Pattern(2, 0)))[0] == Pattern(2, 0)


def test_staircase_blocking_round_trip(rng):
    for _ in range(300):
        P = random_staircase_pattern(rng, rng.randint(0, 6), rng.randint(0, 6))
        bp = staircase_blocking(P)
        assert len(bp.row_sizes) == len(bp.col_sizes)
        assert block_patterns(bp)[0] == P


def test_non_prefix_rows_rejected():
    with pytest.raises(NotStaircase):
        staircase_blocking(Pattern(2, 2, [(0, 1), (1, 0), (1, 1)]))
    with pytest.raises(NotStaircase):
        staircase_blocking(Pattern(2, 2, [(0, 0), (0, 1), (1, 0)]))


def test_block_patterns_examples():
    lower, strict = block_patterns(BlockPartition((1, 1), (1, 1)))
    assert lower.specified == {(0, 0), (1, 0), (1, 1)}
    assert strict.specified == {(1, 0)}
    lower, _ = block_patterns(BlockPartition((0, 2), (1, 1)))
    assert lower.specified == {(0, 0), (1, 0), (0, 1), (1, 1)}
    lower, _ = block_patterns(BlockPartition((2, 1), (1, 2)))
    assert lower.specified == {(0, 0), (1, 0), (2, 0), (2, 1), (2, 2)}


def test_block_patterns_diagonal_difference(rng):
    from minrank.generators import random_partition
    for _ in range(100):
        bp = random_partition(rng, rng.randint(0, 6))
        lower, strict = block_patterns(bp)
        assert strict.specified <= lower.specified
        rb, cb = bp.row_block_of(), bp.col_block_of()
        assert lower.specified - strict.specified == {(i, j) for i, j in lower.specified if rb[i] == cb[j]}


# -- density ----------------------------------------------------------------

def brute_density(P, r):
    for k in range(max(r, 1), min(P.rows, P.cols) + 1):
        for rs in combinations(range(P.rows), k):
            for cs in combinations(range(P.cols), k):
                if P.count_in(rs, cs) > (2 * k - r) * r:
                    return False
    return True


def test_density_examples():
    assert density_check(CE, 2)
    res = density_check(Pattern.full(3, 3), 1)
    assert not res and res.rows == (0, 1) and res.cols == (0, 1)
    for r in range(4):
        assert density_check(Pattern(4, 4), r)


def test_density_cap():
    with pytest.raises(TooLarge):
        density_check(Pattern(11, 2), 1)
    assert density_check(Pattern(11, 2), 1, size_cap=11)


def random_pattern(rng, rows, cols, rate):
    return Pattern(rows, cols, [(i, j) for i in range(rows) for j in range(cols) if rng.random() < rate])


def test_density_matches_brute_force(rng):
    for _ in range(200):
        P = random_pattern(rng, rng.randint(1, 5), rng.randint(1, 5), rng.random())
        r = rng.randint(0, 3)
        res = density_check(P, r)
        assert bool(res) == brute_density(P, r)
        if not res:
            k = len(res.rows)
            assert P.count_in(res.rows, res.cols) > (2 * k - r) * r


def test_density_monotone(rng):
    for _ in range(100):
        P = random_pattern(rng, 4, 4, 0.6)
        r = rng.randint(1, 2)
        if density_check(P, r):
            sub = Pattern(4, 4, rng.sample(sorted(P.specified), len(P) // 2))
            assert density_check(sub, r)


# -- full rank of specified submatrices ---------------------------------------

def test_full_rank_examples():
    assert full_rank_specified_check(counterexample_matrix())
    PM = PartialMatrix.from_grid([[1, 2, None], [2, 4, None], [None, None, 1]])
    res = full_rank_specified_check(PM)
    assert not res and res.rows == (0, 1) and res.cols == (0, 1)
    diag = PartialMatrix.from_grid([[3, None], [None, 5]])
    assert full_rank_specified_check(diag)
    assert not full_rank_specified_check(PartialMatrix.from_grid([[0, None], [None, 5]]))


def test_full_rank_matches_brute_force(rng):
    for _ in range(150):
        F = rng.choice([Q, GF(3)])
        rows, cols = rng.randint(1, 4), rng.randint(1, 4)
        grid = [[None if rng.random() < 0.3 else rng.randint(-1, 1) for _ in range(cols)] for _ in range(rows)]
        PM = PartialMatrix.from_grid(grid, F)
        expect = True
        for k in range(1, min(rows, cols) + 1):
            for rs in combinations(range(rows), k):
                for cs in combinations(range(cols), k):
                    if all(grid[i][j] is not None for i in rs for j in cs):
                        sub = Matrix(F, k, k, [[grid[i][j] for j in cs] for i in rs])
                        expect = expect and linalg.rank(sub) == k
        assert bool(full_rank_specified_check(PM)) == expect


# -- bands --------------------------------------------------------------------

def test_band_offsets():
    assert band_offsets(Pattern.banded(4, 5, 1, 2)) == (1, 2)
    assert band_offsets(Pattern.lower_triangular(3)) == (2, 0)
    with pytest.raises(NotBanded):
        band_offsets(CE)
    with pytest.raises(NotBanded):
        band_offsets(Pattern(2, 2, [(0, 0)]))


@pytest.mark.parametrize("shape, q", [((4, 4), (1, 1)), ((3, 5), (0, 2)), ((5, 3), (2, -1)), ((4, 4), (3, 3))])
def test_triangular_subpatterns_are_staircases(shape, q):
    P = Pattern.banded(*shape, *q)
    boxes = triangular_subpatterns(P)
    assert boxes
    for box in boxes:
        sub = P.restrict(box.rows, box.cols)
        assert is_staircase(sub if box.orientation == "lower" else sub.transpose())


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 5), st.integers(0, 5), st.integers(0, 5))
def test_staircase_detection_matches_definition(rows, cols, seed):
    import random
    P = random_pattern(random.Random(seed), rows, cols, 0.5)
    closed = all((a, b) in P.specified for i, j in P.specified
                 for a in range(i, rows) for b in range(j + 1))
    assert is_staircase(P) == closed
