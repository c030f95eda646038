import pytest

from minrank import linalg
from minrank.completion import (banded_min_rank_bound, cross_complete, generic_rank_r_complete,
                                staircase_complete, staircase_min_rank)
from minrank.errors import (FieldNotFinite, IncompleteCoverLines, NoCover, NotStaircase,
                            OverlapSingular, SpecifiedOutsideCover, TooManyAssignments)
from minrank.field import GF, Q
from minrank.generators import random_cross, random_invertible, random_matrix, random_staircase
from minrank.graphs import LineCover
from minrank.inverse_structure import counterexample_matrix
from minrank.matrix import Matrix
from minrank.oracle import exhaustive_min_rank, oracle_search
from minrank.pattern import (BlockPartition, PartialMatrix, Pattern, full_rank_specified_check,
                             staircase_blocking, staircase_profile)

_ = None


def test_min_rank_examples():
    assert staircase_min_rank(PartialMatrix.from_grid([[1, _], [0, 1]]))[0] == 2
    value, cert = staircase_min_rank(PartialMatrix.from_grid([[1, _], [1, 1]]))
    assert value == 1
    assert (cert.forward_ranks, cert.backward_ranks) == ((1, 1), (1,))


def test_hessenberg_lower_part_min_rank():
    # lower part (i >= j) of an upper Hessenberg matrix with nonzero subdiagonal
    PM = PartialMatrix.from_grid([[4, _, _], [2, 7, _], [0, 3, 5]])
    assert staircase_min_rank(PM)[0] == 2


def test_not_staircase():
    with pytest.raises(NotStaircase):
        staircase_min_rank(counterexample_matrix())
    with pytest.raises(NotStaircase):
        staircase_complete(counterexample_matrix())


def test_complete_examples():
    assert staircase_complete(PartialMatrix.from_grid([[1, _], [1, 1]])) == Matrix.from_rows([[1, 1], [1, 1]])
    assert staircase_complete(PartialMatrix.from_grid([[1, _], [0, 1]])) == Matrix.identity(Q, 2)
    full = Matrix.from_rows([[1, 2], [3, 4]])
    assert staircase_complete(PartialMatrix.from_matrix(full)) == full


def test_complete_degenerate_shapes():
    for rows, cols in [(0, 3), (3, 0), (2, 2)]:
        PM = PartialMatrix(Q, Pattern(rows, cols), {})
        assert staircase_min_rank(PM)[0] == 0
        assert staircase_complete(PM) == Matrix.zeros(Q, rows, cols)


@pytest.mark.parametrize("field", [GF(2), GF(3), GF(5)])
def test_formula_matches_oracle(field, rng):
    for _ in range(60):
        PM = random_staircase(rng, field, rng.randint(1, 4), rng.randint(1, 4), max_unknowns=6)
        value, cert = staircase_min_rank(PM)
        assert value == exhaustive_min_rank(PM)
        assert value == sum(cert.forward_ranks) - sum(cert.backward_ranks)
        assert all(s >= 0 for s in cert.increments)
        assert sum(cert.terms()) == value


@pytest.mark.parametrize("field", [Q, GF(3), GF(7)])
def test_completion_is_optimal(field, rng):
    for _ in range(80):
        PM = random_staircase(rng, field, rng.randint(1, 6), rng.randint(1, 6))
        M = staircase_complete(PM)
        assert PM.agrees_with(M)
        assert linalg.rank(M) == staircase_min_rank(PM)[0]


def test_scalar_terms_at_most_one(rng):
    for _ in range(50):
        n = rng.randint(1, 5)
        vals = {(i, j): rng.randint(-1, 1) for i in range(n) for j in range(i + 1)}
        PM = PartialMatrix(Q, Pattern.lower_triangular(n), vals)
        _, cert = staircase_min_rank(PM)
        assert all(0 <= t <= 1 for t in cert.terms())


def refine(bp, rng):
    """Split one block row or column, inserting a zero-size partner block."""
    rows, cols = list(bp.row_sizes), list(bp.col_sizes)
    k = rng.randrange(len(rows))
    if rng.random() < 0.5:
        a = rng.randint(0, rows[k])
        rows[k:k + 1] = [a, rows[k] - a]
        cols[k + 1:k + 1] = [0]
    else:
        a = rng.randint(0, cols[k])
        cols[k:k + 1] = [a, cols[k] - a]
        rows[k:k] = [0]
    return BlockPartition(rows, cols)


def test_blocking_invariance(rng):
    for _ in range(150):
        PM = random_staircase(rng, rng.choice([Q, GF(3)]), rng.randint(0, 5), rng.randint(0, 5))
        value, _ = staircase_min_rank(PM)
        bp = staircase_blocking(PM.pattern)
        for _ in range(3):
            bp = refine(bp, rng)
            assert staircase_min_rank(PM, bp)[0] == value


def test_removing_entry_never_increases(rng):
    for _ in range(100):
        PM = random_staircase(rng, GF(3), rng.randint(1, 4), rng.randint(1, 4), max_unknowns=6)
        value, _ = staircase_min_rank(PM)
        lengths = staircase_profile(PM.pattern)
        for i, c in enumerate(lengths):
            # rightmost entry of a row longer than the one above keeps the staircase shape
            if c and (i == 0 or lengths[i - 1] < c):
                smaller = PM.drop((i, c - 1))
                assert staircase_min_rank(smaller)[0] <= value
                assert exhaustive_min_rank(smaller) <= value


# -- oracle ------------------------------------------------------------------

def test_oracle_counterexample_gf11():
    res = oracle_search(counterexample_matrix(GF(11)))
    assert res.min_rank == 3
    assert res.visited == res.assignments == 11 ** 4
    assert linalg.rank(res.witness) == 3


def test_oracle_full_matrix(rng):
    M = random_matrix(rng, GF(5), 3, 4)
    assert exhaustive_min_rank(PartialMatrix.from_matrix(M)) == linalg.rank(M)


def test_oracle_refusals():
    with pytest.raises(FieldNotFinite):
        exhaustive_min_rank(counterexample_matrix(Q))
    with pytest.raises(TooManyAssignments):
        exhaustive_min_rank(counterexample_matrix(GF(11)), max_assignments=1000)


# -- cross and generic completions -------------------------------------------

def test_cross_complete_identity_overlap(rng):
    r = 2
    C = random_matrix(rng, Q, 3, r)
    R = random_matrix(rng, Q, r, 4)
    top = Matrix.identity(Q, r).hstack(R)
    vals = {}
    for i in range(5):
        for j in range(6):
            if i < r:
                vals[(i, j)] = top[i, j]
            elif j < r:
                vals[(i, j)] = C[i - r, j]
    PM = PartialMatrix(Q, Pattern(5, 6, vals), vals)
    M = cross_complete(PM, LineCover(frozenset({0, 1}), frozenset({0, 1})))
    assert M.block(r, 5, r, 6) == C @ R
    assert linalg.rank(M) == r


def test_cross_complete_scalar():
    PM = PartialMatrix.from_grid([[2, 4], [6, _]])
    M = cross_complete(PM, LineCover(frozenset({0}), frozenset({0})))
    assert M == Matrix.from_rows([[2, 4], [6, 12]])
    assert linalg.rank(M) == 1


def test_counterexample_corner_identity():
    # filled to a full cross around the lower right corner, the top left block is X W^-1 Z
    base = {(i, j): v for (i, j), v in counterexample_matrix().values.items() if i >= 2 or j >= 2}
    cover = LineCover(frozenset({2, 3}), frozenset({2, 3}))
    with pytest.raises(IncompleteCoverLines):
        cross_complete(PartialMatrix(Q, Pattern(4, 4, base), base), cover)
    W = Matrix.from_rows([[2, 3], [1, 1]])
    for x, y in [(0, 0), (2, 5)]:
        vals = {**base, (0, 2): x, (1, 3): y, (2, 0): 1, (3, 1): 1}
        M = cross_complete(PartialMatrix(Q, Pattern(4, 4, vals), vals), cover)
        X = Matrix.from_rows([[x, 1], [1, y]])
        Z = Matrix.from_rows([[1, 1], [1, 1]])
        assert M.block(0, 2, 0, 2) == X @ linalg.inverse(W) @ Z
        assert linalg.rank(M) == 2


def test_cross_complete_errors():
    with pytest.raises(OverlapSingular):
        cross_complete(PartialMatrix.from_grid([[0, 4], [6, _]]), LineCover(frozenset({0}), frozenset({0})))
    with pytest.raises(SpecifiedOutsideCover):
        cross_complete(PartialMatrix.from_grid([[2, 4], [6, 1]]), LineCover(frozenset({0}), frozenset({0})))
    with pytest.raises(IncompleteCoverLines):
        cross_complete(PartialMatrix.from_grid([[2, _], [6, _]]), LineCover(frozenset({0}), frozenset({0})))


@pytest.mark.parametrize("field", [Q, GF(5), GF(7)])
def test_cross_rank_law(field, rng):
    for _ in range(100):
        rows, cols = rng.randint(1, 6), rng.randint(1, 6)
        r = rng.randint(1, min(rows, cols))
        cr, cc = rng.sample(range(rows), r), rng.sample(range(cols), r)
        W = random_invertible(rng, field, r)
        vals = {}
        for i in range(rows):
            for j in range(cols):
                if i in cr and j in cc:
                    vals[(i, j)] = W[cr.index(i), cc.index(j)]
                elif i in cr or j in cc:
                    vals[(i, j)] = rng.randint(-9, 9)
        PM = PartialMatrix(field, Pattern(rows, cols, vals), vals)
        M = cross_complete(PM, LineCover(frozenset(cr), frozenset(cc)))
        assert PM.agrees_with(M) and linalg.rank(M) == r


def test_generic_examples():
    PM = PartialMatrix.from_grid([[1, 2, 3], [4, _, _], [5, _, _]])
    M = generic_rank_r_complete(PM, 1)
    assert M == Matrix.from_rows([[1, 2, 3], [4, 8, 12], [5, 10, 15]])
    with pytest.raises(NoCover):
        generic_rank_r_complete(counterexample_matrix(), 2)
    with pytest.raises(NoCover):
        generic_rank_r_complete(PartialMatrix.from_grid([[1, _]]), 2)


def test_generic_fills_singular_overlap():
    # the only specified overlap entry is absent: W must be chosen
    PM = PartialMatrix.from_grid([[_, 2, 3], [4, _, _], [5, _, _]])
    M = generic_rank_r_complete(PM, 1)
    assert PM.agrees_with(M) and linalg.rank(M) == 1


@pytest.mark.parametrize("field", [Q, GF(5)])
def test_generic_rank_r(field, rng):
    done = 0
    while done < 60:
        rows, cols = rng.randint(1, 6), rng.randint(1, 6)
        r = rng.randint(1, min(3, rows, cols))
        PM = random_cross(rng, field, rows, cols, r)
        if not full_rank_specified_check(PM):
            continue
        M = generic_rank_r_complete(PM, r)
        assert PM.agrees_with(M) and linalg.rank(M) == r
        done += 1


# -- banded --------------------------------------------------------------------

def test_banded_lower_triangular_matches_staircase(rng):
    for _ in range(20):
        PM = PartialMatrix(Q, Pattern.lower_triangular(4), {p: rng.randint(-3, 3) for p in Pattern.lower_triangular(4).specified})
        assert banded_min_rank_bound(PM) == staircase_min_rank(PM)[0]


def test_banded_zero_data():
    P = Pattern.banded(4, 5, 1, 1)
    assert banded_min_rank_bound(PartialMatrix(Q, P, {p: 0 for p in P.specified})) == 0


def test_banded_bound_is_lower_bound(rng):
    for _ in range(150):
        p = rng.choice([2, 3])
        rows, cols = rng.randint(2, 4), rng.randint(2, 4)
        P = Pattern.banded(rows, cols, rng.randint(-1, 2), rng.randint(-1, 2))
        if p ** (rows * cols - len(P)) > 50000:
            continue
        PM = PartialMatrix(GF(p), P, {q: rng.randrange(p) for q in P.specified})
        assert banded_min_rank_bound(PM) <= exhaustive_min_rank(PM)


def test_tridiagonal_equals_oracle_with_full_rank_data(rng):
    P = Pattern.banded(4, 4, 1, 1)
    checked = 0
    while checked < 60:
        PM = PartialMatrix(GF(3), P, {q: rng.randrange(3) for q in P.specified})
        if not full_rank_specified_check(PM):
            continue
        assert banded_min_rank_bound(PM) == exhaustive_min_rank(PM)
        checked += 1


def test_tridiagonal_bound_can_be_strict():
    # degenerate data: rows 2 and 3 share a zero pattern that couples both corners
    PM = PartialMatrix.from_grid([[2, 0, 1, _], [1, 0, 1, 2], [0, 0, 0, 1], [_, 1, 1, 2]], GF(3))
    assert banded_min_rank_bound(PM) == 3
    assert exhaustive_min_rank(PM) == 4
