from itertools import combinations

import networkx as nx
import pytest

from minrank.errors import NoCover, TooLarge
from minrank.graphs import (LineCover, PatternGraph, chordless_cycle_search, is_chordless_cycle,
                            line_cover, maximum_matching, minimum_vertex_cover)
from minrank.inverse_structure import counterexample_matrix
from minrank.pattern import Pattern

CE = counterexample_matrix().pattern


def random_pattern(rng, rows, cols, rate):
    return Pattern(rows, cols, [(i, j) for i in range(rows) for j in range(cols) if rng.random() < rate])


def nx_graph(P):
    G = nx.Graph()
    G.add_nodes_from(("r", i) for i in range(P.rows))
    G.add_nodes_from(("c", j) for j in range(P.cols))
    G.add_edges_from((("r", i), ("c", j)) for i, j in P.specified)
    return G


def test_edge_count():
    assert PatternGraph(CE).edge_count == len(CE) == 12


def test_counterexample_not_chordal_bipartite():
    G = PatternGraph(CE)
    cycle = chordless_cycle_search(G)
    assert cycle is not None and len(cycle) >= 6
    assert is_chordless_cycle(G, cycle)


def test_lower_triangular_chordal_bipartite():
    for n in range(1, 5):
        assert chordless_cycle_search(PatternGraph(Pattern.lower_triangular(n))) is None
        # independent check: networkx finds no chordless cycle longer than 4
        assert all(len(c) <= 4 for c in nx.chordless_cycles(nx_graph(Pattern.lower_triangular(n))))


def test_few_edges_chordal():
    P = Pattern(5, 5, [(0, 0), (0, 1), (1, 1), (1, 2), (2, 2)])
    assert chordless_cycle_search(PatternGraph(P)) is None


def test_size_cap():
    with pytest.raises(TooLarge):
        chordless_cycle_search(PatternGraph(Pattern(9, 9)))


def test_cycle_search_matches_networkx(rng):
    for _ in range(150):
        P = random_pattern(rng, rng.randint(1, 6), rng.randint(1, 6), rng.uniform(0.3, 0.8))
        G = PatternGraph(P)
        ours = chordless_cycle_search(G)
        theirs = any(len(c) >= 6 for c in nx.chordless_cycles(nx_graph(P)))
        assert (ours is not None) == theirs
        if ours is not None:
            assert is_chordless_cycle(G, ours)


def test_matching_and_konig(rng):
    for _ in range(150):
        P = random_pattern(rng, rng.randint(0, 6), rng.randint(0, 6), rng.random())
        m = maximum_matching(P)
        assert len(set(m.values())) == len(m)
        assert all((i, j) in P for i, j in m.items())
        G = nx_graph(P)
        top = [("r", i) for i in range(P.rows)]
        assert len(m) == len(nx.bipartite.hopcroft_karp_matching(G, top_nodes=top)) // 2
        rows, cols = minimum_vertex_cover(P)
        assert len(rows) + len(cols) == len(m)
        assert LineCover(rows, cols).covers(P)


def brute_cover_exists(P, r):
    for a in range(min(r, P.rows) + 1):
        for rs in combinations(range(P.rows), a):
            need = {j for i, j in P.specified if i not in rs}
            if len(need) <= r:
                return True
    return False


def test_line_cover_examples():
    r = 2
    P = Pattern(5, 6, [(i, j) for i in range(5) for j in range(6) if i < r or j < r])
    assert line_cover(P, r) == LineCover(frozenset({0, 1}), frozenset({0, 1}))
    assert line_cover(Pattern(3, 3, [(2, 1)]), 1) == LineCover(frozenset({2}), frozenset())
    with pytest.raises(NoCover):
        line_cover(CE, 2)


def test_counterexample_has_no_two_by_two_cover_exhaustively():
    assert not brute_cover_exists(CE, 2)


def test_line_cover_sound_and_complete(rng):
    for _ in range(300):
        P = random_pattern(rng, rng.randint(1, 6), rng.randint(1, 6), rng.uniform(0.05, 0.6))
        r = rng.randint(0, 3)
        exists = brute_cover_exists(P, r)
        try:
            cover = line_cover(P, r)
        except NoCover:
            assert not exists
        else:
            assert exists
            assert cover.covers(P)
            assert len(cover.cover_rows) <= r and len(cover.cover_cols) <= r
