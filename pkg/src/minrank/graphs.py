"""Bipartite graphs of patterns: chordless cycles, matchings, line covers."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, List, Optional, Set, Tuple

from .errors import NoCover, TooLarge
from .pattern import Pattern

# vertices are ("r", i) for rows and ("c", j) for columns
Vertex = Tuple[str, int]


class PatternGraph:
    """Bipartite graph with a vertex per row and column, an edge per specified entry."""

    def __init__(self, pattern: Pattern):
        self.pattern = pattern
        self.vertices: List[Vertex] = ([("r", i) for i in range(pattern.rows)]
                                       + [("c", j) for j in range(pattern.cols)])
        self.adj: Dict[Vertex, Set[Vertex]] = {v: set() for v in self.vertices}
        for i, j in pattern.specified:
            self.adj[("r", i)].add(("c", j))
            self.adj[("c", j)].add(("r", i))

    @property
    def edge_count(self) -> int:
        return sum(len(n) for n in self.adj.values()) // 2

    def has_edge(self, u: Vertex, v: Vertex) -> bool:
        return v in self.adj[u]


def is_chordless_cycle(G: PatternGraph, cycle: List[Vertex]) -> bool:
    """True if ``cycle`` is a simple cycle whose only induced edges are its own."""
    n = len(cycle)
    if n < 4 or len(set(cycle)) != n:
        return False
    for a in range(n):
        for b in range(a + 1, n):
            consecutive = b == a + 1 or (a == 0 and b == n - 1)
            if G.has_edge(cycle[a], cycle[b]) != consecutive:
                return False
    return True


def chordless_cycle_search(G: PatternGraph, size_cap: int = 16, min_length: int = 6) -> Optional[List[Vertex]]:
    """Find a chordless cycle of length ``>= min_length``, or ``None``.

    ``None`` means the graph is chordal bipartite. The search grows induced
    paths depth first from each start vertex ``s``, only through vertices
    ordered after ``s``; a candidate is pruned as soon as it is adjacent to
    any path vertex other than the path's end (and ``s``, which closes the
    cycle).
    """
    n = len(G.vertices)
    if n > size_cap:
        raise TooLarge(f"{n} vertices exceed the cap {size_cap}")
    order = {v: k for k, v in enumerate(G.vertices)}

    def extend(path: List[Vertex], on_path: Set[Vertex]) -> Optional[List[Vertex]]:
        s, last = path[0], path[-1]
        for w in sorted(G.adj[last], key=order.__getitem__):
            if order[w] <= order[s] or w in on_path:
                continue
            # w may touch only `last` among the interior; touching s closes a cycle
            if any(G.has_edge(w, x) for x in path[1:-1]):
                continue
            if G.has_edge(w, s):
                if len(path) + 1 >= min_length and len(path) >= 3:
                    return path + [w]
                continue
            path.append(w)
            on_path.add(w)
            found = extend(path, on_path)
            if found:
                return found
            path.pop()
            on_path.discard(w)
        return None

    for s in G.vertices:
        for v in sorted(G.adj[s], key=order.__getitem__):
            if order[v] <= order[s]:
                continue
            found = extend([s, v], {s, v})
            if found:
                return found
    return None


def is_chordal_bipartite(pattern: Pattern, size_cap: int = 16) -> bool:
    return chordless_cycle_search(PatternGraph(pattern), size_cap) is None


# -- matching and covers ---------------------------------------------------

def maximum_matching(P: Pattern) -> Dict[int, int]:
    """Maximum matching of rows to columns (augmenting paths), as row -> col."""
    by_row = [P.row_cols(i) for i in range(P.rows)]
    match_col: Dict[int, int] = {}

    def augment(i: int, seen: Set[int]) -> bool:
        for j in by_row[i]:
            if j in seen:
                continue
            seen.add(j)
            if j not in match_col or augment(match_col[j], seen):
                match_col[j] = i
                return True
        return False

    for i in range(P.rows):
        augment(i, set())
    return {i: j for j, i in match_col.items()}


def minimum_vertex_cover(P: Pattern) -> Tuple[FrozenSet[int], FrozenSet[int]]:
    """König's construction: ``(rows, cols)`` of a minimum vertex cover.

    With ``Z`` the vertices reachable from unmatched rows by alternating
    paths, the cover is (rows not in Z) and (columns in Z).
    """
    matching = maximum_matching(P)
    row_of = {j: i for i, j in matching.items()}
    by_row = [P.row_cols(i) for i in range(P.rows)]
    z_rows = {i for i in range(P.rows) if i not in matching}
    z_cols: Set[int] = set()
    frontier = list(z_rows)
    while frontier:
        i = frontier.pop()
        for j in by_row[i]:
            if j in z_cols or matching.get(i) == j:
                continue
            z_cols.add(j)
            k = row_of.get(j)
            if k is not None and k not in z_rows:
                z_rows.add(k)
                frontier.append(k)
    return frozenset(set(range(P.rows)) - z_rows), frozenset(z_cols)


@dataclass(frozen=True)
class LineCover:
    cover_rows: FrozenSet[int]
    cover_cols: FrozenSet[int]

    def covers(self, P: Pattern) -> bool:
        return all(i in self.cover_rows or j in self.cover_cols for i, j in P.specified)


def line_cover(P: Pattern, r: int) -> LineCover:
    """At most ``r`` rows and ``r`` columns containing every specified entry.

    A matching larger than ``2r`` rules a cover out immediately (every
    cover has at least as many lines as any matching has edges). Otherwise
    König's minimum vertex cover is returned if it splits as at most ``r``
    rows plus ``r`` columns; failing that, row subsets are searched by size
    and then lexicographically, taking the columns of whatever is left.
    """
    if len(maximum_matching(P)) > 2 * r:
        raise NoCover(f"a matching of size > {2 * r} rules out {r} rows + {r} columns")
    rows, cols = minimum_vertex_cover(P)
    if len(rows) <= r and len(cols) <= r:
        return LineCover(rows, cols)
    for k in range(min(r, P.rows) + 1):
        for rs in combinations(range(P.rows), k):
            chosen = set(rs)
            need = {j for i, j in P.specified if i not in chosen}
            if len(need) <= r:
                return LineCover(frozenset(rs), frozenset(need))
    raise NoCover(f"no {r} rows and {r} columns cover the specified entries")
