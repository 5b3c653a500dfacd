"""Shared test helpers: independent reference implementations.

Everything here re-derives answers by plain enumeration with no pruning or
heuristics, so the package's solvers are checked against a second route
rather than against themselves.  All helpers are exponential and meant for
tiny inputs only.
"""

from __future__ import annotations

from itertools import combinations, permutations

import hypothesis.strategies as st

from immlab.graphs import Graph


def edge_key(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


def ref_has_independent_triple(g: Graph) -> bool:
    return any(
        not g.has_edge(a, b) and not g.has_edge(a, c) and not g.has_edge(b, c)
        for a, b, c in combinations(range(g.n), 3))


def ref_independence_number(g: Graph) -> int:
    """Exact alpha by subset enumeration (n <= 14)."""
    best = 0
    for mask in range(1 << g.n):
        vs = [v for v in range(g.n) if mask >> v & 1]
        if len(vs) > best and all(
                not g.has_edge(u, v) for u, v in combinations(vs, 2)):
            best = len(vs)
    return best


def ref_max_clique_size(g: Graph) -> int:
    """Exact omega by subset enumeration (n <= 14)."""
    best = 0
    for mask in range(1 << g.n):
        vs = [v for v in range(g.n) if mask >> v & 1]
        if len(vs) > best and all(
                g.has_edge(u, v) for u, v in combinations(vs, 2)):
            best = len(vs)
    return best


def ref_chromatic_number(g: Graph) -> int:
    """Exact chi by plain backtracking over colour counts (n <= 12)."""
    if g.n == 0:
        return 0

    def colourable(t: int) -> bool:
        colours = [-1] * g.n

        def place(v: int) -> bool:
            if v == g.n:
                return True
            used = max(colours[:v], default=-1)
            for c in range(min(used + 1, t - 1) + 1):
                if all(colours[u] != c for u in range(v) if g.has_edge(u, v)):
                    colours[v] = c
                    if place(v + 1):
                        return True
                    colours[v] = -1
            return False

        return place(0)

    t = 1
    while not colourable(t):
        t += 1
    return t


def ref_is_induced(g: Graph, pat: Graph) -> bool:
    """Induced-subgraph test by raw injection enumeration (n <= 9)."""
    for image in permutations(range(g.n), pat.n):
        if all(g.has_edge(image[i], image[j]) == pat.has_edge(i, j)
               for i, j in combinations(range(pat.n), 2)):
            return True
    return False


def ref_find_immersion(g: Graph, t: int):
    """Exhaustive immersion search with fixed lexicographic everything.

    Returns {"branch": ..., "paths": {(u, v): walk}} or None.  No degree
    filters, no pair reordering, no reachability pruning -- a deliberately
    different algorithm from the package oracle.  Usable for n <= 7, t <= 4.
    """
    n = g.n
    if t <= 1:
        return {"branch": tuple(range(t)), "paths": {}} if n >= t else None

    for branch in combinations(range(n), t):
        bset = set(branch)
        pairs = list(combinations(branch, 2))
        used: set[tuple[int, int]] = set()
        found: dict[tuple[int, int], tuple[int, ...]] = {}

        def walks(u: int, v: int, seen: frozenset[int]):
            if g.has_edge(u, v) and edge_key(u, v) not in used:
                yield [u, v]
            for w in range(n):
                if (w in bset or w in seen or w == v
                        or not g.has_edge(u, w) or edge_key(u, w) in used):
                    continue
                for rest in walks(w, v, seen | {w}):
                    yield [u] + rest

        def solve(i: int) -> bool:
            if i == len(pairs):
                return True
            u, v = pairs[i]
            for walk in walks(u, v, frozenset({u})):
                edges = {edge_key(x, y) for x, y in zip(walk, walk[1:])}
                used.update(edges)
                if solve(i + 1):
                    found[(u, v)] = tuple(walk)
                    return True
                used.difference_update(edges)
            return False

        if solve(0):
            return {"branch": branch, "paths": found}
    return None


@st.composite
def graphs(draw, max_n: int = 10, min_n: int = 0):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    if not pairs:
        return Graph.from_edges(n, [])
    edges = draw(st.sets(st.sampled_from(pairs)))
    return Graph.from_edges(n, edges)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Print the acceptance criteria summary lines after the test run."""
    try:
        from test_acceptance import SUMMARY_LINES
    except ImportError:
        return
    if SUMMARY_LINES:
        terminalreporter.section("acceptance criteria")
        for line in SUMMARY_LINES:
            terminalreporter.write_line(line)
