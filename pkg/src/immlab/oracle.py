"""Exhaustive clique-immersion search on small graphs.

This is the ground-truth referee for the constructive engines: slow, simple,
and independent of them.  A found immersion is returned as a certificate and
re-verified before leaving; a ``None`` answer is a proof of absence; running
out of budget raises ``BudgetExceeded`` (which is *not* a "no").
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .certificates import (
    ImmersionCertificate,
    Pair,
    Walk,
    ordered_pair,
    verify_certificate,
)
from .errors import BudgetExceeded, PreconditionError
from .graphs import Graph, bits, mask_of


@dataclass(frozen=True)
class OracleBudget:
    """Hard limits for the exhaustive search."""

    max_n: int = 10
    max_t: int = 6
    max_nodes: int = 2_000_000


def _reachable(g: Graph, u: int, v: int, bmask: int, used: set[Pair]) -> bool:
    """Can u still reach v through unused edges and non-branch interiors?"""
    seen = 1 << u
    frontier = [u]
    while frontier:
        nxt = []
        for x in frontier:
            for y in bits(g.adj[x] & ~seen):
                if ordered_pair(x, y) in used:
                    continue
                if y == v:
                    return True
                if bmask >> y & 1:
                    continue
                seen |= 1 << y
                nxt.append(y)
        frontier = nxt
    return False


def brute_force_immersion(g: Graph, t: int,
                          budget: OracleBudget | None = None) -> ImmersionCertificate | None:
    """Find a K_t immersion certificate, or prove there is none.

    Branch sets are enumerated lexicographically over vertices of degree at
    least t-1 (every branch vertex needs t-1 edge-disjoint escapes).  For a
    fixed branch set, adjacent pairs take their own edge -- sound with no loss
    of generality, because a branch-branch edge cannot appear inside any other
    pair's path (its endpoints would be interior branch vertices).  Remaining
    pairs are tackled fewest-connections-first, each by lexicographic DFS over
    simple paths with non-branch interiors and unused edges.
    """
    budget = budget or OracleBudget()
    if g.n > budget.max_n:
        raise PreconditionError(f"oracle limited to n <= {budget.max_n}, got {g.n}")
    if t > budget.max_t:
        raise PreconditionError(f"oracle limited to t <= {budget.max_t}, got {t}")
    if t < 0:
        raise ValueError(f"negative clique order {t}")
    if t <= 1:
        if g.n < t:
            return None
        return ImmersionCertificate(g.sha256(), tuple(range(t)), {})

    nodes = 0

    def tick() -> None:
        nonlocal nodes
        nodes += 1
        if nodes > budget.max_nodes:
            raise BudgetExceeded(
                f"immersion search for t={t} exceeded {budget.max_nodes} nodes")

    candidates = [v for v in range(g.n) if g.degree(v) >= t - 1]
    if len(candidates) < t:
        return None
    for branch in combinations(candidates, t):
        cert = _with_branch(g, branch, tick)
        if cert is not None:
            verdict = verify_certificate(g, cert)
            if not verdict.ok:
                raise AssertionError(f"oracle produced a bad certificate: {verdict}")
            return cert
    return None


def _with_branch(g: Graph, branch: tuple[int, ...], tick) -> ImmersionCertificate | None:
    bmask = mask_of(branch)
    paths: dict[Pair, Walk] = {}
    used: set[Pair] = set()
    todo: list[Pair] = []
    for u, v in combinations(branch, 2):
        if g.has_edge(u, v):
            paths[(u, v)] = (u, v)
            used.add((u, v))
        else:
            todo.append((u, v))
    todo.sort(key=lambda p: ((g.adj[p[0]] & g.adj[p[1]] & ~bmask).bit_count(), p))

    def solve(i: int) -> bool:
        if i == len(todo):
            return True
        u, v = todo[i]
        if not _reachable(g, u, v, bmask, used):
            return False
        walk = [u]

        def extend(x: int, onpath: int) -> bool:
            tick()
            for y in bits(g.adj[x]):
                edge = ordered_pair(x, y)
                if edge in used:
                    continue
                if y == v:
                    walk.append(v)
                    new_edges = [ordered_pair(a, b) for a, b in zip(walk, walk[1:])]
                    used.update(new_edges)
                    paths[(u, v)] = tuple(walk)
                    if solve(i + 1):
                        return True
                    del paths[(u, v)]
                    used.difference_update(new_edges)
                    walk.pop()
                elif not (bmask | onpath) >> y & 1:
                    walk.append(y)
                    if extend(y, onpath | 1 << y):
                        return True
                    walk.pop()
            return False

        return extend(u, 1 << u)

    if solve(0):
        return ImmersionCertificate(g.sha256(), branch, dict(paths))
    return None


def max_immersion_order(g: Graph,
                        budget: OracleBudget | None = None
                        ) -> tuple[int, ImmersionCertificate]:
    """Largest t (capped at the budget) with a K_t immersion, plus certificate.

    Ascending search; the first miss stops it, which is sound because a K_t
    immersion trims to a K_{t-1} immersion.
    """
    budget = budget or OracleBudget()
    best = 0
    best_cert = ImmersionCertificate(g.sha256(), (), {})
    for t in range(1, min(budget.max_t, g.n) + 1):
        cert = brute_force_immersion(g, t, budget)
        if cert is None:
            break
        best, best_cert = t, cert
    return best, best_cert
