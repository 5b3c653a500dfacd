"""Dense undirected graphs on {0, ..., n-1} with bitset adjacency.

The neighbourhood of vertex ``v`` is a Python int whose bit ``u`` is set iff
``uv`` is an edge.  Ints are arbitrary precision, so neighbourhood unions,
intersections and complements are single integer operations regardless of n.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_VERTICES = 4096

GRAPH_FORMAT = "immlab-graph-v1"


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    out = 0
    for v in vertices:
        out |= 1 << v
    return out


@dataclass(frozen=True)
class Graph:
    """Immutable undirected simple graph; ``adj[v]`` is the neighbour bitset of v."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside [0, {MAX_VERTICES}]")
        if len(self.adj) != self.n:
            raise ValueError("adjacency tuple length != n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"adjacency of {v} mentions vertices >= n")
            if row >> v & 1:
                raise ValueError(f"self-loop at {v}")
        for v in range(self.n):
            for u in bits(self.adj[v]):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency {v}-{u}")

    # -- construction -----------------------------------------------------

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return Graph(n, tuple(adj))

    # -- queries -----------------------------------------------------------

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as (u, v) with u < v, in lexicographic order."""
        out = []
        for u in range(self.n):
            above = self.adj[u] >> (u + 1) << (u + 1)
            for v in bits(above):
                out.append((u, v))
        return out

    def non_neighbors(self, v: int) -> int:
        """Closed non-neighbourhood: everything except v and its neighbours."""
        return self.vertex_mask & ~self.adj[v] & ~(1 << v)

    def is_clique(self, mask: int) -> bool:
        for v in bits(mask):
            if mask & ~self.adj[v] & ~(1 << v):
                return False
        return True

    def is_independent(self, mask: int) -> bool:
        for v in bits(mask):
            if mask & self.adj[v]:
                return False
        return True

    # -- derived graphs ----------------------------------------------------

    def complement(self) -> "Graph":
        full = self.vertex_mask
        return Graph(self.n, tuple(full & ~self.adj[v] & ~(1 << v) for v in range(self.n)))

    def induced_subgraph(self, keep: Iterable[int]) -> tuple["Graph", dict[int, int]]:
        """Subgraph induced on ``keep`` plus the old->new id map.

        Kept vertices are renumbered 0..k-1 in increasing old-id order, so the
        map is monotone and deterministic.
        """
        kept = sorted(set(keep))
        remap = {old: new for new, old in enumerate(kept)}
        adj = []
        for old in kept:
            row = 0
            for w in bits(self.adj[old]):
                to = remap.get(w)
                if to is not None:
                    row |= 1 << to
            adj.append(row)
        return Graph(len(kept), tuple(adj)), remap

    def delete_vertices(self, drop: Iterable[int]) -> tuple["Graph", dict[int, int]]:
        gone = set(drop)
        return self.induced_subgraph(v for v in range(self.n) if v not in gone)

    # -- canonical serialization --------------------------------------------

    def to_json(self) -> str:
        """Canonical one-line JSON; byte-identical for equal graphs."""
        doc = {"format": GRAPH_FORMAT, "n": self.n,
               "edges": [[u, v] for u, v in self.edges()]}
        return json.dumps(doc, separators=(",", ":"))

    def sha256(self) -> str:
        return hashlib.sha256(self.to_json().encode("ascii")).hexdigest()

    def to_text(self) -> str:
        """Whitespace edge-list format: ``n m`` header, then one edge per line."""
        es = self.edges()
        lines = [f"{self.n} {len(es)}"]
        lines.extend(f"{u} {v}" for u, v in es)
        return "\n".join(lines) + "\n"


def graph_from_json(text: str) -> Graph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON: {exc}") from exc
    return graph_from_doc(doc)


def graph_from_doc(doc: object) -> Graph:
    """Build a graph from an already-parsed canonical JSON document."""
    if not isinstance(doc, dict) or doc.get("format") != GRAPH_FORMAT:
        raise ValueError(f"not a {GRAPH_FORMAT} document")
    n = doc.get("n")
    edges = doc.get("edges")
    if not isinstance(n, int) or not isinstance(edges, list):
        raise ValueError("graph document needs integer 'n' and list 'edges'")
    pairs = []
    for e in edges:
        if not (isinstance(e, list) and len(e) == 2
                and all(isinstance(x, int) for x in e)):
            raise ValueError(f"malformed edge entry {e!r}")
        pairs.append((e[0], e[1]))
    return Graph.from_edges(n, pairs)


def graph_from_text(text: str) -> Graph:
    """Parse the whitespace edge-list format (``n m`` header, m endpoint pairs)."""
    tokens = text.split()
    if len(tokens) < 2:
        raise ValueError("missing 'n m' header")
    try:
        numbers = [int(t) for t in tokens]
    except ValueError as exc:
        raise ValueError(f"non-integer token in edge list: {exc}") from exc
    n, m = numbers[0], numbers[1]
    if len(numbers) != 2 + 2 * m:
        raise ValueError(f"header promises {m} edges but {(len(numbers) - 2) / 2} given")
    pairs = [(numbers[2 + 2 * i], numbers[3 + 2 * i]) for i in range(m)]
    return Graph.from_edges(n, pairs)


# -- standard graphs --------------------------------------------------------


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def disjoint_union(a: Graph, b: Graph) -> Graph:
    adj = list(a.adj) + [row << a.n for row in b.adj]
    return Graph(a.n + b.n, tuple(adj))


def join(a: Graph, b: Graph) -> Graph:
    """Disjoint union of ``a`` and ``b`` plus every edge between the halves."""
    bmask = ((1 << b.n) - 1) << a.n
    amask = (1 << a.n) - 1
    adj = [row | bmask for row in a.adj]
    adj += [(row << a.n) | amask for row in b.adj]
    return Graph(a.n + b.n, tuple(adj))


# -- the small-pattern catalogue ---------------------------------------------
#
# Fixed edge lists; embeddings found elsewhere report host vertices in this
# vertex order.  "owh" is the 5-vertex graph made of a triangle with a
# 2-edge tail; "K3v" is a triangle plus one isolated vertex; "K4minus" is K4
# with one edge removed; "paw" is a triangle with a pendant edge.

PATTERN_EDGES: dict[str, tuple[int, tuple[tuple[int, int], ...]]] = {
    "K4": (4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))),
    "K4minus": (4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3))),
    "C4": (4, ((0, 1), (1, 2), (2, 3), (0, 3))),
    "P4": (4, ((0, 1), (1, 2), (2, 3))),
    "paw": (4, ((0, 1), (0, 2), (1, 2), (2, 3))),
    "K3v": (4, ((0, 1), (0, 2), (1, 2))),
    "twoK2": (4, ((0, 1), (2, 3))),
    "C5": (5, ((0, 1), (1, 2), (2, 3), (3, 4), (0, 4))),
    "house": (5, ((0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (1, 4))),
    "owh": (5, ((0, 1), (0, 2), (1, 2), (2, 3), (3, 4))),
}

#: The four-vertex patterns, in the order the automatic solver tries them.
FOUR_VERTEX_PATTERNS = ("C4", "P4", "paw", "twoK2", "K3v", "K4minus", "K4")


def pattern(name: str) -> Graph:
    try:
        n, edges = PATTERN_EDGES[name]
    except KeyError:
        raise ValueError(f"unknown pattern {name!r}; known: {sorted(PATTERN_EDGES)}")
    return Graph.from_edges(n, edges)
