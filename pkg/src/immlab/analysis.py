"""Exact structural analysis: cliques, colourings, induced patterns, holes.

Everything here is exact and deterministic; these routines double as the
independent referees for the constructive machinery, so none of them may
share code with it.
"""

from __future__ import annotations

from .errors import PreconditionError
from .graphs import Graph, bits

MAX_CLIQUE_N = 128
MAX_CHROMATIC_N = 24
MAX_HOST_5PATTERN = 512


# -- cliques and independent sets --------------------------------------------


def max_clique(g: Graph) -> tuple[int, frozenset[int]]:
    """Maximum clique size and one witness (branch and bound, colour bound)."""
    if g.n > MAX_CLIQUE_N:
        raise PreconditionError(f"max_clique limited to n <= {MAX_CLIQUE_N}, got {g.n}")
    if g.n == 0:
        return 0, frozenset()
    adj = g.adj
    best_mask = 1  # vertex 0 alone; any vertex is a 1-clique
    best_size = 1

    def expand(r_mask: int, r_size: int, cand: int) -> None:
        nonlocal best_mask, best_size
        # Greedy-colour the candidates; a vertex's colour number bounds the
        # clique extension possible from it and everything coloured earlier.
        order: list[int] = []
        bound: list[int] = []
        uncoloured = cand
        colour = 0
        while uncoloured:
            colour += 1
            avail = uncoloured
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                avail &= ~adj[v] & ~low
                uncoloured ^= low
                order.append(v)
                bound.append(colour)
        for i in range(len(order) - 1, -1, -1):
            if r_size + bound[i] <= best_size:
                return
            v = order[i]
            new_cand = cand & adj[v]
            if new_cand:
                expand(r_mask | (1 << v), r_size + 1, new_cand)
            elif r_size + 1 > best_size:
                best_size = r_size + 1
                best_mask = r_mask | (1 << v)
            cand &= ~(1 << v)

    expand(0, 0, g.vertex_mask)
    return best_size, frozenset(bits(best_mask))


def independence_number(g: Graph) -> tuple[int, frozenset[int]]:
    """alpha(g) with a witness independent set."""
    return max_clique(g.complement())


def independent_triple(g: Graph) -> tuple[int, int, int] | None:
    """Lexicographically least independent 3-set, or None (certifying alpha <= 2).

    Works at any n the toolkit admits; this is the cheap exact test the
    constructions use for their alpha <= 2 precondition.
    """
    non = [g.non_neighbors(v) for v in range(g.n)]
    for u in range(g.n):
        above_u = non[u] >> (u + 1) << (u + 1)
        for v in bits(above_u):
            common = non[u] & non[v]
            common = common >> (v + 1) << (v + 1)
            if common:
                w = (common & -common).bit_length() - 1
                return (u, v, w)
    return None


def has_independence_at_most_two(g: Graph) -> bool:
    return independent_triple(g) is None


# -- colouring ----------------------------------------------------------------


def _greedy_colouring(g: Graph) -> list[int]:
    colour = [-1] * g.n
    for v in range(g.n):
        used = 0
        for u in bits(g.adj[v]):
            if colour[u] >= 0:
                used |= 1 << colour[u]
        c = 0
        while used >> c & 1:
            c += 1
        colour[v] = c
    return colour


def chromatic_number(g: Graph, max_n: int = MAX_CHROMATIC_N) -> tuple[int, tuple[int, ...]]:
    """Exact chromatic number with a proper-colouring witness.

    Branch and bound over colour classes: vertices are coloured in a fixed
    order, each with an already-used colour or one fresh colour.  A maximum
    clique is pre-coloured (sound symmetry breaking), and the search stops as
    soon as the clique/size lower bound is met.
    """
    if g.n > max_n:
        raise PreconditionError(f"chromatic_number limited to n <= {max_n}, got {g.n}")
    if g.n == 0:
        return 0, ()
    omega, clique = max_clique(g)
    alpha, _ = independence_number(g)
    lower = max(omega, -(-g.n // alpha))

    colour = [-1] * g.n
    clique_sorted = sorted(clique)
    for c, v in enumerate(clique_sorted):
        colour[v] = c
    rest = [v for v in range(g.n) if colour[v] < 0]

    greedy = _greedy_colouring(g)
    best_used = max(greedy) + 1
    best = list(greedy)
    if best_used == lower:
        return best_used, tuple(best)

    def descend(i: int, used: int) -> bool:
        """Returns True once a colouring matching the lower bound is found."""
        nonlocal best_used, best
        if used >= best_used:
            return False
        if i == len(rest):
            best_used = used
            best = colour.copy()
            return best_used == lower
        v = rest[i]
        seen = 0
        for u in bits(g.adj[v]):
            if colour[u] >= 0:
                seen |= 1 << colour[u]
        for c in range(used):
            if not seen >> c & 1:
                colour[v] = c
                if descend(i + 1, used):
                    return True
        if used + 1 < best_used:
            colour[v] = used
            if descend(i + 1, used + 1):
                return True
        colour[v] = -1
        return False

    descend(0, omega)
    return best_used, tuple(best)


# -- induced-subgraph search ---------------------------------------------------


def find_induced_embedding(g: Graph, h: Graph) -> tuple[int, ...] | None:
    """First (in DFS order over ascending host ids) induced embedding of h.

    Returns a tuple phi with phi[i] = host vertex playing h-vertex i, such
    that g.has_edge(phi[i], phi[j]) iff h.has_edge(i, j).  Candidates are
    narrowed with bitmasks: degree-based pruning is unsound for *induced*
    embeddings, so only exact prefix compatibility is used.
    """
    if h.n == 0:
        return ()
    if h.n >= 5 and g.n > MAX_HOST_5PATTERN:
        raise PreconditionError(
            f"induced search for {h.n}-vertex patterns limited to hosts with "
            f"n <= {MAX_HOST_5PATTERN}, got {g.n}")
    if g.n < h.n:
        return None
    full = g.vertex_mask
    phi: list[int] = []

    def extend(cands: list[int]) -> tuple[int, ...] | None:
        i = len(phi)
        if i == h.n:
            return tuple(phi)
        for v in bits(cands[i]):
            narrowed = list(cands)
            ok = True
            for j in range(i + 1, h.n):
                if h.has_edge(i, j):
                    narrowed[j] &= g.adj[v]
                else:
                    narrowed[j] &= full & ~g.adj[v] & ~(1 << v)
                if not narrowed[j]:
                    ok = False
                    break
            if not ok:
                continue
            phi.append(v)
            got = extend(narrowed)
            if got is not None:
                return got
            phi.pop()
        return None

    return extend([full] * h.n)


def find_induced(g: Graph, h: Graph) -> frozenset[int] | None:
    """Vertex set of some induced copy of h in g, or None."""
    emb = find_induced_embedding(g, h)
    return None if emb is None else frozenset(emb)


# -- holes ---------------------------------------------------------------------


def find_hole_in_range(g: Graph, lo: int, hi: int) -> tuple[int, ...] | None:
    """First induced cycle with length in [lo, hi]; lo must be >= 4.

    The returned tuple lists the hole in cyclic order starting at its minimum
    vertex.  Search is DFS over induced paths whose start is the path minimum,
    ascending at every choice point, so the answer is deterministic.
    """
    if lo < 4:
        raise ValueError(f"holes start at length 4, got lo={lo}")
    if hi < lo:
        raise ValueError(f"empty range [{lo}, {hi}]")
    adj = g.adj

    def grow(s: int, path: list[int], forbidden: int) -> tuple[int, ...] | None:
        # forbidden: <= s, already used, or adjacent to a non-tip path vertex.
        tail = path[-1]
        for v in bits(adj[tail] & ~forbidden):
            if adj[s] >> v & 1:
                if len(path) + 1 >= lo:
                    return tuple(path) + (v,)
                # adjacent to s but the cycle would be short: v cannot sit in
                # the interior either, or it chords the eventual cycle.
                continue
            if len(path) + 1 < hi:
                got = grow(s, path + [v], forbidden | (1 << v) | adj[tail])
                if got is not None:
                    return got
        return None

    below = 0
    for s in range(g.n):
        below |= 1 << s
        for p1 in bits(adj[s] & ~below):
            got = grow(s, [s, p1], below | (1 << p1))
            if got is not None:
                return got
    return None


# -- chordality ------------------------------------------------------------------


def chordal_peo(g: Graph) -> tuple[int, ...] | None:
    """A perfect elimination ordering if g is chordal, else None.

    Maximum-cardinality search (max visited-neighbour count, lowest id on
    ties); the reverse visit order is a PEO iff the graph is chordal, which
    the standard earliest-later-neighbour check confirms.
    """
    n = g.n
    weight = [0] * n
    visited = 0
    visit: list[int] = []
    for _ in range(n):
        v = max((u for u in range(n) if not visited >> u & 1),
                key=lambda u: (weight[u], -u))
        visit.append(v)
        visited |= 1 << v
        for u in bits(g.adj[v] & ~visited):
            weight[u] += 1
    peo = visit[::-1]
    pos = [0] * n
    for i, v in enumerate(peo):
        pos[v] = i
    for v in range(n):
        later = 0
        for u in bits(g.adj[v]):
            if pos[u] > pos[v]:
                later |= 1 << u
        if later:
            first = min(bits(later), key=lambda u: pos[u])
            if later & ~g.adj[first] & ~(1 << first):
                return None
    return tuple(peo)


def peo_max_clique(g: Graph, peo: tuple[int, ...]) -> frozenset[int]:
    """Maximum clique of a chordal graph read off a perfect elimination order."""
    pos = [0] * g.n
    for i, v in enumerate(peo):
        pos[v] = i
    best: frozenset[int] = frozenset()
    for v in peo:
        members = {v}
        members.update(u for u in bits(g.adj[v]) if pos[u] > pos[v])
        if len(members) > len(best):
            best = frozenset(members)
    return best
