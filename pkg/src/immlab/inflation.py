"""Inflations: blow each vertex of a base graph up into a clique bag.

An inflation of a base graph B with bag sizes f replaces vertex i by a clique
on f(i) fresh vertices and joins two bags completely iff their base vertices
are adjacent.  Two engines live here:

* ``inflate_path`` -- for inflations of even paths it produces a clique
  immersion on the two end bags, with all cross paths alternating through the
  interior bags (pairwise edge-disjoint by construction).
* ``inflate_cycle`` -- for inflations of cycles it produces a clique immersion
  *and* a proper colouring with exactly as many colours as the immersion's
  order, certifying immersion-order >= chromatic number in one object.

``cycle_inflation_chromatic`` computes the exact chromatic number of a cycle
inflation in polynomial time by a transfer DP; it is independent of the
engines and is cross-checked against the general branch-and-bound solver in
the tests.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

from .certificates import (
    ImmersionCertificate,
    Pair,
    PatternImmersion,
    Walk,
    compose_certificates,
    direct_clique_certificate,
    ordered_pair,
)
from .errors import PreconditionError
from .graphs import Graph, cycle_graph, graph_from_doc, mask_of

INFLATION_FORMAT = "immlab-inflation-v1"

Bags = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class InflationSpec:
    """A base graph plus the bag size of every base vertex."""

    base: Graph
    sizes: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.sizes) != self.base.n:
            raise ValueError(f"{len(self.sizes)} bag sizes for {self.base.n} base vertices")
        for s in self.sizes:
            if not (isinstance(s, int) and s >= 1):
                raise ValueError(f"bag sizes must be positive ints, got {s!r}")


def inflate(base: Graph, sizes: tuple[int, ...]) -> tuple[Graph, Bags]:
    """Build the inflation graph; bag i gets the next sizes[i] consecutive ids."""
    spec = InflationSpec(base, tuple(sizes))
    bags: list[tuple[int, ...]] = []
    total = 0
    for s in spec.sizes:
        bags.append(tuple(range(total, total + s)))
        total += s
    masks = [mask_of(b) for b in bags]
    adj = [0] * total
    for i, bag in enumerate(bags):
        row = masks[i]
        for j in range(base.n):
            if base.has_edge(i, j):
                row |= masks[j]
        for v in bag:
            adj[v] = row & ~(1 << v)
    return Graph(total, tuple(adj)), tuple(bags)


def inflation_to_json(spec: InflationSpec) -> str:
    doc = {"format": INFLATION_FORMAT,
           "base": json.loads(spec.base.to_json()),
           "f": list(spec.sizes)}
    return json.dumps(doc, separators=(",", ":"))


def inflation_from_json(text: str) -> InflationSpec:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict) or doc.get("format") != INFLATION_FORMAT:
        raise ValueError(f"not a {INFLATION_FORMAT} document")
    base = graph_from_doc(doc.get("base"))
    f = doc.get("f")
    if not (isinstance(f, list) and all(isinstance(s, int) for s in f)):
        raise ValueError("'f' must be a list of ints")
    return InflationSpec(base, tuple(f))


# -- structural checks ---------------------------------------------------------


def _check_bags(g: Graph, bags: Bags, *, minimum: int) -> list[int]:
    if len(bags) < minimum:
        raise PreconditionError(f"need at least {minimum} bags, got {len(bags)}")
    seen = 0
    for i, bag in enumerate(bags):
        if not bag:
            raise PreconditionError(f"bag {i} is empty")
        m = mask_of(bag)
        if m & seen:
            raise PreconditionError(f"bag {i} overlaps an earlier bag")
        if m & ~g.vertex_mask:
            raise PreconditionError(f"bag {i} mentions vertices outside the host")
        if not g.is_clique(m):
            raise PreconditionError(f"bag {i} is not a clique")
        seen |= m
    return [mask_of(b) for b in bags]


def _complete_between(g: Graph, a: tuple[int, ...], bmask: int) -> bool:
    return all(bmask & ~g.adj[v] == 0 for v in a)


def _anticomplete(g: Graph, a: tuple[int, ...], bmask: int) -> bool:
    return all(bmask & g.adj[v] == 0 for v in a)


# -- path inflations --------------------------------------------------------------


def inflate_path(g: Graph, bags: Bags) -> ImmersionCertificate:
    """Clique immersion on the two end bags of an even-path inflation.

    Preconditions (checked): an even number >= 2 of pairwise disjoint clique
    bags, consecutive bags completely joined, first bag no bigger than every
    bag and last bag no bigger than every even-position bag.

    Cross paths alternate between two fixed rows: pair (r, s) walks the r-th
    smallest vertex of every odd-position bag and the s-th smallest of every
    even-position bag, so for each junction the traversed edge is determined
    by (r, s) and all cross paths are pairwise edge-disjoint.
    """
    L = len(bags)
    if L % 2 != 0:
        raise PreconditionError(f"path inflation engine needs an even bag count, got {L}")
    masks = _check_bags(g, bags, minimum=2)
    for i in range(L - 1):
        if not _complete_between(g, bags[i], masks[i + 1]):
            raise PreconditionError(f"bags {i} and {i + 1} are not completely joined")
    p = len(bags[0])
    q = len(bags[L - 1])
    if any(len(b) < p for b in bags):
        raise PreconditionError("first bag must be no bigger than every bag")
    if any(len(bags[j]) < q for j in range(1, L, 2)):
        raise PreconditionError("last bag must be no bigger than every even-position bag")

    rows = [tuple(sorted(b)) for b in bags]
    paths: dict[Pair, Walk] = {}
    for u, v in combinations(sorted(bags[0]), 2):
        paths[(u, v)] = (u, v)
    for u, v in combinations(sorted(bags[L - 1]), 2):
        paths[(u, v)] = (u, v)
    for r in range(p):
        for s in range(q):
            walk = tuple(rows[j][r if j % 2 == 0 else s] for j in range(L))
            key = ordered_pair(walk[0], walk[-1])
            paths[key] = walk if walk[0] == key[0] else walk[::-1]
    branch = tuple(sorted(set(bags[0]) | set(bags[L - 1])))
    return ImmersionCertificate(g.sha256(), branch, paths)


# -- exact chromatic number of cycle inflations -------------------------------------


def _transition_bounds(sizes: tuple[int, ...], t: int, i: int, x: int) -> range:
    """Feasible |S_{i+1} cap S_0| values given |S_i cap S_0| = x."""
    b0, bi, bnext = sizes[0], sizes[i], sizes[i + 1]
    outside = t - b0 - bi + x  # colours in neither S_0 nor S_i
    lo = max(0, bnext - outside)
    hi = min(b0 - x, bnext)
    return range(lo, hi + 1)


def _bag_sets_for(sizes: tuple[int, ...], t: int) -> tuple[tuple[int, ...], ...] | None:
    """Colour sets S_i, |S_i| = sizes[i], cyclically disjoint, within t colours.

    Transfer DP on x_i = |S_i cap S_0|: by colour-permutation symmetry the
    reachable futures depend on (S_0, S_i) only through x_i.  Accepts iff
    x_{k-1} = 0.  Reconstruction picks the smallest feasible intersection at
    each step and realises sets lowest-colours-first, so output is canonical.
    """
    k = len(sizes)
    if sizes[0] > t:
        return None
    reachable: list[set[int]] = [set() for _ in range(k)]
    reachable[0] = {sizes[0]}
    for i in range(k - 1):
        for x in reachable[i]:
            for y in _transition_bounds(sizes, t, i, x):
                reachable[i + 1].add(y)
    if 0 not in reachable[k - 1]:
        return None
    xs = [0] * k
    xs[0] = sizes[0]
    xs[k - 1] = 0
    for i in range(k - 2, 0, -1):
        xs[i] = min(x for x in reachable[i]
                    if xs[i + 1] in _transition_bounds(sizes, t, i, x))
    s0 = tuple(range(sizes[0]))
    sets = [s0]
    prev = set(s0)
    palette = set(range(t))
    for i in range(1, k):
        y = xs[i]
        from_s0 = sorted(set(s0) - prev)[:y]
        outside = sorted(palette - set(s0) - prev)[: sizes[i] - y]
        cur = tuple(sorted(from_s0 + outside))
        if len(cur) != sizes[i]:
            raise AssertionError("reconstruction desynchronised from the DP")
        sets.append(cur)
        prev = set(cur)
    return tuple(sets)


def cycle_inflation_chromatic(sizes: tuple[int, ...]) -> tuple[int, tuple[tuple[int, ...], ...]]:
    """Exact chromatic number of the inflation of C_k with these bag sizes.

    Returns (chi, colour sets per bag).  Search ascends from the maximum
    adjacent bag-size sum (a clique in the inflation, hence a lower bound);
    t = n is always feasible, so the loop terminates.
    """
    k = len(sizes)
    if k < 3:
        raise PreconditionError(f"cycles need at least 3 bags, got {k}")
    for s in sizes:
        if s < 1:
            raise PreconditionError("bag sizes must be positive")
    start = max(sizes[i] + sizes[(i + 1) % k] for i in range(k))
    total = sum(sizes)
    for t in range(start, total + 1):
        sets = _bag_sets_for(tuple(sizes), t)
        if sets is not None:
            return t, sets
    raise AssertionError("t = n is always feasible for disjoint colour sets")


def bag_colouring_to_vertices(g: Graph, bags: Bags,
                              bag_sets: tuple[tuple[int, ...], ...]) -> tuple[int, ...]:
    """Expand per-bag colour sets into a per-vertex colouring of the host."""
    colour = [-1] * g.n
    for bag, colours in zip(bags, bag_sets):
        for v, c in zip(sorted(bag), sorted(colours)):
            colour[v] = c
    return tuple(colour)


# -- cycle inflations ----------------------------------------------------------------


def _validate_cycle_bags(g: Graph, bags: Bags) -> None:
    masks = _check_bags(g, bags, minimum=3)
    k = len(bags)
    union = 0
    for m in masks:
        union |= m
    if union != g.vertex_mask:
        raise PreconditionError("bags must cover every host vertex")
    for i in range(k):
        for j in range(i + 1, k):
            consecutive = (j - i == 1) or (i == 0 and j == k - 1)
            if consecutive:
                if not _complete_between(g, bags[i], masks[j]):
                    raise PreconditionError(f"bags {i} and {j} are not completely joined")
            elif not _anticomplete(g, bags[i], masks[j]):
                raise PreconditionError(
                    f"bags {i} and {j} must be anticomplete (inflation not exact)")


def _max_adjacent_rotation(sizes: list[int]) -> int:
    """Index i (lowest on ties) maximising sizes[i] + sizes[i+1 mod k]."""
    k = len(sizes)
    return max(range(k), key=lambda i: (sizes[i] + sizes[(i + 1) % k], -i))


def inflate_cycle(g: Graph, bags: Bags) -> tuple[ImmersionCertificate, tuple[int, ...]]:
    """Clique immersion plus a matching proper colouring for a cycle inflation.

    The certificate's order equals the number of colours used, so the pair
    witnesses immersion-order >= #colours >= chi(g).  The order can exceed
    chi(g) -- the bigger immersion is genuinely there; callers wanting chi
    exactly should trim against ``cycle_inflation_chromatic``.

    Triangle inflations are complete graphs (direct certificate, all colours
    distinct).  C4 inflations are perfect: the best adjacent bag pair is a
    maximum clique and four colour blocks reach the same count.  Longer
    cycles rotate the heaviest adjacent pair to the end, route all paths
    between the end pair's neighbours through it (even-path engine on four
    bags), shrink to a (k-2)-cycle inflation joined at the seam by those
    paths, recurse, and compose; the colouring of the deleted two bags reuses
    the neighbours' colours plus a leftover palette, with fresh colours only
    when the heavy pair itself forces the count up -- and then the heavy pair
    is itself a big enough clique to certify directly.
    """
    _validate_cycle_bags(g, bags)
    k = len(bags)
    sizes = [len(b) for b in bags]

    if k == 3:
        branch = tuple(range(g.n))
        return direct_clique_certificate(g, branch), tuple(range(g.n))

    if k == 4:
        heavy = max(range(4), key=lambda i: (sizes[i] + sizes[(i + 1) % 4], -i))
        clique = sorted(set(bags[heavy]) | set(bags[(heavy + 1) % 4]))
        cert = direct_clique_certificate(g, clique)
        x = max(sizes[0], sizes[2])
        colour = [-1] * g.n
        for bag_index, base in ((0, 0), (2, 0), (1, x), (3, x)):
            for offset, v in enumerate(sorted(bags[bag_index])):
                colour[v] = base + offset
        return cert, tuple(colour)

    # k >= 5: rotate the heaviest adjacent pair to positions (k-2, k-1).
    shift = (_max_adjacent_rotation(sizes) + 2) % k
    rb = tuple(bags[(j + shift) % k] for j in range(k))
    rs = [len(b) for b in rb]
    # Heaviest-at-end gives rs[0] <= rs[k-2] and rs[k-3] <= rs[k-1].
    if rs[0] > rs[k - 2] or rs[k - 3] > rs[k - 1]:
        raise AssertionError("rotation failed to dominate its neighbours")

    # All |B_{k-3}| x |B_0| seam paths through the two heavy bags.
    if rs[k - 3] <= rs[0]:
        path_bags = (rb[k - 3], rb[k - 2], rb[k - 1], rb[0])
    else:
        path_bags = (rb[0], rb[k - 1], rb[k - 2], rb[k - 3])
    seam = inflate_path(g, path_bags)

    # Abstract (k-2)-cycle inflation; abstract vertex <-> host vertex by rank.
    inner_sizes = tuple(rs[: k - 2])
    abstract, abags = inflate(cycle_graph(k - 2), inner_sizes)
    to_host: list[int] = []
    for j in range(k - 2):
        to_host.extend(sorted(rb[j]))

    # Outer paths: every abstract edge is a direct host edge, except the seam
    # pairs (one endpoint in each end bag), which ride the even-path paths.
    paths: dict[Pair, Walk] = {}
    first_mask = mask_of(rb[0])
    last_mask = mask_of(rb[k - 3])
    for a, b in abstract.edges():
        ha, hb = to_host[a], to_host[b]
        cross = ((first_mask >> ha & 1) and (last_mask >> hb & 1)) or \
                ((last_mask >> ha & 1) and (first_mask >> hb & 1))
        if cross:
            walk = seam.paths[ordered_pair(ha, hb)]
            paths[(a, b)] = walk if walk[0] == ha else walk[::-1]
        else:
            paths[(a, b)] = (ha, hb)
    outer = PatternImmersion(g.sha256(), abstract, tuple(to_host), paths)

    inner_cert, inner_colour = inflate_cycle(abstract, abags)
    cert = compose_certificates(g, outer, inner_cert)

    # Extend the colouring to the two heavy bags.
    t_inner = max(inner_colour) + 1
    colour = [-1] * g.n
    for a, c in enumerate(inner_colour):
        colour[to_host[a]] = c
    first_colours = sorted(colour[v] for v in rb[0])
    last_colours = sorted(colour[v] for v in rb[k - 3])
    heavy1 = sorted(rb[k - 2])  # neighbour of rb[k-3] and rb[k-1]
    heavy2 = sorted(rb[k - 1])  # neighbour of rb[k-2] and rb[0]
    for v, c in zip(heavy1, first_colours):
        colour[v] = c
    for v, c in zip(heavy2, last_colours):
        colour[v] = c
    leftovers = [c for c in range(t_inner)
                 if c not in set(first_colours) | set(last_colours)]
    fresh = t_inner
    for v in heavy1[len(first_colours):] + heavy2[len(last_colours):]:
        if leftovers:
            colour[v] = leftovers.pop(0)
        else:
            colour[v] = fresh
            fresh += 1
    total = fresh if fresh > t_inner else t_inner

    if total > t_inner:
        # The heavy adjacent pair is a clique of exactly `total` vertices.
        heavy_clique = sorted(set(rb[k - 2]) | set(rb[k - 1]))
        if len(heavy_clique) != total:
            raise AssertionError("fresh-colour count disagrees with the heavy pair")
        cert = direct_clique_certificate(g, heavy_clique)
    return cert, tuple(colour)
