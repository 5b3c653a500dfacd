"""Constructive clique immersions in graphs of independence number two.

Every public routine returns a certificate that stands on its own (the
verifier never trusts the construction), and every structural fact the
construction leans on is checked at runtime: a failed check raises
``ClaimViolation`` carrying the offending graph and vertices, because for the
advertised input class each such fact is a theorem and a counterexample is
worth keeping.

The routines and their guarantees:

* ``hole_free_immersion``      -- no hole of length in [4, 2*alpha]: order chi(g).
* ``house_free_immersion``     -- house-free, alpha <= 2: order exactly ceil(n/2).
* ``owh_free_immersion``       -- no triangle-with-tail, alpha <= 2: ceil(n/2).
* ``k4_free_immersion``        -- K4-free, alpha <= 2 (so n <= 8): ceil(n/2).
* ``k4minus_free_clique``      -- K4-minus-an-edge-free, alpha <= 2: a two-clique
                                  partition (when one exists) and a ceil(n/2) clique.
* ``pattern_free_immersion``   -- any one 4-vertex pattern excluded: ceil(n/2).
* ``extend_over_dominating_*`` -- the inductive steps, usable directly: given a
                                  dominating induced C4 / C5 / P4 and a certificate
                                  for the graph minus four vertices, two more branch
                                  vertices are attached through the removed part.
"""

from __future__ import annotations

import logging
from itertools import combinations, permutations

from .analysis import (
    chordal_peo,
    find_hole_in_range,
    find_induced,
    find_induced_embedding,
    independence_number,
    independent_triple,
    max_clique,
    peo_max_clique,
)
from .certificates import (
    ImmersionCertificate,
    Pair,
    Walk,
    direct_clique_certificate,
    extend_with_universal,
    lift_certificate,
    ordered_pair,
    trim_certificate,
    verify_certificate,
)
from .errors import ClaimViolation, PreconditionError
from .graphs import FOUR_VERTEX_PATTERNS, Graph, bits, mask_of, pattern
from .inflation import cycle_inflation_chromatic, inflate_cycle
from .oracle import OracleBudget, brute_force_immersion, max_immersion_order

log = logging.getLogger(__name__)


def half_ceil(n: int) -> int:
    return (n + 1) // 2


# -- shared plumbing -----------------------------------------------------------


def _require_alpha_at_most_two(g: Graph) -> None:
    triple = independent_triple(g)
    if triple is not None:
        raise PreconditionError(
            f"independence number exceeds 2: independent triple {triple}")


def _require_pattern_free(g: Graph, name: str) -> None:
    hit = find_induced(g, pattern(name))
    if hit is not None:
        raise PreconditionError(f"input contains an induced {name} on {sorted(hit)}")


def _require_induced_at(g: Graph, verts: tuple[int, ...], name: str) -> None:
    pat = pattern(name)
    if len(verts) != pat.n or len(set(verts)) != pat.n:
        raise PreconditionError(f"{name} needs {pat.n} distinct vertices, got {verts}")
    for v in verts:
        if not 0 <= v < g.n:
            raise PreconditionError(f"vertex {v} out of range")
    for i in range(pat.n):
        for j in range(i + 1, pat.n):
            if g.has_edge(verts[i], verts[j]) != pat.has_edge(i, j):
                raise PreconditionError(
                    f"vertices {verts} do not induce a {name} in this order "
                    f"(pair ({verts[i]},{verts[j]}) is wrong)")


def _require_dominating_edges(g: Graph, verts: tuple[int, ...], name: str) -> None:
    pat = pattern(name)
    scope = g.vertex_mask & ~mask_of(verts)
    for i, j in pat.edges():
        u, v = verts[i], verts[j]
        missed = scope & ~g.adj[u] & ~g.adj[v]
        if missed:
            w = (missed & -missed).bit_length() - 1
            raise PreconditionError(
                f"edge ({u},{v}) of the {name} does not dominate vertex {w}")


def _prepare_subcert(g: Graph, subcert: ImmersionCertificate,
                     removed: set[int], target: int) -> ImmersionCertificate:
    """Trim the sub-certificate to its required order and insist it keeps off
    the removed vertices."""
    if subcert.host_hash != g.sha256():
        raise PreconditionError("sub-certificate is not over this host graph")
    if subcert.order < target:
        raise PreconditionError(
            f"sub-certificate order {subcert.order} is below the required {target}")
    sub = trim_certificate(subcert, target)
    touched = set(sub.branch)
    for walk in sub.paths.values():
        touched.update(walk)
    if touched & removed:
        raise PreconditionError(
            f"sub-certificate touches removed vertices {sorted(touched & removed)}")
    return sub


def _emit(g: Graph, paths: dict[Pair, Walk], walk: list[int]) -> None:
    """Record a path after checking each claimed adjacency really is an edge."""
    for x, y in zip(walk, walk[1:]):
        if not g.has_edge(x, y):
            raise ClaimViolation("construction would use a non-edge", graph=g,
                                 context={"walk": list(walk), "missing": (x, y)})
    key = ordered_pair(walk[0], walk[-1])
    if key in paths:
        raise AssertionError(f"two paths assembled for pair {key}")
    paths[key] = tuple(walk) if walk[0] == key[0] else tuple(reversed(walk))


def _escape_clique(g: Graph, v: int) -> ImmersionCertificate:
    """The non-neighbourhood of v, which must be a ceil(n/2)-clique here."""
    nbar = g.non_neighbors(v)
    for u in bits(nbar):
        gap = nbar & ~g.adj[u] & ~(1 << u)
        if gap:
            w = (gap & -gap).bit_length() - 1
            raise ClaimViolation(
                "two common non-neighbours are themselves non-adjacent "
                "(independence number exceeds 2)",
                graph=g, context={"triple": (v, u, w)})
    need = half_ceil(g.n)
    members = sorted(bits(nbar))
    if len(members) < need:
        raise ClaimViolation(
            "overloaded vertex's non-neighbourhood is too small",
            graph=g, context={"vertex": v, "non_neighbours": members, "need": need})
    return trim_certificate(direct_clique_certificate(g, members), need)


def _cycle_k3(g: Graph, cycle: tuple[int, ...]) -> ImmersionCertificate:
    """K3 immersion riding a cycle: two short edges plus the long arc."""
    paths: dict[Pair, Walk] = {}
    _emit(g, paths, [cycle[0], cycle[1]])
    _emit(g, paths, [cycle[1], cycle[2]])
    _emit(g, paths, [cycle[0]] + [cycle[i] for i in range(len(cycle) - 1, 1, -1)])
    return ImmersionCertificate(g.sha256(), tuple(sorted(cycle[:3])), paths)


# -- hole-free graphs: immersion of K_chi --------------------------------------------


def hole_free_immersion(g: Graph, alpha: int | None = None) -> ImmersionCertificate:
    """K_{chi(g)} immersion for graphs with no hole of length in [4, 2*alpha].

    Any hole longer than 2*alpha+1 would contain too big an independent set,
    so under the precondition the graph is either chordal (maximum clique =
    chromatic number, taken directly) or carries a (2*alpha+1)-hole.  In the
    latter case the graph decomposes as an exact inflation of that odd cycle
    joined with universal vertices: the cycle engine produces the immersion,
    it is trimmed to the inflation's exact chromatic number, and the
    universal vertices join as direct branch vertices -- total order
    chi(inflation) + #universals = chi(g).

    ``alpha`` may be passed by callers that already know the independence
    number; otherwise it is computed exactly.
    """
    if g.n == 0:
        return ImmersionCertificate(g.sha256(), (), {})
    if alpha is None:
        alpha, _ = independence_number(g)
    if alpha <= 1:
        return direct_clique_certificate(g, range(g.n))
    bad = find_hole_in_range(g, 4, 2 * alpha)
    if bad is not None:
        raise PreconditionError(
            f"input has a hole of length {len(bad)} inside [4, {2 * alpha}]: {bad}")
    hole = find_hole_in_range(g, 2 * alpha + 1, 2 * alpha + 1)
    if hole is None:
        peo = chordal_peo(g)
        if peo is None:
            raise ClaimViolation(
                "graph with no holes at all must be chordal", graph=g)
        return direct_clique_certificate(g, peo_max_clique(g, peo))
    bags, universal = _decompose_around_hole(g, hole)
    sub, remap = g.delete_vertices(universal)
    sub_bags = tuple(tuple(remap[v] for v in bag) for bag in bags)
    cert_core, _colours = inflate_cycle(sub, sub_bags)
    chi_core, _sets = cycle_inflation_chromatic(tuple(len(b) for b in sub_bags))
    cert_core = trim_certificate(cert_core, chi_core)
    back = {new: old for old, new in remap.items()}
    lifted = lift_certificate(cert_core, back, g)
    return extend_with_universal(g, lifted, universal)


def _decompose_around_hole(g: Graph, hole: tuple[int, ...]
                           ) -> tuple[tuple[tuple[int, ...], ...], list[int]]:
    """Tile the graph around a longest hole.

    Every vertex outside the hole must either see the entire hole (and then
    be universal in g) or see exactly three consecutive hole vertices; the
    groups seeded by the middle hole vertices must tile g minus the universal
    vertices as an exact inflation of the hole's cycle.  Each failed claim
    raises with the offending vertices attached.
    """
    k = len(hole)
    hmask = mask_of(hole)
    pos = {h: i for i, h in enumerate(hole)}
    groups: list[list[int]] = [[] for _ in range(k)]
    universal: list[int] = []
    for u in range(g.n):
        if hmask >> u & 1:
            continue
        att = g.adj[u] & hmask
        if att == hmask:
            if g.non_neighbors(u):
                raise ClaimViolation(
                    "vertex seeing the whole hole must be universal",
                    graph=g,
                    context={"vertex": u, "hole": hole,
                             "missed": sorted(bits(g.non_neighbors(u)))})
            universal.append(u)
            continue
        seen = {pos[x] for x in bits(att)}
        home = None
        if len(seen) == 3:
            for i in range(k):
                if seen == {i, (i + 1) % k, (i + 2) % k}:
                    home = i
                    break
        if home is None:
            raise ClaimViolation(
                "outside vertex must see exactly three consecutive hole vertices",
                graph=g, context={"vertex": u, "hole": hole, "sees": sorted(seen)})
        groups[home].append(u)
    bags = tuple(tuple(sorted(groups[i] + [hole[(i + 1) % k]])) for i in range(k))

    masks = [mask_of(b) for b in bags]
    for i in range(k):
        if not g.is_clique(masks[i]):
            raise ClaimViolation("hole bag is not a clique", graph=g,
                                 context={"bag": bags[i], "hole": hole})
        for j in range(i + 1, k):
            consecutive = (j - i == 1) or (i == 0 and j == k - 1)
            if consecutive:
                if not all(masks[j] & ~g.adj[v] == 0 for v in bags[i]):
                    raise ClaimViolation(
                        "consecutive hole bags must be completely joined",
                        graph=g, context={"bags": (bags[i], bags[j])})
            elif any(masks[j] & g.adj[v] for v in bags[i]):
                raise ClaimViolation(
                    "non-consecutive hole bags must be anticomplete",
                    graph=g, context={"bags": (bags[i], bags[j])})
    return bags, universal


# -- the inductive extension steps ------------------------------------------------


def extend_over_dominating_c4(g: Graph, cycle: tuple[int, int, int, int],
                              subcert: ImmersionCertificate) -> ImmersionCertificate:
    """Grow a ceil((n-4)/2) certificate of g minus an induced dominating C4
    into a ceil(n/2) certificate of g.

    ``cycle`` lists the 4-cycle in cyclic order and each of its edges must
    dominate the rest of the graph.  Two opposite strategies: if some cycle
    vertex is non-adjacent to too much of the sub-branch, its non-neighbourhood
    is itself a huge clique (escape); otherwise two adjacent cycle vertices
    join the branch, with fans of 3-edge paths through the other two cycle
    vertices and fresh outside connectors.
    """
    a = tuple(cycle)
    _require_induced_at(g, a, "C4")
    _require_dominating_edges(g, a, "C4")
    n = g.n
    rest = g.vertex_mask & ~mask_of(a)
    sub = _prepare_subcert(g, subcert, set(a), half_ceil(n - 4))
    mmask = mask_of(sub.branch)
    qmask = rest & ~mmask
    nbar = [g.non_neighbors(x) for x in a]

    for i in range(4):
        if (mmask & nbar[i]).bit_count() > (qmask & g.adj[a[i]]).bit_count() + 1:
            return _escape_clique(g, a[i])
    for i in range(4):
        for j in range(i + 1, 4):
            clash = nbar[i] & nbar[j] & rest
            if clash:
                u = (clash & -clash).bit_length() - 1
                raise ClaimViolation(
                    "outside vertex misses two cycle vertices",
                    graph=g, context={"vertex": u, "cycle": a,
                                      "missed": (a[i], a[j])})

    # Rotate the scarcest M-non-neighbourhood to the front.
    j = min(range(4), key=lambda i: ((mmask & nbar[i]).bit_count(), i))
    a = a[j:] + a[:j]
    nbar = nbar[j:] + nbar[:j]
    a1, a2, a3, a4 = a

    paths: dict[Pair, Walk] = dict(sub.paths)

    # Fan into a4: the least non-neighbour rides through a3 directly; the
    # others borrow a connector adjacent to a4, preferring connectors that
    # the a1 fan cannot use anyway.
    m4 = sorted(bits(mmask & nbar[3]))
    q4 = qmask & g.adj[a4]
    used_connectors: set[int] = set()
    if m4:
        _emit(g, paths, [m4[0], a3, a4])
    targets4 = sorted(bits(q4 & nbar[0])) + sorted(bits(q4 & ~nbar[0]))
    if len(m4) - 1 > len(targets4):
        raise ClaimViolation(
            "not enough connectors beside the far cycle vertex",
            graph=g, context={"cycle": a, "sources": m4, "targets": targets4})
    for x, t in zip(m4[1:], targets4):
        used_connectors.add(t)
        mid = a2 if g.has_edge(t, a2) else a3
        _emit(g, paths, [x, mid, t, a4])
    for x in bits(mmask & g.adj[a4]):
        _emit(g, paths, [x, a4])

    # Fan into a1, avoiding connectors the a4 fan consumed.
    m1 = sorted(bits(mmask & nbar[0]))
    if m1:
        _emit(g, paths, [m1[0], a2, a1])
    targets1 = [t for t in sorted(bits(qmask & g.adj[a1])) if t not in used_connectors]
    if len(m1) - 1 > len(targets1):
        raise ClaimViolation(
            "not enough connectors beside the near cycle vertex",
            graph=g, context={"cycle": a, "sources": m1, "targets": targets1})
    for y, t in zip(m1[1:], targets1):
        mid = a2 if g.has_edge(t, a2) else a3
        _emit(g, paths, [y, mid, t, a1])
    for y in bits(mmask & g.adj[a1]):
        _emit(g, paths, [y, a1])

    _emit(g, paths, [a1, a4])
    branch = tuple(sorted(set(sub.branch) | {a1, a4}))
    if len(branch) != half_ceil(n):
        raise AssertionError("extension produced the wrong order")
    return ImmersionCertificate(g.sha256(), branch, paths)


def extend_over_dominating_c5(g: Graph, cycle: tuple[int, int, int, int, int],
                              subcert: ImmersionCertificate) -> ImmersionCertificate:
    """Grow a certificate of g minus the *first four* vertices of an induced
    dominating C5 into a ceil(n/2) certificate of g.

    ``cycle`` lists the 5-cycle in cyclic order; only cycle[0..3] are removed
    in the subproblem -- the fifth vertex stays and needs special handling
    throughout, since it is the unique outside-the-path vertex allowed to miss
    two of the removed vertices.
    """
    _require_induced_at(g, tuple(cycle), "C5")
    _require_dominating_edges(g, tuple(cycle), "C5")
    return _extend_articulated(g, tuple(cycle[:4]), cycle[4], subcert)


def extend_over_dominating_p4(g: Graph, path: tuple[int, int, int, int],
                              subcert: ImmersionCertificate) -> ImmersionCertificate:
    """Grow a certificate of g minus an induced dominating P4 into a
    ceil(n/2) certificate of g.  ``path`` lists the path in order."""
    _require_induced_at(g, tuple(path), "P4")
    _require_dominating_edges(g, tuple(path), "P4")
    return _extend_articulated(g, tuple(path), None, subcert)


def _extend_articulated(g: Graph, p: tuple[int, int, int, int], a5: int | None,
                        subcert: ImmersionCertificate) -> ImmersionCertificate:
    """Shared engine for the dominating-C5 and dominating-P4 extensions.

    The removed part is the path p = (a1, a2, a3, a4); for the C5 case a5
    closes the cycle and is *not* removed.  Strategy: pick the path end a4 and
    the interior-or-end vertex a_ell whose fan is cheapest, attach both to the
    branch, route every sub-branch vertex to a4 through connectors adjacent to
    a4, to a_ell through connectors adjacent to a_ell, and join a_ell to a4
    along the path itself.  The fifth cycle vertex may appear as a connector
    of last resort, which reroutes one fan path and the a_ell--a4 join.
    """
    n = g.n
    a1, a2, a3, a4 = p
    hverts = p + ((a5,) if a5 is not None else ())
    hmask = mask_of(hverts)
    outside = g.vertex_mask & ~hmask
    sub = _prepare_subcert(g, subcert, set(p), half_ceil(n - 4))
    mmask = mask_of(sub.branch)
    qmask = g.vertex_mask & ~mask_of(p) & ~mmask
    nbar = {x: g.non_neighbors(x) for x in p}

    # Escapes: a path end overloaded at all, or a middle vertex overloaded
    # beyond its one-vertex slack, owns a ceil(n/2) clique of non-neighbours.
    for i, ai in enumerate(p, start=1):
        slack = 0 if i in (1, 4) else 1
        if (mmask & nbar[ai]).bit_count() > (qmask & g.adj[ai]).bit_count() + slack:
            return _escape_clique(g, ai)

    # Outside the 5- or 4-vertex structure, nobody misses two path vertices.
    for (x, y) in combinations(p, 2):
        clash = nbar[x] & nbar[y] & outside
        if clash:
            u = (clash & -clash).bit_length() - 1
            raise ClaimViolation(
                "outside vertex misses two path vertices",
                graph=g, context={"vertex": u, "path": p, "missed": (x, y)})

    a5mask = (1 << a5) if a5 is not None else 0
    ell = min((1, 2, 3),
              key=lambda i: ((mmask & nbar[p[i - 1]] & ~a5mask).bit_count(), i))
    al = p[ell - 1]

    # Fan into a4.  Sources may include a5 never (a5 ~ a4); targets may
    # include a5, but only as the very last resort within its class.
    fsources = sorted(bits(mmask & nbar[a4]))
    if a5 is not None:
        for x in fsources:
            if not g.has_edge(x, a5):
                raise ClaimViolation(
                    "vertex missing the far path end must see the fifth cycle vertex",
                    graph=g, context={"vertex": x, "cycle": hverts})
    q4 = qmask & g.adj[a4]
    class_useless = sorted(bits(q4 & nbar[al]))      # invisible to the a_ell fan
    class_useful = sorted(bits(q4 & ~nbar[al]))
    for cls in (class_useless, class_useful):
        if a5 is not None and a5 in cls:
            cls.remove(a5)
            cls.append(a5)
    ftargets = class_useless + class_useful
    if len(fsources) > len(ftargets):
        raise ClaimViolation(
            "not enough connectors beside the far path end",
            graph=g, context={"path": p, "sources": fsources, "targets": ftargets})
    fmap = dict(zip(fsources, ftargets))
    q_f = set(fmap.values())
    a5_hit = a5 is not None and a5 in q_f

    def fan_mid(t: int, banned: int) -> int:
        for i in (1, 2, 3):
            if i != banned and g.has_edge(t, p[i - 1]):
                return p[i - 1]
        raise ClaimViolation(
            "connector sees none of the available middle vertices",
            graph=g, context={"connector": t, "path": p, "banned": p[banned - 1]})

    paths: dict[Pair, Walk] = dict(sub.paths)
    ml = sorted(bits(mmask & nbar[al]))
    tl = [t for t in sorted(bits(qmask & g.adj[al])) if t not in q_f and t != a5]

    if ell == 1:
        # If the a4 fan was forced to consume a5, its source walks the path
        # middle instead and the a1--a4 join steps over a5.
        join_walk = [a1, a5, a4] if a5_hit else [a1, a2, a3, a4]
        shortfall = max(0, len(q_f) - (qmask & nbar[a1]).bit_count())
        if a5 is not None and shortfall == 0 and (qmask >> a5 & 1):
            # Spare-vertex subcase: the fifth cycle vertex carries the join,
            # freeing the path for the least fan source.
            if a5_hit:
                raise ClaimViolation(
                    "fifth cycle vertex cannot both join the ends and serve the far fan",
                    graph=g, context={"cycle": hverts})
            join_walk = [a1, a5, a4]
            if len(ml) - 1 > len(tl):
                raise ClaimViolation(
                    "not enough connectors beside the near path end",
                    graph=g, context={"path": p, "sources": ml, "targets": tl})
            if ml:
                _emit(g, paths, [ml[0], a2, a1])
            for y, t in zip(ml[1:], tl):
                _emit(g, paths, [y, fan_mid(t, 1), t, a1])
        else:
            if len(ml) > len(tl):
                raise ClaimViolation(
                    "not enough connectors beside the near path end",
                    graph=g, context={"path": p, "sources": ml, "targets": tl})
            for y, t in zip(ml, tl):
                _emit(g, paths, [y, fan_mid(t, 1), t, a1])
        for x in fsources:
            t = fmap[x]
            if t == a5:
                _emit(g, paths, [x, a2, a3, a4])
            else:
                _emit(g, paths, [x, fan_mid(t, 1), t, a4])
        _emit(g, paths, join_walk)
    else:
        if len(ml) - 1 > len(tl):
            raise ClaimViolation(
                "not enough connectors beside the chosen middle vertex",
                graph=g, context={"path": p, "vertex": al,
                                  "sources": ml, "targets": tl})
        if ml:
            w = a5 if (a5 is not None and (mmask >> a5 & 1) and a5 in ml) else ml[0]
            _emit(g, paths, [w] + list(p[:ell - 1]) + [al])
            grest = [y for y in ml if y != w]
            for y, t in zip(grest, tl):
                _emit(g, paths, [y, fan_mid(t, ell), t, al])
        for x in fsources:
            t = fmap[x]
            if t == a5:
                _emit(g, paths, [x, a1, a5, a4])
            else:
                _emit(g, paths, [x, fan_mid(t, ell), t, a4])
        _emit(g, paths, list(p[ell - 1:]))

    for x in bits(mmask & g.adj[a4]):
        _emit(g, paths, [x, a4])
    for y in bits(mmask & g.adj[al]):
        _emit(g, paths, [y, al])

    branch = tuple(sorted(set(sub.branch) | {al, a4}))
    if len(branch) != half_ceil(n):
        raise AssertionError("extension produced the wrong order")
    return ImmersionCertificate(g.sha256(), branch, paths)


# -- house-free graphs -------------------------------------------------------------


def house_free_immersion(g: Graph) -> ImmersionCertificate:
    """K_{ceil(n/2)} immersion for house-free graphs with independence <= 2

    (the house: a 4-cycle plus a roof vertex adjacent to two adjacent cycle
    vertices)."""
    _require_alpha_at_most_two(g)
    _require_pattern_free(g, "house")
    return _house_free_inner(g)


def _house_free_inner(g: Graph) -> ImmersionCertificate:
    n = g.n
    if n == 0:
        return ImmersionCertificate(g.sha256(), (), {})
    need = half_ceil(n)
    if n <= 4:
        omega, clique = max_clique(g)
        if omega < need:
            raise ClaimViolation("tiny graph with independence <= 2 lacks a "
                                 "half-order clique", graph=g)
        return trim_certificate(direct_clique_certificate(g, clique), need)
    if all(g.degree(v) == n - 1 for v in range(n)):
        return trim_certificate(direct_clique_certificate(g, range(n)), need)
    emb = find_induced_embedding(g, pattern("C4"))
    if emb is None:
        return trim_certificate(hole_free_immersion(g, alpha=2), need)
    fmask = mask_of(emb)
    for u in range(n):
        if fmask >> u & 1:
            continue
        if (g.adj[u] & fmask).bit_count() < 3:
            raise ClaimViolation(
                "every vertex outside an induced 4-cycle must see at least "
                "three of it (fewer forces a house or an independent triple)",
                graph=g,
                context={"vertex": u, "cycle": emb,
                         "sees": sorted(bits(g.adj[u] & fmask))})
    sub, remap = g.delete_vertices(emb)
    inner = _house_free_inner(sub)
    back = {new: old for old, new in remap.items()}
    return extend_over_dominating_c4(g, emb, lift_certificate(inner, back, g))


# -- owh-free graphs (triangle with a two-edge tail) ----------------------------------


def owh_free_immersion(g: Graph) -> ImmersionCertificate:
    """K_{ceil(n/2)} immersion for graphs with independence <= 2 and no
    induced triangle-with-a-two-edge-tail (the 5-vertex "owh" pattern)."""
    _require_alpha_at_most_two(g)
    _require_pattern_free(g, "owh")
    return _owh_free_inner(g)


def _owh_free_inner(g: Graph) -> ImmersionCertificate:
    n = g.n
    if n == 0:
        return ImmersionCertificate(g.sha256(), (), {})
    need = half_ceil(n)
    if n <= 4:
        omega, clique = max_clique(g)
        if omega < need:
            raise ClaimViolation("tiny graph with independence <= 2 lacks a "
                                 "half-order clique", graph=g)
        return trim_certificate(direct_clique_certificate(g, clique), need)
    if all(g.degree(v) == n - 1 for v in range(n)):
        return trim_certificate(direct_clique_certificate(g, range(n)), need)
    emb = find_induced_embedding(g, pattern("P4"))
    if emb is None:
        # No induced P4 at all; the house contains one, so the house engine applies.
        return _house_free_inner(g)
    a = emb
    rest = g.vertex_mask & ~mask_of(a)

    def undominated(x: int, y: int) -> int:
        return rest & ~g.adj[x] & ~g.adj[y]

    miss_end1 = undominated(a[0], a[1])
    miss_mid = undominated(a[1], a[2])
    miss_end2 = undominated(a[2], a[3])
    for missed, edge in ((miss_end1, (a[0], a[1])), (miss_end2, (a[2], a[3]))):
        if missed:
            u = (missed & -missed).bit_length() - 1
            raise ClaimViolation(
                "an end edge of an induced path fails to dominate, which "
                "forces the forbidden triangle-with-tail",
                graph=g, context={"path": a, "edge": edge, "vertex": u})
    if not miss_mid:
        sub, remap = g.delete_vertices(a)
        inner = _owh_free_inner(sub)
        back = {new: old for old, new in remap.items()}
        return extend_over_dominating_p4(g, a, lift_certificate(inner, back, g))

    # The middle edge misses someone: that someone sees exactly the two path
    # ends, closing an induced 5-cycle.
    u = (miss_mid & -miss_mid).bit_length() - 1
    if not (g.has_edge(u, a[0]) and g.has_edge(u, a[3])):
        raise ClaimViolation(
            "vertex missing the middle edge must see both path ends",
            graph=g, context={"path": a, "vertex": u})
    cycle = (a[0], a[1], a[2], a[3], u)
    scope = g.vertex_mask & ~mask_of(cycle)
    cyc_edges = [(cycle[i], cycle[(i + 1) % 5]) for i in range(5)]
    for x, y in cyc_edges:
        missed = scope & ~g.adj[x] & ~g.adj[y]
        if missed:
            w = (missed & -missed).bit_length() - 1
            raise ClaimViolation(
                "a 5-cycle edge fails to dominate, which forces the "
                "forbidden triangle-with-tail",
                graph=g, context={"cycle": cycle, "edge": (x, y), "vertex": w})
    sub, remap = g.delete_vertices(a)
    inner = _owh_free_inner(sub)
    back = {new: old for old, new in remap.items()}
    return extend_over_dominating_c5(g, cycle, lift_certificate(inner, back, g))


# -- K4-free graphs (at most 8 vertices) ------------------------------------------------


def k4_free_immersion(g: Graph) -> ImmersionCertificate:
    """K_{ceil(n/2)} immersion for K4-free graphs with independence <= 2."""
    _require_alpha_at_most_two(g)
    _require_pattern_free(g, "K4")
    return _k4_free_inner(g)


def _k4_free_inner(g: Graph) -> ImmersionCertificate:
    n = g.n
    if n > 8:
        raise ClaimViolation(
            "a K4-free graph with independence number at most 2 cannot have "
            "nine or more vertices", graph=g)
    if n == 0:
        return ImmersionCertificate(g.sha256(), (), {})
    need = half_ceil(n)
    if n <= 4:
        omega, clique = max_clique(g)
        if omega < need:
            raise ClaimViolation("tiny graph with independence <= 2 lacks a "
                                 "half-order clique", graph=g)
        return trim_certificate(direct_clique_certificate(g, clique), need)
    if n == 5:
        omega, clique = max_clique(g)
        if omega >= 3:
            return direct_clique_certificate(g, sorted(clique)[:3])
        cyc = find_hole_in_range(g, 4, 5)
        if cyc is None:
            raise ClaimViolation(
                "triangle-free 5-vertex graph with independence <= 2 must "
                "carry a cycle", graph=g)
        return _cycle_k3(g, cyc)
    if n in (6, 8):
        sub, remap = g.delete_vertices([n - 1])
        back = {new: old for old, new in remap.items()}
        return lift_certificate(_k4_free_inner(sub), back, g)
    return _k4_on_seven(g)


def _k4_on_seven(g: Graph) -> ImmersionCertificate:
    """K4 immersion on 7 vertices: a triangle plus one vertex routed to it.

    Enumerates (triangle, ordered non-adjacent pair, triangle labelling)
    until the workable configuration appears: a2 sees two triangle corners
    directly and reaches the third through a1 or through the leftover
    vertices.  If no configuration fits, falls back to the exhaustive search
    (logged), which cannot fail on this input class.
    """
    verts = range(7)
    for tri in combinations(verts, 3):
        if not g.is_clique(mask_of(tri)):
            continue
        others = [v for v in verts if v not in tri]
        for x, y in combinations(others, 2):
            if g.has_edge(x, y):
                continue
            for b1, b2 in ((x, y), (y, x)):
                for m1, m2, m3 in permutations(tri):
                    if not (g.has_edge(b1, m1) and g.has_edge(b2, m2)
                            and g.has_edge(b2, m3) and not g.has_edge(b1, m3)
                            and not g.has_edge(b2, m1)):
                        continue
                    spare = [v for v in others if v not in (b1, b2)]
                    route = None
                    for c in spare:
                        if g.has_edge(b1, c) and g.has_edge(b2, c):
                            route = [b2, c, b1, m1]
                            break
                    if route is None:
                        for c3, c4 in permutations(spare, 2):
                            if not (g.has_edge(b1, c3) and g.has_edge(b2, c4)
                                    and not g.has_edge(b1, c4)
                                    and not g.has_edge(b2, c3)):
                                continue
                            if g.has_edge(c3, c4):
                                route = [b2, c4, c3, b1, m1]
                            elif g.has_edge(c4, m1):
                                route = [b2, c4, m1]
                            if route is not None:
                                break
                    if route is None:
                        continue
                    paths: dict[Pair, Walk] = {}
                    for u, v in combinations(sorted(tri), 2):
                        _emit(g, paths, [u, v])
                    _emit(g, paths, [b2, m2])
                    _emit(g, paths, [b2, m3])
                    _emit(g, paths, route)
                    branch = tuple(sorted(tri + (b2,)))
                    return ImmersionCertificate(g.sha256(), branch, paths)
    log.warning("no direct 7-vertex configuration fit; using exhaustive search")
    cert = brute_force_immersion(g, 4)
    if cert is None:
        raise ClaimViolation(
            "7-vertex K4-free graph with independence <= 2 must immerse K4",
            graph=g)
    return cert


# -- K4-minus-an-edge-free graphs --------------------------------------------------------


def k4minus_free_clique(g: Graph
                        ) -> tuple[ImmersionCertificate,
                                   tuple[frozenset[int], frozenset[int]] | None]:
    """For graphs with independence <= 2 and no induced K4-minus-an-edge:
    a ceil(n/2) clique certificate, plus a partition of the vertices into two
    cliques whenever the graph is not a plain 5-cycle (which has none).
    """
    _require_alpha_at_most_two(g)
    _require_pattern_free(g, "K4minus")
    n = g.n
    if n == 0:
        return ImmersionCertificate(g.sha256(), (), {}), (frozenset(), frozenset())
    if n == 5 and all(g.degree(v) == 2 for v in range(5)):
        cyc = find_hole_in_range(g, 4, 5)
        if cyc is not None and len(cyc) == 5:
            return _cycle_k3(g, cyc), None
    if all(g.degree(v) == n - 1 for v in range(n)):
        full = frozenset(range(n))
        return direct_clique_certificate(g, range(n)), (full, frozenset())
    five = find_induced(g, pattern("C5"))
    if five is not None:
        raise ClaimViolation(
            "an induced 5-cycle inside a larger graph forces the forbidden "
            "K4-minus-an-edge", graph=g, context={"cycle": sorted(five)})

    x = min(range(n), key=lambda v: (g.degree(v), v))
    nbar = g.non_neighbors(x)
    for u in bits(nbar):
        gap = nbar & ~g.adj[u] & ~(1 << u)
        if gap:
            w = (gap & -gap).bit_length() - 1
            raise ClaimViolation(
                "independence number exceeds 2",
                graph=g, context={"triple": (x, u, w)})
    nx = g.adj[x]
    if g.is_clique(nx):
        part1 = frozenset(bits(nx)) | {x}
        part2 = frozenset(bits(nbar))
    else:
        comps = _components_within(g, nx)
        if len(comps) != 2:
            raise ClaimViolation(
                "a non-clique neighbourhood must split into exactly two cliques",
                graph=g, context={"vertex": x, "components": len(comps)})
        for comp in comps:
            if not g.is_clique(comp):
                raise ClaimViolation(
                    "neighbourhood component is not a clique (forces the "
                    "forbidden pattern)", graph=g,
                    context={"vertex": x, "component": sorted(bits(comp))})
        ca, cb = comps
        if all(nbar & ~g.adj[v] == 0 for v in bits(ca)):
            part1 = frozenset(bits(ca | nbar))
            part2 = frozenset(bits(cb)) | {x}
        elif all(nbar & ~g.adj[v] == 0 for v in bits(cb)):
            part1 = frozenset(bits(cb | nbar))
            part2 = frozenset(bits(ca)) | {x}
        else:
            raise ClaimViolation(
                "neither neighbourhood clique is fully joined to the "
                "non-neighbourhood (forces an induced 5-cycle)",
                graph=g, context={"vertex": x})
    for part in (part1, part2):
        if not g.is_clique(mask_of(part)):
            raise AssertionError("assembled part is not a clique")
    big = part1 if len(part1) >= len(part2) else part2
    return direct_clique_certificate(g, big), (part1, part2)


def _components_within(g: Graph, mask: int) -> list[int]:
    """Connected components of the subgraph induced on ``mask``, as masks,
    ordered by smallest member."""
    comps = []
    left = mask
    while left:
        start = (left & -left).bit_length() - 1
        comp = 1 << start
        frontier = [start]
        while frontier:
            nxt = []
            for v in frontier:
                fresh = g.adj[v] & mask & ~comp
                comp |= fresh
                nxt.extend(bits(fresh))
            frontier = nxt
        comps.append(comp)
        left &= ~comp
    return comps


# -- one excluded 4-vertex pattern: the ceil(n/2) bound --------------------------------------


def pattern_free_immersion(g: Graph, pattern_name: str) -> ImmersionCertificate:
    """K_{ceil(n/2)} immersion when g has independence <= 2 and omits one of
    the seven 4-vertex patterns as an induced subgraph.

    Dispatch: C4-free graphs are hole-free; P4- or paw-free graphs are
    house-free (the house contains both); twoK2- or K3v-free graphs avoid the
    triangle-with-tail (it contains both); K4 and K4-minus go to their own
    small-graph constructions.  The result is trimmed to exactly ceil(n/2)
    and re-verified before returning.
    """
    if pattern_name not in FOUR_VERTEX_PATTERNS:
        raise ValueError(
            f"pattern must be one of {FOUR_VERTEX_PATTERNS}, got {pattern_name!r}")
    _require_alpha_at_most_two(g)
    _require_pattern_free(g, pattern_name)
    n = g.n
    if n == 0:
        return ImmersionCertificate(g.sha256(), (), {})
    if pattern_name == "K4":
        cert = _k4_free_inner(g)
    elif pattern_name == "K4minus":
        cert, _parts = k4minus_free_clique(g)
    elif pattern_name == "C4":
        alpha = 1 if all(g.degree(v) == n - 1 for v in range(n)) else 2
        cert = hole_free_immersion(g, alpha=alpha)
    elif pattern_name in ("P4", "paw"):
        cert = _house_free_inner(g)
    else:  # twoK2, K3v
        cert = _owh_free_inner(g)
    cert = trim_certificate(cert, half_ceil(n))
    verdict = verify_certificate(g, cert)
    if not verdict.ok:
        raise AssertionError(f"constructed certificate failed verification: {verdict}")
    return cert


def auto_immersion(g: Graph) -> tuple[str, ImmersionCertificate]:
    """Try each pattern-exclusion route in a fixed order, then the oracle.

    Returns (method token, certificate); the token names the route that
    applied, e.g. ``vergara:C4`` or ``oracle``.
    """
    _require_alpha_at_most_two(g)
    for name in FOUR_VERTEX_PATTERNS:
        if find_induced(g, pattern(name)) is None:
            return f"vergara:{name}", pattern_free_immersion(g, name)
    budget = OracleBudget()
    if g.n <= budget.max_n:
        _t, cert = max_immersion_order(g, budget)
        return "oracle", cert
    raise PreconditionError(
        "every 4-vertex pattern occurs and the graph exceeds the exhaustive "
        f"search bound n <= {budget.max_n}")
