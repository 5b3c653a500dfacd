"""Immersion certificates: data model, canonical JSON, verifier, and algebra.

A certificate for "K_t immerses in g" names t distinct branch vertices and,
for every pair of them, a path in g, such that

  I.   each path joins its pair and really is a path of g (simple, edges exist),
  II.  the paths are pairwise edge-disjoint (sharing interior *vertices* is fine),
  III. no branch vertex lies in the interior of any path.

``PatternImmersion`` is the same notion for an arbitrary pattern graph in
place of K_t (one path per pattern *edge*); it is the glue that lets a clique
certificate found inside an abstract quotient be composed down into the host.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping

from .graphs import Graph

CERT_FORMAT = "immlab-cert-v1"

Walk = tuple[int, ...]
Pair = tuple[int, int]


def ordered_pair(a: int, b: int) -> Pair:
    return (a, b) if a <= b else (b, a)


@dataclass(frozen=True)
class ImmersionCertificate:
    """A claimed clique immersion: branch vertices plus one path per pair."""

    host_hash: str
    branch: tuple[int, ...]
    paths: dict[Pair, Walk] = field(default_factory=dict)

    @property
    def order(self) -> int:
        return len(self.branch)


@dataclass(frozen=True)
class PatternImmersion:
    """A claimed immersion of ``pattern``; branch[i] hosts pattern vertex i."""

    host_hash: str
    pattern: Graph
    branch: tuple[int, ...]
    paths: dict[Pair, Walk] = field(default_factory=dict)


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str = "ok"
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _bad(reason: str, detail: str) -> Verdict:
    return Verdict(False, reason, detail)


# -- verification -------------------------------------------------------------


def _check_paths(g: Graph, branch: tuple[int, ...],
                 required: list[tuple[Pair, Pair]],
                 paths: Mapping[Pair, Walk]) -> Verdict:
    """Shared path checks.  ``required`` lists (key, (from, to)) pairs."""
    bset = set(branch)
    legal_keys = {key for key, _ in required}
    for key, walk in paths.items():
        if key not in legal_keys:
            return _bad("structural", f"unexpected path key {key}")
        for x in walk:
            if not (isinstance(x, int) and 0 <= x < g.n):
                return _bad("structural", f"walk vertex {x!r} out of range in path {key}")

    # Condition I: every required pair is joined by a genuine path.
    for key, (a, b) in required:
        walk = paths.get(key)
        if walk is None:
            return _bad("condition-I", f"no path for pair {key}")
        if len(walk) < 2 or walk[0] != a or walk[-1] != b:
            return _bad("condition-I", f"path {key} does not run {a} -> {b}: {walk}")
        if len(set(walk)) != len(walk):
            return _bad("condition-I", f"path {key} repeats a vertex: {walk}")
        for x, y in zip(walk, walk[1:]):
            if not g.has_edge(x, y):
                return _bad("condition-I", f"path {key} uses non-edge ({x},{y})")

    # Condition II: pairwise edge-disjoint.
    used: dict[Pair, Pair] = {}
    for key, _ in required:
        walk = paths[key]
        for x, y in zip(walk, walk[1:]):
            e = ordered_pair(x, y)
            if e in used:
                return _bad("condition-II",
                            f"edge {e} used by paths {used[e]} and {key}")
            used[e] = key

    # Condition III: branch vertices never sit inside a path.
    for key, _ in required:
        for x in paths[key][1:-1]:
            if x in bset:
                return _bad("condition-III",
                            f"branch vertex {x} interior to path {key}")
    return Verdict(True)


def _check_branch(g: Graph, branch: tuple[int, ...]) -> Verdict | None:
    for v in branch:
        if not (isinstance(v, int) and 0 <= v < g.n):
            return _bad("structural", f"branch vertex {v!r} out of range")
    if len(set(branch)) != len(branch):
        return _bad("structural", f"branch vertices not distinct: {branch}")
    return None


def verify_certificate(g: Graph, cert: ImmersionCertificate) -> Verdict:
    """Full audit of a clique-immersion certificate against its host graph."""
    if cert.host_hash != g.sha256():
        return _bad("hash-mismatch",
                    f"certificate is for {cert.host_hash[:12]}.., host is {g.sha256()[:12]}..")
    bad = _check_branch(g, cert.branch)
    if bad is not None:
        return bad
    required = [(ordered_pair(u, v), ordered_pair(u, v))
                for u, v in combinations(sorted(cert.branch), 2)]
    return _check_paths(g, cert.branch, required, cert.paths)


def verify_pattern_immersion(g: Graph, imm: PatternImmersion) -> Verdict:
    """Audit a pattern immersion (one path per pattern edge)."""
    if imm.host_hash != g.sha256():
        return _bad("hash-mismatch",
                    f"immersion is for {imm.host_hash[:12]}.., host is {g.sha256()[:12]}..")
    if len(imm.branch) != imm.pattern.n:
        return _bad("structural",
                    f"branch tuple has {len(imm.branch)} entries for a "
                    f"{imm.pattern.n}-vertex pattern")
    bad = _check_branch(g, imm.branch)
    if bad is not None:
        return bad
    required = [((i, j), (imm.branch[i], imm.branch[j]))
                for i, j in imm.pattern.edges()]
    return _check_paths(g, imm.branch, required, imm.paths)


# -- constructors and algebra ---------------------------------------------------


def direct_clique_certificate(g: Graph, vertices: Iterable[int]) -> ImmersionCertificate:
    """Certificate for a literal clique: every pair joined by its own edge."""
    branch = tuple(sorted(set(vertices)))
    paths: dict[Pair, Walk] = {}
    for u, v in combinations(branch, 2):
        if not g.has_edge(u, v):
            raise ValueError(f"({u},{v}) is not an edge; vertices are not a clique")
        paths[(u, v)] = (u, v)
    return ImmersionCertificate(g.sha256(), branch, paths)


def trim_certificate(cert: ImmersionCertificate, target: int) -> ImmersionCertificate:
    """Keep only the ``target`` lowest-id branch vertices and their paths.

    Dropping branch vertices can only relax conditions II and III, so the
    result stays valid.
    """
    if not 0 <= target <= len(cert.branch):
        raise ValueError(f"cannot trim an order-{len(cert.branch)} certificate to {target}")
    keep = tuple(sorted(cert.branch)[:target])
    kset = set(keep)
    paths = {k: w for k, w in cert.paths.items() if k[0] in kset and k[1] in kset}
    return ImmersionCertificate(cert.host_hash, keep, paths)


def extend_with_universal(g: Graph, cert: ImmersionCertificate,
                          universals: Iterable[int]) -> ImmersionCertificate:
    """Add universal vertices as branch vertices, joined by direct edges.

    Each new vertex must be adjacent to every other vertex of g, must not
    already be a branch vertex, and must not sit inside an existing path --
    then every new direct edge is fresh and all three conditions survive.
    """
    new = sorted(set(universals))
    if cert.host_hash != g.sha256():
        raise ValueError("certificate is not over this host graph")
    bset = set(cert.branch)
    interior = {x for walk in cert.paths.values() for x in walk[1:-1]}
    for w in new:
        if g.non_neighbors(w):
            raise ValueError(f"vertex {w} is not universal")
        if w in bset:
            raise ValueError(f"vertex {w} is already a branch vertex")
        if w in interior:
            raise ValueError(f"vertex {w} sits inside an existing path")
    paths = dict(cert.paths)
    for w in new:
        for u in cert.branch:
            paths[ordered_pair(u, w)] = (min(u, w), max(u, w))
    for w1, w2 in combinations(new, 2):
        paths[(w1, w2)] = (w1, w2)
    branch = tuple(sorted(bset.union(new)))
    return ImmersionCertificate(cert.host_hash, branch, paths)


def lift_certificate(cert: ImmersionCertificate, embed: Mapping[int, int],
                     host: Graph) -> ImmersionCertificate:
    """Transport a certificate through an injective edge-preserving map.

    ``embed`` sends the certificate's vertex ids into ``host`` (typically the
    inverse of the relabelling that ``induced_subgraph`` returned).
    """
    def m(v: int) -> int:
        return embed[v]

    branch = tuple(sorted(m(v) for v in cert.branch))
    paths: dict[Pair, Walk] = {}
    for (u, v), walk in cert.paths.items():
        mu, mv = m(u), m(v)
        mwalk = tuple(m(x) for x in walk)
        if mu <= mv:
            paths[(mu, mv)] = mwalk
        else:
            paths[(mv, mu)] = mwalk[::-1]
    return ImmersionCertificate(host.sha256(), branch, paths)


def _shortcut(walk: list[int]) -> list[int]:
    """Delete closed subwalks until the walk is simple.

    Each cut removes walk[i+1..j] where walk[i] == walk[j], i.e. a closed
    subwalk, so the surviving edge multiset is a subset of the original and
    edge-disjointness with other paths is preserved.
    """
    while True:
        seen: dict[int, int] = {}
        cut = None
        for idx, v in enumerate(walk):
            if v in seen:
                cut = (seen[v], idx)
                break
            seen[v] = idx
        if cut is None:
            return walk
        i, j = cut
        walk = walk[: i + 1] + walk[j + 1:]


def compose_certificates(g: Graph, outer: PatternImmersion,
                         inner: ImmersionCertificate) -> ImmersionCertificate:
    """Compose a clique certificate *over the pattern* with a pattern immersion.

    ``inner`` certifies K_t inside ``outer.pattern``; the result certifies K_t
    inside g.  Each inner walk is translated edge-by-edge into concatenated
    outer paths, then shortcut to a simple path.  Edge-disjointness survives
    because inner uses each pattern edge at most once (its condition II) and
    distinct pattern edges own edge-disjoint outer paths (outer's condition
    II); condition III survives because interiors of outer paths avoid *all*
    outer branch vertices.
    """
    if inner.host_hash != outer.pattern.sha256():
        raise ValueError("inner certificate is not over the outer pattern")
    if outer.host_hash != g.sha256():
        raise ValueError("outer immersion is not over this host graph")

    def oriented(a: int, b: int) -> Walk:
        # Outer walk for pattern edge ab, oriented branch[a] -> branch[b].
        if a < b:
            walk = outer.paths.get((a, b))
            if walk is None:
                raise ValueError(f"outer immersion lacks a path for pattern edge ({a},{b})")
            return walk
        walk = outer.paths.get((b, a))
        if walk is None:
            raise ValueError(f"outer immersion lacks a path for pattern edge ({b},{a})")
        return walk[::-1]

    paths: dict[Pair, Walk] = {}
    for (u, v), walk in inner.paths.items():
        host_walk = [outer.branch[walk[0]]]
        for a, b in zip(walk, walk[1:]):
            host_walk.extend(oriented(a, b)[1:])
        host_walk = _shortcut(host_walk)
        hu, hv = outer.branch[u], outer.branch[v]
        if hu <= hv:
            paths[(hu, hv)] = tuple(host_walk)
        else:
            paths[(hv, hu)] = tuple(host_walk[::-1])
    branch = tuple(sorted(outer.branch[b] for b in inner.branch))
    return ImmersionCertificate(g.sha256(), branch, paths)


# -- canonical JSON ---------------------------------------------------------------


def certificate_to_json(cert: ImmersionCertificate) -> str:
    doc = {
        "format": CERT_FORMAT,
        "graph_sha256": cert.host_hash,
        "order": len(cert.branch),
        "branch": sorted(cert.branch),
        "paths": [{"u": u, "v": v, "walk": list(w)}
                  for (u, v), w in sorted(cert.paths.items())],
    }
    return json.dumps(doc, separators=(",", ":"))


def certificate_from_json(text: str) -> ImmersionCertificate:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict) or doc.get("format") != CERT_FORMAT:
        raise ValueError(f"not a {CERT_FORMAT} document")
    host_hash = doc.get("graph_sha256")
    order = doc.get("order")
    branch = doc.get("branch")
    raw_paths = doc.get("paths")
    if not isinstance(host_hash, str):
        raise ValueError("'graph_sha256' must be a string")
    if not (isinstance(branch, list) and all(isinstance(v, int) for v in branch)):
        raise ValueError("'branch' must be a list of ints")
    if order != len(branch):
        raise ValueError(f"'order' is {order} but branch lists {len(branch)} vertices")
    if not isinstance(raw_paths, list):
        raise ValueError("'paths' must be a list")
    paths: dict[Pair, Walk] = {}
    for entry in raw_paths:
        if not (isinstance(entry, dict) and isinstance(entry.get("u"), int)
                and isinstance(entry.get("v"), int)
                and isinstance(entry.get("walk"), list)
                and all(isinstance(x, int) for x in entry["walk"])):
            raise ValueError(f"malformed path entry {entry!r}")
        u, v = entry["u"], entry["v"]
        if u >= v:
            raise ValueError(f"path key ({u},{v}) must have u < v")
        if (u, v) in paths:
            raise ValueError(f"duplicate path entry for pair ({u},{v})")
        paths[(u, v)] = tuple(entry["walk"])
    return ImmersionCertificate(host_hash, tuple(branch), paths)
