"""Immutable model for small uniform hypergraphs.

Shared data layer for the whole package: hypergraphs over integer
vertices, links and (co)degrees, clique enumeration, an interval-based
distance between edges, and vertex identification (gluing) used by the
gadget builders.

All values are immutable after construction and every operation is a
pure function, so objects may be shared and cached freely.
"""

from __future__ import annotations

import heapq
import itertools
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from math import inf
from typing import Iterable, Mapping, Optional

Edge = tuple[int, ...]

__all__ = [
    "Edge",
    "Hypergraph",
    "GlueMap",
    "GlueResult",
    "fano_plane",
    "link",
    "degree",
    "codegree",
    "min_ell_degree",
    "min_positive_codegree",
    "enumerate_cliques",
    "path_distance",
    "glue",
    "disjoint_union",
    "induced",
    "is_linear",
    "to_json_dict",
    "from_json_dict",
]


def canon_edge(verts: Iterable[int], r: Optional[int] = None) -> Edge:
    """Sorted tuple form of an edge; rejects repeats and negative ids."""
    vs = tuple(sorted(int(v) for v in verts))
    if len(set(vs)) != len(vs):
        raise ValueError(f"edge {tuple(verts)!r} has repeated vertices")
    if r is not None and len(vs) != r:
        raise ValueError(f"expected a {r}-edge, got {vs!r}")
    if vs and vs[0] < 0:
        raise ValueError("vertex ids must be nonnegative")
    return vs


@dataclass(frozen=True)
class Hypergraph:
    """An r-uniform hypergraph on integer vertices.

    Edges are stored as sorted tuples.  Labels are free-form provenance
    strings and never affect equality or hashing.
    """

    r: int
    vertices: frozenset[int]
    edges: frozenset[Edge]
    labels: Mapping[int, str] = field(default_factory=dict, compare=False)

    def __post_init__(self) -> None:
        if self.r < 1:
            raise ValueError("uniformity must be at least 1")
        if any(v < 0 for v in self.vertices):
            raise ValueError("vertex ids must be nonnegative")
        for e in self.edges:
            if len(e) != self.r or tuple(sorted(set(e))) != e:
                raise ValueError(f"malformed {self.r}-edge: {e!r}")
            if not set(e) <= self.vertices:
                raise ValueError(f"edge {e!r} uses vertices outside the vertex set")
        if any(v not in self.vertices for v in self.labels):
            raise ValueError("label on a vertex that is not in the hypergraph")

    @classmethod
    def build(
        cls,
        r: int,
        edges: Iterable[Iterable[int]],
        vertices: Iterable[int] = (),
        labels: Optional[Mapping[int, str]] = None,
    ) -> "Hypergraph":
        es = frozenset(canon_edge(e, r) for e in edges)
        vs = frozenset(int(v) for v in vertices) | {v for e in es for v in e}
        return cls(r, vs, es, dict(labels or {}))

    @classmethod
    def complete(cls, n: int, r: int = 3) -> "Hypergraph":
        return cls.build(r, itertools.combinations(range(n), r), vertices=range(n))

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def is_dense(self) -> bool:
        """True if the vertex set is exactly 0..n-1."""
        return self.vertices == frozenset(range(len(self.vertices)))

    def has_edge(self, e: Iterable[int]) -> bool:
        return canon_edge(e) in self.edges

    def minus_edge(self, e: Iterable[int]) -> "Hypergraph":
        ce = canon_edge(e, self.r)
        if ce not in self.edges:
            raise ValueError(f"{ce!r} is not an edge of the hypergraph")
        return Hypergraph(self.r, self.vertices, self.edges - {ce}, self.labels)

    def plus_edges(self, extra: Iterable[Iterable[int]]) -> "Hypergraph":
        es = frozenset(canon_edge(e, self.r) for e in extra)
        vs = self.vertices | {v for e in es for v in e}
        return Hypergraph(self.r, vs, self.edges | es, self.labels)


def fano_plane() -> Hypergraph:
    """The seven lines of the Fano plane; linear and not 2-colorable."""
    lines = [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5)]
    return Hypergraph.build(3, lines)


def link(h: Hypergraph, v: int) -> Hypergraph:
    """Link of a vertex: the (r-1)-graph {e - v : v in e}.

    The vertex set of the link is the support of its edges.

    Raises:
        ValueError: if v is not a vertex of h.
    """
    if v not in h.vertices:
        raise ValueError("vertex not in hypergraph")
    es = frozenset(tuple(x for x in e if x != v) for e in h.edges if v in e)
    vs = frozenset(x for e in es for x in e)
    return Hypergraph(h.r - 1, vs, es)


def degree(h: Hypergraph, s: Iterable[int]) -> int:
    """Number of edges containing every vertex of s, with 1 <= |s| <= r-1."""
    ss = frozenset(int(v) for v in s)
    if not ss <= h.vertices:
        raise ValueError("vertex not in hypergraph")
    if not 1 <= len(ss) <= h.r - 1:
        raise ValueError(f"degree wants a set of size 1..{h.r - 1}, got {len(ss)}")
    return sum(1 for e in h.edges if ss <= set(e))


def codegree(h: Hypergraph, u: int, v: int) -> int:
    return degree(h, (u, v))


def min_ell_degree(h: Hypergraph, ell: int) -> int:
    """Minimum degree over all ell-subsets of the vertex set."""
    if not 1 <= ell <= h.r - 1:
        raise ValueError(f"ell must lie in 1..{h.r - 1}")
    cnt = Counter(sub for e in h.edges for sub in itertools.combinations(e, ell))
    verts = sorted(h.vertices)
    if len(verts) < ell:
        raise ValueError("not enough vertices")
    return min(cnt.get(s, 0) for s in itertools.combinations(verts, ell))


def min_positive_codegree(h: Hypergraph) -> Optional[int]:
    """Minimum codegree over vertex pairs of positive codegree; None if all are zero."""
    if h.r < 3:
        raise ValueError("codegree needs uniformity at least 3")
    cnt = Counter(sub for e in h.edges for sub in itertools.combinations(e, 2))
    return min(cnt.values()) if cnt else None


@lru_cache(maxsize=4096)
def _cliques_cached(h: Hypergraph, t: int) -> tuple[tuple[int, ...], ...]:
    verts = sorted(h.vertices)
    out: list[tuple[int, ...]] = []
    if h.r == 2:
        adj: dict[int, set[int]] = defaultdict(set)
        for a, b in h.edges:
            adj[a].add(b)
            adj[b].add(a)

        def extend2(stack: list[int], cands: list[int]) -> None:
            if len(stack) == t:
                out.append(tuple(stack))
                return
            for idx, w in enumerate(cands):
                nxt = [u for u in cands[idx + 1 :] if u in adj[w]]
                if len(stack) + 1 + len(nxt) < t:
                    continue
                stack.append(w)
                extend2(stack, nxt)
                stack.pop()

        extend2([], verts)
        return tuple(out)

    third: dict[tuple[int, int], set[int]] = defaultdict(set)
    for e in h.edges:
        a, b, c = e
        third[(a, b)].add(c)
        third[(a, c)].add(b)
        third[(b, c)].add(a)

    def extend3(stack: list[int], cands: list[int]) -> None:
        if len(stack) == t:
            out.append(tuple(stack))
            return
        for idx, w in enumerate(cands):
            # u may join stack+[w] only if {s, w, u} is an edge for every s on the stack
            nxt = []
            for u in cands[idx + 1 :]:
                ok = True
                for s in stack:
                    pair = (s, w) if s < w else (w, s)
                    if u not in third.get(pair, ()):
                        ok = False
                        break
                if ok:
                    nxt.append(u)
            if len(stack) + 1 + len(nxt) < t:
                continue
            stack.append(w)
            extend3(stack, nxt)
            stack.pop()

    extend3([], verts)
    return tuple(out)


def enumerate_cliques(h: Hypergraph, t: int) -> tuple[tuple[int, ...], ...]:
    """All t-subsets of V(h) spanning complete r-uniform subhypergraphs.

    Results are sorted tuples in lexicographic order.  Uniformity 2 and 3
    are supported; t must be at least r.
    """
    if h.r not in (2, 3):
        raise ValueError("clique enumeration supports uniformity 2 and 3 only")
    if t < h.r:
        raise ValueError("clique size below the uniformity")
    return _cliques_cached(h, t)


def path_distance(h: Hypergraph, e: Iterable[int], f: Iterable[int]) -> int | float:
    """Fewest vertices of a path of edges from e to f, laid out on a line.

    A path is a sequence of distinct edges e = e_1, ..., e_m = f together
    with a linear order on their vertex union in which every e_i occupies
    three consecutive positions and consecutive edges intersect.  The
    distance is the minimum number of vertices over all such paths, with
    dist(e, e) = 3, and inf when no path exists.
    """
    if h.r != 3:
        raise ValueError("path distance is defined for 3-uniform hypergraphs")
    ce, cf = canon_edge(e, 3), canon_edge(f, 3)
    for x in (ce, cf):
        if x not in h.edges:
            raise ValueError(f"{x!r} is not an edge of the hypergraph")
    if ce == cf:
        return 3
    fset = frozenset(cf)

    by_pair: dict[tuple[int, int], list[int]] = defaultdict(list)
    by_vertex: dict[int, list[Edge]] = defaultdict(list)
    for g in h.edges:
        a, b, c = g
        by_pair[(a, b)].append(c)
        by_pair[(a, c)].append(b)
        by_pair[(b, c)].append(a)
        for v in g:
            by_vertex[v].append(g)

    # Dijkstra over (ordered frontier edge, vertices used so far); extending
    # the frontier interval by one position reuses its last two vertices,
    # extending by two reuses only the last one.
    heap: list[tuple[int, tuple[int, int, int], frozenset[int]]] = []
    start_used = frozenset(ce)
    for perm in itertools.permutations(ce):
        heapq.heappush(heap, (3, perm, start_used))
    best: dict[tuple[tuple[int, int, int], frozenset[int]], int] = {}
    while heap:
        n, frontier, used = heapq.heappop(heap)
        key = (frontier, used)
        if best.get(key, n) < n:
            continue
        if frozenset(frontier) == fset:
            return n
        _, a2, a3 = frontier
        pair = (a2, a3) if a2 < a3 else (a3, a2)
        for w in by_pair.get(pair, ()):
            if w in used:
                continue
            nk = ((a2, a3, w), used | {w})
            if best.get(nk, n + 2) > n + 1:
                best[nk] = n + 1
                heapq.heappush(heap, (n + 1, nk[0], nk[1]))
        for g in by_vertex.get(a3, ()):
            rest = [x for x in g if x != a3]
            if rest[0] in used or rest[1] in used:
                continue
            for w1, w2 in (rest, rest[::-1]):
                nk = ((a3, w1, w2), used | {w1, w2})
                if best.get(nk, n + 3) > n + 2:
                    best[nk] = n + 2
                    heapq.heappush(heap, (n + 2, nk[0], nk[1]))
    return inf


@dataclass(frozen=True)
class GlueMap:
    """Cross-side identification list: pairs (vertex of A, vertex of B)."""

    pairs: tuple[tuple[int, int], ...] = ()

    @classmethod
    def of(cls, pairs: Iterable[tuple[int, int]]) -> "GlueMap":
        return cls(tuple((int(x), int(y)) for x, y in pairs))

    @classmethod
    def identify_edges(cls, edge_in_a: Iterable[int], edge_in_b: Iterable[int]) -> "GlueMap":
        """Identify two edges vertex-wise in sorted order."""
        za, zb = sorted(edge_in_a), sorted(edge_in_b)
        if len(za) != len(zb):
            raise ValueError("edges of different sizes cannot be identified")
        return cls.of(zip(za, zb))


@dataclass
class GlueResult:
    h: Hypergraph
    map_a: dict[int, int]
    map_b: dict[int, int]


def glue(
    a: Hypergraph,
    b: Hypergraph,
    m: GlueMap = GlueMap(),
    b_label_prefix: Optional[str] = None,
) -> GlueResult:
    """Disjoint union of a and b followed by the identifications in m.

    The identification must be a partial injection between the two sides;
    anything that would merge two vertices of the same side is rejected.
    Output ids are dense.  When a's ids are already 0..n-1 they are kept
    verbatim (map_a is the identity), which the gadget builders rely on.

    Raises:
        ValueError: on uniformity mismatch, unknown vertices, or a
            non-injective identification.
    """
    if a.r != b.r:
        raise ValueError("cannot glue hypergraphs of different uniformity")
    partner_ab: dict[int, int] = {}
    partner_ba: dict[int, int] = {}
    for x, y in m.pairs:
        if x not in a.vertices or y not in b.vertices:
            raise ValueError(f"glue pair ({x}, {y}) uses unknown vertices")
        if partner_ab.get(x, y) != y or partner_ba.get(y, x) != x:
            raise ValueError("non-injective glue")
        partner_ab[x] = y
        partner_ba[y] = x

    map_a = {v: i for i, v in enumerate(sorted(a.vertices))}
    next_id = len(a.vertices)
    map_b: dict[int, int] = {}
    for v in sorted(b.vertices):
        if v in partner_ba:
            map_b[v] = map_a[partner_ba[v]]
        else:
            map_b[v] = next_id
            next_id += 1

    edges = {tuple(sorted(map_a[x] for x in e)) for e in a.edges}
    edges |= {tuple(sorted(map_b[x] for x in e)) for e in b.edges}

    labels: dict[int, str] = {map_a[v]: lab for v, lab in a.labels.items()}
    for v in sorted(b.vertices):
        lab = b.labels.get(v)
        if v not in partner_ba and b_label_prefix is not None:
            lab = f"{b_label_prefix}{lab if lab is not None else v}"
        if lab is None:
            continue
        nv = map_b[v]
        labels[nv] = f"{labels[nv]}|{lab}" if nv in labels else lab

    h = Hypergraph(a.r, frozenset(range(next_id)), frozenset(edges), labels)
    return GlueResult(h, map_a, map_b)


def disjoint_union(a: Hypergraph, b: Hypergraph) -> GlueResult:
    return glue(a, b, GlueMap())


def induced(h: Hypergraph, s: Iterable[int]) -> Hypergraph:
    """Subhypergraph on the vertex set s, keeping isolated vertices of s."""
    ss = frozenset(int(v) for v in s)
    if not ss <= h.vertices:
        raise ValueError("vertex not in hypergraph")
    es = frozenset(e for e in h.edges if set(e) <= ss)
    return Hypergraph(h.r, ss, es, {v: lab for v, lab in h.labels.items() if v in ss})


def is_linear(h: Hypergraph) -> bool:
    """True when every two distinct edges meet in at most one vertex."""
    es = sorted(h.edges)
    for i, e in enumerate(es):
        se = set(e)
        for f in es[i + 1 :]:
            if len(se.intersection(f)) > 1:
                return False
    return True


_VERTEX_TAGS = ("a", "b", "apex")
_EDGE_TAGS = ("e", "f")


def _remap_tags(tags: Mapping[str, object], pos: Mapping[int, int]) -> dict:
    out: dict[str, object] = {}
    for key, val in tags.items():
        if val is None:
            continue
        if key in _VERTEX_TAGS:
            out[key] = pos[val]  # type: ignore[index]
        elif key in _EDGE_TAGS or key == "S":
            out[key] = sorted(pos[x] for x in val)  # type: ignore[union-attr]
        elif key == "rainbow":
            out[key] = [sorted(pos[x] for x in e) for e in val]  # type: ignore[union-attr]
        elif key == "dist":
            out[key] = int(val)  # type: ignore[arg-type]
        else:
            raise ValueError(f"unknown tag {key!r}")
    return out


def to_json_dict(h: Hypergraph, tags: Optional[Mapping[str, object]] = None) -> dict:
    """JSON document for a hypergraph: r, n, sorted edges, labels, tags.

    Vertices are renumbered to 0..n-1 in sorted order; for the dense
    hypergraphs produced by the builders this is the identity, so emitted
    documents round-trip exactly.
    """
    verts = sorted(h.vertices)
    pos = {v: i for i, v in enumerate(verts)}
    edges = sorted(tuple(sorted(pos[x] for x in e)) for e in h.edges)
    doc: dict[str, object] = {"r": h.r, "n": len(verts), "edges": [list(e) for e in edges]}
    if h.labels:
        doc["labels"] = {str(pos[v]): h.labels[v] for v in sorted(h.labels)}
    if tags:
        remapped = _remap_tags(tags, pos)
        if remapped:
            doc["tags"] = remapped
    return doc


def from_json_dict(doc: Mapping[str, object]) -> tuple[Hypergraph, dict]:
    """Parse a hypergraph document; returns the hypergraph and its tags."""
    try:
        r = int(doc["r"])  # type: ignore[arg-type]
        n = int(doc["n"])  # type: ignore[arg-type]
        raw_edges = doc.get("edges", [])
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed hypergraph document: {exc}") from exc
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    edges = [canon_edge(e, r) for e in raw_edges]  # type: ignore[union-attr]
    for e in edges:
        if e and (e[0] < 0 or e[-1] >= n):
            raise ValueError(f"edge {e!r} outside vertex range 0..{n - 1}")
    labels = {int(k): str(v) for k, v in (doc.get("labels") or {}).items()}  # type: ignore[union-attr]
    h = Hypergraph.build(r, edges, vertices=range(n), labels=labels)

    tags: dict[str, object] = {}
    for key, val in (doc.get("tags") or {}).items():  # type: ignore[union-attr]
        if key in _VERTEX_TAGS or key == "dist":
            tags[key] = int(val)
        elif key in _EDGE_TAGS or key == "S":
            tags[key] = tuple(sorted(int(x) for x in val))
        elif key == "rainbow":
            tags[key] = tuple(tuple(sorted(int(x) for x in e)) for e in val)
        else:
            raise ValueError(f"unknown tag {key!r}")
    return h, tags
