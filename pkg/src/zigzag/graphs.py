"""Finite simple graphs, darts, vertex maps, coverings, and boundaries."""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from types import MappingProxyType
from typing import NamedTuple, Union

AtomId = Union[int, str]
# A vertex id is an atom or a pair of vertex ids.  Product graphs nest pairs.
VertexId = Union[AtomId, tuple]
# Edges are stored with endpoints in canonical order.
Edge = tuple


def is_vertex_id(value) -> bool:
    """True if value is a legal vertex id (atom or recursive pair)."""
    if isinstance(value, bool):
        return False
    if isinstance(value, (int, str)):
        return True
    if isinstance(value, tuple) and len(value) == 2:
        return is_vertex_id(value[0]) and is_vertex_id(value[1])
    return False


def vertex_key(v: VertexId):
    """Canonical sort key: ints, then strings, then pairs (lexicographic)."""
    if isinstance(v, tuple):
        return (2, vertex_key(v[0]), vertex_key(v[1]))
    if isinstance(v, str):
        return (1, v)
    return (0, v)


def format_vertex(v: VertexId) -> str:
    if isinstance(v, tuple):
        return f"({format_vertex(v[0])},{format_vertex(v[1])})"
    return str(v)


def make_edge(u: VertexId, v: VertexId) -> Edge:
    """Unordered edge as a canonically ordered pair. Loops are rejected."""
    if u == v:
        raise ValueError(f"loop edge at {format_vertex(u)} not allowed in a simple graph")
    if vertex_key(u) <= vertex_key(v):
        return (u, v)
    return (v, u)


def edge_key(e: Edge):
    return (vertex_key(e[0]), vertex_key(e[1]))


class Dart(NamedTuple):
    """One of the two (vertex, edge) incidences of an edge."""

    vertex: VertexId
    edge: Edge

    @property
    def other_end(self) -> VertexId:
        u, v = self.edge
        return v if self.vertex == u else u


def dart_key(d: Dart):
    return (vertex_key(d.vertex), edge_key(d.edge))


@dataclass(frozen=True)
class Graph:
    """Immutable finite simple undirected graph.

    Vertices and edges are canonicalized on construction: ids validated,
    duplicates dropped, edge endpoints added to the vertex set, everything
    sorted by the canonical vertex order.  Equality is structural.
    """

    vertices: tuple = ()
    edges: tuple = ()

    def __post_init__(self):
        vset = set()
        for v in self.vertices:
            if not is_vertex_id(v):
                raise ValueError(f"invalid vertex id: {v!r}")
            vset.add(v)
        eset = set()
        for e in self.edges:
            u, v = e
            if not (is_vertex_id(u) and is_vertex_id(v)):
                raise ValueError(f"invalid edge endpoints: {e!r}")
            eset.add(make_edge(u, v))
            vset.add(u)
            vset.add(v)
        object.__setattr__(self, "vertices", tuple(sorted(vset, key=vertex_key)))
        object.__setattr__(self, "edges", tuple(sorted(eset, key=edge_key)))

    @cached_property
    def edge_set(self) -> frozenset:
        return frozenset(self.edges)

    @cached_property
    def adjacency(self) -> dict:
        adj = {v: [] for v in self.vertices}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return {v: tuple(sorted(ns, key=vertex_key)) for v, ns in adj.items()}

    def neighbors(self, v: VertexId) -> tuple:
        if v not in self.adjacency:
            raise ValueError(f"vertex {format_vertex(v)} not in graph")
        return self.adjacency[v]

    def degree(self, v: VertexId) -> int:
        return len(self.neighbors(v))

    def has_vertex(self, v: VertexId) -> bool:
        return v in self.adjacency

    def has_edge(self, u: VertexId, v: VertexId) -> bool:
        return u != v and make_edge(u, v) in self.edge_set

    def incident_edges(self, v: VertexId) -> tuple:
        return tuple(make_edge(v, w) for w in self.neighbors(v))

    def induced_subgraph(self, subset: Iterable[VertexId]) -> "Graph":
        sub = set(subset)
        missing = sub - set(self.vertices)
        if missing:
            raise ValueError(f"vertices not in graph: {sorted(missing, key=vertex_key)}")
        kept = tuple(e for e in self.edges if e[0] in sub and e[1] in sub)
        return Graph(tuple(sub), kept)

    def is_regular(self) -> int | None:
        """Common degree if the graph is regular, else None."""
        if not self.vertices:
            return None
        degrees = {len(self.adjacency[v]) for v in self.vertices}
        if len(degrees) == 1:
            return degrees.pop()
        return None

    def max_degree(self) -> int:
        if not self.vertices:
            return 0
        return max(len(self.adjacency[v]) for v in self.vertices)


def darts(g: Graph) -> tuple:
    """All (vertex, edge) incidences of g, two per edge, in canonical order."""
    out = []
    for e in g.edges:
        out.append(Dart(e[0], e))
        out.append(Dart(e[1], e))
    return tuple(sorted(out, key=dart_key))


@dataclass(frozen=True, eq=False)
class VertexMap:
    """Total function between the vertex sets of two graphs."""

    domain: Graph
    codomain: Graph
    mapping: Mapping

    def __post_init__(self):
        got = dict(self.mapping)
        dom = set(self.domain.vertices)
        if set(got) != dom:
            extra = sorted(set(got) - dom, key=vertex_key)
            missing = sorted(dom - set(got), key=vertex_key)
            raise ValueError(f"map not total on domain (missing {missing}, extra {extra})")
        bad = [v for v in got.values() if not self.codomain.has_vertex(v)]
        if bad:
            raise ValueError(f"map image leaves codomain: {sorted(set(bad), key=vertex_key)}")
        ordered = {v: got[v] for v in self.domain.vertices}
        object.__setattr__(self, "mapping", MappingProxyType(ordered))

    def __call__(self, v: VertexId) -> VertexId:
        return self.mapping[v]

    def __eq__(self, other):
        if not isinstance(other, VertexMap):
            return NotImplemented
        return (
            self.domain == other.domain
            and self.codomain == other.codomain
            and self.mapping == other.mapping
        )

    def __hash__(self):
        return hash((self.domain, self.codomain, tuple(self.mapping.items())))


def identity_map(g: Graph) -> VertexMap:
    return VertexMap(g, g, {v: v for v in g.vertices})


def compose(outer: VertexMap, inner: VertexMap) -> VertexMap:
    if inner.codomain != outer.domain:
        raise ValueError("maps not composable: codomain of inner differs from domain of outer")
    return VertexMap(inner.domain, outer.codomain, {v: outer(inner(v)) for v in inner.domain.vertices})


def is_graph_morphism(m: VertexMap) -> bool:
    """True iff adjacency is preserved.

    The codomain is simple, so a morphism may never identify two adjacent
    vertices: the image of an edge must again be an edge, never a loop.
    """
    for u, v in m.domain.edges:
        if not m.codomain.has_edge(m(u), m(v)):
            return False
    return True


def induced_dart_map(m: VertexMap):
    """The dart-level map sending (u, {u,v}) to (m(u), {m(u), m(v)})."""
    if not is_graph_morphism(m):
        raise ValueError("dart map is only induced by a graph morphism")

    def dmap(d: Dart) -> Dart:
        u, v = d.edge
        other = v if d.vertex == u else u
        return Dart(m(d.vertex), make_edge(m(d.vertex), m(other)))

    return dmap


def is_isomorphism(m: VertexMap) -> bool:
    """True iff m is a bijective morphism whose inverse is a morphism."""
    if not is_graph_morphism(m):
        return False
    values = list(m.mapping.values())
    if len(set(values)) != len(values) or set(values) != set(m.codomain.vertices):
        return False
    return is_graph_morphism(inverse_map(m))


def inverse_map(m: VertexMap) -> VertexMap:
    values = list(m.mapping.values())
    if len(set(values)) != len(values) or set(values) != set(m.codomain.vertices):
        raise ValueError("map is not a bijection onto the codomain vertices")
    return VertexMap(m.codomain, m.domain, {w: v for v, w in m.mapping.items()})


def is_covering_map(m: VertexMap) -> bool:
    """True iff m is a morphism restricting to a bijection on every neighborhood."""
    if not is_graph_morphism(m):
        return False
    for x in m.domain.vertices:
        images = [m(y) for y in m.domain.neighbors(x)]
        if len(set(images)) != len(images):
            return False
        if set(images) != set(m.codomain.neighbors(m(x))):
            return False
    return True


@dataclass(frozen=True)
class CoverCheck:
    """Outcome of a combinatorial-cover check.

    index is the common edge-fiber count when the check succeeds; otherwise
    violation names the failed condition and witness pins down where.
    """

    index: int | None
    violation: str | None = None
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.index is not None


def check_combinatorial_cover(m: VertexMap) -> CoverCheck:
    """Check the two combinatorial-covering conditions by enumeration.

    Condition one: every codomain edge has the same positive number of
    preimage edges.  Condition two: vertices in a common fiber see every
    adjacent fiber through equally many edges.  A codomain without edges
    is conventionally a cover of index 1 (both conditions are vacuous).
    """
    if not is_graph_morphism(m):
        return CoverCheck(None, "not-a-morphism", None)

    fiber_edges = {e: 0 for e in m.codomain.edges}
    for x, y in m.domain.edges:
        img = make_edge(m(x), m(y))
        fiber_edges[img] += 1

    index = None
    for e in m.codomain.edges:
        count = fiber_edges[e]
        if count == 0:
            return CoverCheck(None, "empty-edge-fiber", (e,))
        if index is None:
            index = count
        elif count != index:
            first = next(d for d in m.codomain.edges if fiber_edges[d] == index)
            return CoverCheck(None, "unequal-edge-fibers", (first, index, e, count))
    if index is None:
        index = 1

    fibers: dict = {}
    for x in m.domain.vertices:
        fibers.setdefault(m(x), []).append(x)
    for u, fiber in fibers.items():
        for v in m.codomain.neighbors(u):
            counts = {x: sum(1 for y in m.domain.neighbors(x) if m(y) == v) for x in fiber}
            first = fiber[0]
            for x in fiber[1:]:
                if counts[x] != counts[first]:
                    return CoverCheck(None, "unequal-neighborhood-fibers", (first, x, v))
    return CoverCheck(index)


def is_combinatorial_cover(m: VertexMap) -> bool:
    return bool(check_combinatorial_cover(m))


def boundary(subset: Iterable[VertexId], g: Graph) -> tuple:
    """Edges of g with exactly one endpoint in the subset."""
    sub = set(subset)
    missing = sub - set(g.vertices)
    if missing:
        raise ValueError(f"vertices not in graph: {sorted(missing, key=vertex_key)}")
    return tuple(e for e in g.edges if (e[0] in sub) != (e[1] in sub))


def isoperimetric_ratio(subset: Iterable[VertexId], g: Graph) -> Fraction:
    """Boundary size over subset size, as an exact rational."""
    sub = set(subset)
    if not sub:
        raise ValueError("isoperimetric ratio of the empty set is undefined")
    return Fraction(len(boundary(sub, g)), len(sub))


def is_connected(g: Graph) -> bool:
    if len(g.vertices) <= 1:
        return True
    seen = {g.vertices[0]}
    stack = [g.vertices[0]]
    while stack:
        v = stack.pop()
        for w in g.adjacency[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(g.vertices)


def disjoint_union(a: Graph, b: Graph, tags: tuple = (0, 1)) -> Graph:
    """Disjoint union with vertices tagged as pairs (tag, original id)."""
    verts = [(tags[0], v) for v in a.vertices] + [(tags[1], v) for v in b.vertices]
    edges = [((tags[0], u), (tags[0], v)) for u, v in a.edges]
    edges += [((tags[1], u), (tags[1], v)) for u, v in b.edges]
    return Graph(tuple(verts), tuple(edges))
