"""Finite simple graphs and their flag (clique) complexes.

A simplex is a tuple of vertex ids sorted by the graph's declaration order;
the empty tuple ``EMPTY`` is the (-1)-dimensional simplex.  All objects are
immutable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import ParseError, ResourceCapError

__all__ = [
    "EMPTY",
    "DEFAULT_MAX_SIMPLICES",
    "Graph",
    "FlagComplex",
    "Simplex",
    "parse_graph",
    "flag_complex",
    "link",
    "full_subcomplex",
    "connected_components",
    "complete_graph",
    "path_graph",
    "cycle_graph",
    "multipartite_pairs",
    "graph_join",
]

Simplex = tuple  # tuple[str, ...]
EMPTY: Simplex = ()

DEFAULT_MAX_SIMPLICES = 10**6


class GraphError(ParseError):
    """Invalid graph data.  ``kind`` names the violated rule."""

    def __init__(self, kind: str, message: str):
        super().__init__(f"{kind}: {message}")
        self.kind = kind


@dataclass(frozen=True)
class Graph:
    """A finite simple graph with an ordered vertex list.

    The declaration order of ``vertices`` is the canonical order used for
    sorting simplices and breaking ties everywhere downstream.
    """

    vertices: tuple[str, ...]
    edges: frozenset[frozenset[str]] = field(default_factory=frozenset)

    def __post_init__(self):
        verts = tuple(self.vertices)
        object.__setattr__(self, "vertices", verts)
        seen = set()
        for v in verts:
            if not isinstance(v, str) or not v:
                raise GraphError("bad-vertex", f"vertex ids must be nonempty strings, got {v!r}")
            if v in seen:
                raise GraphError("duplicate-vertex", f"vertex {v!r} declared twice")
            seen.add(v)
        edges = set()
        for e in self.edges:
            pair = tuple(e)
            if len(pair) == 1:
                raise GraphError("self-loop", f"edge at {pair[0]!r}")
            if len(pair) != 2:
                raise GraphError("malformed", f"edge {pair!r} is not a pair")
            for v in pair:
                if v not in seen:
                    raise GraphError("unknown-vertex", f"edge endpoint {v!r} is not a vertex")
            edges.add(frozenset(pair))
        object.__setattr__(self, "edges", frozenset(edges))

    @classmethod
    def from_edges(cls, vertices: Iterable[str], edges: Iterable[Sequence[str]]) -> "Graph":
        """Build a graph, rejecting self-loops and repeated edges."""
        vertices = tuple(vertices)
        pairs = set()
        for e in edges:
            e = tuple(e)
            if len(e) != 2:
                raise GraphError("malformed", f"edge {list(e)!r} is not a pair")
            u, v = e
            if u == v:
                raise GraphError("self-loop", f"edge [{u!r}, {v!r}]")
            key = frozenset(e)
            if key in pairs:
                raise GraphError("duplicate-edge", f"edge [{u!r}, {v!r}] listed twice")
            pairs.add(key)
        return cls(vertices, frozenset(pairs))

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def _nbr_masks(self) -> tuple[int, ...]:
        masks = [0] * len(self.vertices)
        idx = self.index
        for e in self.edges:
            u, v = (idx[w] for w in e)
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def neighbors(self, v: str) -> tuple[str, ...]:
        mask = self._nbr_masks[self.index[v]]
        return tuple(w for i, w in enumerate(self.vertices) if mask >> i & 1)

    def adjacent(self, u: str, v: str) -> bool:
        return frozenset((u, v)) in self.edges

    def sort_vertices(self, vs: Iterable[str]) -> tuple[str, ...]:
        """Sort ``vs`` by canonical order."""
        idx = self.index
        try:
            return tuple(sorted(set(vs), key=idx.__getitem__))
        except KeyError as exc:
            raise GraphError("unknown-vertex", f"{exc.args[0]!r} is not a vertex") from None

    def induced_subgraph(self, subset: Iterable[str]) -> "Graph":
        keep = set(subset)
        unknown = keep.difference(self.vertices)
        if unknown:
            raise GraphError("unknown-vertex", f"{sorted(unknown)!r} not in graph")
        verts = tuple(v for v in self.vertices if v in keep)
        return Graph(verts, frozenset(e for e in self.edges if e <= keep))

    def is_connected(self) -> bool:
        return len(_components(self, range(len(self.vertices)))) <= 1

    def sorted_edges(self) -> list[tuple[str, str]]:
        idx = self.index
        pairs = [tuple(sorted(e, key=idx.__getitem__)) for e in self.edges]
        return sorted(pairs, key=lambda p: (idx[p[0]], idx[p[1]]))

    def to_document(self) -> dict:
        return {"vertices": list(self.vertices), "edges": [list(p) for p in self.sorted_edges()]}

    def __repr__(self):
        return f"Graph(vertices={list(self.vertices)}, edges={self.sorted_edges()})"


def parse_graph(text) -> Graph:
    """Parse a graph document ``{"vertices": [...], "edges": [[u, v], ...]}``.

    ``text`` may be a JSON string or an already-decoded mapping.
    """
    if isinstance(text, (str, bytes)):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphError("malformed", f"invalid JSON: {exc}") from None
    else:
        doc = text
    if not isinstance(doc, dict) or not isinstance(doc.get("vertices"), list):
        raise GraphError("malformed", "expected an object with a 'vertices' list")
    edges = doc.get("edges", [])
    if not isinstance(edges, list) or not all(isinstance(e, list) for e in edges):
        raise GraphError("malformed", "'edges' must be a list of pairs")
    return Graph.from_edges(doc["vertices"], edges)


def _components(g: Graph, indices: Iterable[int]) -> list[list[int]]:
    present = 0
    for i in indices:
        present |= 1 << i
    masks = g._nbr_masks
    comps = []
    remaining = present
    while remaining:
        low = remaining & -remaining
        comp = low
        frontier = low
        while frontier:
            bit = frontier & -frontier
            frontier ^= bit
            new = masks[bit.bit_length() - 1] & present & ~comp
            comp |= new
            frontier |= new
        remaining &= ~comp
        comps.append([i for i in range(comp.bit_length()) if comp >> i & 1])
    return comps


@dataclass(frozen=True, eq=False)
class FlagComplex:
    """Flag complex of ``graph`` restricted to ``vertex_subset``.

    ``simplices[k]`` lists the k-simplices for ``0 <= k <= max_dim`` in
    lexicographic canonical order.  ``max_dim == -1`` means only the empty
    simplex is materialized.
    """

    graph: Graph
    vertex_subset: tuple[str, ...]
    max_dim: int
    simplices: tuple[tuple[Simplex, ...], ...]

    def __len__(self):
        return sum(len(s) for s in self.simplices)

    @property
    def is_empty(self) -> bool:
        return not self.vertex_subset

    def count(self, k: int) -> int:
        if k == -1:
            return 1
        if k > self.max_dim:
            raise ValueError(f"dimension {k} not materialized (max_dim={self.max_dim})")
        return len(self.simplices[k]) if k < len(self.simplices) else 0

    def counts(self) -> list[int]:
        return [self.count(k) for k in range(self.max_dim + 1)]

    def simplices_of_dim(self, k: int) -> tuple[Simplex, ...]:
        if k == -1:
            return (EMPTY,)
        if k > self.max_dim:
            raise ValueError(f"dimension {k} not materialized (max_dim={self.max_dim})")
        return self.simplices[k] if k < len(self.simplices) else ()

    @cached_property
    def _positions(self) -> tuple[dict, ...]:
        return tuple({s: i for i, s in enumerate(level)} for level in self.simplices)

    def position(self, sigma: Simplex) -> int:
        """Index of ``sigma`` within its dimension's list."""
        return self._positions[len(sigma) - 1][sigma]

    def is_clique(self, vs: Iterable[str]) -> bool:
        """True iff ``vs`` are present vertices, pairwise adjacent (no dimension cap)."""
        vs = tuple(vs)
        present = set(self.vertex_subset)
        if any(v not in present for v in vs):
            return False
        return all(self.graph.adjacent(u, v) for u, v in combinations(vs, 2))

    def __contains__(self, sigma) -> bool:
        sigma = tuple(sigma)
        if not sigma:
            return True
        if len(sigma) - 1 > self.max_dim or len(set(sigma)) != len(sigma):
            return False
        return self.is_clique(sigma)

    def same_as(self, other: "FlagComplex") -> bool:
        return (
            self.vertex_subset == other.vertex_subset
            and self.max_dim == other.max_dim
            and self.simplices == other.simplices
        )

    def __repr__(self):
        return f"FlagComplex(vertices={list(self.vertex_subset)}, counts={self.counts()})"


def _build(g: Graph, subset: Sequence[int], max_dim: int, max_simplices: int) -> FlagComplex:
    subset = sorted(set(subset))
    verts = g.vertices
    if max_dim < 0 or not subset:
        return FlagComplex(g, tuple(verts[i] for i in subset), max_dim, ())
    present = 0
    for i in subset:
        present |= 1 << i
    masks = [m & present for m in g._nbr_masks]
    # each entry: (clique indices, mask of common neighbours above the last index)
    level = [((i,), masks[i] & ~((2 << i) - 1)) for i in subset]
    total = len(level)
    if total > max_simplices:
        raise ResourceCapError(f"flag complex exceeds {max_simplices} simplices")
    out = [level]
    for _ in range(max_dim):
        nxt = []
        for clique, cand in level:
            while cand:
                bit = cand & -cand
                cand ^= bit
                j = bit.bit_length() - 1
                nxt.append((clique + (j,), cand & masks[j]))
        if not nxt:
            break
        total += len(nxt)
        if total > max_simplices:
            raise ResourceCapError(f"flag complex exceeds {max_simplices} simplices")
        out.append(nxt)
        level = nxt
    simplices = tuple(tuple(tuple(verts[i] for i in c) for c, _ in lvl) for lvl in out)
    return FlagComplex(g, tuple(verts[i] for i in subset), max_dim, simplices)


def flag_complex(g: Graph, max_dim: int, max_simplices: int = DEFAULT_MAX_SIMPLICES) -> FlagComplex:
    """All cliques of ``g`` with at most ``max_dim + 1`` vertices.

    Raises
    ------
    ResourceCapError
        If more than ``max_simplices`` simplices would be materialized.
    """
    if max_dim < -1:
        raise ValueError("max_dim must be >= -1")
    return _build(g, range(len(g.vertices)), max_dim, max_simplices)


def full_subcomplex(
    K: FlagComplex, S: Iterable[str], max_simplices: int = DEFAULT_MAX_SIMPLICES
) -> FlagComplex:
    """The full subcomplex of ``K`` spanned by ``S``."""
    S = set(S)
    unknown = S.difference(K.vertex_subset)
    if unknown:
        raise GraphError("unknown-vertex", f"{sorted(unknown)!r} not in complex")
    idx = K.graph.index
    return _build(K.graph, [idx[v] for v in S], K.max_dim, max_simplices)


def link(
    K: FlagComplex,
    sigma: Simplex,
    max_dim: int | None = None,
    max_simplices: int = DEFAULT_MAX_SIMPLICES,
) -> FlagComplex:
    """Link of ``sigma`` in ``K``: the flag complex on the common neighbours.

    By default the link is materialized to ``K.max_dim - len(sigma)``, the
    range in which it is determined by the simplices of ``K``.
    """
    sigma = tuple(sigma)
    if not sigma:
        return K if max_dim is None or max_dim == K.max_dim else _rebuild(K, max_dim, max_simplices)
    if not K.is_clique(sigma) or len(set(sigma)) != len(sigma):
        raise GraphError("not-a-simplex", f"{list(sigma)!r} is not a simplex of the complex")
    g = K.graph
    idx = g.index
    common = 0
    for v in K.vertex_subset:
        common |= 1 << idx[v]
    for v in sigma:
        common &= g._nbr_masks[idx[v]]
    subset = [i for i in range(common.bit_length()) if common >> i & 1]
    if max_dim is None:
        max_dim = max(K.max_dim - len(sigma), -1)
    return _build(g, subset, max_dim, max_simplices)


def _rebuild(K: FlagComplex, max_dim: int, max_simplices: int) -> FlagComplex:
    idx = K.graph.index
    return _build(K.graph, [idx[v] for v in K.vertex_subset], max_dim, max_simplices)


def connected_components(K: FlagComplex) -> list[tuple[str, ...]]:
    """Vertex sets of the components of the 1-skeleton, in canonical order."""
    g = K.graph
    comps = _components(g, (g.index[v] for v in K.vertex_subset))
    return [tuple(g.vertices[i] for i in c) for c in comps]


# ---------------------------------------------------------------------------
# constructors


def complete_graph(n: int, prefix: str = "v") -> Graph:
    vs = [f"{prefix}{i}" for i in range(1, n + 1)]
    return Graph.from_edges(vs, combinations(vs, 2))


def path_graph(n: int, prefix: str = "v") -> Graph:
    vs = [f"{prefix}{i}" for i in range(1, n + 1)]
    return Graph.from_edges(vs, zip(vs, vs[1:]))


def cycle_graph(n: int, prefix: str = "v") -> Graph:
    vs = [f"{prefix}{i}" for i in range(1, n + 1)]
    return Graph.from_edges(vs, list(zip(vs, vs[1:])) + [(vs[-1], vs[0])])


def multipartite_pairs(m: int) -> Graph:
    """K_{2,...,2} with m parts {x_i, y_i}: the graph of the Bieri-Stallings group G_m.

    Vertex order is x1, y1, x2, y2, ...; only x_i and y_i are non-adjacent.
    """
    vs = [f"{c}{i}" for i in range(1, m + 1) for c in "xy"]
    edges = [(u, v) for u, v in combinations(vs, 2) if u[1:] != v[1:]]
    return Graph.from_edges(vs, edges)


def graph_join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union of ``g1`` and ``g2`` plus every edge between them."""
    if set(g1.vertices) & set(g2.vertices):
        raise ValueError("graph_join needs disjoint vertex sets")
    edges = [tuple(e) for e in g1.edges | g2.edges]
    edges += [(u, v) for u in g1.vertices for v in g2.vertices]
    return Graph.from_edges(g1.vertices + g2.vertices, edges)
