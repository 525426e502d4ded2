"""Graph corpora for regression and self-testing."""

from __future__ import annotations

import json
import random
from functools import lru_cache
from fractions import Fraction
from pathlib import Path

import networkx as nx

from .graph import Graph, multipartite_pairs

__all__ = [
    "bieri_stallings_graph",
    "atlas_graphs",
    "random_graph",
    "random_weights",
    "write_corpus",
]

WEIGHT_POOL = tuple(Fraction(x) for x in ("-2", "-1", "0", "1", "2", "1/2", "-3/2", "5/3"))


def bieri_stallings_graph(m: int) -> Graph:
    """K_{2,...,2} with m parts; its BB group is the Bieri-Stallings group G_m."""
    return multipartite_pairs(m)


def from_networkx(h: nx.Graph, prefix: str = "v") -> Graph:
    nodes = sorted(h.nodes())
    names = {u: f"{prefix}{u}" for u in nodes}
    return Graph.from_edges([names[u] for u in nodes], [(names[u], names[v]) for u, v in h.edges()])


@lru_cache(maxsize=None)
def atlas_graphs(max_vertices: int, connected: bool = True) -> tuple[Graph, ...]:
    """All graphs on 1..max_vertices vertices up to isomorphism (max 7)."""
    if max_vertices > 7:
        raise ValueError("the graph atlas stops at 7 vertices")
    out = []
    for h in nx.graph_atlas_g():
        if not 0 < h.number_of_nodes() <= max_vertices:
            continue
        if connected and not nx.is_connected(h):
            continue
        out.append(from_networkx(h))
    return tuple(out)


def random_graph(rng: random.Random, n: int, p: float = 0.5, prefix: str = "v") -> Graph:
    vs = [f"{prefix}{i}" for i in range(1, n + 1)]
    edges = [(vs[i], vs[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph.from_edges(vs, edges)


def random_weights(rng: random.Random, k: int, pool=WEIGHT_POOL) -> list[Fraction]:
    return [rng.choice(pool) for _ in range(k)]


def write_corpus(directory, max_m: int = 4) -> list[Path]:
    """Write G_m graph documents ``G{m}.json`` for 2 <= m <= max_m."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for m in range(2, max_m + 1):
        path = directory / f"G{m}.json"
        path.write_text(json.dumps(bieri_stallings_graph(m).to_document()) + "\n")
        paths.append(path)
    return paths
