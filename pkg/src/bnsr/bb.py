"""Sigma-invariants of Bestvina-Brady groups.

BB_Gamma is the kernel of A_Gamma -> Z sending every generator to 1.  For a
connected graph its characters are vertex weights modulo adding a constant,
and [chi] lies in Sigma^n(BB_Gamma) exactly when every character of A_Gamma
extending chi lies in Sigma^n(A_Gamma).  The extensions form the line
c + t * (1, ..., 1); only the finitely many t = -c(v) produce zero weights,
so checking those values settles the universal quantifier.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping

from .errors import InvalidCharacterError, PreconditionError, ResourceCapError
from .graph import DEFAULT_MAX_SIMPLICES, Graph, flag_complex
from .homology import (
    DEFAULT_TIETZE_BUDGET,
    Answer,
    TriState,
    first_failing_degree,
    is_k_connected,
)
from .raag import DeadSimplexFailure, RaagCharacter, Verdict, _check, format_rational

__all__ = [
    "BBCharacter",
    "ExtensionFamily",
    "BBFailure",
    "BadSet",
    "SpherePolyhedron",
    "DEFAULT_MAX_BAD_SET_VERTICES",
    "critical_values",
    "bb_finiteness",
    "bb_sigma",
    "is_bad",
    "minimal_bad_sets",
    "sigma1_complement",
    "polyhedron_contains",
    "wreath_sufficient",
    "ZERO",
    "product_formula_predict",
]

DEFAULT_MAX_BAD_SET_VERTICES = 16


@dataclass(frozen=True)
class BBCharacter:
    """Vertex weights modulo a constant shift, stored with the first vertex at 0."""

    graph: Graph
    weights: Mapping[str, Fraction]

    def __post_init__(self):
        verts = self.graph.vertices
        missing = [v for v in verts if v not in self.weights]
        if missing:
            raise InvalidCharacterError(f"no weight for vertices {missing}")
        extra = set(self.weights).difference(verts)
        if extra:
            raise InvalidCharacterError(f"weights for unknown vertices {sorted(extra)}")
        base = Fraction(self.weights[verts[0]])
        w = {v: Fraction(self.weights[v]) - base for v in verts}
        if not any(w.values()):
            raise InvalidCharacterError("constant weights vanish on BB_Gamma")
        object.__setattr__(self, "weights", w)

    @classmethod
    def from_values(cls, graph: Graph, values) -> "BBCharacter":
        values = list(values)
        if len(values) != len(graph.vertices):
            raise InvalidCharacterError("one weight per vertex required")
        return cls(graph, {v: Fraction(x) for v, x in zip(graph.vertices, values)})

    def values(self) -> tuple[Fraction, ...]:
        return tuple(self.weights[v] for v in self.graph.vertices)

    def level_sets(self) -> list[tuple[str, ...]]:
        """Vertices grouped by equal weight, ordered by weight."""
        groups: dict[Fraction, list[str]] = {}
        for v in self.graph.vertices:
            groups.setdefault(self.weights[v], []).append(v)
        return [tuple(groups[k]) for k in sorted(groups)]

    def to_document(self) -> dict[str, str]:
        return {v: format_rational(self.weights[v]) for v in self.graph.vertices}

    def __hash__(self):
        return hash((self.graph, self.values()))


@dataclass(frozen=True)
class ExtensionFamily:
    """The characters mu_t = c + t of A_Gamma restricting to a BB character."""

    base: BBCharacter

    def extension_at(self, t) -> RaagCharacter:
        t = Fraction(t)
        return RaagCharacter(self.base.graph, {v: c + t for v, c in self.base.weights.items()})


def critical_values(chi: BBCharacter) -> list[Fraction]:
    """The t for which c + t has a zero weight, ascending."""
    return sorted({-c for c in chi.weights.values()})


def _require_connected(g: Graph) -> None:
    if not g.vertices:
        raise PreconditionError("the graph has no vertices")
    if not g.is_connected():
        raise PreconditionError("BB_Gamma is finitely generated only for connected Gamma")


def bb_finiteness(
    g: Graph,
    n: int,
    homotopical: bool = False,
    *,
    max_simplices: int = DEFAULT_MAX_SIMPLICES,
    tietze_budget: int = DEFAULT_TIETZE_BUDGET,
) -> TriState:
    """Is BB_Gamma of type FP_n (or F_n)?  Decided by acyclicity
    (connectivity) of the flag complex in degrees below n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    _require_connected(g)
    if homotopical and n >= 2:
        delta = flag_complex(g, max(n, 2), max_simplices)
        return is_k_connected(delta, n - 1, tietze_budget)
    delta = flag_complex(g, n, max_simplices)
    failing = first_failing_degree(delta, n - 1)
    if failing is None:
        return TriState(Answer.YES, f"flag complex is {n - 1}-acyclic")
    i, h = failing
    return TriState(Answer.NO, f"reduced H_{i} of the flag complex is {h}")


@dataclass(frozen=True)
class BBFailure:
    """No-witness for BB: the extension c + t fails at ``failure``."""

    t: Fraction
    failure: DeadSimplexFailure

    def to_dict(self) -> dict:
        return {"t": format_rational(self.t), **self.failure.to_dict()}


def bb_sigma(
    g: Graph,
    chi: BBCharacter,
    n: int,
    homotopical: bool = False,
    *,
    max_simplices: int = DEFAULT_MAX_SIMPLICES,
    tietze_budget: int = DEFAULT_TIETZE_BUDGET,
) -> Verdict:
    """Decide [chi] in Sigma^n(BB_Gamma, Z) (or Sigma^n(BB_Gamma)).

    Raises
    ------
    PreconditionError
        If Gamma is disconnected or BB_Gamma is not of type FP_n (F_n).
    """
    if chi.graph != g:
        raise InvalidCharacterError("character belongs to a different graph")
    fin = bb_finiteness(g, n, homotopical, max_simplices=max_simplices, tietze_budget=tietze_budget)
    kind = "F" if homotopical else "FP"
    if fin.value is Answer.NO:
        raise PreconditionError(f"BB_Gamma is not of type {kind}_{n} ({fin.reason})")
    if fin.value is Answer.UNKNOWN:
        return Verdict(Answer.UNKNOWN, None, f"could not certify type {kind}_{n}: {fin.reason}")
    homotopical = homotopical and n >= 2
    delta = flag_complex(g, max(n, 2) if homotopical else n, max_simplices)
    family = ExtensionFamily(chi)
    unknown = None
    for t in critical_values(chi):
        v = _check(delta, family.extension_at(t), n, homotopical, max_simplices, tietze_budget)
        if v.is_no:
            return Verdict(Answer.NO, BBFailure(t, v.witness), f"extension at t = {format_rational(t)}: {v.reason}")
        if v.value is Answer.UNKNOWN and unknown is None:
            unknown = f"extension at t = {format_rational(t)}: {v.reason}"
    if unknown is not None:
        return Verdict(Answer.UNKNOWN, None, unknown)
    return Verdict(Answer.YES, None, "every critical extension lies in the RAAG invariant")


# ---------------------------------------------------------------------------
# the Sigma^1 complement


@dataclass(frozen=True)
class BadSet:
    vertices: tuple[str, ...]


def is_bad(g: Graph, dead: Iterable[str]) -> bool:
    """A dead set D is bad when V - D is empty or disconnected, or some vertex
    of D has no neighbour in V - D."""
    dead = set(dead)
    idx = g.index
    live_mask = 0
    for i, v in enumerate(g.vertices):
        if v not in dead:
            live_mask |= 1 << i
    return _is_bad_mask(g, live_mask, [idx[v] for v in dead])


def _is_bad_mask(g: Graph, live_mask: int, dead_indices) -> bool:
    if not live_mask:
        return True
    masks = g._nbr_masks
    for i in dead_indices:
        if not masks[i] & live_mask:
            return True
    low = live_mask & -live_mask
    comp = frontier = low
    while frontier:
        bit = frontier & -frontier
        frontier ^= bit
        new = masks[bit.bit_length() - 1] & live_mask & ~comp
        comp |= new
        frontier |= new
    return comp != live_mask


def minimal_bad_sets(g: Graph, max_vertices: int = DEFAULT_MAX_BAD_SET_VERTICES) -> list[BadSet]:
    """Inclusion-minimal proper bad subsets, by size then canonical order."""
    _require_connected(g)
    nv = len(g.vertices)
    if nv > max_vertices:
        raise ResourceCapError(f"{nv} vertices exceeds the bad-set limit of {max_vertices}")
    full = (1 << nv) - 1
    found: list[int] = []
    out = []
    for size in range(1, nv):
        for combo in combinations(range(nv), size):
            mask = 0
            for i in combo:
                mask |= 1 << i
            if any(f & mask == f for f in found):
                continue
            if _is_bad_mask(g, full & ~mask, combo):
                found.append(mask)
                out.append(BadSet(tuple(g.vertices[i] for i in combo)))
    return out


@dataclass(frozen=True)
class SpherePolyhedron:
    """Union over ``systems`` of the subspheres where the weights are
    constant on each listed vertex set."""

    graph: Graph
    systems: tuple[tuple[str, ...], ...]

    def equations(self, k: int) -> list[tuple[str, str]]:
        """All pairs u, v of system ``k`` (closed under transitivity)."""
        return list(combinations(self.systems[k], 2))

    @property
    def is_empty(self) -> bool:
        return not self.systems

    @property
    def is_whole_sphere(self) -> bool:
        return any(len(s) == 1 for s in self.systems)

    def to_document(self) -> dict:
        return {
            "systems": [[list(e) for e in self.equations(k)] for k in range(len(self.systems))],
            "bad_sets": [list(s) for s in self.systems],
        }


def sigma1_complement(g: Graph, max_vertices: int = DEFAULT_MAX_BAD_SET_VERTICES) -> SpherePolyhedron:
    """The complement of Sigma^1(BB_Gamma) as a finite union of rational subspheres."""
    bad = minimal_bad_sets(g, max_vertices)
    idx = g.index
    systems = sorted((b.vertices for b in bad), key=lambda s: (len(s), [idx[v] for v in s]))
    return SpherePolyhedron(g, tuple(systems))


def polyhedron_contains(P: SpherePolyhedron, chi: BBCharacter) -> bool:
    if set(chi.graph.vertices) != set(P.graph.vertices):
        raise InvalidCharacterError("character and polyhedron live on different vertex sets")
    w = chi.weights
    return any(len({w[v] for v in system}) == 1 for system in P.systems)


# ---------------------------------------------------------------------------
# auxiliary criteria


def wreath_sufficient(n: int, support_count: int) -> bool:
    """True certifies membership in Sigma^n for a wreath product character
    nonzero on ``support_count`` coordinates; False is inconclusive."""
    if n < 1 or support_count < 0:
        raise ValueError("need n >= 1 and support_count >= 0")
    return support_count >= n + 1


ZERO = None  # marks a vanishing restriction in product_formula_predict


def product_formula_predict(k1: int | None, k2: int | None, n: int) -> bool:
    """Predicted membership of a product character in Sigma^n(G1 x G2, Z).

    ``k_i`` is the largest p with the restriction in Sigma^p(G_i, Z), or
    ``ZERO`` when the restriction vanishes.
    """
    if k1 is ZERO and k2 is ZERO:
        raise InvalidCharacterError("both restrictions are zero")
    if k1 is ZERO or k2 is ZERO:
        k = k2 if k1 is ZERO else k1
        return k >= n
    return not any(p > k1 and n - p > k2 for p in range(n + 1))
