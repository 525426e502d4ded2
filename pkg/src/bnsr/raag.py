"""Sigma-invariants of right-angled Artin groups.

A character of A_Gamma is a vertex-weight vector.  Membership of its class in
Sigma^n is decided by the living-link condition: for every dead simplex
sigma (a clique on which the weights vanish, including the empty simplex)
the living part of lk(sigma) has to be (n - dim sigma - 2)-acyclic.

The homotopical invariant is computed as Sigma^2 intersected with the
homological Sigma^n, which amounts to additionally asking the living
subcomplex itself to be simply connected when n >= 2.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Mapping

from .errors import InvalidCharacterError, ParseError
from .graph import (
    DEFAULT_MAX_SIMPLICES,
    EMPTY,
    FlagComplex,
    Graph,
    Simplex,
    _build,
    flag_complex,
    full_subcomplex,
)
from .homology import (
    DEFAULT_TIETZE_BUDGET,
    Answer,
    HomologyGroup,
    first_failing_degree,
    is_k_connected,
)

__all__ = [
    "RaagCharacter",
    "Verdict",
    "DeadSimplexFailure",
    "parse_rational",
    "format_rational",
    "parse_weights",
    "living_subcomplex",
    "dead_simplices",
    "living_link",
    "raag_sigma",
    "max_sigma_level",
    "multipartite_oracle",
]

_RATIONAL = re.compile(r"^\s*[+-]?\d+\s*(/\s*\d+\s*)?$")


def parse_rational(value) -> Fraction:
    """Parse ``"p/q"``, an integer string or a plain int into a Fraction."""
    if isinstance(value, bool):
        raise ParseError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Fraction):
        return value
    if not isinstance(value, str) or not _RATIONAL.match(value):
        raise ParseError(f"not a rational string: {value!r}")
    try:
        return Fraction(value.replace(" ", ""))
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in {value!r}") from None


def format_rational(x: Fraction) -> str:
    """Canonical ``"p/q"`` with q > 0 and gcd(p, q) = 1 (integers get ``/1``)."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_weights(text, graph: Graph) -> dict[str, Fraction]:
    """Decode a character document (vertex id -> rational string)."""
    if isinstance(text, (str, bytes)):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
    else:
        doc = text
    if not isinstance(doc, dict):
        raise ParseError("character document must be a JSON object")
    weights = {str(k): parse_rational(v) for k, v in doc.items()}
    unknown = set(weights).difference(graph.vertices)
    if unknown:
        raise ParseError(f"weights given for unknown vertices {sorted(unknown)}")
    missing = [v for v in graph.vertices if v not in weights]
    if missing:
        raise ParseError(f"no weight for vertices {missing}")
    return {v: weights[v] for v in graph.vertices}


@dataclass(frozen=True)
class RaagCharacter:
    """Exact rational vertex weights, not all zero."""

    graph: Graph
    weights: Mapping[str, Fraction]

    def __post_init__(self):
        w = {}
        for v in self.graph.vertices:
            if v not in self.weights:
                raise InvalidCharacterError(f"vertex {v!r} has no weight")
            w[v] = Fraction(self.weights[v])
        extra = set(self.weights).difference(w)
        if extra:
            raise InvalidCharacterError(f"weights for unknown vertices {sorted(extra)}")
        if not any(w.values()):
            raise InvalidCharacterError("the zero map is not a character")
        object.__setattr__(self, "weights", w)

    @classmethod
    def from_values(cls, graph: Graph, values) -> "RaagCharacter":
        """Weights listed in canonical vertex order."""
        values = list(values)
        if len(values) != len(graph.vertices):
            raise InvalidCharacterError("one weight per vertex required")
        return cls(graph, {v: Fraction(x) for v, x in zip(graph.vertices, values)})

    @property
    def living(self) -> tuple[str, ...]:
        return tuple(v for v in self.graph.vertices if self.weights[v] != 0)

    @property
    def dead(self) -> tuple[str, ...]:
        return tuple(v for v in self.graph.vertices if self.weights[v] == 0)

    def scaled(self, factor) -> "RaagCharacter":
        return RaagCharacter(self.graph, {v: x * factor for v, x in self.weights.items()})

    def to_document(self) -> dict[str, str]:
        return {v: format_rational(self.weights[v]) for v in self.graph.vertices}

    def __hash__(self):
        return hash((self.graph, tuple(self.weights[v] for v in self.graph.vertices)))


@dataclass(frozen=True)
class DeadSimplexFailure:
    """Replayable reason for a No: the living link of ``sigma`` is not
    ``required_level``-acyclic (or -connected); ``failing_index`` is the
    offending homology degree, or 1 for a nontrivial fundamental group."""

    sigma: Simplex
    required_level: int
    failing_index: int
    homology: HomologyGroup | None
    reason: str = ""

    def to_dict(self) -> dict:
        return {
            "sigma": list(self.sigma),
            "required_level": self.required_level,
            "failing_index": self.failing_index,
            "homology": self.homology.to_dict() if self.homology is not None else None,
            "reason": self.reason,
        }


@dataclass(frozen=True)
class Verdict:
    value: Answer
    witness: Any = None
    reason: str = ""
    notes: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if self.value is Answer.NO and self.witness is None:
            raise ValueError("a No verdict needs a witness")
        if self.value is Answer.UNKNOWN and not self.reason:
            raise ValueError("an Unknown verdict needs a reason")

    @property
    def is_yes(self) -> bool:
        return self.value is Answer.YES

    @property
    def is_no(self) -> bool:
        return self.value is Answer.NO


def living_subcomplex(
    delta: FlagComplex, mu: RaagCharacter, max_simplices: int = DEFAULT_MAX_SIMPLICES
) -> FlagComplex:
    """Full subcomplex on the vertices with nonzero weight."""
    live = set(mu.living)
    return full_subcomplex(delta, [v for v in delta.vertex_subset if v in live], max_simplices)


def dead_simplices(delta: FlagComplex, mu: RaagCharacter, n: int) -> list[Simplex]:
    """EMPTY followed by every dead simplex of dimension <= n - 1."""
    if n - 1 > delta.max_dim:
        raise ValueError(f"dimension {n - 1} not materialized (max_dim={delta.max_dim})")
    w = mu.weights
    out = [EMPTY]
    for k in range(0, n):
        out.extend(s for s in delta.simplices_of_dim(k) if all(w[v] == 0 for v in s))
    return out


def living_link(
    delta: FlagComplex,
    sigma: Simplex,
    living,
    max_simplices: int = DEFAULT_MAX_SIMPLICES,
) -> FlagComplex:
    """lk(sigma) intersected with the full subcomplex on ``living``."""
    g = delta.graph
    idx = g.index
    mask = 0
    for v in delta.vertex_subset:
        if v in living:
            mask |= 1 << idx[v]
    for v in sigma:
        mask &= g._nbr_masks[idx[v]]
    subset = [i for i in range(mask.bit_length()) if mask >> i & 1]
    return _build(g, subset, max(delta.max_dim - len(sigma), -1), max_simplices)


def _check(
    delta: FlagComplex,
    mu: RaagCharacter,
    n: int,
    homotopical: bool,
    max_simplices: int,
    budget: int,
) -> Verdict:
    living = set(mu.living)
    unknown = None
    for sigma in dead_simplices(delta, mu, n):
        level = n - len(sigma) - 1  # n - dim(sigma) - 2
        L = living_link(delta, sigma, living, max_simplices)
        if homotopical and not sigma and level >= 1:
            conn = is_k_connected(L, level, budget)
            if conn.value is Answer.NO:
                failing = first_failing_degree(L, level)
                if failing is None:
                    failure = DeadSimplexFailure(sigma, level, 1, None, conn.reason)
                else:
                    failure = DeadSimplexFailure(sigma, level, failing[0], failing[1], conn.reason)
                return Verdict(Answer.NO, failure, "living subcomplex not connected enough")
            if conn.value is Answer.UNKNOWN and unknown is None:
                unknown = f"pi_1 of the living subcomplex undetermined: {conn.reason}"
            continue
        failing = first_failing_degree(L, level)
        if failing is not None:
            i, h = failing
            what = "empty" if i == -1 else f"reduced H_{i} = {h}"
            failure = DeadSimplexFailure(sigma, level, i, h, what)
            return Verdict(Answer.NO, failure, f"living link of {list(sigma)} is not {level}-acyclic")
    if unknown is not None:
        return Verdict(Answer.UNKNOWN, None, unknown)
    return Verdict(Answer.YES, None, "every dead simplex has a sufficiently acyclic living link")


def raag_sigma(
    g: Graph,
    mu: RaagCharacter,
    n: int,
    homotopical: bool = False,
    *,
    max_simplices: int = DEFAULT_MAX_SIMPLICES,
    tietze_budget: int = DEFAULT_TIETZE_BUDGET,
    delta: FlagComplex | None = None,
) -> Verdict:
    """Decide whether [mu] lies in Sigma^n(A_Gamma, Z) (or Sigma^n(A_Gamma)).

    ``delta`` may pass a precomputed flag complex of ``g`` materialized to at
    least ``max(n, 2)``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if not g.vertices:
        raise InvalidCharacterError("the graph has no vertices")
    if mu.graph != g:
        raise InvalidCharacterError("character belongs to a different graph")
    # Sigma^1(G) = Sigma^1(G, Z): the pi_1 path is only needed from n = 2 on
    homotopical = homotopical and n >= 2
    need = max(n, 2) if homotopical else n
    if delta is None or delta.max_dim < need:
        delta = flag_complex(g, need, max_simplices)
    verdict = _check(delta, mu, n, homotopical, max_simplices, tietze_budget)
    if not g.is_connected():
        verdict = Verdict(
            verdict.value,
            verdict.witness,
            verdict.reason,
            verdict.notes + ("defining graph is disconnected",),
        )
    return verdict


def max_sigma_level(g: Graph, mu: RaagCharacter, cap: int, **kwargs) -> int:
    """Largest p <= cap with [mu] in Sigma^p(A_Gamma, Z); Sigma^0 is everything."""
    delta = flag_complex(g, cap, kwargs.get("max_simplices", DEFAULT_MAX_SIMPLICES))
    level = 0
    for p in range(1, cap + 1):
        if not raag_sigma(g, mu, p, delta=delta, **kwargs).is_yes:
            break
        level = p
    return level


def multipartite_oracle(m: int, nonzero_parts: int, n: int) -> bool:
    """Membership in Sigma^n(F_2^m) of a character nonzero on exactly
    ``nonzero_parts`` of the free factors."""
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    if not 0 <= nonzero_parts <= m:
        raise ValueError("nonzero_parts must lie in [0, m]")
    if nonzero_parts == 0:
        raise InvalidCharacterError("the zero map is not a character")
    return nonzero_parts >= n + 1
