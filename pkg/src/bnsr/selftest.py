"""Consistency suites cross-checking the decision procedures against
independent oracles.  Used by ``bnsr selftest`` and the test-suite."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .bb import (
    ZERO,
    BBCharacter,
    bb_finiteness,
    bb_sigma,
    is_bad,
    polyhedron_contains,
    product_formula_predict,
    sigma1_complement,
)
from .corpus import atlas_graphs, bieri_stallings_graph, random_graph, random_weights
from .graph import graph_join
from .homology import Answer
from .raag import RaagCharacter, max_sigma_level, multipartite_oracle, raag_sigma


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "checks": self.checks,
            "failures": len(self.failures),
            "passed": self.passed,
            "first_failures": self.failures[:5],
        }


@dataclass(frozen=True)
class Scale:
    monotonicity_max_vertices: int
    multipartite_max_m: int
    multipartite_max_n: int
    joins: int
    polyhedron_max_vertices: int
    polyhedron_chars: int

    @classmethod
    def default(cls) -> "Scale":
        return cls(7, 4, 4, 100, 6, 200)

    @classmethod
    def quick(cls) -> "Scale":
        return cls(5, 3, 3, 20, 5, 20)


def _mask_members(g, mask):
    return [v for i, v in enumerate(g.vertices) if mask >> i & 1]


def badness_monotonicity(max_vertices: int = 7) -> SuiteResult:
    """bad(D) implies bad(D') for all D <= D' proper subsets, exhaustively."""
    res = SuiteResult("badness_monotonicity")
    for g in atlas_graphs(max_vertices):
        nv = len(g.vertices)
        full = (1 << nv) - 1
        bad = [is_bad(g, _mask_members(g, m)) for m in range(full)]
        for big in range(full):
            sub = big
            while True:
                res.checks += 1
                if bad[sub] and not bad[big]:
                    res.failures.append(
                        {"graph": g.to_document(), "D": _mask_members(g, sub), "D'": _mask_members(g, big)}
                    )
                if sub == 0:
                    break
                sub = (sub - 1) & big
    return res


def multipartite_equivalence(max_m: int = 4, max_n: int = 4) -> SuiteResult:
    """Homotopical RAAG verdicts on K_{2,...,2} against the F_2^m oracle."""
    res = SuiteResult("multipartite_oracle")
    for m in range(1, max_m + 1):
        g = bieri_stallings_graph(m)
        nv = 2 * m
        for support in range(1, 1 << nv):
            values = [1 if support >> i & 1 else 0 for i in range(nv)]
            mu = RaagCharacter.from_values(g, values)
            parts = sum(1 for i in range(m) if values[2 * i] or values[2 * i + 1])
            for n in range(1, max_n + 1):
                expected = multipartite_oracle(m, parts, n)
                for homotopical in (True, False):
                    res.checks += 1
                    v = raag_sigma(g, mu, n, homotopical)
                    if v.value is Answer.UNKNOWN or v.is_yes != expected:
                        res.failures.append(
                            {"m": m, "support": values, "n": n, "homotopical": homotopical,
                             "got": v.value.value, "expected": expected}
                        )
    return res


def _random_join_case(rng: random.Random):
    g1 = random_graph(rng, rng.randint(1, 4), rng.random(), prefix="a")
    g2 = random_graph(rng, rng.randint(1, 4), rng.random(), prefix="b")
    while True:
        w1 = random_weights(rng, len(g1.vertices))
        w2 = random_weights(rng, len(g2.vertices))
        r = rng.random()
        if r < 0.15:
            w1 = [0] * len(w1)
        elif r < 0.3:
            w2 = [0] * len(w2)
        if any(w1) or any(w2):
            return g1, g2, w1, w2


def join_formula(joins: int = 100, seed: int = 0) -> SuiteResult:
    """Homological verdicts on A_{G1 * G2} = A_{G1} x A_{G2} against the
    product formula: equality for n <= 2, computed-No implies predicted-No at n = 3."""
    res = SuiteResult("join_formula")
    rng = random.Random(seed)
    for _ in range(joins):
        g1, g2, w1, w2 = _random_join_case(rng)
        g = graph_join(g1, g2)
        mu = RaagCharacter.from_values(g, list(w1) + list(w2))
        k1 = max_sigma_level(g1, RaagCharacter.from_values(g1, w1), 3) if any(w1) else ZERO
        k2 = max_sigma_level(g2, RaagCharacter.from_values(g2, w2), 3) if any(w2) else ZERO
        for n in (1, 2, 3):
            res.checks += 1
            computed = raag_sigma(g, mu, n).is_yes
            predicted = product_formula_predict(k1, k2, n)
            ok = computed == predicted if n <= 2 else (computed or not predicted)
            if not ok:
                res.failures.append(
                    {"G1": g1.to_document(), "G2": g2.to_document(), "n": n,
                     "weights": [str(x) for x in list(w1) + list(w2)],
                     "computed": computed, "predicted": predicted}
                )
    return res


def polyhedron_agreement(max_vertices: int = 6, chars: int = 200, seed: int = 0) -> SuiteResult:
    """The Sigma^1(BB) complement polyhedron against the extension sweep."""
    res = SuiteResult("polyhedron_agreement")
    rng = random.Random(seed)
    for g in atlas_graphs(max_vertices):
        if len(g.vertices) < 2:
            continue
        P = sigma1_complement(g)
        done = 0
        while done < chars:
            w = random_weights(rng, len(g.vertices))
            if len(set(w)) == 1:
                continue
            done += 1
            chi = BBCharacter.from_values(g, w)
            res.checks += 1
            inside = polyhedron_contains(P, chi)
            if inside != bb_sigma(g, chi, 1).is_no:
                res.failures.append({"graph": g.to_document(), "weights": [str(x) for x in w]})
    return res


def finiteness_corpus(max_m: int = 4) -> SuiteResult:
    """G_m is of type FP_{m-1} but not FP_m."""
    res = SuiteResult("finiteness_corpus")
    for m in range(2, max_m + 1):
        g = bieri_stallings_graph(m)
        for n, expected in ((m - 1, Answer.YES), (m, Answer.NO)):
            res.checks += 1
            got = bb_finiteness(g, n).value
            if got is not expected:
                res.failures.append({"m": m, "n": n, "got": got.value})
    return res


def run_all(quick: bool = False, seed: int = 0, inject_fault: bool = False) -> list[SuiteResult]:
    scale = Scale.quick() if quick else Scale.default()
    results = [
        finiteness_corpus(),
        badness_monotonicity(scale.monotonicity_max_vertices),
        multipartite_equivalence(scale.multipartite_max_m, scale.multipartite_max_n),
        join_formula(scale.joins, seed),
        polyhedron_agreement(scale.polyhedron_max_vertices, scale.polyhedron_chars, seed),
    ]
    if inject_fault:
        results[0].failures.append({"injected": True})
    return results

