"""Integral Smith normal form, reduced simplicial homology and
acyclicity / connectivity tests on flag complexes.

Everything here works over Python integers, so there is no overflow and no
floating point anywhere on the verdict path.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import gcd
from typing import Sequence

from .graph import FlagComplex, connected_components

__all__ = [
    "IntegerMatrix",
    "SNFResult",
    "HomologyGroup",
    "Answer",
    "TriState",
    "GroupPresentation",
    "DEFAULT_TIETZE_BUDGET",
    "boundary_matrix",
    "smith_normal_form",
    "reduced_homology",
    "is_k_acyclic",
    "edge_path_presentation",
    "simplify_presentation",
    "pi1_trivial",
    "is_k_connected",
]

DEFAULT_TIETZE_BUDGET = 10_000


@dataclass(frozen=True)
class IntegerMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entries do not match the declared shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntegerMatrix":
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(len(rows), cols, rows)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntegerMatrix":
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        cols_of_other = list(zip(*other.entries)) if other.rows else [()] * other.cols
        out = tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in cols_of_other)
            for row in self.entries
        )
        return IntegerMatrix(self.rows, other.cols, out)

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.entries)


@dataclass(frozen=True)
class SNFResult:
    invariant_factors: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)


@dataclass(frozen=True)
class HomologyGroup:
    """A finitely generated abelian group Z^free_rank + torsion."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    @property
    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def to_dict(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    def __str__(self):
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) or "0"


class Answer(str, enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class TriState:
    value: Answer
    reason: str = ""

    def __post_init__(self):
        if self.value is Answer.UNKNOWN and not self.reason:
            raise ValueError("an Unknown answer must carry a reason")

    def __bool__(self):
        raise TypeError("TriState is three-valued; compare .value explicitly")


# ---------------------------------------------------------------------------
# Smith normal form


def smith_normal_form(M: IntegerMatrix | Sequence[Sequence[int]]) -> SNFResult:
    """Invariant factors d_1 | d_2 | ... | d_r of an integer matrix.

    Pivots on an entry of least absolute value to keep coefficients small;
    the diagonal is then normalized to a divisibility chain by gcd/lcm swaps.
    """
    if not isinstance(M, IntegerMatrix):
        M = IntegerMatrix.from_rows(M)
    A = [list(r) for r in M.entries if any(r)]
    diag: list[int] = []
    while A:
        # drop zero columns lazily by searching for the smallest nonzero entry
        best = None
        for i, row in enumerate(A):
            for j, x in enumerate(row):
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, pi, pj = best
        A[0], A[pi] = A[pi], A[0]
        while True:
            p = A[0][pj]
            done = True
            # clear column pj below the pivot
            for i in range(1, len(A)):
                x = A[i][pj]
                if x:
                    q = x // p
                    row_i, row_0 = A[i], A[0]
                    for j in range(len(row_i)):
                        if row_0[j]:
                            row_i[j] -= q * row_0[j]
                    if row_i[pj]:
                        done = False
            # clear row 0 outside the pivot column
            row_0 = A[0]
            for j in range(len(row_0)):
                if j != pj and row_0[j]:
                    q = row_0[j] // p
                    for row in A:
                        if row[pj]:
                            row[j] -= q * row[pj]
                    if row_0[j]:
                        done = False
            if done:
                break
            # a remainder survived: move the new smallest entry of row 0 / column pj to the pivot
            cands = [(abs(A[i][pj]), i, pj) for i in range(len(A)) if A[i][pj]]
            cands += [(abs(A[0][j]), 0, j) for j in range(len(A[0])) if A[0][j]]
            _, ni, nj = min(cands)
            A[0], A[ni] = A[ni], A[0]
            pj = nj
        diag.append(abs(A[0][pj]))
        A = [row[:pj] + row[pj + 1:] for row in A[1:]]
        A = [r for r in A if any(r)]
    return SNFResult(_divisibility_chain(diag))


def _divisibility_chain(diag: list[int]) -> tuple[int, ...]:
    d = sorted(diag)
    n = len(d)
    for i in range(n):
        for j in range(i + 1, n):
            if d[j] % d[i]:
                g = gcd(d[i], d[j])
                d[i], d[j] = g, d[i] * d[j] // g
    return tuple(d)


# ---------------------------------------------------------------------------
# chain complexes


def boundary_matrix(K: FlagComplex, i: int) -> IntegerMatrix:
    """Matrix of the boundary C_i -> C_{i-1} of the augmented chain complex.

    Rows index (i-1)-simplices (the single empty simplex when ``i == 0``),
    columns index i-simplices, both in canonical order.  Omitting the vertex
    in position j contributes the sign (-1)**j.
    """
    if i < 0:
        raise ValueError("boundary_matrix needs i >= 0")
    if i > K.max_dim:
        raise ValueError(f"dimension {i} not materialized (max_dim={K.max_dim})")
    cols = K.simplices_of_dim(i)
    if i == 0:
        return IntegerMatrix(1, len(cols), ((1,) * len(cols),))
    faces = K.simplices_of_dim(i - 1)
    rows = [[0] * len(cols) for _ in faces]
    for c, s in enumerate(cols):
        for j in range(len(s)):
            face = s[:j] + s[j + 1:]
            rows[K.position(face)][c] = -1 if j % 2 else 1
    return IntegerMatrix(len(faces), len(cols), tuple(tuple(r) for r in rows))


def _chain_rank(K: FlagComplex, i: int) -> int:
    if i == -1:
        return 1
    return len(K.simplices_of_dim(i))


def reduced_homology(K: FlagComplex, i: int) -> HomologyGroup:
    """Reduced integral homology in degree ``i >= -1``.

    H_{-1} is Z for the empty complex and 0 otherwise.
    """
    if i < -1:
        raise ValueError("degree must be >= -1")
    if i + 1 > K.max_dim:
        raise ValueError(f"degree {i} needs dimension {i + 1} materialized (max_dim={K.max_dim})")
    rank_out = 0
    if i >= 0:
        rank_out = smith_normal_form(boundary_matrix(K, i)).rank
    incoming = smith_normal_form(boundary_matrix(K, i + 1))
    free = _chain_rank(K, i) - rank_out - incoming.rank
    torsion = tuple(d for d in incoming.invariant_factors if d > 1)
    return HomologyGroup(free, torsion)


def _reduced_h0_zero(K: FlagComplex) -> bool:
    return len(connected_components(K)) == 1


def is_k_acyclic(K: FlagComplex, k: int) -> bool:
    """Nonempty with vanishing reduced homology in degrees 0..k.

    ``k <= -2`` is vacuous; ``k == -1`` only asks for nonemptiness.
    """
    if k <= -2:
        return True
    if K.is_empty:
        return False
    if k >= 0 and not _reduced_h0_zero(K):
        return False
    return all(reduced_homology(K, i).is_zero for i in range(1, k + 1))


def first_failing_degree(K: FlagComplex, k: int) -> tuple[int, HomologyGroup] | None:
    """Smallest degree <= k with nonzero reduced homology, or None."""
    if K.is_empty:
        return -1, HomologyGroup(1)
    for i in range(0, k + 1):
        h = reduced_homology(K, i)
        if not h.is_zero:
            return i, h
    return None


# ---------------------------------------------------------------------------
# fundamental group


@dataclass(frozen=True)
class GroupPresentation:
    """Generators plus relators; a relator is a tuple of nonzero ints where
    ``+j`` / ``-j`` stand for generator ``j - 1`` and its inverse."""

    generators: tuple[str, ...]
    relators: tuple[tuple[int, ...], ...] = field(default=())

    def __post_init__(self):
        n = len(self.generators)
        for r in self.relators:
            if any(x == 0 or abs(x) > n for x in r):
                raise ValueError(f"relator {r} references an undeclared generator")

    @property
    def is_trivial(self) -> bool:
        return not self.generators


def edge_path_presentation(K: FlagComplex) -> GroupPresentation:
    """pi_1 of the 2-skeleton: non-tree edges generate, triangles relate.

    The spanning tree is a breadth-first tree from the first vertex.
    """
    if K.is_empty:
        raise ValueError("empty complex has no fundamental group")
    if len(connected_components(K)) != 1:
        raise ValueError("complex is disconnected")
    if K.max_dim < 2:
        raise ValueError("2-simplices are not materialized")
    g = K.graph
    present = set(K.vertex_subset)
    root = K.vertex_subset[0]
    tree = set()
    seen = {root}
    queue = [root]
    while queue:
        nxt = []
        for v in queue:
            for w in g.neighbors(v):
                if w in present and w not in seen:
                    seen.add(w)
                    tree.add(frozenset((v, w)))
                    nxt.append(w)
        queue = nxt
    gens = []
    gen_of = {}
    for e in K.simplices_of_dim(1):
        if frozenset(e) not in tree:
            gen_of[e] = len(gens) + 1
            gens.append(f"{e[0]}-{e[1]}")
    rels = []
    for a, b, c in K.simplices_of_dim(2):
        word = []
        for edge, sign in (((a, b), 1), ((b, c), 1), ((a, c), -1)):
            if edge in gen_of:
                word.append(sign * gen_of[edge])
        rels.append(tuple(word))
    return GroupPresentation(tuple(gens), tuple(rels))


def _free_reduce(word: list[int]) -> list[int]:
    out: list[int] = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    # cyclic reduction
    i, j = 0, len(out) - 1
    while i < j and out[i] == -out[j]:
        i += 1
        j -= 1
    return out[i:j + 1]


def _inverse(word: Sequence[int]) -> list[int]:
    return [-x for x in reversed(word)]


def simplify_presentation(
    P: GroupPresentation, budget: int = DEFAULT_TIETZE_BUDGET
) -> tuple[GroupPresentation, int, bool]:
    """Eliminate generators that occur exactly once in some relator.

    Returns the simplified presentation, the number of Tietze steps used
    and whether the budget ran out before a fixed point was reached.
    """
    alive = set(range(1, len(P.generators) + 1))
    rels = [_free_reduce(list(r)) for r in P.relators]
    rels = [r for r in rels if r]
    steps = 0
    max_len = 64 * (sum(len(r) for r in rels) + 1)
    while alive and rels:
        choice = None
        for r in sorted(rels, key=len):
            counts: dict[int, int] = {}
            for x in r:
                counts[abs(x)] = counts.get(abs(x), 0) + 1
            once = [g for g, c in counts.items() if c == 1]
            if once:
                choice = (r, min(once))
                break
        if choice is None:
            break
        if steps >= budget:
            return _rebuild(P, alive, rels), steps, True
        steps += 1
        r, gen = choice
        k = next(i for i, x in enumerate(r) if abs(x) == gen)
        rotated = r[k:] + r[:k]
        rest = rotated[1:]
        # rotated = gen^e * rest = 1  =>  gen^e = rest^-1
        replacement = _inverse(rest) if rotated[0] > 0 else list(rest)
        inv_replacement = _inverse(replacement)
        rels.remove(r)
        new_rels = []
        for w in rels:
            out = []
            for x in w:
                if x == gen:
                    out.extend(replacement)
                elif x == -gen:
                    out.extend(inv_replacement)
                else:
                    out.append(x)
            out = _free_reduce(out)
            if out:
                new_rels.append(out)
        rels = new_rels
        alive.discard(gen)
        if sum(len(w) for w in rels) > max_len:
            return _rebuild(P, alive, rels), steps, True
    return _rebuild(P, alive, rels), steps, False


def _rebuild(P: GroupPresentation, alive: set[int], rels: list[list[int]]) -> GroupPresentation:
    order = sorted(alive)
    renum = {g: i + 1 for i, g in enumerate(order)}
    new_rels = tuple(tuple((1 if x > 0 else -1) * renum[abs(x)] for x in r) for r in rels)
    return GroupPresentation(tuple(P.generators[g - 1] for g in order), new_rels)


def pi1_trivial(K: FlagComplex, budget: int = DEFAULT_TIETZE_BUDGET) -> TriState:
    """Semi-decide simple connectivity of a connected nonempty complex."""
    P = edge_path_presentation(K)
    h1 = reduced_homology(K, 1)
    if not h1.is_zero:
        return TriState(Answer.NO, f"H_1 = {h1}")
    Q, steps, exhausted = simplify_presentation(P, budget)
    if Q.is_trivial:
        return TriState(Answer.YES, f"presentation trivialized in {steps} Tietze steps")
    if exhausted:
        return TriState(Answer.UNKNOWN, "budget exhausted")
    return TriState(
        Answer.UNKNOWN,
        f"budget exhausted: simplification stalled with {len(Q.generators)} generators "
        f"and {len(Q.relators)} relators",
    )


def is_k_connected(K: FlagComplex, k: int, budget: int = DEFAULT_TIETZE_BUDGET) -> TriState:
    """Three-valued k-connectivity via homology plus a pi_1 certificate."""
    if k <= -2:
        return TriState(Answer.YES, "vacuous")
    if K.is_empty:
        return TriState(Answer.NO, "empty complex")
    if k == -1:
        return TriState(Answer.YES, "nonempty")
    if len(connected_components(K)) != 1:
        return TriState(Answer.NO, "disconnected")
    if k == 0:
        return TriState(Answer.YES, "connected")
    failing = first_failing_degree(K, k)
    if failing is not None:
        i, h = failing
        return TriState(Answer.NO, f"reduced H_{i} = {h}")
    pi1 = pi1_trivial(K, budget)
    if pi1.value is Answer.YES:
        return TriState(Answer.YES, f"{k}-acyclic and simply connected")
    return pi1
