import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from bnsr.corpus import atlas_graphs
from bnsr.graph import Graph, flag_complex, full_subcomplex
from bnsr.homology import (
    Answer,
    GroupPresentation,
    HomologyGroup,
    boundary_matrix,
    edge_path_presentation,
    is_k_acyclic,
    is_k_connected,
    pi1_trivial,
    reduced_homology,
    simplify_presentation,
    smith_normal_form,
)

from oracles import invariant_factors_from_minors, rational_rank


def edge():
    return Graph.from_edges("ab", [("a", "b")])


def test_boundary_of_edge():
    M = boundary_matrix(flag_complex(edge(), 1), 1)
    assert M.entries == ((-1,), (1,))


def test_boundary_squares_to_zero(k3):
    K = flag_complex(k3, 2)
    for i in (1, 2):
        assert (boundary_matrix(K, i - 1) @ boundary_matrix(K, i)).is_zero()


def test_boundary_rank_of_square(c4):
    M = boundary_matrix(flag_complex(c4, 2), 1)
    assert (M.rows, M.cols) == (4, 4)
    assert rational_rank(M.entries) == 3
    assert smith_normal_form(M).rank == 3


def test_boundary_needs_materialized_dim(c4):
    with pytest.raises(ValueError):
        boundary_matrix(flag_complex(c4, 1), 2)


@pytest.mark.parametrize(
    "rows, expected",
    [
        ([[2, 0], [0, 3]], (1, 6)),
        ([[0, 0], [0, 0]], ()),
        ([[2, 4], [6, 8]], (2, 4)),
        ([], ()),
        ([[0, 6, 0], [4, 0, 0]], (2, 12)),
    ],
)
def test_snf_examples(rows, expected):
    assert smith_normal_form(rows).invariant_factors == expected


def _random_matrix(rng):
    r, c = rng.randint(1, 6), rng.randint(1, 6)
    if rng.random() < 0.5:
        return [[rng.randint(-9, 9) for _ in range(c)] for _ in range(r)]
    # structured: product of two small factors, often rank deficient with torsion
    k = rng.randint(1, min(r, c))
    U = [[rng.randint(-3, 3) for _ in range(k)] for _ in range(r)]
    D = [rng.choice([1, 2, 3, 4, 6]) for _ in range(k)]
    V = [[rng.randint(-3, 3) for _ in range(c)] for _ in range(k)]
    return [[sum(U[i][t] * D[t] * V[t][j] for t in range(k)) for j in range(c)] for i in range(r)]


def test_snf_against_minor_oracle():
    rng = random.Random(7)
    for _ in range(150):
        M = _random_matrix(rng)
        snf = smith_normal_form(M).invariant_factors
        assert list(snf) == invariant_factors_from_minors(M)
        assert all(b % a == 0 for a, b in zip(snf, snf[1:]))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(-50, 50), min_size=3, max_size=3), min_size=1, max_size=4))
def test_snf_rank_matches_rational_rank(rows):
    assert smith_normal_form(rows).rank == rational_rank(rows)


def test_homology_examples(c4, octahedron):
    two_points = full_subcomplex(flag_complex(c4, 2), {"x1", "y1"})
    assert reduced_homology(two_points, 0) == HomologyGroup(1)
    assert reduced_homology(flag_complex(c4, 2), 1) == HomologyGroup(1)
    K = flag_complex(octahedron, 3)
    assert [reduced_homology(K, i) for i in range(3)] == [HomologyGroup(0), HomologyGroup(0), HomologyGroup(1)]


def test_octahedron_betti_by_rank_oracle(octahedron):
    K = flag_complex(octahedron, 3)
    ranks = [rational_rank(boundary_matrix(K, i).entries) for i in range(4)]
    dims = [len(K.simplices_of_dim(i)) for i in range(4)]
    betti = [dims[i] - ranks[i] - ranks[i + 1] for i in range(3)]
    assert betti == [0, 0, 1]


def test_h_minus_one():
    assert reduced_homology(flag_complex(Graph(()), 0), -1) == HomologyGroup(1)
    assert reduced_homology(flag_complex(edge(), 0), -1) == HomologyGroup(0)


RP2_TRIANGLES = [(1, 2, 4), (1, 2, 6), (1, 3, 5), (1, 3, 6), (1, 4, 5),
                 (2, 3, 4), (2, 3, 5), (2, 5, 6), (3, 4, 6), (4, 5, 6)]


def barycentric_rp2() -> Graph:
    """Flag complex of the barycentric subdivision of the 6-vertex RP^2."""
    faces = set()
    for t in RP2_TRIANGLES:
        for r in (1, 2, 3):
            faces.update(combinations(t, r))
    names = {f: "f" + "".join(map(str, f)) for f in sorted(faces, key=lambda f: (len(f), f))}
    edges = [(names[a], names[b]) for a in names for b in names
             if len(a) < len(b) and set(a) <= set(b)]
    return Graph.from_edges(list(names.values()), edges)


def test_torsion_in_projective_plane():
    K = flag_complex(barycentric_rp2(), 3)
    assert K.counts() == [31, 90, 60, 0]
    assert reduced_homology(K, 0) == HomologyGroup(0)
    assert reduced_homology(K, 1) == HomologyGroup(0, (2,))
    assert reduced_homology(K, 2) == HomologyGroup(0)
    assert not is_k_acyclic(K, 1)
    assert is_k_connected(K, 1).value is Answer.NO


@pytest.mark.parametrize("graph_name", ["c4", "octahedron", "k3", "p3"])
def test_euler_characteristic(graph_name, request):
    g = request.getfixturevalue(graph_name)
    K = flag_complex(g, len(g.vertices))
    lhs = -1 + sum((-1) ** i * len(K.simplices_of_dim(i)) for i in range(K.max_dim + 1))
    rhs = sum((-1) ** i * reduced_homology(K, i).free_rank for i in range(-1, K.max_dim))
    assert lhs == rhs


def test_euler_on_atlas():
    for g in atlas_graphs(6, connected=False):
        K = flag_complex(g, len(g.vertices))
        lhs = -1 + sum((-1) ** i * len(K.simplices_of_dim(i)) for i in range(K.max_dim + 1))
        rhs = sum((-1) ** i * reduced_homology(K, i).free_rank for i in range(-1, K.max_dim))
        assert lhs == rhs


def test_acyclic_examples(octahedron):
    empty = flag_complex(Graph(()), 1)
    assert is_k_acyclic(empty, -2)
    assert not is_k_acyclic(empty, -1)
    K = flag_complex(octahedron, 3)
    assert is_k_acyclic(K, 1)
    assert not is_k_acyclic(K, 2)


def test_acyclic_monotone_in_k():
    for g in atlas_graphs(6):
        K = flag_complex(g, 5)
        values = [is_k_acyclic(K, k) for k in range(-2, 5)]
        assert values == sorted(values, reverse=True)


def test_pi1_examples(k3, c4, octahedron):
    assert pi1_trivial(flag_complex(k3, 2)).value is Answer.YES
    assert pi1_trivial(flag_complex(c4, 2)).value is Answer.NO
    assert pi1_trivial(flag_complex(octahedron, 2)).value is Answer.YES


def test_pi1_rejects_disconnected(c4):
    with pytest.raises(ValueError):
        pi1_trivial(full_subcomplex(flag_complex(c4, 2), {"x1", "y1"}))


def test_presentation_of_square(c4):
    P = edge_path_presentation(flag_complex(c4, 2))
    assert len(P.generators) == 1 and P.relators == ()


def test_simplify_budget():
    # <a, b | aba^-1b^-1> is Z^2: no generator occurs once, stalls immediately
    P = GroupPresentation(("a", "b"), ((1, 2, -1, -2),))
    Q, steps, exhausted = simplify_presentation(P)
    assert len(Q.generators) == 2 and steps == 0 and not exhausted
    # <a, b | ab, b> needs two eliminations; a budget of one runs out
    P = GroupPresentation(("a", "b"), ((1, 2), (2,)))
    Q, steps, exhausted = simplify_presentation(P, budget=1)
    assert exhausted and len(Q.generators) == 1
    assert simplify_presentation(P)[0].is_trivial


def test_presentation_validates_generators():
    with pytest.raises(ValueError):
        GroupPresentation(("a",), ((2,),))


def test_k_connected_examples(c4, octahedron):
    C = flag_complex(c4, 2)
    assert is_k_connected(C, 0).value is Answer.YES
    assert is_k_connected(C, 1).value is Answer.NO
    assert is_k_connected(flag_complex(octahedron, 3), 1).value is Answer.YES


def test_k_connected_properties():
    for g in atlas_graphs(6, connected=False):
        K = flag_complex(g, 4)
        for k in range(-2, 4):
            c = is_k_connected(K, k)
            if k in (-1, 0):
                assert c.value is not Answer.UNKNOWN
            if c.value is Answer.YES:
                assert is_k_acyclic(K, k)
