"""
Flag complexes and integral homology
====================================

Build the clique complex of a graph, look at links and full subcomplexes,
and compute reduced homology over the integers.
"""

# %%
from bnsr.graph import flag_complex, link, multipartite_pairs
from bnsr.homology import reduced_homology, is_k_acyclic, is_k_connected, smith_normal_form

# %% [markdown]
# The octahedral graph K_{2,2,2} has the boundary of the octahedron, a
# 2-sphere, as its flag complex.

# %%
octahedron = multipartite_pairs(3)
K = flag_complex(octahedron, 3)
print("simplex counts:", K.counts())
for i in range(3):
    print(f"H~_{i} =", reduced_homology(K, i))

# %% [markdown]
# The link of an edge is an S^0: two non-adjacent vertices.

# %%
L = link(K, ("x1", "x2"))
print(L.vertex_subset, "H~_0 =", reduced_homology(L, 0))

# %% [markdown]
# Acyclicity and the three-valued connectivity test.

# %%
print("1-acyclic:", is_k_acyclic(K, 1), " 2-acyclic:", is_k_acyclic(K, 2))
print("1-connected:", is_k_connected(K, 1))
square = flag_complex(multipartite_pairs(2), 2)
print("square 1-connected:", is_k_connected(square, 1))

# %% [markdown]
# Smith normal form is exposed directly.

# %%
print(smith_normal_form([[2, 4], [6, 8]]).invariant_factors)
