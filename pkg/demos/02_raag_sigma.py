"""
Sigma-invariants of right-angled Artin groups
=============================================

A character of A_Gamma is a vertex weight vector.  Dead vertices carry
weight zero; the verdict depends only on which vertices are dead.
"""

# %%
from bnsr.graph import multipartite_pairs
from bnsr.raag import RaagCharacter, raag_sigma, multipartite_oracle

square = multipartite_pairs(2)  # A_Gamma = F_2 x F_2

# %% [markdown]
# Full support: in Sigma^1 but not Sigma^2, the living complex is a circle.

# %%
mu = RaagCharacter.from_values(square, [1, 1, 1, 1])
for n in (1, 2):
    v = raag_sigma(square, mu, n)
    print(n, v.value.value, v.witness)

# %% [markdown]
# Killing a whole free factor disconnects the living subgraph.

# %%
mu = RaagCharacter.from_values(square, [0, 0, 1, 1])
print(raag_sigma(square, mu, 1).witness)

# %% [markdown]
# On F_2^m the answer only depends on how many factors carry weight.

# %%
g = multipartite_pairs(3)
mu = RaagCharacter.from_values(g, [1, 0, 2, 0, 0, 5])
for n in (1, 2, 3):
    print(n, raag_sigma(g, mu, n, homotopical=True).value.value, multipartite_oracle(3, 3, n))
