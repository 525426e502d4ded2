"""
The complement of Sigma^1(BB_Gamma) as a polyhedron
===================================================

Each inclusion-minimal bad vertex set D contributes the subsphere on which
the weights are constant on D.  Membership of a character in the union is
compared against the extension sweep.
"""

# %%
import random

from bnsr.bb import BBCharacter, bb_sigma, polyhedron_contains, sigma1_complement
from bnsr.graph import Graph, cycle_graph, multipartite_pairs

# %%
for name, g in [
    ("path", Graph.from_edges("abc", [("a", "b"), ("b", "c")])),
    ("square", multipartite_pairs(2)),
    ("pentagon", cycle_graph(5)),
]:
    print(name, sigma1_complement(g).to_document()["systems"])

# %% [markdown]
# Spot check against the sweep on the pentagon.

# %%
g = cycle_graph(5)
P = sigma1_complement(g)
rng = random.Random(0)
agree = 0
for _ in range(200):
    w = [rng.randint(0, 2) for _ in g.vertices]
    if len(set(w)) == 1:
        continue
    chi = BBCharacter.from_values(g, w)
    agree += polyhedron_contains(P, chi) == bb_sigma(g, chi, 1).is_no
print("agreements:", agree)
