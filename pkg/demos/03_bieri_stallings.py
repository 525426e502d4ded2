"""
The Bieri-Stallings groups G_m
==============================

G_m is the Bestvina-Brady group of K_{2,...,2} with m parts.  It is of type
FP_{m-1} but not FP_m, and a character lies in the top invariant exactly
when it separates x_i from y_i in every factor.
"""

# %%
from bnsr.bb import BBCharacter, bb_finiteness, bb_sigma, critical_values
from bnsr.corpus import bieri_stallings_graph
from bnsr.errors import PreconditionError

# %%
for m in (2, 3, 4):
    g = bieri_stallings_graph(m)
    print(m, [bb_finiteness(g, n).value.value for n in range(1, m + 1)])

# %% [markdown]
# Characters of G_3 at n = 2.  The sweep only visits the critical values
# t = -c(v) of the extension family c + t.

# %%
g = bieri_stallings_graph(3)
for w in [(0, 1, 0, 2, 3, 1), (0, 0, 1, 2, 3, 1)]:
    chi = BBCharacter.from_values(g, w)
    v = bb_sigma(g, chi, 2)
    print(w, critical_values(chi), v.value.value, v.witness)

# %% [markdown]
# Above the finiteness type the invariant is undefined.

# %%
try:
    bb_sigma(g, BBCharacter.from_values(g, (0, 1, 0, 2, 3, 1)), 3)
except PreconditionError as exc:
    print("precondition:", exc)
