"""
A tensor product of Dynkin quivers
==================================

A5 with its reflection tensored with a linear A3.  The fixed vertices
sit over the middle vertex of A5, and arrows between them pick up a
factor n in the derivative identities.
"""

# %%
from skewqp.gen import fixture
from skewqp.skew import build_skew_qp

b = fixture("A5xA3")
print(len(b.quiver.vertices), "vertices; fixed:", b.action.fixed_vertices())
s = build_skew_qp(b.potential, b.action, b.reps)
print(sorted(s.quiver.vertices))

# %%
# Arrow types of the representatives.
from collections import Counter

print(Counter(c.kind for c in s.representative_arrows()))

# %%
# The cut made of the A3 arrows truncates to a presentation with one
# relation per cut arrow.
from skewqp.cuts import truncated_presentation

tp = truncated_presentation(b.potential, b.cuts["Q1_0xQ2_1"])
print(len(tp.quiver.arrows), "arrows,", len(tp.relations), "relations")
arrow, rel = tp.relations[0]
print(arrow, ":", {" ".join(p.arrows): str(c) for p, c in rel.items()})

# %%
# Graphviz source for the skew quiver.
from skewqp.io import to_dot

print(to_dot(s.quiver, name="Q_G")[:300])
