"""
The triangle quiver Q^(4) and its skew group QP
================================================

Rotation by a third of a turn acts on the triangle quiver with ten
vertices.  One vertex is fixed, so the skew group quiver has three
vertices for the free orbits and three copies of the fixed one.
"""

# %%
# Build the quiver with potential and check the action.
from skewqp.action import validate_action
from skewqp.gen import fixture

b = fixture("typeA4")
print(len(b.quiver.vertices), "vertices,", len(b.quiver.arrows), "arrows,", len(b.potential), "cycles")
print(validate_action(b.potential, b.action))

# %%
# The skew group QP, using the representatives stored with the fixture.
from skewqp.skew import build_skew_qp

s = build_skew_qp(b.potential, b.action, b.reps)
for a in s.quiver.arrows.values():
    print(f"{a.id:22} {a.src} -> {a.tgt}")

# %%
# W_G has one term with all arrows of type (1) and two families
# indexed by mu.  Coefficients live in Q(zeta_3); "z" is zeta.
for word, c in s.potential.items():
    print(f"{str(c):>8}  {' '.join(word)}")

# %%
# The dual action rotates the copies of the fixed vertex, and building
# the skew QP a second time gives back the original up to relabelling.
from skewqp.skew import roundtrip

rt = roundtrip(b.potential, b.action, b.reps)
print("match:", rt.match)
for label, v in sorted(rt.vertex_map.items(), key=lambda kv: kv[1]):
    print(f"{v}  <-  {label}")
