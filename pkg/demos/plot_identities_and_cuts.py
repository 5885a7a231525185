"""
Derivatives, cuts and the canvas
================================

The skew group QP is only useful if its Jacobian relations match those
of the skew group algebra.  Here we check that arrow by arrow, then look
at cuts and at the homology of the cell complex.
"""

# %%
from skewqp.gen import fixture
from skewqp.sga import verify_generator_identities
from skewqp.skew import build_skew_qp

b = fixture("typeA4")
s = build_skew_qp(b.potential, b.action, b.reps)
report = verify_generator_identities(s, refined=False)
for c in report.checks:
    print(f"type {c.kind}  {'ok ' if c.passed else 'BAD'}  {c.arrow}")

# %%
# Cuts invariant under the rotation.  The three attached to the fixture
# come from a colouring of the lattice; the search finds them among others.
from skewqp.cuts import enumerate_cuts, induce_cut, is_cut

found = enumerate_cuts(b.potential, b.action)
print(len(found), "G-invariant cuts")
for name, cut in b.cuts.items():
    cg = induce_cut(cut, s)
    print(name, len(cut), "arrows; induced cut on Q_G has", len(cg), "arrows, valid:", is_cut(s.potential, cg))

# %%
# The canvas glues a disc along every cycle of W.  A vanishing H_1 is
# necessary for simple connectivity, not sufficient.
from skewqp.canvas import build_canvas, homology

for label, w in (("Q", b.potential), ("Q_G", s.potential)):
    c = build_canvas(w)
    h = homology(c)
    print(label, "chi =", c.euler_characteristic, "betti =", (h.b0, h.b1, h.b2), "torsion =", h.torsion)
