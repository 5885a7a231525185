"""Acceptance criteria, one PASS/FAIL line each.

Run with `pytest tests/test_acceptance.py -s` or `python tests/test_acceptance.py`.
"""

import random
import sys
from fractions import Fraction

import pytest
import sympy

from skewqp.action import ArrowImage, CyclicAction, validate_action
from skewqp.canvas import build_canvas, homology
from skewqp.cuts import enumerate_cuts, induce_cut, is_cut, is_G_invariant
from skewqp.cyclo import Cyclotomic, zeta_pow
from skewqp.gen import expected_skew_potential, fixture
from skewqp.qp import Arrow, Quiver
from skewqp.sga import SkewGroupAlgebra, verify_generator_identities
from skewqp.skew import build_skew_qp, dual_action, roundtrip

ALL = ["typeA4", "typeA7", "A5xA3", "A5xD4"]
_cache = {}


def bundle(name):
    if name not in _cache:
        b = fixture(name)
        _cache[name] = (b, build_skew_qp(b.potential, b.action, b.reps))
    return _cache[name]


def typeA4_construction():
    b, s = bundle("typeA4")
    nm = b.expected["names"]
    one, two, three = (s.vertex(v) for v in ("(0,0,3)", "(0,1,2)", "(1,0,2)"))
    four = [s.vertex("(1,1,1)", mu) for mu in range(3)]
    ends = lambda label: (s.quiver.src(label), s.quiver.tgt(label))
    adjacency = {
        ends(s.arrow(nm["alpha"])): (one, three),
        ends(s.arrow(nm["beta"])): (two, one),
        ends(s.arrow(nm["gamma"])): (three, two),
        ends(s.arrow(nm["delta"])): (three, two),
    }
    ok = all(k == v for k, v in adjacency.items())
    for mu in range(3):
        ok &= ends(s.arrow(nm["theta"], mu)) == (two, four[mu])
        ok &= ends(s.arrow(nm["lambda"], mu)) == (four[mu], three)
    ok &= len(s.quiver.vertices) == 6 and len(s.quiver.arrows) == 10
    ok &= s.potential == expected_skew_potential(b, s)
    return ok, f"{len(s.quiver.vertices)} vertices, {len(s.quiver.arrows)} arrows, {len(s.potential)} terms of W_G"


def generator_identities():
    total, kinds, factor_n = 0, set(), False
    for name in ("typeA4", "typeA7", "A5xA3"):
        _, s = bundle(name)
        report = verify_generator_identities(s)
        if not report.ok:
            return False, f"{name}: {len(report.failures())} failing identities"
        total += len(report.checks)
        kinds |= {c.kind for c in report.checks}
        if name == "A5xA3":
            factor_n = any(c.kind == 4 and c.passed and c.lhs for c in report.checks)
    return kinds == {1, 2, 3, 4} and factor_n, f"{total} identities, arrow types {sorted(kinds)}"


def round_trips():
    done = []
    for name in ALL:
        b, _ = bundle(name)
        t = b.trivial()
        for w, g, reps in ((b.potential, b.action, b.reps), (t.potential, t.action, None)):
            rt = roundtrip(w, g, reps)
            if not rt.match:
                return False, f"{name}: no match (order {g.order})"
            done.append(name if g.order > 1 else name + "/trivial")
    return True, f"{len(done)} round trips"


def dual_actions():
    for name in ALL:
        _, s = bundle(name)
        chi = dual_action(s)
        if not validate_action(s.potential, chi).ok or chi.potential(s.potential) != s.potential:
            return False, name
    return True, f"{len(ALL)} bundles"


def cuts():
    b, s = bundle("typeA7")
    cs = [b.cuts[f"C{j}"] for j in range(3)]
    enumerated = set(enumerate_cuts(b.potential, b.action))
    ok = all(is_cut(b.potential, c) and is_G_invariant(c, b.action) and c in enumerated for c in cs)
    ok &= frozenset().union(*cs) == frozenset(b.quiver.arrows)
    induced = 0
    for name in ALL:
        bb, ss = bundle(name)
        for c in bb.cuts.values():
            ok &= is_cut(ss.potential, induce_cut(c, ss))
            induced += 1
    return ok, f"C0..C2 cover {len(b.quiver.arrows)} arrows; {induced} induced cuts checked"


def _sympy_b1(c):
    d1, d2 = sympy.Matrix(c.boundary_1()), sympy.Matrix(c.boundary_2())
    r2 = d2.rank() if c.faces else 0
    return len(c.edges) - d1.rank() - r2


def canvases():
    out = []
    ok = True
    for name in ("typeA4", "typeA7"):
        c = build_canvas(bundle(name)[0].potential)
        h = homology(c)
        ok &= c.euler_characteristic == 1 and h.h1_trivial and _sympy_b1(c) == 0
        out.append(f"{name}: chi={c.euler_characteristic} b1={h.b1}")
    c = build_canvas(bundle("typeA4")[1].potential)
    h = homology(c)
    ok &= h.h1_trivial and _sympy_b1(c) == 0
    out.append(f"typeA4_G: b1={h.b1} torsion={list(h.torsion)}")
    return ok, "; ".join(out)


def _fixed_action(rng, n):
    k = rng.randint(1, 3)
    vs = [str(i) for i in range(k)]
    arrows, amap = [], {}
    for j in range(rng.randint(1, 4)):
        arrows.append(Arrow(f"x{j}", rng.choice(vs), rng.choice(vs)))
        amap[f"x{j}"] = ArrowImage(f"x{j}", rng.randrange(n))
    return CyclicAction(Quiver(vs, arrows, connected=False), n, {v: v for v in vs}, amap)


def property_suite(seed=2024):
    rng = random.Random(seed)
    cases = 0
    # field axioms
    for _ in range(500):
        n = rng.randint(1, 12)
        a, b, c = (Cyclotomic(n, [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(n)]) for _ in range(3))
        if not ((a + b) + c == a + (b + c) and (a * b) * c == a * (b * c) and a * (b + c) == a * b + a * c
                and a * b == b * a and (not a or a * a.inv() == 1)):
            return False, f"field axioms, order {n}"
        cases += 1
    # roots of unity sum to zero
    for n in range(2, 102):
        total = Cyclotomic.zero(n)
        for i in range(n):
            total = total + zeta_pow(n, i)
        if total:
            return False, f"sum of roots, order {n}"
        cases += 1
    # e_mu orthogonal idempotents summing to the vertex idempotent
    for _ in range(200):
        n = rng.randint(2, 5)
        g = _fixed_action(rng, n)
        A = SkewGroupAlgebra(g)
        v = rng.choice(list(g.quiver.vertices))
        es = [A.idempotent_e(v, mu) for mu in range(n)]
        mu, nu = rng.randrange(n), rng.randrange(n)
        total = A.zero()
        for e in es:
            total = total + e
        if es[mu] * es[nu] != (es[mu] if mu == nu else A.zero()) or total != A.vertex(v):
            return False, f"idempotents, order {n}"
        cases += 1
    # (alpha e_mu)(beta e_nu) for beta fixed with g(beta) = zeta^b beta
    for _ in range(400):
        n = rng.randint(2, 5)
        g = _fixed_action(rng, n)
        A = SkewGroupAlgebra(g)
        q = g.quiver
        beta = rng.choice(list(q.arrows))
        options = q.arrows_from(q.tgt(beta))
        if not options:
            continue
        alpha = rng.choice(sorted(options))
        mu, nu = rng.randrange(n), rng.randrange(n)
        lhs = (A.path([alpha]) * A.e(mu)) * (A.path([beta]) * A.e(nu))
        rhs = A.path([alpha, beta]) * A.e(nu) if nu == (mu + g.scalar(beta)) % n else A.zero()
        if lhs != rhs:
            return False, f"product rule, order {n}"
        cases += 1
    return cases >= 1000, f"{cases} cases"


def choice_independence():
    for name in ALL:
        b, s = bundle(name)
        for seed in range(10):
            other = build_skew_qp(b.potential, b.action, b.reps, random.Random(seed))
            if other.potential != s.potential:
                return False, f"{name}, seed {seed}"
    return True, f"{len(ALL)} bundles x 10 seeds"


CRITERIA = [
    ("1 triangle quiver Q^(4): skew quiver and W_G", typeA4_construction),
    ("2 generator identities in (kQ)G", generator_identities),
    ("3 double skew round trip", round_trips),
    ("4 dual action validity", dual_actions),
    ("5 G-invariant and induced cuts", cuts),
    ("6 canvas homology", canvases),
    ("7 cyclotomic and idempotent properties", property_suite),
    ("8 independence of cycle choices", choice_independence),
]


def report(label, fn):
    ok, detail = fn()
    print(f"{'PASS' if ok else 'FAIL'}  criterion {label}  ({detail})")
    return ok


@pytest.mark.parametrize("label,fn", CRITERIA, ids=[c[0].split()[0] for c in CRITERIA])
def test_criterion(label, fn, capsys):
    with capsys.disabled():
        ok = report(label, fn)
    assert ok


if __name__ == "__main__":
    results = [report(label, fn) for label, fn in CRITERIA]
    sys.exit(0 if all(results) else 1)
