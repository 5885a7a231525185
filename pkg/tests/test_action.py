import random

import pytest

from skewqp.action import (ActionError, ArrowImage, AssumptionError, CyclicAction, check_type3_coefficients,
                           choose_representatives, classify_arrow, classify_cycle, cycle_kind, validate_action)
from skewqp.cyclo import zeta_pow
from skewqp.gen import gen_type_a
from skewqp.qp import Arrow, Potential, Quiver

from conftest import BUNDLES, twisted

PAPER_E = ["(0,0,3)", "(0,1,2)", "(1,0,2)", "(1,1,1)"]


def perturbed(action, arrow, exp):
    amap = dict(action.arrow_map)
    amap[arrow] = ArrowImage(amap[arrow].arrow, exp)
    return CyclicAction(action.quiver, action.order, action.vertex_map, amap)


def test_constructor_checks_incidence():
    q = Quiver(["1", "2"], [Arrow("a", "1", "2")])
    with pytest.raises(ActionError):
        CyclicAction(q, 2, {"1": "2", "2": "1"}, {"a": "a"})
    with pytest.raises(ActionError):
        CyclicAction(q, 2, {"1": "1", "2": "1"}, {"a": "a"})
    with pytest.raises(ActionError):
        CyclicAction(q, 1, {"1": "1", "2": "2"}, {})


def test_rotation_passes():
    b = gen_type_a(4)
    report = validate_action(b.potential, b.action)
    assert report.ok
    assert [c.name for c in report.checks] == ["A1", "A2", "A3", "A4", "A5", "A6", "A7"]


@pytest.mark.parametrize("name", BUNDLES)
def test_bundles_pass(bundles, name):
    b = bundles[name]
    assert validate_action(b.potential, b.action).ok
    t = b.trivial()
    assert validate_action(t.potential, t.action).ok


def test_scalar_on_moving_arrow():
    b = gen_type_a(4)
    g = perturbed(b.action, "a3(0,0,3)", 1)
    report = validate_action(b.potential, g)
    assert not report["A6"].passed
    assert report["A6"].witness == "a3(0,0,3)"


def test_orbit_size_failure():
    b = gen_type_a(4)
    g = CyclicAction(b.quiver, 6, b.action.vertex_map, b.action.arrow_map)
    report = validate_action(b.potential.with_order(6), g)
    assert report["A2"].passed
    assert not report["A3"].passed
    assert report["A3"].witness in b.quiver.vertices


def test_invariance_failure():
    b = gen_type_a(4)
    word = next(iter(b.potential))
    terms = dict(b.potential.items())
    terms[word] = terms[word] * 2
    report = validate_action(Potential(b.quiver, terms, 3), b.action)
    assert not report["A4"].passed
    assert report["A4"].witness in terms


def test_fixed_arrow_moved():
    q = Quiver(["x", "y"], [Arrow("p", "x", "y"), Arrow("q", "x", "y")])
    g = CyclicAction(q, 2, {"x": "x", "y": "y"}, {"p": "q", "q": "p"})
    report = validate_action(Potential(q, {}, 2), g)
    assert not report["A5"].passed and report["A5"].witness == "p"


def test_cycle_kind_failure():
    q = Quiver(["f1", "f2", "u", "u'", "w", "w'"], [
        Arrow("a", "f1", "u"), Arrow("a'", "f1", "u'"), Arrow("b", "u", "f2"), Arrow("b'", "u'", "f2"),
        Arrow("c", "f2", "w"), Arrow("c'", "f2", "w'"), Arrow("d", "w", "f1"), Arrow("d'", "w'", "f1"),
    ])
    swap = {"f1": "f1", "f2": "f2", "u": "u'", "u'": "u", "w": "w'", "w'": "w"}
    g = CyclicAction(q, 2, swap, {x: x + "'" if "'" not in x else x[0] for x in q.arrows})
    w = Potential(q, {("d", "c", "b", "a"): 1, ("d'", "c'", "b'", "a'"): 1}, 2)
    report = validate_action(w, g)
    assert report["A4"].passed
    assert not report["A7"].passed
    assert report["A7"].witness == ("a", "d", "c", "b")
    with pytest.raises(AssumptionError):
        classify_cycle(g, choose_representatives(g), ("d", "c", "b", "a"))


def test_broken_order_reported():
    b = gen_type_a(4)
    g = perturbed(b.action, "a1(1,0,2)", 1)
    assert not validate_action(b.potential, g)["A2"].passed


def test_representatives():
    b = gen_type_a(4)
    reps = choose_representatives(b.action, PAPER_E)
    assert reps.primary == ("(0,0,3)", "(0,1,2)", "(1,0,2)")
    assert reps.fixed == ("(1,1,1)",)
    default = choose_representatives(b.action)
    assert len(default.primary) == 3 and default.fixed == ("(1,1,1)",)
    assert default.primary == ("(0,0,3)", "(0,1,2)", "(0,2,1)")
    with pytest.raises(ValueError):
        choose_representatives(b.action, ["(0,0,3)", "(3,0,0)", "(0,1,2)", "(1,0,2)", "(1,1,1)"])
    with pytest.raises(ValueError):
        choose_representatives(b.action, ["(0,0,3)", "(0,1,2)", "(1,1,1)"])
    t = b.trivial()
    reps = choose_representatives(t.action)
    assert reps.primary == () and set(reps.fixed) == set(t.quiver.vertices)


def test_arrow_types_of_triangle():
    b = gen_type_a(4)
    reps = choose_representatives(b.action, PAPER_E)
    lam = classify_arrow(b.action, reps, "a2(1,1,1)")
    theta = classify_arrow(b.action, reps, "a3(0,1,2)")
    delta = classify_arrow(b.action, reps, "a2(0,2,1)")
    assert (lam.kind, lam.t) == (3, 0)
    assert (theta.kind, theta.t) == (2, 0)
    assert (delta.kind, delta.t) == (1, 2)
    assert b.action.vertex("(1,0,2)", 2) == "(0,2,1)"
    other = classify_arrow(b.action, reps, "a3(2,0,1)")
    assert other.kind is None and other.family == 1
    assert b.action.star(other.rep, other.power) == "a3(2,0,1)"


@pytest.mark.parametrize("name", BUNDLES)
def test_one_representative_per_orbit(bundles, name):
    b = bundles[name]
    g, reps = b.action, b.representatives()
    seen = set()
    for a in b.quiver.arrows:
        if a in seen:
            continue
        orbit = g.arrow_orbit(a)
        seen.update(orbit)
        classes = [classify_arrow(g, reps, x) for x in orbit]
        assert sum(c.kind is not None for c in classes) == 1
        assert len(orbit) == (1 if classes[0].family == 4 else g.order)
        for c in classes:
            assert g.star(c.rep, c.power) == c.arrow
            if c.family != 1:
                assert c.t == 0


def test_triangle_cycles():
    b = gen_type_a(4)
    g = b.action
    reps = choose_representatives(g, PAPER_E)
    alpha, beta, gamma = "a3(0,0,3)", "a2(0,1,2)", "a1(1,0,2)"
    delta, theta, lam = "a2(0,2,1)", "a3(0,1,2)", "a2(1,1,1)"
    c1 = classify_cycle(g, reps, (alpha, beta, gamma))
    assert c1.kind == "i" and c1.orbit_size == 3
    c2 = classify_cycle(g, reps, (lam, theta, gamma))
    assert c2.kind == "ii" and c2.p == 0
    c3 = classify_cycle(g, reps, (lam, g.star(theta), g.star(delta)))
    assert c3.kind == "ii" and c3.p == 1
    assert c3.reps == (lam, theta, delta)


def test_trivial_cycles_are_kind_iv():
    t = gen_type_a(4).trivial()
    reps = choose_representatives(t.action)
    for word in t.potential:
        c = classify_cycle(t.action, reps, word)
        assert c.kind == "iv" and set(c.b) == {0} and c.orbit_size == 1


def _check_invariants(g, reps, word, rng=None):
    n = g.order
    c = classify_cycle(g, reps, word, rng)
    assert n % c.orbit_size == 0
    if c.kind in ("i", "ii"):
        assert sum(c.t) % n == 0
    if c.kind == "ii":
        assert c.t[0] == 0 and c.p == c.t[1]
        assert sum(g.is_fixed(g.quiver.src(a)) for a in c.hat) == 1
    if c.kind == "iii":
        assert set(c.t) == {0}
        assert sum(not g.is_fixed(g.quiver.src(a)) for a in c.hat) == 1
    if c.kind == "iv":
        assert sum(c.b) % n == 0
    # hat is a rotation of an orbit element of the cycle
    images = {g.star_word(word, r) for r in range(n)}
    rots = {w[i:] + w[:i] for w in images for i in range(len(w))}
    assert c.hat in rots
    return c


@pytest.mark.parametrize("name", BUNDLES)
def test_cycle_invariants(bundles, name):
    b = bundles[name]
    reps = b.representatives()
    kinds = {_check_invariants(b.action, reps, word).kind for word in b.potential}
    rng = random.Random(7)
    for word in b.potential:
        _check_invariants(b.action, reps, word, rng)
    assert kinds <= {"i", "ii", "iii", "iv"}


def test_type3_coefficients():
    w, g = twisted()
    assert validate_action(w, g).ok
    reps = choose_representatives(g)
    c = classify_cycle(g, reps, ("x", "y", "z"))
    assert c.kind == "iii" and c.q == 1
    assert check_type3_coefficients(w, g)
    bad = Potential(w.quiver, {("x", "y", "z"): 1, ("x'", "y'", "z"): 1}, 2)
    assert not check_type3_coefficients(bad, g)
    assert not validate_action(bad, g)["A4"].passed


def test_type3_on_tensor(bundles):
    b = bundles["A5xA3"]
    reps = b.representatives()
    assert any(classify_cycle(b.action, reps, k).kind == "iii" for k in b.potential)
    assert check_type3_coefficients(b.potential, b.action)
    word = next(k for k in b.potential if cycle_kind(b.action, k) == "iii")
    terms = dict(b.potential.items())
    terms[word] = terms[word] * 3
    assert not check_type3_coefficients(Potential(b.quiver, terms, 2), b.action)
    t = b.trivial()
    assert check_type3_coefficients(t.potential, t.action)


@pytest.mark.parametrize("name", BUNDLES)
def test_gw_equals_w(bundles, name):
    b = bundles[name]
    assert b.action.potential(b.potential) == b.potential
    w = b.potential
    for k in range(b.action.order):
        assert b.action.potential(w, k) == w
    gw_bad = perturbed(b.action, next(iter(b.quiver.arrows)), 1).potential(w)
    assert gw_bad != w


def test_zeta_twist_in_potential_image():
    w, g = twisted()
    img = g.potential(Potential(w.quiver, {("x", "y", "z"): 1}, 2))
    assert img.coefficient(("x'", "y'", "z")) == zeta_pow(2, 1)
