import random

import pytest

from skewqp.action import AssumptionError, ArrowImage, CyclicAction, choose_representatives, validate_action
from skewqp.cyclo import zeta_pow
from skewqp.gen import expected_skew_potential, gen_type_a, tensor_vertex
from skewqp.qp import Potential
from skewqp.skew import build_skew_qp, dual_action, roundtrip

from conftest import BUNDLES, twisted


def named(bundle, skew):
    """Greek-letter names of the typeA4 skew arrows, with mu where present."""
    names = bundle.expected["names"]
    out = {}
    for key, a in names.items():
        for label, (rep, mu) in skew.arrow_origin.items():
            if rep == a:
                out[key if mu is None else f"{key}{mu}"] = label
    return out


def test_typeA4_sizes(bundles, skews):
    b, s = bundles["typeA4"], skews["typeA4"]
    assert len(s.quiver.vertices) == b.expected["skew_vertices"] == 6
    assert len(s.quiver.arrows) == b.expected["skew_arrows"] == 10
    assert len(s.potential) == b.expected["skew_cycles"] == 7


def test_typeA4_adjacency(bundles, skews):
    b, s = bundles["typeA4"], skews["typeA4"]
    one, two, three = (s.vertex(v) for v in ("(0,0,3)", "(0,1,2)", "(1,0,2)"))
    four = [s.vertex("(1,1,1)", mu) for mu in range(3)]
    a = named(b, s)
    ends = {k: (s.quiver.src(v), s.quiver.tgt(v)) for k, v in a.items()}
    expected = {"alpha": (one, three), "beta": (two, one), "gamma": (three, two), "delta": (three, two)}
    for mu in range(3):
        expected[f"theta{mu}"] = (two, four[mu])
        expected[f"lambda{mu}"] = (four[mu], three)
    assert ends == expected


def test_typeA4_potential(bundles, skews):
    b, s = bundles["typeA4"], skews["typeA4"]
    assert s.potential == expected_skew_potential(b, s)


def test_typeA4_potential_spelled_out(bundles, skews):
    """Independent of the fixture table: write the expected terms by hand."""
    b, s = bundles["typeA4"], skews["typeA4"]
    a = named(b, s)
    terms = [((a["alpha"], a["beta"], a["gamma"]), -1)]
    for mu in range(3):
        terms.append(((a[f"lambda{mu}"], a[f"theta{mu}"], a["gamma"]), 1))
        terms.append(((a[f"lambda{mu}"], a[f"theta{mu}"], a["delta"]), -zeta_pow(3, -mu)))
    assert s.potential == Potential(s.quiver, terms, 3)
    wrong = Potential(s.quiver, terms[:-1] + [(terms[-1][0], -zeta_pow(3, 2))], 3)
    assert s.potential != wrong


def test_typeA4_cycle_choices(skews):
    s = skews["typeA4"]
    kinds = sorted((c.kind, c.p) for c in s.cycle_classes)
    assert kinds == [("i", None), ("ii", 0), ("ii", 1)]


@pytest.mark.parametrize("name", BUNDLES)
def test_counts_match_formula(bundles, skews, name):
    b, s = bundles[name], skews[name]
    n = b.action.order
    reps = s.reps
    assert len(s.quiver.vertices) == len(reps.primary) + n * len(reps.fixed)
    assert len(s.quiver.vertices) == b.expected["skew_vertices"]
    kinds = [c.kind for c in s.representative_arrows()]
    assert len(s.quiver.arrows) == kinds.count(1) + n * (len(kinds) - kinds.count(1))
    assert len(s.quiver.arrows) == b.expected["skew_arrows"]


def test_a5xa3_vertices_as_drawn(bundles, skews):
    s = skews["A5xA3"]
    expected = set()
    for i in "012":
        expected |= {s.vertex(tensor_vertex("0", i), mu) for mu in (0, 1)}
        expected |= {s.vertex(tensor_vertex("1", i)), s.vertex(tensor_vertex("2", i))}
    assert set(s.quiver.vertices) == expected and len(expected) == 12


def test_a5xa3_factor_arrows(skews):
    s = skews["A5xA3"]
    # arrows between fixed vertices are type 4 and split into one arrow per mu
    fours = [c.arrow for c in s.representative_arrows() if c.kind == 4]
    assert sorted(fours) == sorted(tensor_vertex("0", g) for g in ("gamma1", "gamma2"))


def test_dual_on_typeA4(bundles, skews):
    b, s = bundles["typeA4"], skews["typeA4"]
    chi = dual_action(s)
    a = named(b, s)
    assert chi.arrow(a["delta"]) == (a["delta"], 2)
    for key in ("alpha", "beta", "gamma"):
        assert chi.arrow(a[key]) == (a[key], 0)
    for mu in range(3):
        assert chi.vertex(s.vertex("(1,1,1)", mu)) == s.vertex("(1,1,1)", mu + 1)
        assert chi.arrow(a[f"theta{mu}"]) == (a[f"theta{(mu + 1) % 3}"], 0)
        assert chi.arrow(a[f"lambda{mu}"]) == (a[f"lambda{(mu + 1) % 3}"], 0)
    for v in ("(0,0,3)", "(0,1,2)", "(1,0,2)"):
        assert chi.is_fixed(s.vertex(v))


@pytest.mark.parametrize("name", BUNDLES)
def test_dual_validates_and_fixes(skews, name):
    s = skews[name]
    chi = dual_action(s)
    assert validate_action(s.potential, chi).ok
    assert chi.potential(s.potential) == s.potential


def test_phi_vertex_preimages(bundles):
    """Vertex 2 of the skew quiver comes back as the orbit of (0,1,2), and so on."""
    b = bundles["typeA4"]
    rt = roundtrip(b.potential, b.action, b.reps)
    s, d = rt.skew, rt.double
    back = {}
    for label, v in rt.vertex_map.items():
        back.setdefault(d.vertex_origin[label][0], set()).add(v)
    assert back[s.vertex("(0,1,2)")] == {"(0,1,2)", "(1,2,0)", "(2,0,1)"}
    assert back[s.vertex("(1,0,2)")] == {"(0,2,1)", "(2,1,0)", "(1,0,2)"}
    assert back[s.vertex("(0,0,3)")] == {"(0,0,3)", "(0,3,0)", "(3,0,0)"}
    assert {rt.vertex_map[d.vertex(s.vertex("(1,1,1)", 0))]} == {"(1,1,1)"}


@pytest.mark.parametrize("name", BUNDLES)
def test_roundtrip(bundles, name):
    b = bundles[name]
    rt = roundtrip(b.potential, b.action, b.reps)
    assert rt.is_isomorphism and rt.match
    t = b.trivial()
    rt = roundtrip(t.potential, t.action)
    assert rt.is_isomorphism and rt.match


@pytest.mark.parametrize("name", BUNDLES)
def test_roundtrip_default_reps(bundles, name):
    b = bundles[name]
    assert roundtrip(b.potential, b.action).match


def test_roundtrip_with_scalars():
    w, g = twisted()
    rt = roundtrip(w, g)
    assert rt.match
    s = rt.skew
    assert len(s.quiver.vertices) == 1 + 2 * 2


def test_roundtrip_detects_wrong_image(bundles):
    b = bundles["typeA4"]
    rt = roundtrip(b.potential, b.action, b.reps)
    other = rt.double.potential.relabel(rt.arrow_map, b.quiver)
    assert other == b.potential
    assert other.scale(2) != b.potential


def test_trivial_group_is_relabelling(bundles):
    t = bundles["typeA4"].trivial()
    s = build_skew_qp(t.potential, t.action)
    assert len(s.quiver.vertices) == len(t.quiver.vertices)
    assert len(s.quiver.arrows) == len(t.quiver.arrows)
    relabel = {label: a for label, (a, _) in s.arrow_origin.items()}
    assert s.potential.relabel(relabel, t.quiver) == t.potential


@pytest.mark.parametrize("name", BUNDLES)
def test_choice_independence(bundles, skews, name):
    b = bundles[name]
    for seed in range(5):
        s = build_skew_qp(b.potential, b.action, b.reps, random.Random(seed))
        assert s.potential == skews[name].potential


def test_failed_assumption_aborts():
    b = gen_type_a(4)
    amap = dict(b.action.arrow_map)
    amap["a3(0,0,3)"] = ArrowImage(amap["a3(0,0,3)"].arrow, 1)
    g = CyclicAction(b.quiver, 3, b.action.vertex_map, amap)
    with pytest.raises(AssumptionError) as err:
        build_skew_qp(b.potential, g)
    assert not err.value.report.ok


def test_labels_follow_representatives(bundles):
    b = bundles["typeA4"]
    s = build_skew_qp(b.potential, b.action, choose_representatives(b.action))
    assert set(s.quiver.vertices) == {"eta((0,0,3))", "eta((0,1,2))", "eta((0,2,1))",
                                      "eta((1,1,1),0)", "eta((1,1,1),1)", "eta((1,1,1),2)"}
