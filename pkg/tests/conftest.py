import pytest

from skewqp.gen import FIXTURES, fixture
from skewqp.qp import Arrow, Potential, Quiver
from skewqp.skew import build_skew_qp

BUNDLES = sorted(FIXTURES)


@pytest.fixture(scope="session")
def bundles():
    return {name: fixture(name) for name in BUNDLES}


@pytest.fixture(scope="session")
def skews(bundles):
    return {name: build_skew_qp(b.potential, b.action, b.reps) for name, b in bundles.items()}


def triangle(order=1):
    """One oriented 3-cycle a b c: c: 1->2, b: 2->3, a: 3->1."""
    q = Quiver(["1", "2", "3"], [Arrow("c", "1", "2"), Arrow("b", "2", "3"), Arrow("a", "3", "1")])
    return Potential(q, {("a", "b", "c"): 1}, order)


def double_loop():
    """a: 1->2, b: 2->1, c: 2->1 carrying the cycle a b a c."""
    q = Quiver(["1", "2"], [Arrow("a", "1", "2"), Arrow("b", "2", "1"), Arrow("c", "2", "1")])
    return Potential(q, {("a", "b", "a", "c"): 1})


def twisted():
    """Order-2 example with a kind-iii cycle through a fixed arrow carrying zeta.

    f, h fixed; u <-> u'.  x: u->f, y: h->u, z: f->h with g(z) = -z.
    W = x y z - x' y' z, so that g W = W.
    """
    from skewqp.action import ArrowImage, CyclicAction

    q = Quiver(["f", "h", "u", "u'"], [
        Arrow("x", "u", "f"), Arrow("x'", "u'", "f"),
        Arrow("y", "h", "u"), Arrow("y'", "h", "u'"),
        Arrow("z", "f", "h"),
    ])
    w = Potential(q, {("x", "y", "z"): 1, ("x'", "y'", "z"): -1}, 2)
    g = CyclicAction(q, 2, {"f": "f", "h": "h", "u": "u'", "u'": "u"}, {
        "x": ArrowImage("x'"), "x'": ArrowImage("x"), "y": ArrowImage("y'"), "y'": ArrowImage("y"),
        "z": ArrowImage("z", 1),
    })
    return w, g
