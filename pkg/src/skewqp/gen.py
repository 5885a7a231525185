"""Example families: triangle quivers Q^(s) and tensor products of Dynkin quivers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .action import ArrowImage, CyclicAction, Representatives, choose_representatives
from .cyclo import zeta_pow
from .qp import Arrow, Potential, Quiver

# steps f1, f2, f3 of the triangular lattice; f1 + f2 + f3 = 0
STEPS = {1: (-1, 1, 0), 2: (0, -1, 1), 3: (1, 0, -1)}


@dataclass
class ExampleBundle:
    name: str
    potential: Potential
    action: CyclicAction
    reps: Representatives | None = None
    cuts: dict[str, frozenset] = field(default_factory=dict)
    expected: dict = field(default_factory=dict)

    @property
    def quiver(self) -> Quiver:
        return self.potential.quiver

    def representatives(self) -> Representatives:
        return self.reps if self.reps is not None else choose_representatives(self.action)

    def trivial(self) -> "ExampleBundle":
        """Same QP with the trivial group acting."""
        w = self.potential.with_order(1)
        return ExampleBundle(self.name + "/trivial", w, CyclicAction.identity(w.quiver))


def lattice_vertex(x) -> str:
    return "(" + ",".join(map(str, x)) + ")"


def lattice_arrow(i: int, x) -> str:
    """Arrow alpha_i leaving the vertex x."""
    return f"a{i}{lattice_vertex(x)}"


def _add(x, y):
    return tuple(a + b for a, b in zip(x, y))


def gen_type_a(s: int) -> ExampleBundle:
    """Triangle quiver Q^(s) with the rotation of order 3.

    Vertices are (x1, x2, x3) with nonnegative entries summing to s - 1,
    and alpha_i goes from x to x + f_i.  W is the sum of the cycles
    alpha1 alpha2 alpha3 minus the cycles alpha1 alpha3 alpha2.
    """
    if s < 1:
        raise ValueError(f"s must be at least 1, got {s}")
    m = s - 1
    pts = [(a, b, m - a - b) for a in range(m + 1) for b in range(m + 1 - a)]
    ptset = set(pts)
    arrows = []
    for x in pts:
        for i, f in STEPS.items():
            y = _add(x, f)
            if y in ptset:
                arrows.append(Arrow(lattice_arrow(i, x), lattice_vertex(x), lattice_vertex(y)))
    q = Quiver([lattice_vertex(x) for x in pts], arrows)

    terms = []
    for x in pts:
        for (a, b, c), sign in (((1, 2, 3), 1), ((1, 3, 2), -1)):
            # alpha_c first, then alpha_b, then alpha_a
            x1 = _add(x, STEPS[c])
            x2 = _add(x1, STEPS[b])
            if x1 in ptset and x2 in ptset:
                terms.append(((lattice_arrow(a, x2), lattice_arrow(b, x1), lattice_arrow(c, x)), sign))
    w = Potential(q, terms, 3)

    rot = lambda x: (x[2], x[0], x[1])
    vmap = {lattice_vertex(x): lattice_vertex(rot(x)) for x in pts}
    amap = {}
    for a in q.arrows.values():
        i = int(a.id[1])
        x = tuple(int(t) for t in a.src[1:-1].split(","))
        amap[a.id] = ArrowImage(lattice_arrow(i % 3 + 1, rot(x)), 0)
    action = CyclicAction(q, 3, vmap, amap)

    cuts = {}
    if m % 3 == 0:
        x0 = (m // 3,) * 3
        for j in range(3):
            cut = set()
            for a in q.arrows.values():
                x = tuple(int(t) for t in a.src[1:-1].split(","))
                y = _add(x, tuple(-t for t in x0))
                # y = u f1 + v f2 with u = -y1, v = y3, and omega(f1) = omega(f2) = 1
                if (y[2] - y[0]) % 3 == j:
                    cut.add(a.id)
            cuts[f"C{j}"] = frozenset(cut)
    expected = {"vertices": len(pts), "arrows": len(arrows), "cycles": len(w)}
    return ExampleBundle(f"typeA{s}", w, action, None, cuts, expected)


class TensorError(ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


def tensor_vertex(x: str, y: str) -> str:
    return f"({x},{y})"


def gen_tensor(g1: CyclicAction, g2: CyclicAction) -> ExampleBundle:
    """Q1 (x) Q2 with the potential of the tensor construction and generator (g1, g2)."""
    q1, q2 = g1.quiver, g2.quiver
    for q, tag in ((q1, "first"), (q2, "second")):
        if not q.is_acyclic():
            raise TensorError(f"the {tag} factor has an oriented cycle")
        clash = set(q.vertices) & set(q.arrows)
        if clash:
            raise TensorError(f"the {tag} factor uses {sorted(clash)[0]!r} as both vertex and arrow",
                              sorted(clash)[0])
    n1, n2 = g1.order, g2.order
    if not (n1 == 1 or n2 == 1 or n1 == n2):
        raise TensorError(f"factor groups of orders {n1} and {n2}: neither trivial nor isomorphic")
    for g, tag in ((g1, "first"), (g2, "second")):
        defects = g.order_defects()
        if defects:
            raise TensorError(f"the {tag} factor map does not have order {g.order}", defects[0])
        for a in g.quiver.arrows:
            if g.scalar(a):
                raise TensorError(f"arrow {a!r} of the {tag} factor carries a scalar", a)
            s, t = g.quiver.src(a), g.quiver.tgt(a)
            if g.is_fixed(s) and g.is_fixed(t) and g.star(a) != a:
                raise TensorError(f"arrow {a!r} between fixed vertices is not fixed", a)
    n = max(n1, n2)

    V = tensor_vertex
    vertices = [V(x, y) for x in q1.vertices for y in q2.vertices]
    arrows = []
    for x in q1.vertices:
        for b in q2.arrows.values():
            arrows.append(Arrow(V(x, b.id), V(x, b.src), V(x, b.tgt)))
    for a in q1.arrows.values():
        for b in q2.arrows.values():
            arrows.append(Arrow(V(a.id, b.id), V(a.tgt, b.tgt), V(a.src, b.src)))
    for a in q1.arrows.values():
        for y in q2.vertices:
            arrows.append(Arrow(V(a.id, y), V(a.src, y), V(a.tgt, y)))
    q = Quiver(vertices, arrows)

    terms = []
    for a in q1.arrows.values():
        for b in q2.arrows.values():
            terms.append(((V(a.id, b.tgt), V(a.src, b.id), V(a.id, b.id)), 1))
            terms.append(((V(a.tgt, b.id), V(a.id, b.src), V(a.id, b.id)), -1))
    w = Potential(q, terms, n)

    vmap = {V(x, y): V(g1.vertex(x), g2.vertex(y)) for x in q1.vertices for y in q2.vertices}
    amap = {}
    for x in q1.vertices:
        for b in q2.arrows:
            amap[V(x, b)] = ArrowImage(V(g1.vertex(x), g2.star(b)))
    for a in q1.arrows:
        for b in q2.arrows:
            amap[V(a, b)] = ArrowImage(V(g1.star(a), g2.star(b)))
        for y in q2.vertices:
            amap[V(a, y)] = ArrowImage(V(g1.star(a), g2.vertex(y)))
    action = CyclicAction(q, n, vmap, amap)

    cuts = {
        "Q1_0xQ2_1": frozenset(V(x, b) for x in q1.vertices for b in q2.arrows),
        "Q1_1xQ2_1": frozenset(V(a, b) for a in q1.arrows for b in q2.arrows),
        "Q1_1xQ2_0": frozenset(V(a, y) for a in q1.arrows for y in q2.vertices),
    }
    expected = {"vertices": len(vertices), "arrows": len(arrows), "cycles": len(w)}
    return ExampleBundle("tensor", w, action, None, cuts, expected)


def _quiver_action(vertices, arrows, vmap, amap, order):
    q = Quiver(vertices, [Arrow(*a) for a in arrows])
    return CyclicAction(q, order, vmap, {a: ArrowImage(b) for a, b in amap.items()})


def a5_reflected() -> CyclicAction:
    """A5 oriented 2 <- 1 <- 0 -> 1' -> 2' with the reflection through 0."""
    vs = ["2", "1", "0", "1'", "2'"]
    arrows = [("beta", "1", "2"), ("alpha", "0", "1"), ("alpha'", "0", "1'"), ("beta'", "1'", "2'")]
    vmap = {"0": "0", "1": "1'", "1'": "1", "2": "2'", "2'": "2"}
    amap = {"alpha": "alpha'", "alpha'": "alpha", "beta": "beta'", "beta'": "beta"}
    return _quiver_action(vs, arrows, vmap, amap, 2)


def a3_linear() -> CyclicAction:
    """A3 oriented 2 -> 1 -> 0 with the identity."""
    vs = ["0", "1", "2"]
    arrows = [("gamma2", "2", "1"), ("gamma1", "1", "0")]
    return _quiver_action(vs, arrows, {v: v for v in vs}, {a[0]: a[0] for a in arrows}, 1)


def a5_central() -> CyclicAction:
    """A5 oriented 1 <- 2 <- 3 -> 4 -> 5 with the reflection through 3."""
    vs = ["1", "2", "3", "4", "5"]
    arrows = [("p1", "2", "1"), ("p2", "3", "2"), ("q2", "3", "4"), ("q1", "4", "5")]
    vmap = {"1": "5", "2": "4", "3": "3", "4": "2", "5": "1"}
    amap = {"p1": "q1", "q1": "p1", "p2": "q2", "q2": "p2"}
    return _quiver_action(vs, arrows, vmap, amap, 2)


def d4_star() -> CyclicAction:
    """D4 with arrows from the centre 1 to 2, 3, 4, and the identity."""
    vs = ["1", "2", "3", "4"]
    arrows = [("d2", "1", "2"), ("d3", "1", "3"), ("d4", "1", "4")]
    return _quiver_action(vs, arrows, {v: v for v in vs}, {a[0]: a[0] for a in arrows}, 1)


def _typeA4() -> ExampleBundle:
    b = gen_type_a(4)
    b.name = "typeA4"
    b.reps = choose_representatives(b.action, ["(0,0,3)", "(0,1,2)", "(1,0,2)", "(1,1,1)"])
    alpha, beta, gamma = "a3(0,0,3)", "a2(0,1,2)", "a1(1,0,2)"
    delta, theta, lam = "a2(0,2,1)", "a3(0,1,2)", "a2(1,1,1)"
    expected_wg = [(-1, [(alpha, None), (beta, None), (gamma, None)])]
    for mu in range(3):
        expected_wg.append((1, [(lam, mu), (theta, mu), (gamma, None)]))
        expected_wg.append((-zeta_pow(3, -mu), [(lam, mu), (theta, mu), (delta, None)]))
    b.expected.update({
        "names": {"alpha": alpha, "beta": beta, "gamma": gamma, "delta": delta, "theta": theta, "lambda": lam},
        "skew_vertices": 6,
        "skew_arrows": 10,
        "skew_cycles": 7,
        "skew_potential": expected_wg,
    })
    return b


def _typeA7() -> ExampleBundle:
    b = gen_type_a(7)
    b.expected.update({"skew_vertices": 12, "skew_arrows": 25})
    return b


def _a5xa3() -> ExampleBundle:
    b = gen_tensor(a5_reflected(), a3_linear())
    b.name = "A5xA3"
    paper = [tensor_vertex(i, j) for i in "012" for j in "012"]
    b.reps = choose_representatives(b.action, paper)
    b.expected.update({"skew_vertices": 12, "skew_arrows": 23})
    return b


def _a5xd4() -> ExampleBundle:
    b = gen_tensor(a5_central(), d4_star())
    b.name = "A5xD4"
    b.expected.update({"skew_vertices": 16, "skew_arrows": 33})
    return b


FIXTURES: dict[str, Callable[[], ExampleBundle]] = {
    "typeA4": _typeA4,
    "typeA7": _typeA7,
    "A5xA3": _a5xa3,
    "A5xD4": _a5xd4,
}


def fixture(name: str) -> ExampleBundle:
    try:
        return FIXTURES[name]()
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; choose from {sorted(FIXTURES)}") from None


def expected_skew_potential(bundle: ExampleBundle, skew) -> Potential:
    """Realise a fixture's expected W_G on the quiver of a built SkewQP."""
    terms = []
    for coeff, word in bundle.expected["skew_potential"]:
        terms.append(([skew.arrow(a, mu) for a, mu in word], coeff))
    return Potential(skew.quiver, terms, skew.order)
