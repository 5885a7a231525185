"""The skew group quiver with potential (Q_G, W_G) and its dual action.

Vertex ids are "eta(v)" for free-orbit representatives and "eta(v,mu)"
for fixed vertices; arrow ids are "tilde(a)" for type (1) representatives
and "tilde(a,mu)" otherwise.  The ids are for people; code should use the
provenance tables on SkewQP rather than parse them.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .action import (ArrowClass, AssumptionError, CycleClass, CyclicAction, Representatives,
                     choose_representatives, classify_arrow, classify_cycle, validate_action)
from .cyclo import zeta_pow
from .qp import Arrow, Potential, Quiver, least_rotation


def vertex_label(v: str, mu: int | None = None) -> str:
    return f"eta({v})" if mu is None else f"eta({v},{mu})"


def arrow_label(a: str, mu: int | None = None) -> str:
    return f"tilde({a})" if mu is None else f"tilde({a},{mu})"


@dataclass
class SkewQP:
    quiver: Quiver
    potential: Potential
    reps: Representatives
    source: Potential
    action: CyclicAction
    arrow_classes: dict[str, ArrowClass]
    cycle_classes: list[CycleClass]
    vertex_origin: dict[str, tuple[str, int | None]] = field(repr=False)
    arrow_origin: dict[str, tuple[str, int | None]] = field(repr=False)

    def __post_init__(self):
        self._vertex_ids = {o: k for k, o in self.vertex_origin.items()}
        self._arrow_ids = {o: k for k, o in self.arrow_origin.items()}

    @property
    def order(self) -> int:
        return self.action.order

    def vertex(self, v: str, mu: int | None = None) -> str:
        """Q_G vertex over representative v (with index mu when v is fixed)."""
        if mu is not None:
            mu %= self.order
        return self._vertex_ids[(v, mu)]

    def arrow(self, a: str, mu: int | None = None) -> str:
        """Q_G arrow over representative arrow a (with index mu unless type 1)."""
        if mu is not None:
            mu %= self.order
        return self._arrow_ids[(a, mu)]

    def representative_arrows(self) -> list[ArrowClass]:
        return [c for c in self.arrow_classes.values() if c.kind is not None]


def _orbit_reps(w: Potential, action: CyclicAction) -> list[tuple[str, ...]]:
    """One cycle per star-orbit of the cycles of W, in a fixed order."""
    seen = set()
    out = []
    for word in w:
        if word in seen:
            continue
        orbit = {least_rotation(action.star_word(word, r)) for r in range(action.order)}
        seen |= orbit
        out.append(min(orbit))
    return out


def build_skew_qp(w: Potential, action: CyclicAction, reps: Representatives | None = None,
                  rng: random.Random | None = None) -> SkewQP:
    report = validate_action(w, action)
    if not report.ok:
        raise AssumptionError("action fails the standing assumptions:\n" + str(report), report=report)
    q = w.quiver
    n = action.order
    if reps is None:
        reps = choose_representatives(action)

    vertex_origin: dict[str, tuple[str, int | None]] = {}
    for eps in reps.primary:
        vertex_origin[vertex_label(eps)] = (eps, None)
    for eps in reps.fixed:
        for mu in range(n):
            vertex_origin[vertex_label(eps, mu)] = (eps, mu)
    vid = {o: k for k, o in vertex_origin.items()}

    arrow_classes = {a: classify_arrow(action, reps, a) for a in q.arrows}
    arrows = []
    arrow_origin: dict[str, tuple[str, int | None]] = {}
    for a, c in arrow_classes.items():
        if c.kind is None:
            continue
        s, t = q.src(a), q.tgt(a)
        if c.kind == 1:
            src = vid[(reps.locate(s)[0], None)]
            new = [(arrow_label(a), src, vid[(t, None)], None)]
        elif c.kind == 2:
            new = [(arrow_label(a, mu), vid[(s, None)], vid[(t, mu)], mu) for mu in range(n)]
        elif c.kind == 3:
            new = [(arrow_label(a, mu), vid[(s, mu)], vid[(t, None)], mu) for mu in range(n)]
        else:
            new = [(arrow_label(a, mu), vid[(s, mu)], vid[(t, (mu - c.b) % n)], mu) for mu in range(n)]
        for label, src, tgt, mu in new:
            arrows.append(Arrow(label, src, tgt))
            arrow_origin[label] = (a, mu)
    qg = Quiver(list(vertex_origin), arrows, connected=False)
    aid = {o: k for k, o in arrow_origin.items()}

    cycle_classes = []
    terms = []
    for word in _orbit_reps(w, action):
        cc = classify_cycle(action, reps, word, rng)
        cycle_classes.append(cc)
        a_hat = w.coefficient(cc.hat)
        al = cc.reps
        l = len(al)
        if cc.kind == "i":
            terms.append(([aid[(x, None)] for x in al], a_hat * cc.orbit_size / n))
        elif cc.kind == "ii":
            for mu in range(n):
                cyc = [aid[(al[0], mu)], aid[(al[1], mu)]] + [aid[(x, None)] for x in al[2:]]
                terms.append((cyc, a_hat * zeta_pow(n, -cc.p * mu)))
        elif cc.kind == "iii":
            for mu in range(n):
                cyc = [aid[(al[0], mu)]]
                cyc += [aid[(al[i], (mu - cc.suffix_b(i + 2)) % n)] for i in range(1, l)]
                terms.append((cyc, a_hat))
        else:
            for mu in range(n):
                cyc = [aid[(al[i], (mu - cc.suffix_b(i + 2)) % n)] for i in range(l)]
                terms.append((cyc, a_hat))
    wg = Potential(qg, terms, n)
    return SkewQP(qg, wg, reps, w, action, arrow_classes, cycle_classes, vertex_origin, arrow_origin)


def dual_action(skew: SkewQP) -> CyclicAction:
    """The character chi generating the dual group, acting on Q_G."""
    n = skew.order
    vmap = {}
    for label, (v, mu) in skew.vertex_origin.items():
        vmap[label] = label if mu is None else skew.vertex(v, mu + 1)
    amap = {}
    for label, (a, mu) in skew.arrow_origin.items():
        if mu is None:
            amap[label] = (label, skew.arrow_classes[a].t)
        else:
            amap[label] = (skew.arrow(a, mu + 1), 0)
    return CyclicAction(skew.quiver, n, vmap, amap)


def dual_representatives(skew: SkewQP, chi: CyclicAction) -> Representatives:
    """Representatives for the second construction.

    Free orbits are represented by eta(e,0) for e fixed, and the fixed
    points are the eta(e) for e in a free orbit.  For n = 1 every vertex is
    fixed and the split degenerates.
    """
    if skew.order == 1:
        return choose_representatives(chi)
    override = [skew.vertex(e, 0) for e in skew.reps.fixed] + [skew.vertex(e) for e in skew.reps.primary]
    return choose_representatives(chi, override)


@dataclass
class RoundTrip:
    skew: SkewQP
    dual: CyclicAction
    double: SkewQP
    vertex_map: dict[str, str]
    arrow_map: dict[str, str]
    is_isomorphism: bool
    image: Potential | None
    match: bool


def _phi(skew: SkewQP, double: SkewQP) -> tuple[dict[str, str], dict[str, str]]:
    """The explicit identification of the double skew quiver with Q.

    These rules rely on the second construction using dual_representatives;
    a different choice would need a different map.
    """
    action = skew.action
    n = skew.order
    vmap, amap = {}, {}
    if n == 1:
        for label, (v, _) in double.vertex_origin.items():
            vmap[label] = skew.vertex_origin[v][0]
        for label, (a, _) in double.arrow_origin.items():
            amap[label] = skew.arrow_origin[a][0]
        return vmap, amap
    for e in skew.reps.fixed:
        vmap[double.vertex(skew.vertex(e, 0))] = e
    for e in skew.reps.primary:
        for nu in range(n):
            vmap[double.vertex(skew.vertex(e), nu)] = action.vertex(e, nu)
    for c in skew.representative_arrows():
        a = c.arrow
        if c.kind == 4:
            amap[double.arrow(skew.arrow(a, c.b))] = a
        elif c.kind in (2, 3):
            beta = skew.arrow(a, 0)
            for nu in range(n):
                amap[double.arrow(beta, nu)] = action.star(a, nu)
        else:
            beta = skew.arrow(a)
            for nu in range(n):
                amap[double.arrow(beta, nu)] = action.star(a, nu - c.t)
    return vmap, amap


def roundtrip(w: Potential, action: CyclicAction, reps: Representatives | None = None) -> RoundTrip:
    skew = build_skew_qp(w, action, reps)
    chi = dual_action(skew)
    double = build_skew_qp(skew.potential, chi, dual_representatives(skew, chi))
    vmap, amap = _phi(skew, double)
    q, dq = w.quiver, double.quiver
    iso = (set(vmap) == set(dq.vertices) and sorted(vmap.values()) == sorted(q.vertices)
           and set(amap) == set(dq.arrows) and sorted(amap.values()) == sorted(q.arrows)
           and all(q.src(amap[b]) == vmap[dq.src(b)] and q.tgt(amap[b]) == vmap[dq.tgt(b)] for b in dq.arrows))
    image = double.potential.relabel(amap, q) if iso else None
    return RoundTrip(skew, chi, double, vmap, amap, iso, image, iso and image == w)
