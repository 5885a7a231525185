"""Cyclic group actions on quivers with potential.

A generator g of a cyclic group of order n permutes vertices and sends
each arrow to zeta^b times an arrow.  This module checks the standing
assumptions on such an action, picks orbit representatives, and sorts
arrows into the four types and cycles into the four kinds i-iv.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .cyclo import zeta_pow
from .qp import Path, Potential, Quiver, least_rotation


class ActionError(ValueError):
    """The maps do not describe an incidence-preserving symmetry of the quiver."""


class AssumptionError(ValueError):
    """A standing assumption fails; carries the report or a single witness."""

    def __init__(self, message: str, report: "AssumptionReport | None" = None, witness=None):
        super().__init__(message)
        self.report = report
        self.witness = witness


@dataclass(frozen=True)
class ArrowImage:
    arrow: str
    zeta_exp: int = 0


class CyclicAction:
    """Generator of a cyclic group of order n acting on a quiver.

    The constructor only checks that the maps are bijections respecting
    incidence.  Whether g^n is the identity (with trivial scalar) is part
    of the assumption report, so broken actions can still be diagnosed.
    """

    def __init__(self, quiver: Quiver, order: int, vertex_map: Mapping[str, str],
                 arrow_map: Mapping[str, ArrowImage | tuple | str]):
        if not isinstance(order, int) or order < 1:
            raise ActionError(f"order must be a positive integer, got {order!r}")
        self.quiver = quiver
        self.order = order
        self.vertex_map: dict[str, str] = {}
        for v in quiver.vertices:
            if v not in vertex_map:
                raise ActionError(f"vertex map misses {v!r}")
            w = vertex_map[v]
            if w not in quiver._out:
                raise ActionError(f"vertex {v!r} maps to unknown vertex {w!r}")
            self.vertex_map[v] = w
        extra = set(vertex_map) - set(quiver.vertices)
        if extra:
            raise ActionError(f"vertex map mentions unknown vertices {sorted(extra)}")
        if len(set(self.vertex_map.values())) != len(self.vertex_map):
            raise ActionError("vertex map is not a bijection")

        self.arrow_map: dict[str, ArrowImage] = {}
        for a in quiver.arrows:
            if a not in arrow_map:
                raise ActionError(f"arrow map misses {a!r}")
            img = arrow_map[a]
            if isinstance(img, str):
                img = ArrowImage(img, 0)
            elif not isinstance(img, ArrowImage):
                img = ArrowImage(*img)
            if img.arrow not in quiver.arrows:
                raise ActionError(f"arrow {a!r} maps to unknown arrow {img.arrow!r}")
            if not isinstance(img.zeta_exp, int):
                raise ActionError(f"zeta exponent of {a!r} must be an integer")
            img = ArrowImage(img.arrow, img.zeta_exp % order)
            src, tgt = quiver.src(a), quiver.tgt(a)
            if quiver.src(img.arrow) != self.vertex_map[src] or quiver.tgt(img.arrow) != self.vertex_map[tgt]:
                raise ActionError(f"image of arrow {a!r} does not respect incidence")
            self.arrow_map[a] = img
        extra = set(arrow_map) - set(quiver.arrows)
        if extra:
            raise ActionError(f"arrow map mentions unknown arrows {sorted(extra)}")
        if len({img.arrow for img in self.arrow_map.values()}) != len(self.arrow_map):
            raise ActionError("arrow map is not a bijection")

        # powers g^k for 0 <= k <= n
        self._vpow = [{v: v for v in quiver.vertices}]
        self._apow = [{a: (a, 0) for a in quiver.arrows}]
        for _ in range(order):
            prev_v, prev_a = self._vpow[-1], self._apow[-1]
            self._vpow.append({v: self.vertex_map[w] for v, w in prev_v.items()})
            nxt = {}
            for a, (b, e) in prev_a.items():
                img = self.arrow_map[b]
                nxt[a] = (img.arrow, (e + img.zeta_exp) % order)
            self._apow.append(nxt)

    @classmethod
    def identity(cls, quiver: Quiver) -> "CyclicAction":
        return cls(quiver, 1, {v: v for v in quiver.vertices}, {a: ArrowImage(a, 0) for a in quiver.arrows})

    def __repr__(self):
        return f"CyclicAction(order={self.order}, {self.quiver!r})"

    def vertex(self, v: str, k: int = 1) -> str:
        return self._vpow[k % self.order][v]

    def arrow(self, a: str, k: int = 1) -> tuple[str, int]:
        """g^k(a) as (arrow, exponent of zeta)."""
        return self._apow[k % self.order][a]

    def star(self, a: str, k: int = 1) -> str:
        return self._apow[k % self.order][a][0]

    def scalar(self, a: str) -> int:
        """b(a): the exponent in g(a) = zeta^b a'."""
        return self.arrow_map[a].zeta_exp

    def is_fixed(self, v: str) -> bool:
        return self.vertex_map[v] == v

    def fixed_vertices(self) -> list[str]:
        return [v for v in self.quiver.vertices if self.is_fixed(v)]

    def vertex_orbit(self, v: str) -> list[str]:
        out = [v]
        w = self.vertex_map[v]
        while w != v:
            out.append(w)
            w = self.vertex_map[w]
        return out

    def arrow_orbit(self, a: str) -> list[str]:
        """Orbit under the star action, starting at a."""
        out = [a]
        b = self.arrow_map[a].arrow
        while b != a:
            out.append(b)
            b = self.arrow_map[b].arrow
        return out

    def word(self, word: Sequence[str], k: int = 1) -> tuple[tuple[str, ...], int]:
        """g^k applied arrow by arrow: (star image, accumulated exponent)."""
        table = self._apow[k % self.order]
        out, e = [], 0
        for a in word:
            b, x = table[a]
            out.append(b)
            e += x
        return tuple(out), e % self.order

    def star_word(self, word: Sequence[str], k: int = 1) -> tuple[str, ...]:
        return self.word(word, k)[0]

    def path(self, p: Path, k: int = 1) -> tuple[Path, int]:
        if not p.arrows:
            w = self.vertex(p.source, k)
            return Path((), w, w), 0
        arrows, e = self.word(p.arrows, k)
        return Path(arrows, self.vertex(p.source, k), self.vertex(p.target, k)), e

    def potential(self, w: Potential, k: int = 1) -> Potential:
        """g^k . W with scalars."""
        n = self.order
        terms = []
        for word, c in w.items():
            img, e = self.word(word, k)
            terms.append((img, c * zeta_pow(n, e)))
        return Potential(w.quiver, terms, w.order)

    def order_defects(self) -> list[str]:
        """Vertices and arrows not returned to themselves (with scalar 1) by g^n."""
        bad = [v for v in self.quiver.vertices if self._vpow[self.order][v] != v]
        bad += [a for a in self.quiver.arrows if self._apow[self.order][a] != (a, 0)]
        return bad


@dataclass(frozen=True)
class Representatives:
    """One vertex per orbit, split into free orbits (primary) and fixed points."""

    primary: tuple[str, ...]
    fixed: tuple[str, ...]
    index: Mapping[str, tuple[str, int]] = field(repr=False, compare=False)

    @property
    def all(self) -> tuple[str, ...]:
        return self.primary + self.fixed

    def locate(self, v: str) -> tuple[str, int]:
        """(epsilon, k) with v = g^k(epsilon)."""
        return self.index[v]


def choose_representatives(action: CyclicAction, override: Iterable[str] | None = None) -> Representatives:
    n = action.order
    orbits = []
    seen = set()
    for v in action.quiver.vertices:
        if v in seen:
            continue
        orb = action.vertex_orbit(v)
        seen.update(orb)
        if len(orb) not in (1, n):
            raise AssumptionError(f"vertex {v!r} has an orbit of size {len(orb)}, not 1 or {n}", witness=v)
        orbits.append(orb)

    if override is None:
        chosen = {min(orb) for orb in orbits}
    else:
        chosen = set(override)
        for orb in orbits:
            hits = chosen & set(orb)
            if len(hits) != 1:
                raise ValueError(f"override picks {len(hits)} vertices from the orbit {orb}")
        if chosen - seen:
            raise ValueError(f"override mentions unknown vertices {sorted(chosen - seen)}")

    primary, fixed, index = [], [], {}
    for orb in orbits:
        (eps,) = set(orb) & chosen
        if len(orb) == 1:
            fixed.append(eps)
            index[eps] = (eps, 0)
        else:
            primary.append(eps)
            for k in range(n):
                index[action.vertex(eps, k)] = (eps, k)
    return Representatives(tuple(sorted(primary)), tuple(sorted(fixed)), index)


@dataclass(frozen=True)
class AssumptionCheck:
    name: str
    passed: bool
    witness: object = None
    detail: str = ""


@dataclass(frozen=True)
class AssumptionReport:
    checks: tuple[AssumptionCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[AssumptionCheck]:
        return [c for c in self.checks if not c.passed]

    def __getitem__(self, name: str) -> AssumptionCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> dict:
        out = {}
        for c in self.checks:
            entry = {"passed": c.passed, "detail": c.detail}
            if not c.passed:
                entry["witness"] = list(c.witness) if isinstance(c.witness, tuple) else c.witness
            out[c.name] = entry
        return out

    def __str__(self):
        lines = []
        for c in self.checks:
            line = f"{c.name}: {'PASS' if c.passed else 'FAIL'}"
            if not c.passed:
                line += f" (witness {c.witness!r}: {c.detail})"
            lines.append(line)
        return "\n".join(lines)


def cycle_kind(action: CyclicAction, word: Sequence[str]) -> str | None:
    """Kind i-iv by counting fixed sources along the cycle, with repeats."""
    q = action.quiver
    nfixed = sum(action.is_fixed(q.src(a)) for a in word)
    if nfixed == len(word):
        return "iv"
    if nfixed == 0:
        return "i"
    if nfixed == 1:
        return "ii"
    if nfixed == len(word) - 1:
        return "iii"
    return None


def validate_action(w: Potential, action: CyclicAction) -> AssumptionReport:
    q = w.quiver
    if action.quiver != q:
        raise ActionError("action and potential live on different quivers")
    n = action.order
    checks = [AssumptionCheck("A1", True, detail=f"scalars in Q(zeta_{n}), characteristic zero")]

    defects = action.order_defects()
    if w.order != n:
        checks.append(AssumptionCheck("A2", False, w.order, f"potential is over Q(zeta_{w.order}), action has order {n}"))
    elif defects:
        checks.append(AssumptionCheck("A2", False, defects[0], f"g^{n} does not return it to itself with scalar 1"))
    else:
        checks.append(AssumptionCheck("A2", True))

    bad = next((v for v in q.vertices if len(action.vertex_orbit(v)) not in (1, n)), None)
    if bad is None:
        checks.append(AssumptionCheck("A3", True))
    else:
        checks.append(AssumptionCheck("A3", False, bad, f"orbit of size {len(action.vertex_orbit(bad))}"))

    if w.order == n:
        gw = action.potential(w)
        keys = sorted(set(gw.terms) | set(w.terms))
        bad = next((k for k in keys if gw.coefficient(k) != w.coefficient(k)), None)
    else:
        bad = None
    if bad is None:
        checks.append(AssumptionCheck("A4", True))
    else:
        checks.append(AssumptionCheck("A4", False, bad,
                                      f"coefficient {w.coefficient(bad)} in W but {gw.coefficient(bad)} in gW"))

    bad = next((a for a in q.arrows if action.is_fixed(q.src(a)) and action.is_fixed(q.tgt(a))
                and action.star(a) != a), None)
    if bad is None:
        checks.append(AssumptionCheck("A5", True))
    else:
        checks.append(AssumptionCheck("A5", False, bad, f"arrow between fixed vertices moved to {action.star(bad)!r}"))

    bad = next((a for a in q.arrows if not (action.is_fixed(q.src(a)) and action.is_fixed(q.tgt(a)))
                and action.scalar(a) != 0), None)
    if bad is None:
        checks.append(AssumptionCheck("A6", True))
    else:
        checks.append(AssumptionCheck("A6", False, bad, f"non-trivial scalar zeta^{action.scalar(bad)}"))

    bad = next((k for k in w if cycle_kind(action, k) is None), None)
    if bad is None:
        checks.append(AssumptionCheck("A7", True))
    else:
        checks.append(AssumptionCheck("A7", False, bad, "cycle is of none of the kinds i-iv"))
    return AssumptionReport(tuple(checks))


@dataclass(frozen=True)
class ArrowClass:
    """Type data for an arrow.

    `family` is the type (1-4) of the star-orbit; `kind` equals it when the
    arrow is the orbit's representative and is None otherwise.  The arrow
    equals g*^power(rep).  `t` is defined on type (1) representatives and
    `b` is the zeta exponent of g on the arrow.
    """

    arrow: str
    family: int
    kind: int | None
    rep: str
    power: int
    t: int
    b: int


def _family(action: CyclicAction, a: str) -> int:
    q = action.quiver
    sf, tf = action.is_fixed(q.src(a)), action.is_fixed(q.tgt(a))
    if not sf and not tf:
        return 1
    if not sf:
        return 2
    if not tf:
        return 3
    return 4


def classify_arrow(action: CyclicAction, reps: Representatives, a: str) -> ArrowClass:
    q = action.quiver
    fam = _family(action, a)
    primary = set(reps.primary)
    rep, power = a, 0
    if fam != 4:
        for k in range(action.order):
            b = action.star(a, k)
            end = q.src(b) if fam == 2 else q.tgt(b)
            if end in primary:
                rep, power = b, (-k) % action.order
                break
        else:
            raise AssumptionError(f"no representative in the orbit of arrow {a!r}", witness=a)
    t = reps.locate(q.src(rep))[1] if fam == 1 else 0
    return ArrowClass(a, fam, fam if rep == a else None, rep, power, t, action.scalar(a))


@dataclass(frozen=True)
class CycleClass:
    """Classification of one potential cycle.

    `hat` is the chosen word for the orbit representative (a rotation of an
    orbit element).  `reps` lists the representative arrows alpha_i read
    off hat, `t` their t-values (for kind ii the second entry is p), and
    `b` the zeta exponents of g on each arrow of hat.
    """

    cycle: tuple[str, ...]
    kind: str
    hat: tuple[str, ...]
    reps: tuple[str, ...]
    t: tuple[int, ...]
    b: tuple[int, ...]
    p: int | None
    q: int | None
    orbit_size: int

    def suffix_b(self, i: int) -> int:
        """b_i = b(alpha_i) + ... + b(alpha_l), 1-based; b_{l+1} = 0."""
        return sum(self.b[i - 1:])


def _kind_i_candidates(action, reps, word):
    q = action.quiver
    primary = set(reps.primary)
    out = set()
    for r in range(action.order):
        img = action.star_word(word, r)
        for j in range(len(img)):
            rot = img[j:] + img[:j]
            if q.tgt(rot[0]) in primary:
                out.add(rot)
    return sorted(out)


def _rotate_to(word, i):
    return word[i:] + word[:i]


def classify_cycle(action: CyclicAction, reps: Representatives, cycle: Sequence[str],
                   rng: random.Random | None = None) -> CycleClass:
    """Kind, chosen representative and invariants of a potential cycle.

    For kind i the representative is a genuine choice; the least candidate
    is used unless `rng` is given, in which case one is drawn at random.
    """
    q = action.quiver
    n = action.order
    word = tuple(cycle)
    kind = cycle_kind(action, word)
    if kind is None:
        raise AssumptionError(f"cycle {word} is of none of the kinds i-iv", witness=least_rotation(word))
    orbit = {least_rotation(action.star_word(word, r)) for r in range(n)}
    cls = lambda a: classify_arrow(action, reps, a)

    if kind == "iv":
        hat = least_rotation(word)
        return CycleClass(least_rotation(word), kind, hat, hat, (0,) * len(hat),
                          tuple(action.scalar(a) for a in hat), None, None, len(orbit))

    if kind == "i":
        cands = _kind_i_candidates(action, reps, word)
        hat = rng.choice(cands) if rng is not None else cands[0]
    elif kind == "ii":
        i0 = next(i for i, a in enumerate(word) if action.is_fixed(q.src(a)))
        rot = _rotate_to(word, i0)
        r = -reps.locate(q.tgt(rot[0]))[1]
        hat = action.star_word(rot, r)
    else:
        i0 = next(i for i, a in enumerate(word) if not action.is_fixed(q.src(a)))
        rot = _rotate_to(word, i0)
        r = -reps.locate(q.src(rot[0]))[1]
        hat = action.star_word(rot, r)

    classes = [cls(a) for a in hat]
    alphas = tuple(c.rep for c in classes)
    b = tuple(action.scalar(a) for a in hat)

    if kind == "iii":
        assert classes[0].kind == 2 and classes[1].kind == 3, hat
        assert all(c.family == 4 for c in classes[2:]), hat
        return CycleClass(least_rotation(word), kind, hat, alphas, (0,) * len(hat), b,
                          None, sum(b[2:]) % n, len(orbit))

    # kinds i and ii: hat[i] = g*^(t_1 + ... + t_i)(alpha_{i+1})
    ts = []
    for i, c in enumerate(classes):
        if kind == "ii" and i == 0:
            assert c.kind == 3, hat
            ts.append(0)
        elif kind == "ii" and i == 1:
            assert c.family == 2, hat
            ts.append(c.power)
        else:
            assert c.family == 1, hat
            ts.append(classify_arrow(action, reps, c.rep).t)
        if i > 0:
            assert c.power == sum(ts[:i]) % n or (kind == "ii" and i == 1), (hat, i)
    p = ts[1] if kind == "ii" else None
    return CycleClass(least_rotation(word), kind, hat, alphas, tuple(ts), b, p, None, len(orbit))


def check_type3_coefficients(w: Potential, action: CyclicAction) -> bool:
    """a(g*c) = zeta^q(c) a(c) for every kind-iii cycle c of W."""
    n = action.order
    for word, c in w.items():
        if cycle_kind(action, word) != "iii":
            continue
        img, e = action.word(word)
        if w.coefficient(img) != zeta_pow(n, e) * c:
            return False
    return True
