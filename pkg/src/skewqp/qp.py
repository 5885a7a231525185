"""Quivers, paths, potentials and cyclic derivatives.

Paths compose right to left: the word (a1, a2, ..., al) means a1 after
a2 after ... after al, so it starts at src(al) and ends at tgt(a1).
Cycles are stored as their lexicographically least rotation.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .cyclo import Cyclotomic, as_cyclotomic


class QuiverError(ValueError):
    """Malformed quiver, path or potential."""


@dataclass(frozen=True)
class Arrow:
    id: str
    src: str
    tgt: str


@dataclass(frozen=True, order=True)
class Path:
    """A path in a quiver; an empty arrow tuple is the trivial path at `source`."""

    arrows: tuple[str, ...]
    source: str
    target: str

    def __len__(self):
        return len(self.arrows)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    @property
    def is_closed(self) -> bool:
        return self.source == self.target

    def __str__(self):
        if not self.arrows:
            return f"e[{self.source}]"
        return "*".join(self.arrows)


class Quiver:
    """A finite quiver with string vertex and arrow ids."""

    def __init__(self, vertices: Iterable[str], arrows: Iterable[Arrow | tuple], *, connected: bool = True):
        self.vertices: tuple[str, ...] = tuple(vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise QuiverError("duplicate vertex id")
        vset = set(self.vertices)
        self.arrows: dict[str, Arrow] = {}
        for a in arrows:
            if not isinstance(a, Arrow):
                a = Arrow(*a)
            if a.id in self.arrows:
                raise QuiverError(f"duplicate arrow id {a.id!r}")
            if a.src not in vset or a.tgt not in vset:
                raise QuiverError(f"arrow {a.id!r} has an endpoint outside the vertex set")
            self.arrows[a.id] = a
        self._out: dict[str, list[str]] = {v: [] for v in self.vertices}
        self._in: dict[str, list[str]] = {v: [] for v in self.vertices}
        for a in self.arrows.values():
            self._out[a.src].append(a.id)
            self._in[a.tgt].append(a.id)
        if connected and not self.is_connected():
            raise QuiverError("underlying graph of the quiver is not connected")

    def __repr__(self):
        return f"Quiver({len(self.vertices)} vertices, {len(self.arrows)} arrows)"

    def __eq__(self, other):
        return (isinstance(other, Quiver) and set(self.vertices) == set(other.vertices)
                and self.arrows == other.arrows)

    def __hash__(self):
        return hash((frozenset(self.vertices), frozenset(self.arrows.values())))

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        seen = {self.vertices[0]}
        todo = deque(seen)
        while todo:
            v = todo.popleft()
            for a in self._out[v]:
                w = self.arrows[a].tgt
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
            for a in self._in[v]:
                w = self.arrows[a].src
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
        return len(seen) == len(self.vertices)

    def is_acyclic(self) -> bool:
        indeg = {v: len(self._in[v]) for v in self.vertices}
        todo = [v for v, d in indeg.items() if d == 0]
        done = 0
        while todo:
            v = todo.pop()
            done += 1
            for a in self._out[v]:
                w = self.arrows[a].tgt
                indeg[w] -= 1
                if indeg[w] == 0:
                    todo.append(w)
        return done == len(self.vertices)

    def arrow(self, a: str) -> Arrow:
        try:
            return self.arrows[a]
        except KeyError:
            raise QuiverError(f"unknown arrow {a!r}") from None

    def src(self, a: str) -> str:
        return self.arrow(a).src

    def tgt(self, a: str) -> str:
        return self.arrow(a).tgt

    def arrows_from(self, v: str) -> list[str]:
        return list(self._out[v])

    def arrows_to(self, v: str) -> list[str]:
        return list(self._in[v])

    def trivial(self, v: str) -> Path:
        if v not in self._out:
            raise QuiverError(f"unknown vertex {v!r}")
        return Path((), v, v)

    def path(self, arrows: Sequence[str]) -> Path:
        """The path a1 a2 ... al, checking src(a_i) = tgt(a_{i+1})."""
        arrows = tuple(arrows)
        if not arrows:
            raise QuiverError("use trivial() for a path of length zero")
        for a, b in zip(arrows, arrows[1:]):
            if self.src(a) != self.tgt(b):
                raise QuiverError(f"arrows {a!r} and {b!r} are not composable")
        return Path(arrows, self.src(arrows[-1]), self.tgt(arrows[0]))

    def cycle_path(self, word: Sequence[str]) -> Path:
        p = self.path(word)
        if not p.is_closed:
            raise QuiverError(f"path {p} is not closed")
        return p


def concat(p: Path, q: Path) -> Path | None:
    """p after q, or None when tgt(q) != src(p)."""
    if p.source != q.target:
        return None
    if not q.arrows:
        return p
    if not p.arrows:
        return q
    return Path(p.arrows + q.arrows, q.source, p.target)


def least_rotation(word: Sequence[str]) -> tuple[str, ...]:
    word = tuple(word)
    if not word:
        return word
    return min(word[i:] + word[:i] for i in range(len(word)))


def canonical_cycle(quiver: Quiver, cycle: Path | Sequence[str]) -> tuple[str, ...]:
    """Least rotation of a closed path; reversal is not an equivalence."""
    word = cycle.arrows if isinstance(cycle, Path) else tuple(cycle)
    quiver.cycle_path(word)
    return least_rotation(word)


class Potential:
    """A finite sum of cycles of length >= 3 with coefficients in Q(zeta_n).

    Keys are canonical cycles; zero coefficients are dropped.
    """

    def __init__(self, quiver: Quiver, terms: Mapping[Sequence[str], object] | Iterable = (), order: int = 1):
        self.quiver = quiver
        self.order = order
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple[str, ...], Cyclotomic] = {}
        for word, coeff in items:
            word = tuple(word)
            if len(word) < 3:
                raise QuiverError(f"cycle {word} has length below 3")
            key = canonical_cycle(quiver, word)
            c = as_cyclotomic(order, coeff)
            acc[key] = acc[key] + c if key in acc else c
        self.terms: dict[tuple[str, ...], Cyclotomic] = {k: acc[k] for k in sorted(acc) if acc[k]}

    @classmethod
    def _trusted(cls, quiver, terms, order):
        obj = cls.__new__(cls)
        obj.quiver = quiver
        obj.order = order
        obj.terms = {k: terms[k] for k in sorted(terms) if terms[k]}
        return obj

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def items(self):
        return self.terms.items()

    def coefficient(self, cycle: Sequence[str]) -> Cyclotomic:
        key = least_rotation(cycle)
        return self.terms.get(key, Cyclotomic.zero(self.order))

    def __eq__(self, other):
        return potential_equal(self, other)

    __hash__ = None

    def __add__(self, other: "Potential") -> "Potential":
        if other.order != self.order:
            raise QuiverError("potentials over different fields")
        acc = dict(self.terms)
        for k, c in other.terms.items():
            acc[k] = acc[k] + c if k in acc else c
        return Potential._trusted(self.quiver, acc, self.order)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "Potential":
        c = as_cyclotomic(self.order, c)
        return Potential._trusted(self.quiver, {k: v * c for k, v in self.terms.items()}, self.order)

    def with_order(self, order: int) -> "Potential":
        """Same potential read over Q(zeta_order); needs rational coefficients."""
        return Potential._trusted(self.quiver, {k: v.with_order(order) for k, v in self.terms.items()}, order)

    def relabel(self, arrow_map: Mapping[str, str], quiver: Quiver) -> "Potential":
        """Image under an arrow relabelling into another quiver."""
        return Potential(quiver, [([arrow_map[a] for a in k], v) for k, v in self.terms.items()], self.order)

    def arrows_used(self) -> set[str]:
        return {a for k in self.terms for a in k}

    def __repr__(self):
        return f"Potential({len(self.terms)} cycles over Q(zeta_{self.order}))"

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{'*'.join(k)}" for k, c in self.terms.items())


def potential_equal(w1: Potential, w2: Potential) -> bool:
    if not isinstance(w1, Potential) or not isinstance(w2, Potential):
        return NotImplemented
    return w1.order == w2.order and w1.terms == w2.terms


class PathCombination:
    """A linear combination of paths with coefficients in Q(zeta_n)."""

    def __init__(self, order: int, terms: Mapping[Path, object] | Iterable = ()):
        self.order = order
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Path, Cyclotomic] = {}
        for p, c in items:
            c = as_cyclotomic(order, c)
            acc[p] = acc[p] + c if p in acc else c
        self.terms = {p: acc[p] for p in sorted(acc) if acc[p]}

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def items(self):
        return self.terms.items()

    def __eq__(self, other):
        if not isinstance(other, PathCombination):
            return NotImplemented
        return self.order == other.order and self.terms == other.terms

    __hash__ = None

    def __add__(self, other):
        return PathCombination(self.order, list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "PathCombination":
        c = as_cyclotomic(self.order, c)
        return PathCombination(self.order, {p: v * c for p, v in self.terms.items()})

    def endpoints(self) -> set[tuple[str, str]]:
        return {(p.source, p.target) for p in self.terms}

    def is_relation(self) -> bool:
        """All paths share a source and a target."""
        return len(self.endpoints()) <= 1

    def __repr__(self):
        return f"PathCombination({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{p}" for p, c in self.terms.items())


def cyclic_derivative(w: Potential, arrow: str) -> PathCombination:
    """Sum over occurrences of `arrow`: rotate it to the front and delete it.

    The result is a relation from tgt(arrow) to src(arrow).
    """
    q = w.quiver
    q.arrow(arrow)
    acc: dict[Path, Cyclotomic] = {}
    for word, c in w.terms.items():
        for m, a in enumerate(word):
            if a != arrow:
                continue
            rest = word[m + 1:] + word[:m]
            p = Path(rest, q.src(rest[-1]), q.tgt(rest[0]))
            acc[p] = acc[p] + c if p in acc else c
    return PathCombination(w.order, acc)


def scaled_derivative(w: Potential, arrow: str, scalar) -> PathCombination:
    """scalar^-1 times the cyclic derivative."""
    lam = as_cyclotomic(w.order, scalar)
    return cyclic_derivative(w, arrow).scale(lam.inv())


def jacobian_relations(w: Potential) -> list[tuple[str, PathCombination]]:
    """(arrow, derivative) for every arrow whose derivative is nonzero."""
    out = []
    for a in w.quiver.arrows:
        d = cyclic_derivative(w, a)
        if d:
            out.append((a, d))
    return out
