"""Cuts of a potential, G-invariant cuts and induced cuts on the skew QP.

A cut is a set C of arrows such that every cycle of W contains exactly
one occurrence of an arrow of C, counting repeated arrows each time.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .action import CyclicAction
from .qp import PathCombination, Potential, Quiver, cyclic_derivative


class CutError(ValueError):
    pass


def degree(word, cut) -> int:
    return sum(a in cut for a in word)


def is_cut(w: Potential, cut: Iterable[str]) -> bool:
    cut = set(cut)
    return all(degree(word, cut) == 1 for word in w)


def is_G_invariant(cut: Iterable[str], action: CyclicAction) -> bool:
    cut = set(cut)
    return all(action.star(a) in cut for a in cut)


def _search(w: Potential, action: CyclicAction | None, forced: str | None = None) -> Iterator[frozenset]:
    """Exactly-one constraint per cycle, solved by backtracking.

    Variables are arrows, or star-orbits of arrows when an action is
    given.  Arrows that occur in no cycle are left out of every cut.
    """
    if action is None:
        unit = {a: a for a in w.arrows_used()}
    else:
        unit = {}
        for a in sorted(w.arrows_used()):
            if a not in unit:
                for b in action.arrow_orbit(a):
                    unit[b] = a
    variables = sorted(set(unit.values()))
    # per cycle: variable -> multiplicity
    cycles = []
    for word in w:
        mult: dict[str, int] = {}
        for a in word:
            mult[unit[a]] = mult.get(unit[a], 0) + 1
        cycles.append(mult)
    touching: dict[str, list[int]] = {v: [] for v in variables}
    for k, mult in enumerate(cycles):
        for v in mult:
            touching[v].append(k)

    value: dict[str, int] = {}
    total = [0] * len(cycles)

    def assign(v, x, trail):
        value[v] = x
        trail.append(v)
        ok = True
        if x:
            for k in touching[v]:
                total[k] += cycles[k][v]
                ok = ok and total[k] <= 1
        return ok

    def undo(trail):
        while trail:
            v = trail.pop()
            if value.pop(v):
                for k in touching[v]:
                    total[k] -= cycles[k][v]

    def options(k):
        return [v for v, m in cycles[k].items() if v not in value and m == 1]

    def rec():
        # every unsatisfied cycle needs one of its free multiplicity-1 variables
        best, best_opts = None, None
        for k, mult in enumerate(cycles):
            if total[k] == 1:
                continue
            opts = options(k)
            if not opts:
                return
            if best is None or len(opts) < len(best_opts):
                best, best_opts = k, opts
                if len(opts) == 1:
                    break
        if best is None:
            yield frozenset(b for b, v in unit.items() if value.get(v))
            return
        for v in sorted(best_opts):
            trail = []
            ok = True
            for u in cycles[best]:
                if u != v and u not in value:
                    ok = assign(u, 0, trail) and ok
            ok = assign(v, 1, trail) and ok
            if ok:
                yield from rec()
            undo(trail)

    if forced is not None:
        v = unit.get(forced)
        if v is None:
            return
        trail = []
        if assign(v, 1, trail):
            yield from rec()
        undo(trail)
    else:
        yield from rec()


def enumerate_cuts(w: Potential, action: CyclicAction | None = None) -> list[frozenset]:
    """All cuts made of arrows that occur in W; G-invariant ones when an action is given."""
    return list(_search(w, action))


def find_cut_containing(w: Potential, arrow: str, action: CyclicAction | None = None) -> frozenset | None:
    return next(_search(w, action, forced=arrow), None)


def has_enough_cuts(w: Potential, action: CyclicAction | None = None) -> bool:
    """Every arrow of Q lies in some (G-invariant) cut.

    An arrow in no cycle can be added to any cut, so it is covered as soon
    as some cut exists.
    """
    used = w.arrows_used()
    any_cut = next(_search(w, action), None) is not None
    for a in w.quiver.arrows:
        if a not in used:
            if not any_cut:
                return False
        elif find_cut_containing(w, a, action) is None:
            return False
    return True


def induce_cut(cut: Iterable[str], skew) -> frozenset:
    """The cut on (Q_G, W_G) coming from a G-invariant cut of (Q, W)."""
    cut = frozenset(cut)
    if not is_cut(skew.source, cut):
        raise CutError("input is not a cut of W")
    if not is_G_invariant(cut, skew.action):
        raise CutError("input cut is not invariant under the group")
    out = set()
    for label, (a, _) in skew.arrow_origin.items():
        if a in cut:
            out.add(label)
    out = frozenset(out)
    if not is_cut(skew.potential, out):
        raise AssertionError("induced set is not a cut of W_G")
    return out


@dataclass
class TruncatedPresentation:
    quiver: Quiver
    relations: list[tuple[str, PathCombination]]


def truncated_presentation(w: Potential, cut: Iterable[str]) -> TruncatedPresentation:
    """Degree-zero part: arrows outside C, relations d_a W for a in C."""
    cut = frozenset(cut)
    if not is_cut(w, cut):
        raise CutError("not a cut of W")
    q = w.quiver
    qc = Quiver(q.vertices, [q.arrows[a] for a in q.arrows if a not in cut], connected=False)
    rels = []
    for a in q.arrows:
        if a not in cut:
            continue
        d = cyclic_derivative(w, a)
        if any(x in cut for p in d.terms for x in p.arrows):
            raise AssertionError(f"relation for {a!r} has positive degree")
        rels.append((a, d))
    return TruncatedPresentation(qc, rels)
