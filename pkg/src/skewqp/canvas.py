"""The 2-dimensional cell complex of a QP and its integral homology.

0-cells are vertices, 1-cells arrows, and each cycle of W bounds a 2-cell.
H_1 = 0 is only a necessary condition for simple connectivity.
"""

from __future__ import annotations

from dataclasses import dataclass

from .qp import Potential


@dataclass
class CWComplex2:
    vertices: list[str]
    edges: list[tuple[str, str, str]]
    faces: list[tuple[str, ...]]

    @property
    def euler_characteristic(self) -> int:
        return len(self.vertices) - len(self.edges) + len(self.faces)

    def boundary_1(self) -> list[list[int]]:
        """Rows are vertices, columns arrows: tgt - src."""
        row = {v: i for i, v in enumerate(self.vertices)}
        m = [[0] * len(self.edges) for _ in self.vertices]
        for j, (_, s, t) in enumerate(self.edges):
            m[row[t]][j] += 1
            m[row[s]][j] -= 1
        return m

    def boundary_2(self) -> list[list[int]]:
        """Rows are arrows, columns faces: arrow multiplicities."""
        row = {a: i for i, (a, _, _) in enumerate(self.edges)}
        m = [[0] * len(self.faces) for _ in self.edges]
        for j, face in enumerate(self.faces):
            for a in face:
                m[row[a]][j] += 1
        return m


def build_canvas(w: Potential) -> CWComplex2:
    q = w.quiver
    edges = [(a.id, a.src, a.tgt) for a in q.arrows.values()]
    return CWComplex2(list(q.vertices), edges, list(w))


def smith_normal_form(matrix: list[list[int]]) -> list[int]:
    """Nonzero invariant factors d1 | d2 | ... of an integer matrix."""
    a = [list(map(int, r)) for r in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    diag = []
    t = 0
    while t < min(rows, cols):
        # smallest nonzero entry in the remaining block as pivot
        piv = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] and (piv is None or abs(a[i][j]) < abs(a[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        i, j = piv
        a[t], a[i] = a[i], a[t]
        for r in a:
            r[t], r[j] = r[j], r[t]
        while True:
            p = a[t][t]
            done = True
            for i in range(t + 1, rows):
                if a[i][t]:
                    f = a[i][t] // p
                    a[i] = [x - f * y for x, y in zip(a[i], a[t])]
                    if a[i][t]:
                        done = False
            for j in range(t + 1, cols):
                if a[t][j]:
                    f = a[t][j] // p
                    for r in a:
                        r[j] -= f * r[t]
                    if a[t][j]:
                        done = False
            if not done:
                # a remainder is smaller than the pivot; move it in and repeat
                best = None
                for i in range(t + 1, rows):
                    if a[i][t] and (best is None or abs(a[i][t]) < abs(a[best[0]][best[1]])):
                        best = (i, t)
                for j in range(t + 1, cols):
                    if a[t][j] and (best is None or abs(a[t][j]) < abs(a[best[0]][best[1]])):
                        best = (t, j)
                i, j = best
                a[t], a[i] = a[i], a[t]
                for r in a:
                    r[t], r[j] = r[j], r[t]
                continue
            # divisibility: fold a row carrying a non-multiple into the pivot row
            bad = next((i for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p), None)
            if bad is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad])]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def rank(matrix: list[list[int]]) -> int:
    return len(smith_normal_form(matrix))


@dataclass(frozen=True)
class Homology:
    b0: int
    b1: int
    b2: int
    torsion: tuple[int, ...]

    @property
    def h1_trivial(self) -> bool:
        return self.b1 == 0 and not self.torsion


def homology(c: CWComplex2) -> Homology:
    d1 = c.boundary_1()
    d2 = c.boundary_2()
    r1 = rank(d1)
    f2 = smith_normal_form(d2)
    r2 = len(f2)
    b0 = len(c.vertices) - r1
    b1 = len(c.edges) - r1 - r2
    b2 = len(c.faces) - r2
    assert b0 - b1 + b2 == c.euler_characteristic
    return Homology(b0, b1, b2, tuple(d for d in f2 if d > 1))
