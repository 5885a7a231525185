"""The skew group path algebra (kQ)G and the embedding of kQ_G into it.

Elements are finite sums of p (x) g^i with p a path of Q and i mod n,
multiplied by (p (x) g^i)(q (x) g^j) = p g^i(q) (x) g^(i+j).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .action import CyclicAction, Representatives
from .cyclo import Cyclotomic, as_cyclotomic, zeta_pow
from .qp import Path, PathCombination, cyclic_derivative, concat


class SGAElement:
    """A finite sum of (path, group power) with cyclotomic coefficients."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: "SkewGroupAlgebra", terms: Mapping[tuple[Path, int], Cyclotomic] | Iterable = ()):
        self.algebra = algebra
        n = algebra.order
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple[Path, int], Cyclotomic] = {}
        for (p, i), c in items:
            key = (p, i % n)
            c = as_cyclotomic(n, c)
            acc[key] = acc[key] + c if key in acc else c
        self.terms = {k: v for k, v in acc.items() if v}

    def _same(self, other):
        if not isinstance(other, SGAElement):
            return NotImplemented
        if other.algebra is not self.algebra:
            raise ValueError("elements of different skew group algebras")
        return other

    def __add__(self, other):
        if self._same(other) is NotImplemented:
            return NotImplemented
        return SGAElement(self.algebra, list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self):
        return SGAElement(self.algebra, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        if self._same(other) is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SGAElement):
            return self.algebra.mul(self, other)
        c = as_cyclotomic(self.algebra.order, other)
        return SGAElement(self.algebra, {k: v * c for k, v in self.terms.items()})

    def __rmul__(self, other):
        c = as_cyclotomic(self.algebra.order, other)
        return SGAElement(self.algebra, {k: c * v for k, v in self.terms.items()})

    def __eq__(self, other):
        if self._same(other) is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0][0], kv[0][1]))

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{p}#g^{i}" for (p, i), c in self.sorted_terms())

    def __repr__(self):
        return f"SGAElement({self})"


class SkewGroupAlgebra:
    """(kQ)G for a cyclic action on Q."""

    def __init__(self, action: CyclicAction):
        self.action = action
        self.quiver = action.quiver
        self.order = action.order
        self._image_cache: dict[tuple[Path, int], tuple[Path, Cyclotomic]] = {}

    def element(self, terms=()) -> SGAElement:
        return SGAElement(self, terms)

    def zero(self) -> SGAElement:
        return SGAElement(self)

    def path(self, p: Path | Iterable[str], power: int = 0, coeff=1) -> SGAElement:
        if not isinstance(p, Path):
            p = self.quiver.path(tuple(p))
        return SGAElement(self, {(p, power): coeff})

    def vertex(self, v: str, power: int = 0) -> SGAElement:
        return SGAElement(self, {(self.quiver.trivial(v), power): 1})

    def group(self, i: int) -> SGAElement:
        """1 (x) g^i, the sum of v (x) g^i over all vertices."""
        return SGAElement(self, {(self.quiver.trivial(v), i): 1 for v in self.quiver.vertices})

    def combination(self, pc: PathCombination, power: int = 0) -> SGAElement:
        return SGAElement(self, {(p, power): c for p, c in pc.items()})

    def e(self, mu: int) -> SGAElement:
        """1 (x) e_mu = (1/n) sum_i zeta^(i mu) (1 (x) g^i)."""
        n = self.order
        terms = []
        for i in range(n):
            c = zeta_pow(n, i * mu) / n
            terms += [((self.quiver.trivial(v), i), c) for v in self.quiver.vertices]
        return SGAElement(self, terms)

    def idempotent_e(self, v: str, mu: int) -> SGAElement:
        """v (x) e_mu, an idempotent when v is fixed."""
        if not self.action.is_fixed(v):
            raise ValueError(f"vertex {v!r} is not fixed, so v (x) e_mu is not an idempotent")
        n = self.order
        p = self.quiver.trivial(v)
        return SGAElement(self, [((p, i), zeta_pow(n, i * mu) / n) for i in range(n)])

    def eta(self, reps: Representatives) -> SGAElement:
        x = self.zero()
        for e in reps.primary:
            x = x + self.vertex(e)
        for e in reps.fixed:
            for mu in range(self.order):
                x = x + self.idempotent_e(e, mu)
        return x

    def _image(self, q: Path, i: int) -> tuple[Path, Cyclotomic]:
        key = (q, i)
        hit = self._image_cache.get(key)
        if hit is None:
            img, e = self.action.path(q, i)
            hit = (img, zeta_pow(self.order, e))
            self._image_cache[key] = hit
        return hit

    def mul(self, x: SGAElement, y: SGAElement) -> SGAElement:
        if x.algebra is not self or y.algebra is not self:
            raise ValueError("elements of a different skew group algebra")
        acc: dict[tuple[Path, int], Cyclotomic] = {}
        for (p, i), a in x.terms.items():
            for (q, j), b in y.terms.items():
                img, z = self._image(q, i)
                r = concat(p, img)
                if r is None:
                    continue
                key = (r, (i + j) % self.order)
                c = a * z * b
                acc[key] = acc[key] + c if key in acc else c
        return SGAElement(self, acc)


def sga_mul(x: SGAElement, y: SGAElement) -> SGAElement:
    return x.algebra.mul(x, y)


class Embedding:
    """The map J from paths of Q_G into the corner eta (kQ)G eta."""

    def __init__(self, skew, algebra: SkewGroupAlgebra | None = None):
        self.skew = skew
        self.algebra = algebra or SkewGroupAlgebra(skew.action)
        self._cache: dict[str, SGAElement] = {}

    def vertex(self, label: str) -> SGAElement:
        if label not in self.skew.vertex_origin:
            raise KeyError(f"unknown vertex {label!r} of the skew quiver")
        v, mu = self.skew.vertex_origin[label]
        return self.algebra.vertex(v) if mu is None else self.algebra.idempotent_e(v, mu)

    def arrow(self, label: str) -> SGAElement:
        hit = self._cache.get(label)
        if hit is not None:
            return hit
        if label not in self.skew.arrow_origin:
            raise KeyError(f"unknown arrow {label!r} of the skew quiver")
        A = self.algebra
        a, mu = self.skew.arrow_origin[label]
        kind = self.skew.arrow_classes[a].kind
        if kind == 1:
            x = A.path([a], self.skew.arrow_classes[a].t)
        elif kind == 2:
            x = A.e(mu) * A.path([a])
        else:
            x = A.path([a]) * A.e(mu)
        self._cache[label] = x
        return x

    def path(self, p: Path) -> SGAElement:
        if p.is_trivial:
            return self.vertex(p.source)
        x = self.arrow(p.arrows[0])
        for a in p.arrows[1:]:
            x = x * self.arrow(a)
        return x

    def __call__(self, x: Path | PathCombination | str) -> SGAElement:
        if isinstance(x, str):
            return self.vertex(x) if x in self.skew.vertex_origin else self.arrow(x)
        if isinstance(x, Path):
            return self.path(x)
        out = self.algebra.zero()
        for p, c in x.items():
            out = out + self.path(p) * c
        return out


def embed_J(skew, x) -> SGAElement:
    return Embedding(skew)(x)


@dataclass
class IdentityCheck:
    arrow: str
    kind: int
    form: str
    passed: bool
    lhs: SGAElement
    rhs: SGAElement

    def difference(self) -> SGAElement:
        return self.lhs - self.rhs


@dataclass
class IdentityReport:
    checks: list[IdentityCheck]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[IdentityCheck]:
        return [c for c in self.checks if not c.passed]


def verify_generator_identities(skew, refined: bool = True) -> IdentityReport:
    """Compare derivatives of W with J of derivatives of W_G, arrow by arrow.

    type 1:    d_{g^-t a} W (x) g^-t   = J(d_{a~} W_G)
    types 2,3: d_a W (x) 1             = J(sum_mu d_{a~mu} W_G)
    type 4:    d_a W (x) 1             = n J(sum_mu d_{a~mu} W_G)

    With `refined`, also check each mu separately after cutting the left
    side down with the vertex idempotents at both ends.
    """
    J = Embedding(skew)
    A = J.algebra
    action = skew.action
    w, wg = skew.source, skew.potential
    n = skew.order
    q = w.quiver
    checks = []
    for c in skew.representative_arrows():
        a = c.arrow
        if c.kind == 1:
            beta, e = action.arrow(a, -c.t)
            assert e == 0, "arrows with a free end carry no scalar"
            lhs = A.combination(cyclic_derivative(w, beta), -c.t)
            rhs = J(cyclic_derivative(wg, skew.arrow(a)))
            checks.append(IdentityCheck(a, 1, f"d[g^-{c.t} a]W # g^-{c.t} = J(d[a~]W_G)", lhs == rhs, lhs, rhs))
            continue
        lhs = A.combination(cyclic_derivative(w, a))
        parts = [J(cyclic_derivative(wg, skew.arrow(a, mu))) for mu in range(n)]
        rhs = A.zero()
        for x in parts:
            rhs = rhs + x
        factor = n if c.kind == 4 else 1
        rhs = rhs * factor
        form = "d[a]W # 1 = " + ("n*" if factor != 1 else "") + "J(sum_mu d[a~mu]W_G)"
        checks.append(IdentityCheck(a, c.kind, form, lhs == rhs, lhs, rhs))
        if not refined:
            continue
        s, t = q.src(a), q.tgt(a)
        for mu in range(n):
            if c.kind == 2:
                left, right = J(skew.vertex(s)), J(skew.vertex(t, mu))
            elif c.kind == 3:
                left, right = J(skew.vertex(s, mu)), J(skew.vertex(t))
            else:
                left, right = J(skew.vertex(s, mu)), J(skew.vertex(t, mu - c.b))
            l2 = left * lhs * right
            r2 = parts[mu] * factor
            form = f"eta[src] (d[a]W # 1) eta[tgt] = {'n*' if factor != 1 else ''}J(d[a~{mu}]W_G)"
            checks.append(IdentityCheck(a, c.kind, form, l2 == r2, l2, r2))
    return IdentityReport(checks)
