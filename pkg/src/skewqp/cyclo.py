"""Exact arithmetic in the cyclotomic field Q(zeta_n).

Elements are stored as residues modulo the n-th cyclotomic polynomial,
with rational coefficients in the power basis 1, z, ..., z^(d-1) where
d = phi(n).  Every element remembers its order n, and mixing orders is
an error rather than a silent embedding.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational


class OrderMismatchError(ValueError):
    """Raised when elements of Q(zeta_m) and Q(zeta_n) with m != n meet."""


def _poly_divmod_int(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # den is monic, coefficients low degree first
    num = list(num)
    dd = len(den) - 1
    quot = [0] * max(len(num) - dd, 1)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c:
            quot[k - dd] = c
            for j in range(dd + 1):
                num[k - dd + j] -= c * den[j]
    return quot, num[:dd]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod_int(poly, list(cyclotomic_polynomial(d)))
            assert not any(rem)
    return tuple(poly)


def degree(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Reduced coefficient vectors of z^k for every k a product can reach."""
    phi = cyclotomic_polynomial(n)
    d = len(phi) - 1
    rows = []
    cur = [1] + [0] * (d - 1)
    for _ in range(max(2 * d - 1, n)):
        rows.append(tuple(cur))
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [c - top * p for c, p in zip(cur, phi[:d])]
    return tuple(rows)


def _reduce(n: int, coeffs: list) -> tuple[Fraction, ...]:
    d = degree(n)
    table = _power_table(n)
    if len(coeffs) > len(table):
        # z^n = 1, so fold long inputs first
        folded = [Fraction(0)] * n
        for k, c in enumerate(coeffs):
            folded[k % n] += c
        coeffs = folded
    out = [Fraction(0)] * d
    for k, c in enumerate(coeffs):
        if not c:
            continue
        if k < d:
            out[k] += c
            continue
        for j, r in enumerate(table[k]):
            if r:
                out[j] += c * r
    return tuple(out)


def _coerce_rational(x) -> Fraction | None:
    if isinstance(x, bool):
        return None
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    return None


class Cyclotomic:
    """An element of Q(zeta_n) in the reduced power basis."""

    __slots__ = ("order", "coeffs", "_hash")

    def __init__(self, order: int, coeffs=()):
        if order < 1:
            raise ValueError(f"order must be positive, got {order}")
        self.order = order
        self.coeffs = _reduce(order, [Fraction(c) for c in coeffs])
        self._hash = None

    @classmethod
    def _raw(cls, order: int, coeffs: tuple[Fraction, ...]) -> "Cyclotomic":
        obj = object.__new__(cls)
        obj.order = order
        obj.coeffs = coeffs
        obj._hash = None
        return obj

    @classmethod
    def rational(cls, order: int, value) -> "Cyclotomic":
        d = degree(order)
        out = [Fraction(0)] * d
        out[0] = Fraction(value)
        return cls._raw(order, tuple(out))

    @classmethod
    def zero(cls, order: int) -> "Cyclotomic":
        return cls._raw(order, (Fraction(0),) * degree(order))

    @classmethod
    def one(cls, order: int) -> "Cyclotomic":
        return cls.rational(order, 1)

    # conversions

    def _lift(self, other) -> "Cyclotomic":
        if isinstance(other, Cyclotomic):
            if other.order != self.order:
                raise OrderMismatchError(
                    f"cannot combine elements of orders {self.order} and {other.order}")
            return other
        r = _coerce_rational(other)
        if r is None:
            return NotImplemented
        return Cyclotomic.rational(self.order, r)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def with_order(self, order: int) -> "Cyclotomic":
        """Re-express a rational element in Q(zeta_order)."""
        if order == self.order:
            return self
        return Cyclotomic.rational(order, self.to_rational())

    # arithmetic

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return Cyclotomic._raw(self.order, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._raw(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return Cyclotomic._raw(self.order, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        r = _coerce_rational(other)
        if r is not None:
            return Cyclotomic._raw(self.order, tuple(a * r for a in self.coeffs))
        o = self._lift(other)
        if o is NotImplemented:
            return o
        a, b = self.coeffs, o.coeffs
        prod = [Fraction(0)] * max(len(a) + len(b) - 1, 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return Cyclotomic._raw(self.order, _reduce(self.order, prod))

    __rmul__ = __mul__

    def inv(self) -> "Cyclotomic":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if self.is_rational():
            return Cyclotomic.rational(self.order, 1 / self.coeffs[0])
        s = _poly_inverse(list(self.coeffs), list(map(Fraction, cyclotomic_polynomial(self.order))))
        return Cyclotomic(self.order, s)

    def __truediv__(self, other):
        r = _coerce_rational(other)
        if r is not None:
            if r == 0:
                raise ZeroDivisionError("division by zero")
            return Cyclotomic._raw(self.order, tuple(a / r for a in self.coeffs))
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o * self.inv()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inv() ** (-k)
        result = Cyclotomic.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # comparison and display

    def __eq__(self, other):
        if isinstance(other, Cyclotomic):
            return self.order == other.order and self.coeffs == other.coeffs
        r = _coerce_rational(other)
        if r is None:
            return NotImplemented
        return self.is_rational() and self.coeffs[0] == r

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self.coeffs[0])
            else:
                self._hash = hash((self.order, self.coeffs))
        return self._hash

    def to_terms(self) -> list[list[int]]:
        """Sparse [k, p, q] triples meaning (p/q) z^k."""
        return [[k, c.numerator, c.denominator] for k, c in enumerate(self.coeffs) if c]

    @classmethod
    def from_terms(cls, order: int, terms) -> "Cyclotomic":
        acc = {}
        for term in terms:
            if len(term) == 2:
                k, p = term
                q = 1
            elif len(term) == 3:
                k, p, q = term
            else:
                raise ValueError(f"coefficient term must be [k, p, q], got {term!r}")
            if not all(isinstance(x, int) and not isinstance(x, bool) for x in (k, p, q)):
                raise ValueError(f"coefficient term entries must be integers, got {term!r}")
            if q == 0:
                raise ValueError(f"zero denominator in {term!r}")
            k %= order
            acc[k] = acc.get(k, Fraction(0)) + Fraction(p, q)
        coeffs = [Fraction(0)] * order
        for k, c in acc.items():
            coeffs[k] = c
        return cls(order, coeffs)

    def __repr__(self):
        return f"Cyclotomic({self.order}, {self})"

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if k == 0:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        if not parts:
            return "0"
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_inverse(a: list[Fraction], m: list[Fraction]) -> list[Fraction]:
    """Inverse of a modulo m over Q, by the extended Euclidean algorithm."""
    r0, r1 = _trim(list(m)), _trim(list(a))
    s0, s1 = [], [Fraction(1)]
    while r1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
    if len(r0) != 1:
        raise ZeroDivisionError("element is not invertible modulo the cyclotomic polynomial")
    c = r0[0]
    return [x / c for x in s0]


def _poly_divmod(a: list, b: list) -> tuple[list, list]:
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] / lead
        q[k] = c
        if c:
            for j, y in enumerate(b):
                a[k + j] -= c * y
    return _trim(q), _trim(a[: len(b) - 1])


def _poly_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def _poly_sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


@lru_cache(maxsize=None)
def zeta_pow(n: int, k: int) -> Cyclotomic:
    """zeta_n ** k, for any integer k."""
    k %= n
    coeffs = [0] * (k + 1)
    coeffs[k] = 1
    return Cyclotomic(n, coeffs)


def as_cyclotomic(order: int, value) -> Cyclotomic:
    """Coerce ints, Fractions and same-order elements into Q(zeta_order)."""
    if isinstance(value, Cyclotomic):
        if value.order != order:
            if value.is_rational():
                return value.with_order(order)
            raise OrderMismatchError(
                f"expected an element of order {order}, got order {value.order}")
        return value
    r = _coerce_rational(value)
    if r is None:
        raise TypeError(f"cannot interpret {value!r} as a cyclotomic number")
    return Cyclotomic.rational(order, r)
