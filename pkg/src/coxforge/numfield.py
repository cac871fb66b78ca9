"""Exact arithmetic in Q(alpha) for a designated real root alpha of a monic
integer polynomial.

Elements are coefficient vectors of rationals in the power basis
1, alpha, ..., alpha^(d-1); multiplication reduces modulo the minimal
polynomial and inversion runs the extended Euclidean algorithm.  The chosen
root is pinned by an isolating rational interval so that numeric renderings
are deterministic.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DivisionByZero, FieldMismatch
from .intpoly import IntPolynomial, is_squarefree
from .roots import Enclosure, isolate_real_roots, refine


@dataclass(frozen=True)
class RootSelector:
    """Isolating interval (with its index among the ascending real roots)."""

    index: int
    lo: Fraction
    hi: Fraction


class NumberField:
    """Q(alpha) with alpha the root of ``minpoly`` inside the selector interval."""

    def __init__(self, minpoly: IntPolynomial, root_index: int):
        if not minpoly.is_monic():
            raise ValueError("minimal polynomial must be monic")
        if not is_squarefree(minpoly):
            raise ValueError("minimal polynomial must be squarefree")
        brackets = isolate_real_roots(minpoly)
        if not 0 <= root_index < len(brackets):
            raise ValueError(
                f"root index {root_index} out of range ({len(brackets)} real roots)"
            )
        lo, hi = brackets[root_index]
        self.minpoly = minpoly
        self.degree = minpoly.degree
        self.chosen_root = RootSelector(root_index, lo, hi)
        # reduction table for alpha^d .. alpha^(2d-2)
        d = self.degree
        table = []
        prev = [Fraction(-c) for c in minpoly.coeffs[:-1]]  # alpha^d
        table.append(tuple(prev))
        for _ in range(d - 2):
            shifted = [Fraction(0)] + prev[:-1]
            top = prev[-1]
            prev = [s + top * t for s, t in zip(shifted, table[0])]
            table.append(tuple(prev))
        self._power_table = table
        self._root_cache: Enclosure | None = None

    @classmethod
    def with_largest_root(cls, minpoly: IntPolynomial) -> "NumberField":
        brackets = isolate_real_roots(minpoly)
        if not brackets:
            raise ValueError("polynomial has no real root")
        return cls(minpoly, len(brackets) - 1)

    def __eq__(self, other):
        return (
            isinstance(other, NumberField)
            and self.minpoly == other.minpoly
            and self.chosen_root.index == other.chosen_root.index
        )

    def __hash__(self):
        return hash((self.minpoly, self.chosen_root.index))

    def __repr__(self):
        return f"NumberField({self.minpoly}, root #{self.chosen_root.index})"

    def zero(self) -> "NFElem":
        return NFElem(self, (Fraction(0),) * self.degree)

    def one(self) -> "NFElem":
        return self.from_rational(1)

    def alpha(self) -> "NFElem":
        coeffs = [Fraction(0)] * self.degree
        coeffs[1] = Fraction(1)
        return NFElem(self, tuple(coeffs))

    def from_rational(self, x) -> "NFElem":
        coeffs = [Fraction(0)] * self.degree
        coeffs[0] = Fraction(x)
        return NFElem(self, tuple(coeffs))

    def element(self, coeffs) -> "NFElem":
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != self.degree:
            raise ValueError("coefficient vector has the wrong length")
        return NFElem(self, coeffs)

    def root_enclosure(self, eps: Fraction = Fraction(1, 10**20)) -> Enclosure:
        enc = self._root_cache
        if enc is None or enc.width > eps:
            enc = refine(self.minpoly, self.chosen_root.lo, self.chosen_root.hi, eps)
            self._root_cache = enc
        return enc

    def _reduce(self, coeffs: list[Fraction]) -> tuple[Fraction, ...]:
        d = self.degree
        out = list(coeffs[:d]) + [Fraction(0)] * max(0, d - len(coeffs))
        for k in range(d, len(coeffs)):
            c = coeffs[k]
            if c:
                row = self._power_table[k - d]
                for i in range(d):
                    out[i] += c * row[i]
        return tuple(out)


class NFElem:
    """An element of a NumberField; immutable, exact, hashable."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: NumberField, coeffs: tuple[Fraction, ...]):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, *a):
        raise AttributeError("NFElem is immutable")

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def _match(self, other) -> "NFElem":
        if isinstance(other, NFElem):
            if other.field != self.field:
                raise FieldMismatch("elements live in different number fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return NotImplemented

    def __add__(self, other):
        other = self._match(other)
        if other is NotImplemented:
            return NotImplemented
        return NFElem(self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._match(other)
        if other is NotImplemented:
            return NotImplemented
        return NFElem(self.field, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return NFElem(self.field, tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        other = self._match(other)
        if other is NotImplemented:
            return NotImplemented
        d = self.field.degree
        prod = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] += a * b
        return NFElem(self.field, self.field._reduce(prod))

    __rmul__ = __mul__

    def inverse(self) -> "NFElem":
        if self.is_zero():
            raise DivisionByZero("zero has no inverse")
        # extended Euclid in Q[t] against the minimal polynomial
        d = self.field.degree
        r0 = [Fraction(c) for c in self.field.minpoly.coeffs]
        r1 = list(self.coeffs)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while True:
            while r1 and r1[-1] == 0:
                r1.pop()
            if len(r1) == 1:
                inv = [c / r1[0] for c in s1]
                inv += [Fraction(0)] * (d - len(inv))
                return NFElem(self.field, tuple(inv[:d]))
            if not r1:
                raise DivisionByZero("element shares a factor with the minimal polynomial")
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))

    def __truediv__(self, other):
        other = self._match(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.from_rational(other)
        if not isinstance(other, NFElem):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def sign(self) -> int:
        """Exact sign of the real number this element denotes."""
        if self.is_zero():
            return 0
        if self.is_rational():
            c = self.coeffs[0]
            return (c > 0) - (c < 0)
        eps = Fraction(1, 10**12)
        while True:
            enc = self.field.root_enclosure(eps)
            lo, hi = _interval_eval(self.coeffs, enc.lo, enc.hi)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            eps = eps / 10**6
            if eps < Fraction(1, 10**200):
                raise ArithmeticError("sign refinement failed to converge")

    def to_float(self) -> float:
        enc = self.field.root_enclosure(Fraction(1, 10**25))
        lo, hi = _interval_eval(self.coeffs, enc.lo, enc.hi)
        return float((lo + hi) / 2)

    def __repr__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            term = f"{c}" if k == 0 else (f"{c}*a" if k == 1 else f"{c}*a^{k}")
            parts.append(term)
        return " + ".join(parts) if parts else "0"


def _poly_divmod(num: list[Fraction], den: list[Fraction]):
    num = list(num)
    q = [Fraction(0)] * max(len(num) - len(den) + 1, 1)
    while len(num) >= len(den) and any(num):
        while num and num[-1] == 0:
            num.pop()
        if len(num) < len(den):
            break
        k = len(num) - len(den)
        f = num[-1] / den[-1]
        q[k] = f
        for i, c in enumerate(den):
            num[k + i] -= f * c
        num.pop()
    return q, num


def _poly_mul(a: list[Fraction], b: list[Fraction]):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a: list[Fraction], b: list[Fraction]):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def _interval_eval(coeffs, lo: Fraction, hi: Fraction):
    """Interval Horner evaluation of a polynomial at [lo, hi]."""
    rlo, rhi = Fraction(coeffs[-1]), Fraction(coeffs[-1])
    for c in reversed(coeffs[:-1]):
        products = (rlo * lo, rlo * hi, rhi * lo, rhi * hi)
        rlo, rhi = min(products) + c, max(products) + c
    return rlo, rhi
