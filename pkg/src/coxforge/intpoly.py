"""Integer-coefficient univariate polynomials with exact arithmetic.

A polynomial is stored as a tuple of ints in ascending degree order with the
trailing zeros stripped, so ``IntPolynomial((-1, 0, 1))`` is ``t^2 - 1`` and
the zero polynomial has an empty coefficient tuple.  Everything here is exact;
rationals only appear transiently (division chains, interpolation) and are
cleared before a polynomial is returned.
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotDivisible


@dataclass(frozen=True)
class IntPolynomial:
    coeffs: tuple[int, ...]

    def __init__(self, coeffs=()):
        coeffs = tuple(int(c) for c in coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", coeffs)

    # -- basic queries ----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        if self.is_zero():
            return 0
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return self.leading == 1

    def __bool__(self):
        return not self.is_zero()

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        return IntPolynomial(
            a + b for a, b in itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=0)
        )

    def __sub__(self, other):
        other = _coerce(other)
        return IntPolynomial(
            a - b for a, b in itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=0)
        )

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __radd__ = __add__
    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative polynomial power")
        result = IntPolynomial((1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x):
        """Evaluate by Horner; works for int, Fraction, float and field elements."""
        if self.is_zero():
            return 0 * x if not isinstance(x, (int, float)) else type(x)(0)
        acc = self.coeffs[-1] + 0 * x
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(k * c for k, c in enumerate(self.coeffs) if k >= 1)

    def shift_up(self, k: int) -> "IntPolynomial":
        """Multiply by t^k."""
        if self.is_zero():
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def reverse(self) -> "IntPolynomial":
        """The polynomial with reciprocal roots, t^deg * p(1/t)."""
        return IntPolynomial(tuple(reversed(self.coeffs)))

    def is_reciprocal(self) -> bool:
        """Palindromic coefficients: p equals its own reverse."""
        return not self.is_zero() and self.coeffs == tuple(reversed(self.coeffs))

    def content(self) -> int:
        import math

        g = 0
        for c in self.coeffs:
            g = math.gcd(g, abs(c))
        return g

    def primitive(self) -> "IntPolynomial":
        """Divide out the content, keeping the leading sign positive."""
        if self.is_zero():
            return self
        g = self.content()
        sign = 1 if self.leading > 0 else -1
        return IntPolynomial(c * sign // g for c in self.coeffs)

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self[k]
            if c == 0:
                continue
            mag = "" if abs(c) == 1 and k > 0 else str(abs(c))
            var = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            sep = "*" if mag and var else ""
            if not terms:
                sgn = "-" if c < 0 else ""
            else:
                sgn = " - " if c < 0 else " + "
            terms.append(f"{sgn}{mag}{sep}{var}")
        return "".join(terms)


def _coerce(p) -> IntPolynomial:
    if isinstance(p, IntPolynomial):
        return p
    if isinstance(p, int):
        return IntPolynomial((p,))
    raise TypeError(f"cannot coerce {type(p).__name__} to IntPolynomial")


X = IntPolynomial((0, 1))
ONE = IntPolynomial((1,))


# -- division ---------------------------------------------------------------


def divmod_rational(num: IntPolynomial, den: IntPolynomial):
    """Quotient and remainder over the rationals, as Fraction coefficient lists."""
    if den.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = [Fraction(c) for c in num.coeffs]
    quo = [Fraction(0)] * max(len(rem) - len(den.coeffs) + 1, 1)
    dlead = Fraction(den.leading)
    dd = den.degree
    while len(rem) - 1 >= dd and any(rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) - 1 < dd:
            break
        k = len(rem) - 1 - dd
        f = rem[-1] / dlead
        quo[k] = f
        for i, c in enumerate(den.coeffs):
            rem[k + i] -= f * c
        rem.pop()
    return quo, rem


def poly_divide_exact(num: IntPolynomial, den: IntPolynomial) -> IntPolynomial:
    """Exact quotient with integer coefficients; NotDivisible otherwise."""
    quo, rem = divmod_rational(num, den)
    if any(rem):
        raise NotDivisible(f"({num}) is not divisible by ({den})")
    if any(q.denominator != 1 for q in quo):
        raise NotDivisible(f"({num}) / ({den}) has non-integer coefficients")
    return IntPolynomial(int(q) for q in quo)


def divides(den: IntPolynomial, num: IntPolynomial) -> bool:
    _, rem = divmod_rational(num, den)
    return not any(rem)


def gcd(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Primitive gcd over the integers (computed by rational Euclid)."""
    a, b = p, q
    while not b.is_zero():
        _, rem = divmod_rational(a, b)
        while rem and rem[-1] == 0:
            rem.pop()
        if not rem:
            a, b = b, IntPolynomial()
            break
        lcm_den = 1
        for r in rem:
            lcm_den = lcm_den * r.denominator // _int_gcd(lcm_den, r.denominator)
        a, b = b, IntPolynomial(int(r * lcm_den) for r in rem).primitive()
    return a.primitive() if not a.is_zero() else a


def _int_gcd(a: int, b: int) -> int:
    import math

    return math.gcd(a, b)


def squarefree_part(p: IntPolynomial) -> IntPolynomial:
    """p divided by gcd(p, p'), made primitive."""
    if p.degree <= 0:
        return p.primitive() if not p.is_zero() else p
    g = gcd(p, p.derivative())
    if g.degree == 0:
        return p.primitive()
    quo, rem = divmod_rational(p, g)
    assert not any(rem)
    den_lcm = 1
    for q in quo:
        den_lcm = den_lcm * q.denominator // _int_gcd(den_lcm, q.denominator)
    return IntPolynomial(int(q * den_lcm) for q in quo).primitive()


def is_squarefree(p: IntPolynomial) -> bool:
    return p.degree <= 0 or gcd(p, p.derivative()).degree == 0


# -- cyclotomic polynomials ---------------------------------------------------


@functools.lru_cache(maxsize=None)
def cyclotomic(k: int) -> IntPolynomial:
    """The k-th cyclotomic polynomial, by dividing t^k - 1 by the lower ones."""
    if k < 1:
        raise ValueError("cyclotomic index must be positive")
    poly = IntPolynomial((-1,) + (0,) * (k - 1) + (1,))
    for d in range(1, k):
        if k % d == 0:
            poly = poly_divide_exact(poly, cyclotomic(d))
    return poly


def strip_cyclotomic(p: IntPolynomial, max_order: int = 60) -> IntPolynomial:
    """Divide out every cyclotomic factor of order <= max_order, to full multiplicity."""
    if p.is_zero():
        raise ValueError("cannot strip factors from the zero polynomial")
    out = p
    for k in range(1, max_order + 1):
        phi = cyclotomic(k)
        if phi.degree > out.degree:
            continue
        while out.degree >= phi.degree:
            try:
                out = poly_divide_exact(out, phi)
            except NotDivisible:
                break
    return out


# -- determinants and resultants ---------------------------------------------


def det_bareiss(rows) -> int:
    """Exact integer determinant by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows]
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("matrix must be square")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[-1][-1]


def resultant(p: IntPolynomial, q: IntPolynomial) -> int:
    """Resultant via the Sylvester matrix (exact integer)."""
    dp, dq = p.degree, q.degree
    if dp < 0 or dq < 0:
        return 0
    if dp == 0:
        return p.leading ** dq
    if dq == 0:
        return q.leading ** dp
    n = dp + dq
    rows = []
    pc = list(reversed(p.coeffs))
    qc = list(reversed(q.coeffs))
    for i in range(dq):
        rows.append([0] * i + pc + [0] * (n - dp - 1 - i))
    for i in range(dp):
        rows.append([0] * i + qc + [0] * (n - dq - 1 - i))
    return det_bareiss(rows)


def interpolate_int(points) -> IntPolynomial:
    """Lagrange interpolation through integer points; result must be integral."""
    xs = [Fraction(x) for x, _ in points]
    ys = [Fraction(y) for _, y in points]
    n = len(points)
    coeffs = [Fraction(0)] * n
    for i in range(n):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j in range(n):
            if j == i:
                continue
            new = [Fraction(0)] * (len(basis) + 1)
            for k, c in enumerate(basis):
                new[k] -= c * xs[j]
                new[k + 1] += c
            basis = new
            denom *= xs[i] - xs[j]
        scale = ys[i] / denom
        for k, c in enumerate(basis):
            coeffs[k] += scale * c
    if any(c.denominator != 1 for c in coeffs):
        raise ValueError("interpolated polynomial is not integral")
    return IntPolynomial(int(c) for c in coeffs)


def min_poly_of_product(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Squarefree polynomial whose roots are all pairwise products of roots of p, q.

    Computed as the resultant in y of p(y) and y^deg(q) * q(x/y), recovered by
    interpolation at integer x; the minimal polynomial of any specific product
    divides the result.
    """
    if not (p.is_monic() and q.is_monic()):
        raise ValueError("inputs must be monic")
    if q[0] == 0:
        raise ValueError("second argument must not vanish at 0")
    dp, dq = p.degree, q.degree
    target_deg = dp * dq
    points = []
    for x in range(target_deg + 1):
        # q_x(y) = sum_j q_j x^j y^(dq - j); the y-degree stays dq because the
        # leading coefficient is q(0), and integer x keeps the resultant integral.
        qc = [q[j] * x**j for j in range(dq + 1)]
        qx = IntPolynomial(tuple(reversed(qc)))
        points.append((x, resultant(p, qx)))
    out = interpolate_int(points)
    out = squarefree_part(out)
    if out.leading < 0:
        out = -out
    return _monicize(out)


def min_poly_of_power(p: IntPolynomial, k: int) -> IntPolynomial:
    """Squarefree polynomial whose roots are the k-th powers of the roots of p."""
    if not p.is_monic():
        raise ValueError("input must be monic")
    if k < 1:
        raise ValueError("power must be >= 1")
    if k == 1:
        return squarefree_part(p)
    dp = p.degree
    points = []
    for x in range(dp + 1):
        # res_y(p(y), y^k - x) = prod_i (root_i^k - x) up to sign
        kern = IntPolynomial((-x,) + (0,) * (k - 1) + (1,))
        points.append((x, resultant(p, kern)))
    out = interpolate_int(points)
    out = squarefree_part(out)
    if out.leading < 0:
        out = -out
    return _monicize(out)


def _monicize(p: IntPolynomial) -> IntPolynomial:
    if p.is_zero() or p.leading == 1:
        return p
    if all(c % p.leading == 0 for c in p.coeffs):
        return IntPolynomial(c // p.leading for c in p.coeffs)
    return p
