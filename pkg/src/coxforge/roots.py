"""Certified root location for integer polynomials.

Real roots are counted and isolated with Sturm sequences over exact rationals.
Roots on the unit circle are counted algebraically: they can only occur inside
the self-reciprocal part of the polynomial, and on that part the substitution
w = t + 1/t turns unit-circle root pairs into real roots of an integer
polynomial in the open interval (-2, 2).  No floating point is involved
anywhere; the requested epsilon only controls enclosure widths.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import Inconclusive
from .intpoly import IntPolynomial, divmod_rational, gcd, squarefree_part

EPS_DEFAULT = Fraction(1, 10**12)


# -- Sturm machinery ----------------------------------------------------------


def sturm_chain(p: IntPolynomial) -> list[IntPolynomial]:
    """Sturm sequence of a squarefree polynomial, primitive at every step."""
    chain = [p.primitive(), p.derivative().primitive()]
    while not chain[-1].is_zero() and chain[-1].degree > 0:
        _, rem = divmod_rational(chain[-2], chain[-1])
        while rem and rem[-1] == 0:
            rem.pop()
        if not rem:
            break
        lcm = 1
        for r in rem:
            lcm = lcm * r.denominator // _gcd(lcm, r.denominator)
        ints = [-int(r * lcm) for r in rem]
        g = 0
        for c in ints:
            g = _gcd(g, abs(c))
        # divide by the positive content only, so the remainder's sign survives
        chain.append(IntPolynomial(c // g for c in ints))
    return [c for c in chain if not c.is_zero()]


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _gcd(a, b):
    import math

    return math.gcd(a, b)


def _variations(chain, x) -> int:
    signs = []
    for p in chain:
        if x == "+inf":
            s = _sign(p.leading)
        elif x == "-inf":
            s = _sign(p.leading) * (-1) ** (p.degree % 2)
        else:
            s = _sign(p(Fraction(x)))
        if s:
            signs.append(s)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(p: IntPolynomial, lo=None, hi=None) -> int:
    """Number of distinct real roots in (lo, hi]; None endpoints mean +-infinity."""
    if p.degree <= 0:
        return 0
    chain = sturm_chain(squarefree_part(p))
    va = _variations(chain, "-inf" if lo is None else lo)
    vb = _variations(chain, "+inf" if hi is None else hi)
    return va - vb


def cauchy_bound(p: IntPolynomial) -> Fraction:
    """All roots have modulus strictly below this bound."""
    if p.degree < 1:
        return Fraction(1)
    lead = abs(p.leading)
    return 1 + max(Fraction(abs(c), lead) for c in p.coeffs[:-1])


@dataclass(frozen=True)
class Enclosure:
    """A rational interval [lo, hi] certified to contain exactly one real root."""

    lo: Fraction
    hi: Fraction

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __float__(self):
        return float(self.mid)

    def contains(self, x) -> bool:
        return self.lo <= x <= self.hi


def refine(p: IntPolynomial, lo: Fraction, hi: Fraction, eps: Fraction) -> Enclosure:
    """Bisect an isolating bracket (lo, hi] down to width <= eps."""
    chain = sturm_chain(squarefree_part(p))
    assert _variations(chain, lo) - _variations(chain, hi) == 1, "bracket is not isolating"
    lo, hi = Fraction(lo), Fraction(hi)
    while hi - lo > eps:
        mid = (lo + hi) / 2
        if _variations(chain, lo) - _variations(chain, mid) == 1:
            hi = mid
        else:
            lo = mid
    return Enclosure(lo, hi)


def isolate_real_roots(p: IntPolynomial) -> list[tuple[Fraction, Fraction]]:
    """Disjoint isolating brackets (lo, hi], one per distinct real root, ascending."""
    p = squarefree_part(p)
    if p.degree <= 0:
        return []
    chain = sturm_chain(p)
    bound = cauchy_bound(p)
    out = []

    def split(lo, hi, count):
        if count == 0:
            return
        if count == 1:
            out.append((lo, hi))
            return
        mid = (lo + hi) / 2
        left = _variations(chain, lo) - _variations(chain, mid)
        split(lo, mid, left)
        split(mid, hi, count - left)

    total = _variations(chain, -bound) - _variations(chain, bound)
    split(-bound, bound, total)
    out.sort()
    return out


def largest_real_root(p: IntPolynomial, eps: Fraction = EPS_DEFAULT):
    """Enclosure of the largest real root, or None if p has no real root."""
    brackets = isolate_real_roots(p)
    if not brackets:
        return None
    lo, hi = brackets[-1]
    return refine(p, lo, hi, eps)


def gcd_has_root_between(p: IntPolynomial, q: IntPolynomial) -> bool:
    """Exactly decide whether the largest real roots of p and q are equal.

    Let g = gcd(p, q).  Since g divides both inputs, g having a root inside an
    interval that isolates the largest root x of p certifies g(x) = 0, hence x
    is also a root of q; doing the same on q's side forces the two largest
    roots to coincide."""
    g = gcd(p, q)
    if g.degree < 1:
        return False
    for poly in (p, q):
        enc = largest_real_root(poly)
        if enc is None:
            return False
        if count_real_roots(g, enc.lo, enc.hi) < 1:
            return False
    return True


# -- unit-circle classification ----------------------------------------------


def _extract_root(p: IntPolynomial, r: int) -> tuple[IntPolynomial, int]:
    """Divide out all (t - r) factors; returns (quotient, multiplicity)."""
    from .intpoly import divides, poly_divide_exact

    lin = IntPolynomial((-r, 1))
    mult = 0
    while not p.is_zero() and p(r) == 0 and divides(lin, p):
        p = poly_divide_exact(p, lin)
        mult += 1
    return p, mult


def reciprocal_part(p: IntPolynomial) -> IntPolynomial:
    """Largest factor fixed by coefficient reversal (contains all circle roots)."""
    g = gcd(p, p.reverse())
    return g.primitive() if not g.is_zero() else g


def halved_polynomial(p: IntPolynomial) -> IntPolynomial:
    """For self-reciprocal p of even degree 2m, the degree-m polynomial h with
    p(t)/t^m = h(t + 1/t).  Unit-circle roots of p map to real roots of h in (-2, 2)."""
    if not p.is_reciprocal():
        raise ValueError("polynomial is not self-reciprocal")
    if p.degree % 2 != 0:
        raise ValueError("self-reciprocal part must have even degree here")
    m = p.degree // 2
    # C_k(w) represents t^k + t^(-k):  C_0 = 2, C_1 = w, C_k = w*C_(k-1) - C_(k-2)
    c_prev = IntPolynomial((2,))
    c_cur = IntPolynomial((0, 1))
    h = IntPolynomial((p[m],)) + c_cur * p[m + 1]
    for k in range(2, m + 1):
        c_prev, c_cur = c_cur, IntPolynomial((0, 1)) * c_cur - c_prev
        h = h + c_cur * p[m + k]
    return h


def count_unit_circle_roots(p: IntPolynomial) -> int:
    """Exact number of distinct roots of squarefree p with modulus exactly 1."""
    p = p.primitive()
    p, at_zero = _extract_zero(p)
    p, m_one = _extract_root(p, 1)
    p, m_minus = _extract_root(p, -1)
    g = reciprocal_part(p)
    on_circle = (1 if m_one else 0) + (1 if m_minus else 0)
    if g.degree >= 2:
        h = halved_polynomial(g)
        if h(2) == 0 or h(-2) == 0:
            # would mean a t = +-1 root surviving extraction; impossible for
            # squarefree input, kept as a guard
            raise Inconclusive("halved polynomial vanishes at +-2 after root extraction")
        on_circle += 2 * count_real_roots(h, Fraction(-2), Fraction(2))
    return on_circle


def _extract_zero(p: IntPolynomial) -> tuple[IntPolynomial, int]:
    k = 0
    coeffs = p.coeffs
    while coeffs and coeffs[0] == 0:
        coeffs = coeffs[1:]
        k += 1
    return IntPolynomial(coeffs), k


# -- full classification -------------------------------------------------------


@dataclass(frozen=True)
class RootClassification:
    """Counts of roots by location relative to the real line and the unit circle.

    Real roots are split by modulus (greater than 1 / less than 1); roots of
    modulus exactly 1 are counted together whether real or not.  The counts
    always sum to the degree.
    """

    n_real_gt1: int
    n_real_in_unit: int
    n_on_circle: int
    n_off_circle_complex: int
    largest_real: Enclosure | None

    def counts(self):
        return (
            self.n_real_gt1,
            self.n_real_in_unit,
            self.n_on_circle,
            self.n_off_circle_complex,
        )


def classify_roots(p: IntPolynomial, eps: Fraction = EPS_DEFAULT) -> RootClassification:
    """Classify the roots of a squarefree integer polynomial, exactly."""
    if p.is_zero():
        raise ValueError("cannot classify the zero polynomial")
    p = p.primitive()
    degree = p.degree

    q, at_zero = _extract_zero(p)
    q1, m_one = _extract_root(q, 1)
    q2, m_minus = _extract_root(q1, -1)

    one = Fraction(1)
    real_above = count_real_roots(q2, one, None)  # (1, inf)
    real_below = count_real_roots(q2, None, -one)  # (-inf, -1]; -1 already removed
    n_real_gt1 = real_above + real_below
    n_real_in_unit = count_real_roots(q2, -one, one) + at_zero

    n_on_circle = count_unit_circle_roots(p)
    n_off = degree - n_real_gt1 - n_real_in_unit - n_on_circle
    if n_off < 0:
        raise Inconclusive("root counts are inconsistent")

    largest = largest_real_root(p, eps)
    return RootClassification(n_real_gt1, n_real_in_unit, n_on_circle, n_off, largest)


def spectral_radius_of_poly(p: IntPolynomial, eps: Fraction = EPS_DEFAULT) -> Enclosure:
    """Enclosure of the largest root modulus for a polynomial whose off-circle
    roots are all real (true for characteristic polynomials of isometries of a
    signature-(1,n) form)."""
    p = squarefree_part(p)
    cls = classify_roots(p, eps)
    if cls.n_off_circle_complex:
        raise Inconclusive("polynomial has non-real roots off the unit circle")
    candidates = []
    if cls.n_on_circle or cls.n_real_in_unit:
        candidates.append(Enclosure(Fraction(1), Fraction(1)))
    brackets = isolate_real_roots(p)
    if brackets:
        lo, hi = brackets[-1]
        if hi > 1:
            enc = refine(p, lo, hi, eps)
            if enc.hi > 1:
                candidates.append(enc)
        lo, hi = brackets[0]
        if lo < -1:
            enc = refine(p, lo, hi, eps)
            if enc.lo < -1:
                candidates.append(Enclosure(-enc.hi, -enc.lo))
    if not candidates:
        candidates.append(Enclosure(Fraction(1), Fraction(1)))
    best = max(candidates, key=lambda e: e.hi)
    return best
