"""Salem-number predicates and the power/product classification.

A Salem polynomial here is a monic reciprocal polynomial of degree >= 4 with
exactly one real root above 1, its reciprocal inside (0, 1), and every other
root non-real of modulus 1.  All verdicts are produced by the exact root
classification machinery; numeric values are only reported as enclosures.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import SearchBoundExceeded
from .intpoly import (
    IntPolynomial,
    cyclotomic,
    divides,
    is_squarefree,
    min_poly_of_power,
    min_poly_of_product,
    squarefree_part,
)
from .roots import (
    EPS_DEFAULT,
    Enclosure,
    RootClassification,
    classify_roots,
    count_real_roots,
    gcd_has_root_between,
)

LEHMER = IntPolynomial((1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1))


@dataclass(frozen=True)
class SalemVerdict:
    is_salem: bool
    degree: int
    largest_root: Optional[Enclosure]
    witness: Optional[RootClassification]
    reasons: tuple[str, ...] = ()
    cyclotomic_factor_found: bool = False


def _trial_reducibility(p: IntPolynomial, max_order: int = 60) -> bool:
    """True if some cyclotomic polynomial or t -+ 1 divides p."""
    for k in range(1, max_order + 1):
        phi = cyclotomic(k)
        if phi.degree <= p.degree and divides(phi, p):
            return True
    return False


def is_salem(p: IntPolynomial, eps: Fraction = EPS_DEFAULT) -> SalemVerdict:
    """Decide Salem-ness of a monic squarefree polynomial."""
    reasons = []
    if not p.is_monic():
        return SalemVerdict(False, p.degree, None, None, ("not monic",))
    if not is_squarefree(p):
        return SalemVerdict(False, p.degree, None, None, ("not squarefree",))
    cyc = _trial_reducibility(p)
    if p.degree < 4:
        reasons.append("degree below 4")
    if not p.is_reciprocal():
        reasons.append("not reciprocal")
    if reasons:
        return SalemVerdict(False, p.degree, None, None, tuple(reasons), cyc)
    cls = classify_roots(p, eps)
    one = Fraction(1)
    above_one = count_real_roots(p, one, None)
    in_unit_pos = count_real_roots(p, Fraction(0), one)
    ok = (
        above_one == 1
        and in_unit_pos == 1
        and cls.n_real_gt1 == 1
        and cls.n_real_in_unit == 1
        and cls.n_on_circle == p.degree - 2
        and cls.n_off_circle_complex == 0
    )
    if not ok:
        reasons.append(
            "root layout is not (one real > 1, its reciprocal in (0,1), rest on circle)"
        )
    return SalemVerdict(ok, p.degree, cls.largest_real, cls, tuple(reasons), cyc)


def power_is_salem(p: IntPolynomial, k: int, eps: Fraction = EPS_DEFAULT) -> SalemVerdict:
    """Verdict for the polynomial whose roots are the k-th powers of p's roots."""
    if k < 1:
        raise ValueError("power must be >= 1")
    base = is_salem(p, eps)
    if not base.is_salem:
        raise ValueError("power_is_salem expects a Salem polynomial")
    return is_salem(min_poly_of_power(p, k), eps)


@dataclass(frozen=True)
class ProductClass:
    """Outcome of the two-Salem-numbers dichotomy."""

    kind: str  # "common_power_base" or "non_salem_products"
    base: Optional[IntPolynomial] = None
    exponents: Optional[tuple[int, int]] = None
    product_verdicts: Optional[dict] = None


def _powers_equal(p: IntPolynomial, q: IntPolynomial, m: int, n: int) -> bool:
    """Exactly decide whether (largest root of p)^m == (largest root of q)^n."""
    pm = min_poly_of_power(p, m)
    qn = min_poly_of_power(q, n)
    return gcd_has_root_between(pm, qn)


def product_class(
    p: IntPolynomial, q: IntPolynomial, max_exponent: int = 12, eps: Fraction = EPS_DEFAULT
) -> ProductClass:
    """Either find exponents tying the two largest roots to one base, or verify
    that the four products of the roots and their reciprocals all fail to be
    Salem numbers."""
    vp, vq = is_salem(p, eps), is_salem(q, eps)
    if not (vp.is_salem and vq.is_salem):
        raise ValueError("both inputs must be Salem polynomials")

    import math

    lp = math.log(float(vp.largest_root))
    lq = math.log(float(vq.largest_root))
    candidates = sorted(
        (
            (m, n)
            for m in range(1, max_exponent + 1)
            for n in range(1, max_exponent + 1)
            if math.gcd(m, n) == 1
        ),
        key=lambda mn: abs(mn[0] * lp - mn[1] * lq),
    )
    for m, n in candidates:
        if abs(m * lp - n * lq) > 1e-6:
            break  # later candidates are even further off
        if _powers_equal(p, q, m, n):
            if n == 1:
                return ProductClass("common_power_base", base=q, exponents=(m, n))
            if m == 1:
                return ProductClass("common_power_base", base=p, exponents=(m, n))
            raise SearchBoundExceeded(
                f"largest roots satisfy x^{m} = y^{n} but no base polynomial "
                "is available without factoring"
            )

    labels = ("product", "p_over_q", "q_over_p", "reciprocal_product")
    polys = {
        "product": min_poly_of_product(p, q),
        "p_over_q": min_poly_of_product(p, q.reverse()),
        "q_over_p": min_poly_of_product(p.reverse(), q),
        "reciprocal_product": min_poly_of_product(p.reverse(), q.reverse()),
    }
    verdicts = {}
    for name in labels:
        poly = squarefree_part(polys[name])
        if poly.leading < 0:
            poly = -poly
        verdicts[name] = is_salem(poly, eps)
        if verdicts[name].is_salem:
            raise SearchBoundExceeded(
                f"no common base found up to exponent {max_exponent}, "
                f"but the {name} polynomial is Salem"
            )
    return ProductClass("non_salem_products", product_verdicts=verdicts)


def salem_gap_report(eps: Fraction = Fraction(1, 10**10)) -> dict:
    """Numeric confirmation that the fourth root of the degree-5 multiplier
    stays below the smallest spectral radius bound."""
    phi = IntPolynomial((1, -2, 1, -2, 1))
    delta = is_salem(phi, eps).largest_root
    lam = is_salem(LEHMER, eps).largest_root
    fourth = _nth_root_enclosure(delta, 4, Fraction(1, 10**8))
    return {
        "delta": delta,
        "delta_fourth_root": fourth,
        "lehmer_root": lam,
        "gap_confirmed": fourth.hi < lam.lo,
    }


def _nth_root_enclosure(enc: Enclosure, k: int, eps: Fraction) -> Enclosure:
    """Rational enclosure of the k-th root of a positive enclosure."""

    def root_lower(x: Fraction) -> Fraction:
        lo, hi = Fraction(0), max(Fraction(2), x)
        while hi - lo > eps:
            mid = (lo + hi) / 2
            if mid**k <= x:
                lo = mid
            else:
                hi = mid
        return lo

    def root_upper(x: Fraction) -> Fraction:
        lo, hi = Fraction(0), max(Fraction(2), x)
        while hi - lo > eps:
            mid = (lo + hi) / 2
            if mid**k < x:
                lo = mid
            else:
                hi = mid
        return hi

    return Enclosure(root_lower(enc.lo), root_upper(enc.hi))
