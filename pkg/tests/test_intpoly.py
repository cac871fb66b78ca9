import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coxforge.errors import NotDivisible
from coxforge.intpoly import (
    IntPolynomial,
    cyclotomic,
    det_bareiss,
    gcd,
    is_squarefree,
    min_poly_of_power,
    min_poly_of_product,
    poly_divide_exact,
    resultant,
    squarefree_part,
    strip_cyclotomic,
)

CHI5 = IntPolynomial((-1, 2, 0, 0, 0, -2, 1))
PHI = IntPolynomial((1, -2, 1, -2, 1))

small_polys = st.lists(st.integers(-9, 9), min_size=1, max_size=6).map(IntPolynomial)
nonzero_polys = small_polys.filter(lambda p: not p.is_zero())


def test_degree_and_normalization():
    assert IntPolynomial((0, 0)).is_zero()
    assert IntPolynomial((3, 0, 0)).degree == 0
    assert IntPolynomial((0, 1)).degree == 1
    assert IntPolynomial((1, 2, 3)).leading == 3


def test_divide_exact_slice_of_length_polynomial():
    quotient = poly_divide_exact(CHI5, IntPolynomial((-1, 1)))
    assert quotient == IntPolynomial((1, -1, -1, -1, -1, 1))
    assert poly_divide_exact(quotient, IntPolynomial((1, 1))) == PHI


def test_divide_exact_by_one_is_identity():
    p = IntPolynomial((4, -1, 7))
    assert poly_divide_exact(p, IntPolynomial((1,))) == p


def test_divide_exact_rejects_remainder():
    with pytest.raises(NotDivisible):
        poly_divide_exact(IntPolynomial((1, 0, 1)), IntPolynomial((-1, 1)))


@given(a=nonzero_polys, b=nonzero_polys)
@settings(max_examples=60, deadline=None)
def test_divide_exact_roundtrip(a, b):
    assert poly_divide_exact(a * b, b) == a


def test_strip_cyclotomic_on_length_polynomial():
    assert strip_cyclotomic(CHI5, 16) == PHI
    assert strip_cyclotomic(PHI, 16) == PHI
    assert strip_cyclotomic(cyclotomic(4), 16) == IntPolynomial((1,))


def test_strip_cyclotomic_idempotent():
    for k in (1, 2, 3, 6, 12):
        p = CHI5 * cyclotomic(k)
        once = strip_cyclotomic(p, 20)
        assert strip_cyclotomic(once, 20) == once == PHI


def test_cyclotomic_basics():
    assert cyclotomic(1) == IntPolynomial((-1, 1))
    assert cyclotomic(2) == IntPolynomial((1, 1))
    assert cyclotomic(3) == IntPolynomial((1, 1, 1))
    assert cyclotomic(4) == IntPolynomial((1, 0, 1))
    assert cyclotomic(12) == IntPolynomial((1, 0, -1, 0, 1))


def test_product_poly_rational_roots():
    assert min_poly_of_product(IntPolynomial((-2, 1)), IntPolynomial((-2, 1))) == IntPolynomial((-4, 1))


def test_product_with_reciprocal_contains_one():
    out = min_poly_of_product(PHI, PHI.reverse())
    assert out(1) == 0


def test_product_roots_match_numeric_oracle():
    import numpy as np

    out = min_poly_of_product(PHI, PHI)
    largest = np.roots(list(reversed(out.coeffs))).real.max()
    phi_roots = np.roots([1, -2, 1, -2, 1])
    delta = max(r.real for r in phi_roots if abs(r.imag) < 1e-12)
    assert abs(largest - delta**2) < 1e-8


def test_power_poly_degree_and_root():
    import numpy as np

    p2 = min_poly_of_power(PHI, 2)
    assert p2.degree == 4
    phi_roots = np.roots([1, -2, 1, -2, 1])
    delta = max(r.real for r in phi_roots if abs(r.imag) < 1e-12)
    r2 = np.roots(list(reversed(p2.coeffs)))
    assert min(abs(r - delta**2) for r in r2) < 1e-8


def test_bareiss_determinant():
    assert det_bareiss([[1, 2], [3, 4]]) == -2
    assert det_bareiss([[2, 0, 0], [0, 3, 0], [0, 0, 5]]) == 30
    assert det_bareiss([[1, 2], [2, 4]]) == 0
    assert det_bareiss([[0, 1], [1, 0]]) == -1


def test_resultant_shares_root_iff_zero():
    p = IntPolynomial((-1, 1)) * IntPolynomial((-3, 1))
    q = IntPolynomial((-3, 1)) * IntPolynomial((1, 1))
    assert resultant(p, q) == 0
    assert resultant(IntPolynomial((-1, 1)), IntPolynomial((1, 1))) != 0


def test_squarefree_part():
    p = IntPolynomial((-1, 1)) ** 3 * IntPolynomial((1, 1))
    sf = squarefree_part(p)
    assert sf == IntPolynomial((-1, 1)) * IntPolynomial((1, 1))
    assert is_squarefree(sf)


@given(p=nonzero_polys, q=nonzero_polys)
@settings(max_examples=40, deadline=None)
def test_gcd_divides_both(p, q):
    from coxforge.intpoly import divides

    g = gcd(p, q)
    if g.degree >= 1:
        assert divides(g, p) and divides(g, q)


def test_reciprocal_detection():
    assert PHI.is_reciprocal()
    assert not CHI5.is_reciprocal()
    assert IntPolynomial((1, 3, 1)).is_reciprocal()
