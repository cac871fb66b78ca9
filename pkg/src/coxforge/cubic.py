"""The invariant cubic made of three lines through [1:0:0].

Points carry affine coordinates (t, i): line 1 is parametrized by [-t:1:1],
line 2 by [t:1:0], line 3 by [t:0:1], and the common point of the three lines
is t = infinity on every line.  With this parametrization three points, one
per line, are collinear exactly when their parameters sum to zero.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import BadConfiguration, Indeterminate, NotCubicFixing
from .numfield import NFElem, NumberField
from .perm import Perm3
from .plane import ProjPoint, QuadraticMap, quad_apply

INFINITY = "inf"


@dataclass(frozen=True)
class CubicPoint:
    """Affine parameter on one of the three concurrent lines; t may be the
    INFINITY sentinel for the common (singular) point."""

    field: NumberField
    t: object  # NFElem or INFINITY
    line: int

    def __post_init__(self):
        if self.line not in (1, 2, 3):
            raise ValueError("line index must be 1, 2 or 3")
        if self.t is not INFINITY and not isinstance(self.t, NFElem):
            object.__setattr__(self, "t", self.field.from_rational(self.t))

    def is_singular(self) -> bool:
        return self.t is INFINITY

    def __eq__(self, other):
        if not isinstance(other, CubicPoint):
            return NotImplemented
        if self.is_singular() or other.is_singular():
            return self.is_singular() and other.is_singular()
        return self.line == other.line and self.t == other.t

    def __hash__(self):
        if self.is_singular():
            return hash((self.field, INFINITY))
        return hash((self.field, self.line, self.t))


def embed(p: CubicPoint) -> ProjPoint:
    """Homogeneous coordinates of the point."""
    field = p.field
    if p.is_singular():
        return ProjPoint(field, (field.one(), field.zero(), field.zero()))
    t = p.t
    if p.line == 1:
        return ProjPoint(field, (-t, field.one(), field.one()))
    if p.line == 2:
        return ProjPoint(field, (t, field.one(), field.zero()))
    return ProjPoint(field, (t, field.zero(), field.one()))


def from_proj(field: NumberField, p: ProjPoint) -> Optional[CubicPoint]:
    """Recover cubic coordinates from a projective point, or None if it is not
    on any of the three lines."""
    x, y, z = p.coords
    if y.is_zero() and z.is_zero():
        return CubicPoint(field, INFINITY, 1)
    if y == z and not y.is_zero():
        return CubicPoint(field, -x / y, 1)
    if z.is_zero():
        return CubicPoint(field, x / y, 2)
    if y.is_zero():
        return CubicPoint(field, x / z, 3)
    return None


def collinear(p1: CubicPoint, p2: CubicPoint, p3: CubicPoint) -> bool:
    """True iff the parameters sum to zero; cross-validated against the
    determinant of the embedded coordinates."""
    pts = (p1, p2, p3)
    if sorted(q.line for q in pts) != [1, 2, 3]:
        raise BadConfiguration("need exactly one point per line")
    if any(q.is_singular() for q in pts):
        det_zero = _det_test(pts)
        return det_zero
    total = p1.t + p2.t + p3.t
    by_params = total.is_zero()
    if by_params != _det_test(pts):
        raise AssertionError("parameter test and determinant test disagree")
    return by_params


def _det_test(pts) -> bool:
    rows = [embed(q).coords for q in pts]
    det = (
        rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1])
        - rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0])
        + rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0])
    )
    return det.is_zero()


@dataclass(frozen=True)
class RestrictionMap:
    """Action (t, i) -> (a*t + b, tau(i)) induced on the cubic; the multiplier
    a is the determinant of the map in the anticanonical sense."""

    a: NFElem
    b: NFElem
    tau: Perm3

    def apply(self, p: CubicPoint) -> CubicPoint:
        if p.is_singular():
            return p
        return CubicPoint(p.field, self.a * p.t + self.b, self.tau(p.line))

    def compose(self, other: "RestrictionMap") -> "RestrictionMap":
        """self after other."""
        return RestrictionMap(
            self.a * other.a, self.a * other.b + self.b, self.tau * other.tau
        )

    def inverse(self) -> "RestrictionMap":
        ainv = self.a.inverse()
        return RestrictionMap(ainv, -(ainv * self.b), self.tau.inverse())


_SAMPLE_PARAMS = (Fraction(1), Fraction(2), Fraction(3), Fraction(5))


def restriction_of(f: QuadraticMap, samples=_SAMPLE_PARAMS) -> RestrictionMap:
    """Recover (a, b, tau) from exact images of sample points on each line.

    Four points per line are tested: a degree-2 map that agrees with a
    line-preserving affine action on that many points of a line agrees on the
    whole line.  Raises NotCubicFixing if any image leaves the cubic.
    """
    field = f.field
    fits = []
    for line in (1, 2, 3):
        images = []
        candidates = list(samples) + [Fraction(7), Fraction(11), Fraction(13), Fraction(17)]
        for t in candidates:
            if len(images) == len(samples):
                break
            src = CubicPoint(field, t, line)
            try:
                img_pt = quad_apply(f, embed(src))
            except Indeterminate:
                continue  # sample happened to be a base point; take the next one
            img = from_proj(field, img_pt)
            if img is None or img.is_singular():
                raise NotCubicFixing(f"image of line {line} sample left the cubic")
            images.append((src.t, img))
        if len(images) < len(samples):
            raise NotCubicFixing(f"could not collect enough samples on line {line}")
        target_lines = {img.line for _, img in images}
        if len(target_lines) != 1:
            raise NotCubicFixing(f"line {line} does not map to a single line")
        (t1, i1), (t2, i2) = images[0], images[1]
        denom = t1 - t2
        a = (i1.t - i2.t) / denom
        b = i1.t - a * t1
        for t_src, img in images[2:]:
            if a * t_src + b != img.t:
                raise NotCubicFixing("images of one line are not affine in the parameter")
        fits.append((a, b, target_lines.pop()))
    a0, b0, _ = fits[0]
    if any(a != a0 or b != b0 for a, b, _ in fits[1:]):
        raise NotCubicFixing("the three lines report different affine actions")
    if a0.is_zero():
        raise NotCubicFixing("degenerate (constant) restriction")
    tau = Perm3((fits[0][2], fits[1][2], fits[2][2]))
    if sorted(tau.images) != [1, 2, 3]:
        raise NotCubicFixing("line images do not form a permutation")
    # the singular point must be fixed as well
    sing = ProjPoint(field, (1, 0, 0))
    try:
        if quad_apply(f, sing) != sing:
            raise NotCubicFixing("the common point of the three lines is not fixed")
    except Indeterminate as exc:
        raise NotCubicFixing("the common point of the three lines is a base point") from exc
    return RestrictionMap(a0, b0, tau)


def nonodal_kernel(n: int):
    """Integer relations sum_j m_j * (1 + t_j) = 0 among the base parameters.

    Expands each 1 + t_j in the power basis of the construction field and
    returns a primitive basis of the integer kernel lattice, together with a
    report on its intersection with the nonnegative orthant.
    """
    from .diller import solve_parameters

    sol = solve_parameters(n)
    d = sol.field.degree
    scale = 1 + 2 * sol.alpha**n  # clears the shared denominator, nonzero
    columns = []
    for j in range(1, n + 1):
        val = (1 + sol.t_series[j - 1]) * scale
        columns.append([Fraction(c) for c in val.coeffs])
    basis = _integer_kernel(columns, d)
    report = _nonnegative_intersection(basis, n)
    return {"n": n, "basis": basis, "nonnegative_intersection": report}


def _integer_kernel(columns, dim):
    """Primitive integer basis of { m : sum_j m_j * columns[j] = 0 }."""
    import math

    ncols = len(columns)
    rows = [[columns[j][i] for j in range(ncols)] for i in range(dim)]
    # rational row reduction
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, dim) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(dim):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == dim:
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for ri, pc in enumerate(pivots):
            vec[pc] = -rows[ri][fc]
        lcm = 1
        for x in vec:
            lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
        ints = [int(x * lcm) for x in vec]
        g = 0
        for x in ints:
            g = math.gcd(g, abs(x))
        ints = [x // g for x in ints]
        lead = next(x for x in ints if x != 0)
        if lead < 0:
            ints = [-x for x in ints]
        basis.append(tuple(ints))
    return basis


def _nonnegative_intersection(basis, n, search_bound: int = 20):
    """Exact answer for kernels of rank <= 1; bounded witness search above."""
    if not basis:
        return {"trivial": True, "method": "empty kernel"}
    if len(basis) == 1:
        v = basis[0]
        has_pos = any(x > 0 for x in v)
        has_neg = any(x < 0 for x in v)
        trivial = has_pos and has_neg
        return {"trivial": trivial, "method": "rank-1 sign analysis"}
    import itertools

    for combo in itertools.product(range(-search_bound, search_bound + 1), repeat=len(basis)):
        if all(c == 0 for c in combo):
            continue
        vec = [sum(c * b[i] for c, b in zip(combo, basis)) for i in range(n)]
        if all(x >= 0 for x in vec) and any(x > 0 for x in vec):
            return {"trivial": False, "method": "witness search", "witness": vec}
    return {
        "trivial": None,
        "method": f"no witness with coefficients up to {search_bound}",
    }
