"""The projective plane over a number field and quadratic birational maps.

A basic map is the composition t_minus . J3 . t_plus^(-1) of the standard
Cremona involution with two invertible linear maps.  Its three indeterminacy
points are the t_plus-images of the coordinate vertices and its exceptional
lines are the t_plus-images of the coordinate lines; the inverse map has the
mirrored structure with t_plus and t_minus exchanged.  Orbit data is computed
by exact forward tracking of the collapsed exceptional points.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import Indeterminate, NotBasic
from .numfield import NFElem, NumberField
from .perm import IDENTITY, Perm3


class ProjPoint:
    """Point of P^2 with NFElem coordinates; equality up to nonzero scalar."""

    __slots__ = ("field", "coords")

    def __init__(self, field: NumberField, coords):
        coords = tuple(c if isinstance(c, NFElem) else field.from_rational(c) for c in coords)
        if len(coords) != 3:
            raise ValueError("projective point needs 3 homogeneous coordinates")
        if all(c.is_zero() for c in coords):
            raise ValueError("(0:0:0) is not a projective point")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, *a):
        raise AttributeError("ProjPoint is immutable")

    def canonical(self) -> tuple:
        """Coordinates scaled so the last nonzero one equals 1."""
        for i in (2, 1, 0):
            if not self.coords[i].is_zero():
                inv = self.coords[i].inverse()
                return tuple(c * inv for c in self.coords)
        raise AssertionError("unreachable")

    def __eq__(self, other):
        if not isinstance(other, ProjPoint) or self.field != other.field:
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self):
        return hash((self.field, self.canonical()))

    def __repr__(self):
        return "[" + " : ".join(repr(c) for c in self.coords) + "]"


class ProjLinearMap:
    """Invertible 3x3 matrix over the field; equality up to scalar."""

    __slots__ = ("field", "matrix", "_inv")

    def __init__(self, field: NumberField, matrix):
        rows = tuple(
            tuple(c if isinstance(c, NFElem) else field.from_rational(c) for c in row)
            for row in matrix
        )
        if len(rows) != 3 or any(len(r) != 3 for r in rows):
            raise ValueError("matrix must be 3x3")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "matrix", rows)
        object.__setattr__(self, "_inv", None)
        if self.det().is_zero():
            raise ValueError("matrix is singular")

    def __setattr__(self, *a):
        raise AttributeError("ProjLinearMap is immutable")

    def det(self) -> NFElem:
        m = self.matrix
        return (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )

    def inverse(self) -> "ProjLinearMap":
        cached = self._inv
        if cached is None:
            m = self.matrix
            cof = [
                [
                    m[(i + 1) % 3][(j + 1) % 3] * m[(i + 2) % 3][(j + 2) % 3]
                    - m[(i + 1) % 3][(j + 2) % 3] * m[(i + 2) % 3][(j + 1) % 3]
                    for i in range(3)
                ]
                for j in range(3)
            ]
            cached = ProjLinearMap(self.field, cof)
            object.__setattr__(self, "_inv", cached)
            object.__setattr__(cached, "_inv", self)
        return cached

    def apply(self, p: ProjPoint) -> ProjPoint:
        m = self.matrix
        return ProjPoint(
            self.field,
            tuple(
                m[i][0] * p.coords[0] + m[i][1] * p.coords[1] + m[i][2] * p.coords[2]
                for i in range(3)
            ),
        )

    def compose(self, other: "ProjLinearMap") -> "ProjLinearMap":
        a, b = self.matrix, other.matrix
        rows = [
            [sum((a[i][k] * b[k][j] for k in range(3)), self.field.zero()) for j in range(3)]
            for i in range(3)
        ]
        return ProjLinearMap(self.field, rows)

    def column(self, j: int) -> ProjPoint:
        return ProjPoint(self.field, tuple(self.matrix[i][j] for i in range(3)))

    def proportional_to(self, other: "ProjLinearMap") -> bool:
        """Equality as projective transformations."""
        ratio = None
        for i in range(3):
            for j in range(3):
                a, b = self.matrix[i][j], other.matrix[i][j]
                if a.is_zero() != b.is_zero():
                    return False
                if not a.is_zero():
                    r = a / b
                    if ratio is None:
                        ratio = r
                    elif r != ratio:
                        return False
        return True

    def __repr__(self):
        return f"ProjLinearMap({self.matrix!r})"


def proj_identity(field: NumberField) -> ProjLinearMap:
    return ProjLinearMap(field, ((1, 0, 0), (0, 1, 0), (0, 0, 1)))


# -- the three quadratic involutions ------------------------------------------


def _j3(c):
    return (c[1] * c[2], c[0] * c[2], c[0] * c[1])


def _j2(c):
    return (c[0] * c[2], c[1] * c[2], c[0] * c[0])


def _j1(c):
    return (c[0] * c[0], c[0] * c[1], c[1] * c[1] - c[0] * c[2])


_INVOLUTIONS = {"J1": _j1, "J2": _j2, "J3": _j3}

# indeterminacy points of each involution, as coordinate-vertex indices
_BASE_VERTICES = {"J1": (2,), "J2": (1, 2), "J3": (0, 1, 2)}
# for each exceptional line {x_i = 0} the vertex index it collapses to
_COLLAPSE = {"J1": ((0, 2),), "J2": ((0, 1), (2, 2)), "J3": ((0, 0), (1, 1), (2, 2))}


def cremona_apply(kind: str, p: ProjPoint) -> ProjPoint:
    """Apply one of the standard involutions J1, J2, J3."""
    if kind not in _INVOLUTIONS:
        raise ValueError(f"unknown involution kind {kind!r}")
    img = _INVOLUTIONS[kind](p.coords)
    if all(c.is_zero() for c in img):
        raise Indeterminate(p)
    return ProjPoint(p.field, img)


@dataclass(frozen=True)
class QuadraticMap:
    """A quadratic map t_minus . J . t_plus^(-1); kind J3 is the basic case."""

    kind: str
    t_plus: ProjLinearMap
    t_minus: ProjLinearMap

    def __post_init__(self):
        if self.kind not in _INVOLUTIONS:
            raise ValueError(f"unknown involution kind {self.kind!r}")
        if self.t_plus.field != self.t_minus.field:
            raise ValueError("linear parts live in different fields")

    @property
    def field(self) -> NumberField:
        return self.t_plus.field

    def is_basic(self) -> bool:
        return self.kind == "J3"

    def indeterminacy_points(self) -> tuple[ProjPoint, ...]:
        """p_i^+ = t_plus(e_i) over the involution's base vertices."""
        return tuple(self.t_plus.column(i) for i in _BASE_VERTICES[self.kind])

    def collapse_targets(self) -> tuple[tuple[int, ProjPoint], ...]:
        """(line index, image point) for each exceptional line {x_i = 0}."""
        return tuple(
            (i, self.t_minus.column(v)) for i, v in _COLLAPSE[self.kind]
        )


def quad_apply(f: QuadraticMap, p: ProjPoint) -> ProjPoint:
    """Exact image of a point not in the indeterminacy locus."""
    y = f.t_plus.inverse().apply(p)
    img = _INVOLUTIONS[f.kind](y.coords)
    if all(c.is_zero() for c in img):
        for which, q in enumerate(f.indeterminacy_points(), start=1):
            if q == p:
                raise Indeterminate(p, which)
        raise Indeterminate(p)
    return f.t_minus.apply(ProjPoint(f.field, img))


def inverse(f: QuadraticMap) -> QuadraticMap:
    """Inverse of a basic map: exchange the two linear parts."""
    if not f.is_basic():
        raise NotBasic("only basic (J3) maps are inverted here")
    return QuadraticMap("J3", f.t_minus, f.t_plus)


@dataclass(frozen=True)
class ExceptionalData:
    p_plus: tuple[ProjPoint, ...]
    p_minus: tuple[ProjPoint, ...]
    exc_lines: tuple[tuple[NFElem, NFElem, NFElem], ...]


def exceptional_data(f: QuadraticMap) -> ExceptionalData:
    """Indeterminacy points of f and f^(-1) and the exceptional line covectors.

    The covector of E_i^+ = t_plus({x_i = 0}) is row i of t_plus^(-1); a point
    q lies on the line iff the covector pairs to zero with q.
    """
    if not f.is_basic():
        raise NotBasic("exceptional data is defined for basic maps")
    p_plus = tuple(f.t_plus.column(i) for i in range(3))
    p_minus = tuple(f.t_minus.column(i) for i in range(3))
    inv_rows = f.t_plus.inverse().matrix
    return ExceptionalData(p_plus, p_minus, tuple(inv_rows[i] for i in range(3)))


def on_line(covector, p: ProjPoint) -> bool:
    val = covector[0] * p.coords[0] + covector[1] * p.coords[1] + covector[2] * p.coords[2]
    return val.is_zero()


def points_on_line(field: NumberField, covector, params) -> list[ProjPoint]:
    """Sample points of the line (a basis pair combined by the given parameters)."""
    a, b, c = covector
    if not c.is_zero():
        u = ProjPoint(field, (c, field.zero(), -a))
        v = ProjPoint(field, (field.zero(), c, -b))
    elif not b.is_zero():
        u = ProjPoint(field, (b, -a, field.zero()))
        v = ProjPoint(field, (field.zero(), field.zero(), field.one()))
    else:
        u = ProjPoint(field, (field.zero(), field.one(), field.zero()))
        v = ProjPoint(field, (field.zero(), field.zero(), field.one()))
    out = []
    for t in params:
        coords = tuple(cu + field.from_rational(t) * cv for cu, cv in zip(u.coords, v.coords))
        if not all(c0.is_zero() for c0 in coords):
            out.append(ProjPoint(field, coords))
    return out


@dataclass(frozen=True)
class OrbitData:
    """Orbit lengths (None marks infinite-at-bound), the matching permutation,
    and the line rotation tau when the map fixes the concurrent-lines cubic."""

    lengths: tuple[Optional[int], ...]
    sigma: Optional[Perm3]
    tau: Optional[Perm3]
    max_iter: int

    def all_finite(self) -> bool:
        return all(x is not None for x in self.lengths)

    def key(self):
        return (self.lengths, self.sigma.cycle_notation() if self.sigma else None)


def orbit_data(f: QuadraticMap, max_iter: int = 100) -> OrbitData:
    """Track the collapsed exceptional points forward until they hit the
    indeterminacy locus (exact point equality), up to max_iter steps."""
    if max_iter < 1:
        raise ValueError("max_iter must be >= 1")
    plus_points = list(f.indeterminacy_points())

    def track(start: ProjPoint):
        current = start
        count = 1
        while count <= max_iter:
            for j, q in enumerate(plus_points, start=1):
                if q == current:
                    return count, j
            try:
                current = quad_apply(f, current)
            except Indeterminate:
                # collapsed onto a point of the indeterminacy locus that is not
                # a tracked vertex image; treat as unresolved at the bound
                return None, None
            count += 1
        return None, None

    if f.kind == "J3":
        lengths = []
        images = []
        for i, target in f.collapse_targets():
            n_i, j = track(target)
            lengths.append(n_i)
            images.append(j)
        sigma = None
        if all(x is not None for x in lengths) and sorted(images) == [1, 2, 3]:
            sigma = Perm3(tuple(images))
        tau = _line_rotation(f)
        return OrbitData(tuple(lengths), sigma, tau, max_iter)

    # non-basic kinds: repeated lengths with the identity permutation
    targets = f.collapse_targets()
    tracked = {i: track(target)[0] for i, target in targets}
    if f.kind == "J2":
        n1 = tracked.get(0)
        n3 = tracked.get(2)
        lengths = (n1, n1, n3)
    else:
        n1 = tracked.get(0)
        lengths = (n1, n1, n1)
    sigma = IDENTITY if all(x is not None for x in lengths) else None
    return OrbitData(lengths, sigma, None, max_iter)


def _line_rotation(f: QuadraticMap):
    from .cubic import restriction_of
    from .errors import NotCubicFixing

    try:
        return restriction_of(f).tau
    except (NotCubicFixing, Indeterminate):
        return None
