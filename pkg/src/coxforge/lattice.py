"""The lattice Z^(1,n), its reflection group, and exact spectral data.

Vectors are integer tuples (x0, ..., xn) paired by the diagonal form
diag(1, -1, ..., -1).  Isometries are (n+1)x(n+1) integer matrices acting on
column coordinate vectors; construction verifies form preservation exactly.
Characteristic polynomials are obtained by evaluating det(k*I - M) at integer
points with fraction-free elimination and interpolating.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DuplicateIndices, IndexOutOfRange
from .intpoly import IntPolynomial, det_bareiss, interpolate_int
from .roots import EPS_DEFAULT, Enclosure, spectral_radius_of_poly


@dataclass(frozen=True)
class Lattice:
    """Z^(1,n) with basis e_0..e_n and form diag(1, -1, ..., -1)."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("rank parameter must be >= 1")

    @property
    def dim(self) -> int:
        return self.n + 1

    def pair(self, x, y) -> int:
        return x[0] * y[0] - sum(a * b for a, b in zip(x[1:], y[1:]))

    def basis_vector(self, i: int):
        v = [0] * self.dim
        v[i] = 1
        return tuple(v)

    def kappa(self):
        """-3e_0 + e_1 + ... + e_n (fixed by every reflection group element)."""
        return tuple([-3] + [1] * self.n)

    def simple_root(self, i: int):
        """alpha_0 = e_0-e_1-e_2-e_3, alpha_i = e_i - e_(i+1) for i >= 1."""
        if i == 0:
            if self.n < 3:
                raise IndexOutOfRange("alpha_0 needs rank >= 3")
            v = [0] * self.dim
            v[0], v[1], v[2], v[3] = 1, -1, -1, -1
            return tuple(v)
        if not 1 <= i <= self.n - 1:
            raise IndexOutOfRange(f"simple root index {i} outside 0..{self.n - 1}")
        v = [0] * self.dim
        v[i], v[i + 1] = 1, -1
        return tuple(v)


class LatticeIsometry:
    """Integer matrix preserving the signature-(1,n) intersection form."""

    __slots__ = ("lattice", "matrix")

    def __init__(self, lattice: Lattice, matrix, check: bool = True):
        matrix = tuple(tuple(int(c) for c in row) for row in matrix)
        if len(matrix) != lattice.dim or any(len(r) != lattice.dim for r in matrix):
            raise ValueError("matrix size does not match the lattice rank")
        object.__setattr__(self, "lattice", lattice)
        object.__setattr__(self, "matrix", matrix)
        if check and not self._preserves_form():
            raise ValueError("matrix does not preserve the intersection form")

    def __setattr__(self, *a):
        raise AttributeError("LatticeIsometry is immutable")

    def _preserves_form(self) -> bool:
        n = self.lattice.dim
        sgn = [1] + [-1] * (n - 1)
        m = self.matrix
        for i in range(n):
            for j in range(i, n):
                val = sum(sgn[k] * m[k][i] * m[k][j] for k in range(n))
                expect = sgn[i] if i == j else 0
                if val != expect:
                    return False
        return True

    # -- group operations ---------------------------------------------------

    def __matmul__(self, other: "LatticeIsometry") -> "LatticeIsometry":
        if self.lattice != other.lattice:
            raise ValueError("isometries act on different lattices")
        a, b = self.matrix, other.matrix
        n = self.lattice.dim
        bt = list(zip(*b))
        rows = tuple(
            tuple(sum(ra[k] * cb[k] for k in range(n)) for cb in bt) for ra in a
        )
        return LatticeIsometry(self.lattice, rows, check=False)

    def inverse(self) -> "LatticeIsometry":
        # M^T F M = F with F diagonal +-1, so M^(-1) = F M^T F stays integral
        n = self.lattice.dim
        sgn = [1] + [-1] * (n - 1)
        m = self.matrix
        rows = tuple(
            tuple(sgn[i] * m[j][i] * sgn[j] for j in range(n)) for i in range(n)
        )
        return LatticeIsometry(self.lattice, rows, check=False)

    def power(self, k: int) -> "LatticeIsometry":
        if k < 0:
            return self.inverse().power(-k)
        result = identity(self.lattice)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def apply(self, vector):
        return tuple(sum(r[j] * vector[j] for j in range(len(vector))) for r in self.matrix)

    def fixes(self, vector) -> bool:
        return self.apply(vector) == tuple(vector)

    def trace(self) -> int:
        return sum(self.matrix[i][i] for i in range(self.lattice.dim))

    def is_identity(self) -> bool:
        return self == identity(self.lattice)

    def order(self, bound: int = 64):
        """Multiplicative order, or None if it exceeds the bound."""
        acc = self
        for k in range(1, bound + 1):
            if acc.is_identity():
                return k
            acc = acc @ self
        return None

    def __eq__(self, other):
        return (
            isinstance(other, LatticeIsometry)
            and self.lattice == other.lattice
            and self.matrix == other.matrix
        )

    def __hash__(self):
        return hash((self.lattice, self.matrix))

    def __repr__(self):
        return f"LatticeIsometry(n={self.lattice.n}, {self.matrix!r})"


def identity(lattice: Lattice) -> LatticeIsometry:
    n = lattice.dim
    return LatticeIsometry(
        lattice, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)),
        check=False,
    )


def reflection_through(lattice: Lattice, root) -> LatticeIsometry:
    """x -> x + (x . root) root for a vector of self-intersection -2."""
    if lattice.pair(root, root) != -2:
        raise ValueError("reflection vector must have self-intersection -2")
    cols = []
    for j in range(lattice.dim):
        e = lattice.basis_vector(j)
        pairing = lattice.pair(e, root)
        cols.append(tuple(e[i] + pairing * root[i] for i in range(lattice.dim)))
    rows = tuple(zip(*cols))
    return LatticeIsometry(lattice, rows, check=False)


def simple_reflection(i: int, n: int) -> LatticeIsometry:
    """The generator s_i of W_n acting on Z^(1,n)."""
    if n < 3:
        raise IndexOutOfRange("W_n needs n >= 3")
    if not 0 <= i <= n - 1:
        raise IndexOutOfRange(f"reflection index {i} outside 0..{n - 1}")
    lat = Lattice(n)
    return reflection_through(lat, lat.simple_root(i))


def cremona_reflection(i: int, j: int, k: int, n: int) -> LatticeIsometry:
    """Reflection through e_0 - e_i - e_j - e_k."""
    if len({i, j, k}) != 3:
        raise DuplicateIndices(f"indices {i}, {j}, {k} must be distinct")
    for idx in (i, j, k):
        if not 1 <= idx <= n:
            raise IndexOutOfRange(f"index {idx} outside 1..{n}")
    lat = Lattice(n)
    v = [0] * lat.dim
    v[0] = 1
    v[i] = v[j] = v[k] = -1
    return reflection_through(lat, tuple(v))


def word(n: int, indices) -> LatticeIsometry:
    """Product of simple reflections, rightmost applied first."""
    lat = Lattice(n)
    acc = identity(lat)
    for i in indices:
        acc = acc @ simple_reflection(i, n)
    return acc


def char_poly(w: LatticeIsometry) -> IntPolynomial:
    """Monic characteristic polynomial det(t*I - M), exactly."""
    n = w.lattice.dim
    m = w.matrix
    points = []
    for k in range(n + 1):
        rows = [
            [(k if i == j else 0) - m[i][j] for j in range(n)] for i in range(n)
        ]
        points.append((k, det_bareiss(rows)))
    p = interpolate_int(points)
    assert p.degree == n and p.is_monic()
    return p


def spectral_radius(w: LatticeIsometry, eps: Fraction = EPS_DEFAULT) -> Enclosure:
    """Enclosure (width <= eps) of the largest eigenvalue modulus."""
    return spectral_radius_of_poly(char_poly(w), eps)


def lefschetz_number(w: LatticeIsometry, k: int) -> int:
    """2 + trace(w^k): the fixed-point count weight for a surface automorphism
    whose Picard action is w (the two extra cohomology groups contribute 1 each)."""
    if k < 1:
        raise ValueError("power must be >= 1")
    return 2 + w.power(k).trace()


def coxeter_graph_order(i: int, j: int) -> int:
    """Order of s_i s_j prescribed by the E_n diagram (chain 1-2-...-(n-1)
    with node 0 attached to node 3)."""
    if i == j:
        return 1
    a, b = min(i, j), max(i, j)
    joined = (a >= 1 and b == a + 1) or (a == 0 and b == 3)
    return 3 if joined else 2
