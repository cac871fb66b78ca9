"""Construction of the quadratic maps fixing three concurrent lines.

For orbit length n the multiplier alpha is the largest real root of the Salem
factor of t^(n+1) - 2t^n + 2t - 1 and the base parameters are
t_j = -3 alpha^j / (1 + 2 alpha^n).  A map with line rotation tau has its
indeterminacy points at parameter 1 + t_n on each line and collapses its
exceptional lines to parameter 1 + t_1 on the rotated lines; the two linear
parts have those points as columns, each column scaled so its first
homogeneous coordinate is 1, which pins the map to fix the singular point.
Every constructed map is validated exactly: restriction (a, b, tau), orbit
data, and base-locus membership.
"""
from __future__ import annotations

from dataclasses import dataclass

from .cubic import CubicPoint, embed, from_proj, restriction_of
from .errors import ConstructionFailed, InadmissibleTau, NoSalemFactor
from .intpoly import IntPolynomial, strip_cyclotomic
from .numfield import NFElem, NumberField
from .perm import ALL_PERMS, IDENTITY, Perm3
from .plane import OrbitData, ProjLinearMap, QuadraticMap, orbit_data
from .salem import is_salem

_SOLUTION_CACHE: dict[int, "DillerSolution"] = {}


def length_polynomial(n: int) -> IntPolynomial:
    """t^(n+1) - 2 t^n + 2 t - 1."""
    coeffs = [0] * (n + 2)
    coeffs[0] = -1
    coeffs[1] = 2
    coeffs[n] = -2
    coeffs[n + 1] = 1
    return IntPolynomial(coeffs)


@dataclass(frozen=True)
class DillerSolution:
    """Field, multiplier and base locus shared by all maps of one orbit length."""

    n: int
    field: NumberField
    alpha: NFElem
    t_series: tuple[NFElem, ...]  # t_1 .. t_n
    base_points: tuple[CubicPoint, ...]  # ordered line-major: (i-1)*n + j

    @property
    def salem_factor(self) -> IntPolynomial:
        return self.field.minpoly

    def base_index(self, line: int, slot: int) -> int:
        """0-based position of the point (1 + t_slot, line) in base_points."""
        return (line - 1) * self.n + (slot - 1)

    def point(self, line: int, slot: int) -> CubicPoint:
        return self.base_points[self.base_index(line, slot)]


def solve_parameters(n: int) -> DillerSolution:
    """Build the construction field and base locus for orbit length n."""
    if n < 4:
        raise ValueError("orbit length must be >= 4")
    cached = _SOLUTION_CACHE.get(n)
    if cached is not None:
        return cached
    chi = length_polynomial(n)
    factor = strip_cyclotomic(chi, 60)
    if factor.degree < 4:
        raise NoSalemFactor(f"no degree >= 4 factor remains for n = {n}")
    verdict = is_salem(factor)
    if not verdict.is_salem:
        raise NoSalemFactor(f"stripped factor for n = {n} is not a Salem polynomial")
    field = NumberField.with_largest_root(factor)
    alpha = field.alpha()
    if not chi(alpha).is_zero():
        raise ConstructionFailed("the chosen root does not satisfy the length polynomial")
    denom = 1 + 2 * alpha**n
    t_series = tuple(-3 * alpha**j / denom for j in range(1, n + 1))
    params = [1 + t for t in t_series]
    if len(set(params)) != n or any(p.is_zero() for p in params):
        raise ConstructionFailed("base parameters failed the distinctness checks")
    base = tuple(
        CubicPoint(field, params[j], line) for line in (1, 2, 3) for j in range(n)
    )
    sol = DillerSolution(n, field, alpha, t_series, base)
    _SOLUTION_CACHE[n] = sol
    return sol


def _top_scaled_column(point: CubicPoint):
    coords = embed(point).coords
    inv = coords[0].inverse()
    return tuple(c * inv for c in coords)


@dataclass(frozen=True)
class ConstructedMap:
    """A validated quadratic map together with its construction data."""

    solution: DillerSolution
    tau: Perm3
    sigma: Perm3
    map: QuadraticMap
    data: OrbitData

    @property
    def n(self) -> int:
        return self.solution.n

    @property
    def field(self) -> NumberField:
        return self.solution.field


def admissible_taus(n: int) -> list[Perm3]:
    """Line rotations satisfying the necessary orbit-data constraints for
    equal lengths (n, n, n); every rotation passes them, so this is all of S3."""
    return list(ALL_PERMS)


def tau_for_sigma(sigma: Perm3, n: int) -> Perm3:
    """The canonical line rotation realizing orbit permutation sigma.

    Identity and transpositions use tau = sigma (transpositions only for odd
    n); three-cycles use tau = sigma when n = 1 mod 3 and tau = sigma^2 when
    n = 2 mod 3, and are unrealizable when 3 divides n.
    """
    if sigma.is_identity():
        return IDENTITY
    if sigma.is_transposition():
        if n % 2 == 0:
            raise InadmissibleTau(f"orbit permutation {sigma} needs odd n, got {n}")
        return sigma
    if n % 3 == 1:
        return sigma
    if n % 3 == 2:
        return sigma * sigma
    raise InadmissibleTau(f"orbit permutation {sigma} needs n not divisible by 3, got {n}")


def admissible_sigmas(n: int) -> list[Perm3]:
    out = []
    for sigma in ALL_PERMS:
        try:
            tau_for_sigma(sigma, n)
        except InadmissibleTau:
            continue
        out.append(sigma)
    return out


def construct_map(n: int, tau: Perm3, validate: bool = True) -> ConstructedMap:
    """Build the quadratic map with orbit length n and line rotation tau."""
    sol = solve_parameters(n)
    sigma = tau**n
    field = sol.field
    u_point = [CubicPoint(field, 1 + sol.t_series[n - 1], i) for i in (1, 2, 3)]
    v_point = [CubicPoint(field, 1 + sol.t_series[0], tau(i)) for i in (1, 2, 3)]
    t_plus = ProjLinearMap(field, _columns_to_rows([_top_scaled_column(p) for p in u_point]))
    t_minus = ProjLinearMap(field, _columns_to_rows([_top_scaled_column(p) for p in v_point]))
    qmap = QuadraticMap("J3", t_plus, t_minus)
    cm = ConstructedMap(sol, tau, sigma, qmap, orbit_data(qmap, max_iter=n + 2))
    if validate:
        problems = validation_report(cm)["failures"]
        if problems:
            raise ConstructionFailed("; ".join(problems))
    return cm


def _columns_to_rows(cols):
    return [[cols[j][i] for j in range(3)] for i in range(3)]


def validation_report(cm: ConstructedMap) -> dict:
    """Exact validation: restriction, orbit data, base locus, parameter sums."""
    sol, failures, checks = cm.solution, [], {}
    alpha, n = sol.alpha, sol.n

    try:
        rmap = restriction_of(cm.map)
        checks["restriction_multiplier_is_alpha"] = rmap.a == alpha
        checks["restriction_offset_is_one_minus_alpha"] = rmap.b == 1 - alpha
        checks["restriction_rotation_matches"] = rmap.tau == cm.tau
    except Exception as exc:
        checks["restriction_multiplier_is_alpha"] = False
        failures.append(f"restriction failed: {exc}")
        rmap = None

    expected = ((n, n, n), cm.sigma.cycle_notation())
    checks["orbit_data_matches"] = cm.data.key() == expected
    base_set = set(sol.base_points)
    orbit_points = set()
    ok = True
    for i, start in cm.map.collapse_targets():
        current = start
        for _ in range(n):
            cp = from_proj(sol.field, current)
            if cp is None or cp not in base_set:
                ok = False
                break
            orbit_points.add(cp)
            nxt = rmap.apply(cp) if rmap else None
            if nxt is None:
                break
            current = embed(nxt)
    checks["orbits_cover_base_locus"] = ok and orbit_points == base_set

    v = 1 + sol.t_series[0]
    u = 1 + sol.t_series[n - 1]
    checks["sum_minus_params"] = 3 * v == 3 * (alpha - 1)
    checks["sum_plus_params"] = (3 * u) * alpha == 3 * (1 - alpha)

    for name, okv in checks.items():
        if not okv:
            failures.append(name)
    return {"checks": checks, "failures": failures}


def six_maps_n5() -> dict[str, ConstructedMap]:
    """The six validated maps with orbit data (5, 5, 5, sigma), keyed by sigma."""
    out = {}
    for sigma in ALL_PERMS:
        tau = tau_for_sigma(sigma, 5)
        out[sigma.cycle_notation()] = construct_map(5, tau)
    return out


def reference_linear_parts():
    """The published form of the shared linear part S and the six T matrices,
    reconstructed from s = -1/(1 + t_5) and r = 1/(1 + t_1); used only for
    cross-checking the construction up to scalar."""
    sol = solve_parameters(5)
    alpha = sol.alpha
    s = (2 * alpha**5 + 1) / (alpha**5 - 1)
    r = (2 * alpha**5 + 1) / (2 * alpha**5 - 3 * alpha + 1)
    zero = sol.field.zero()
    S = ProjLinearMap(sol.field, [[1, 1, 1], [s, -s, zero], [s, zero, -s]])
    T = {
        "id": [[1, 1, 1], [-r, r, zero], [-r, zero, r]],
        "(12)": [[1, 1, 1], [r, -r, zero], [zero, -r, r]],
        "(13)": [[1, 1, 1], [zero, r, -r], [r, zero, -r]],
        "(23)": [[1, 1, 1], [-r, zero, r], [-r, r, zero]],
        "(123)": [[1, 1, 1], [zero, -r, r], [r, -r, zero]],
        "(132)": [[1, 1, 1], [r, zero, -r], [zero, r, -r]],
    }
    return S, {k: ProjLinearMap(sol.field, rows) for k, rows in T.items()}
