"""Canonical JSON encodings for the value types.

Polynomials are arrays of decimal integer strings in ascending degree order;
rationals are "p/q" strings; field elements carry their minimal polynomial and
root index; isometries are row-major integer matrices.  Dumps sort keys and
use compact separators so identical values serialize byte-identically.
"""
from __future__ import annotations

import json
from fractions import Fraction

from .cubic import CubicPoint
from .intpoly import IntPolynomial
from .lattice import LatticeIsometry
from .numfield import NFElem
from .plane import OrbitData, ProjLinearMap, ProjPoint, QuadraticMap
from .realize import Certificate
from .roots import Enclosure, RootClassification
from .salem import SalemVerdict

SCHEMA_VERSION = 1


def frac_str(x) -> str:
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}" if f.denominator != 1 else str(f.numerator)


def poly_json(p: IntPolynomial):
    return [str(c) for c in p.coeffs]


def poly_from_json(data) -> IntPolynomial:
    return IntPolynomial(int(c) for c in data)


def enclosure_json(e: Enclosure):
    return [frac_str(e.lo), frac_str(e.hi)]


def nfelem_json(x: NFElem):
    return {
        "minpoly": poly_json(x.field.minpoly),
        "root_index": x.field.chosen_root.index,
        "coeffs": [frac_str(c) for c in x.coeffs],
    }


def isometry_json(w: LatticeIsometry):
    return [list(row) for row in w.matrix]


def point_json(p: ProjPoint):
    return [nfelem_json(c) for c in p.coords]


def cubic_point_json(p: CubicPoint):
    return {"t": None if p.is_singular() else nfelem_json(p.t), "line": p.line}


def linear_map_json(m: ProjLinearMap):
    return [[nfelem_json(c) for c in row] for row in m.matrix]


def quad_map_json(f: QuadraticMap):
    return {
        "kind": f.kind,
        "t_plus": linear_map_json(f.t_plus),
        "t_minus": linear_map_json(f.t_minus),
    }


def orbit_data_json(d: OrbitData):
    return {
        "lengths": [x if x is not None else "inf" for x in d.lengths],
        "sigma": d.sigma.cycle_notation() if d.sigma else None,
        "tau": d.tau.cycle_notation() if d.tau else None,
        "max_iter": d.max_iter,
    }


def classification_json(c: RootClassification):
    return {
        "n_real_gt1": c.n_real_gt1,
        "n_real_in_unit": c.n_real_in_unit,
        "n_on_circle": c.n_on_circle,
        "n_off_circle_complex": c.n_off_circle_complex,
        "largest_real": enclosure_json(c.largest_real) if c.largest_real else None,
    }


def verdict_json(v: SalemVerdict):
    return {
        "is_salem": v.is_salem,
        "degree": v.degree,
        "largest_root": enclosure_json(v.largest_root) if v.largest_root else None,
        "witness": classification_json(v.witness) if v.witness else None,
        "reasons": list(v.reasons),
        "cyclotomic_factor_found": v.cyclotomic_factor_found,
    }


def certificate_json(cert: Certificate):
    return {
        "subject": cert.subject,
        "steps": [
            {"name": s.name, "value": _plain(s.value), "ok": s.ok} for s in cert.steps
        ],
        "conclusion": cert.conclusion,
        "all_values_exact": cert.all_values_exact,
    }


def _plain(value):
    """Best-effort conversion of step values to JSON-safe structures."""
    if isinstance(value, (str, int, bool)) or value is None:
        return value
    if isinstance(value, Fraction):
        return frac_str(value)
    if isinstance(value, Enclosure):
        return enclosure_json(value)
    if isinstance(value, IntPolynomial):
        return poly_json(value)
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    return str(value)


def dumps(payload: dict) -> str:
    """Deterministic rendering: schema header, sorted keys, compact separators."""
    body = {"schema": SCHEMA_VERSION}
    body.update(payload)
    return json.dumps(_plain(body), sort_keys=True, separators=(",", ":")) + "\n"
