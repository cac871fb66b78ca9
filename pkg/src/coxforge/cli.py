"""Command-line front end.

Exit status 0 means every verification in the run passed, 1 means at least
one exact check failed, 2 is a usage error.  Output is deterministic for a
fixed configuration: randomness is seeded and JSON is canonicalized.
"""
from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from . import serialize
from .diller import construct_map, six_maps_n5, solve_parameters, validation_report
from .errors import CoxforgeError
from .groupengine import build_context, classify_subgroup, enumerate_words, verify_commutation, verify_dihedral
from .intpoly import IntPolynomial, strip_cyclotomic
from .lattice import char_poly, spectral_radius
from .perm import parse_perm
from .picard import bk_charpoly, cycles_of_action, errata_report, induced_action
from .plane import orbit_data
from .realize import displayed_action_comparison, nonrealizability_certificate
from .salem import LEHMER, is_salem, power_is_salem, product_class, salem_gap_report


def _parse_eps(text: str) -> Fraction:
    if "/" in text:
        num, den = text.split("/")
        return Fraction(int(num), int(den))
    return Fraction(text)


def make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("json", "text"), default="text")
    common.add_argument("--out", dest="out_path", default=None, help="write the report to a file")
    common.add_argument("--eps", default=None, help="enclosure width, e.g. 1/1000000000000")
    common.add_argument("--seed", type=int, default=2022)

    parser = argparse.ArgumentParser(
        prog="coxforge",
        description="exact construction and certification of quadratic plane "
        "maps fixing three concurrent lines, their lattice actions, and the "
        "generated automorphism group",
    )
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("construct", parents=[common], help="build and validate one map")
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--tau", default="id", help='line rotation, e.g. "(12)" or "id"')

    p = sub.add_parser("orbit", parents=[common], help="orbit data of a constructed map")
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--tau", default="id")
    p.add_argument("--max-iter", type=int, default=100)

    p = sub.add_parser("action", parents=[common], help="induced lattice action of a constructed map")
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--tau", default="id")

    p = sub.add_parser("charpoly", parents=[common], help="characteristic polynomial and its Salem factor")
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--tau", default="id")

    p = sub.add_parser("salem", parents=[common], help="Salem verdicts, powers, products, and the gap check")
    p.add_argument("--poly", default=None, help="JSON array of coefficients, ascending")
    p.add_argument("--power", type=int, default=None)
    p.add_argument("--product-with", dest="product_with", default=None)

    p = sub.add_parser("group", parents=[common], help="relations, normal forms, and the structure label")
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--max-len", type=int, default=6)
    p.add_argument("--certify", action="store_true")

    sub.add_parser("theoremc", parents=[common], help="the non-realizability certificate")
    sub.add_parser("errata", parents=[common], help="derived actions versus the printed rows")

    p = sub.add_parser("sweep", parents=[common], help="rotation sweep over a range of orbit lengths")
    p.add_argument("--n-min", type=int, default=4)
    p.add_argument("--n-max", type=int, default=7)

    return parser


def run(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help()
        return 2
    eps = None
    env_eps = os.environ.get("COXFORGE_EPS")
    if args.eps is not None:
        eps = _parse_eps(args.eps)
    elif env_eps:
        eps = _parse_eps(env_eps)
    eps = eps or Fraction(1, 10**12)

    try:
        payload, failed = _dispatch(args, eps)
    except CoxforgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, KeyError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2

    if args.output == "json":
        text = serialize.dumps(payload)
    else:
        text = _render_text(payload)
    if args.out_path:
        with open(args.out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 1 if failed else 0


def _dispatch(args, eps):
    cmd = args.command
    if cmd == "construct":
        cm = construct_map(args.n, parse_perm(args.tau))
        rep = validation_report(cm)
        payload = {
            "command": "construct",
            "n": args.n,
            "tau": cm.tau.cycle_notation(),
            "sigma": cm.sigma.cycle_notation(),
            "map": serialize.quad_map_json(cm.map),
            "base_locus": [serialize.cubic_point_json(p) for p in cm.solution.base_points],
            "multiplier_minpoly": serialize.poly_json(cm.solution.salem_factor),
            "orbit_data": serialize.orbit_data_json(cm.data),
            "validation": rep["checks"],
        }
        return payload, bool(rep["failures"])

    if cmd == "orbit":
        cm = construct_map(args.n, parse_perm(args.tau))
        data = orbit_data(cm.map, args.max_iter)
        expected = ((args.n,) * 3, cm.sigma.cycle_notation())
        ok = data.key() == expected
        return (
            {
                "command": "orbit",
                "n": args.n,
                "tau": cm.tau.cycle_notation(),
                "orbit_data": serialize.orbit_data_json(data),
                "matches_expected": ok,
            },
            not ok,
        )

    if cmd == "action":
        cm = construct_map(args.n, parse_perm(args.tau))
        act = induced_action(cm)
        cycles = cycles_of_action(act)
        return (
            {
                "command": "action",
                "n": args.n,
                "tau": cm.tau.cycle_notation(),
                "sigma": cm.sigma.cycle_notation(),
                "matrix": serialize.isometry_json(act),
                "cycles": [list(c) for c in cycles] if cycles else None,
                "fixes_kappa": act.fixes(act.lattice.kappa()),
            },
            False,
        )

    if cmd == "charpoly":
        cm = construct_map(args.n, parse_perm(args.tau))
        act = induced_action(cm)
        cp = char_poly(act)
        salem_factor = strip_cyclotomic(cp, 60)
        bk = bk_charpoly(cm.data)
        agree = strip_cyclotomic(bk, 60) == salem_factor
        radius = spectral_radius(act, eps)
        return (
            {
                "command": "charpoly",
                "n": args.n,
                "tau": cm.tau.cycle_notation(),
                "char_poly": serialize.poly_json(cp),
                "salem_factor": serialize.poly_json(salem_factor),
                "orbit_data_poly": serialize.poly_json(bk),
                "salem_factors_agree": agree,
                "spectral_radius": serialize.enclosure_json(radius),
            },
            not agree,
        )

    if cmd == "salem":
        if args.poly:
            import json as _json

            poly = IntPolynomial(int(c) for c in _json.loads(args.poly))
        else:
            poly = IntPolynomial((1, -2, 1, -2, 1))
        payload = {"command": "salem", "poly": serialize.poly_json(poly)}
        verdict = is_salem(poly, eps)
        payload["verdict"] = serialize.verdict_json(verdict)
        failed = not verdict.is_salem
        if args.power:
            pv = power_is_salem(poly, args.power, eps)
            payload["power"] = args.power
            payload["power_verdict"] = serialize.verdict_json(pv)
            failed = failed or not pv.is_salem
        if args.product_with:
            import json as _json

            other = IntPolynomial(int(c) for c in _json.loads(args.product_with))
            cls = product_class(poly, other, eps=eps)
            payload["product_class"] = {
                "kind": cls.kind,
                "base": serialize.poly_json(cls.base) if cls.base else None,
                "exponents": list(cls.exponents) if cls.exponents else None,
            }
        payload["gap_check"] = {
            k: (serialize.enclosure_json(v) if hasattr(v, "lo") else v)
            for k, v in salem_gap_report().items()
        }
        return payload, failed

    if cmd == "group":
        res = classify_subgroup(args.n, args.max_len, seed=args.seed)
        ok = (
            all(v for v in res["dihedral_relations"].values() if isinstance(v, bool))
            and all(res["commutation_relations"].values())
            and res["normal_form_enumeration"]["match"]
        )
        payload = {
            "command": "group",
            "n": args.n,
            "relations": {
                "dihedral": res["dihedral_relations"],
                "commutation": res["commutation_relations"],
            },
            "normal_form_table_size": res["normal_form_enumeration"]["distinct_normal_forms"],
            "structure_label": res["structure_label"],
            "linear_part_order": res["linear_part_order"],
            "direct_product_observed": res["direct_product_observed"],
            "rotation_sweep": res["rotation_sweep"],
        }
        return payload, not ok

    if cmd == "theoremc":
        cert = nonrealizability_certificate()
        payload = {
            "command": "theoremc",
            "certificate": serialize.certificate_json(cert),
            "displayed_action": displayed_action_comparison(),
        }
        return payload, not cert.passed()

    if cmd == "errata":
        maps = six_maps_n5()
        rep = errata_report(maps)
        conventions = {
            "indeterminacy_convention": (
                "indeterminacy points are the plus-side linear part applied to "
                "the coordinate vertices; collapsed exceptional images are the "
                "minus side (one published line states the opposite pairing)"
            ),
            "printed_(12)_row": "repeats an index and is corrected by the derived action",
        }
        failed = not all(
            e["matches_printed"] or e.get("derived_matches_corrected") for e in rep.values()
        )
        return {"command": "errata", "actions": rep, "conventions": conventions}, failed

    if cmd == "sweep":
        from .groupengine import rotation_sweep

        rows = []
        failed = False
        for n in range(args.n_min, args.n_max + 1):
            res = classify_subgroup(n, max_len=3, seed=args.seed)
            rows.append(
                {
                    "n": n,
                    "structure_label": res["structure_label"],
                    "generators": res["generator_sigmas"],
                    "rotation_sweep": res["rotation_sweep"],
                }
            )
        return {"command": "sweep", "table": rows}, failed

    raise ValueError(f"unknown command {cmd!r}")


def _render_text(payload, indent=0) -> str:
    lines = []

    def emit(key, value, depth):
        pad = "  " * depth
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            for k, v in value.items():
                emit(k, v, depth + 1)
        elif isinstance(value, list) and value and isinstance(value[0], (dict, list)):
            lines.append(f"{pad}{key}:")
            for i, v in enumerate(value):
                emit(f"[{i}]", v, depth + 1)
        else:
            lines.append(f"{pad}{key}: {value}")

    plain = serialize._plain(payload)
    for k, v in plain.items():
        emit(k, v, 0)
    return "\n".join(lines) + "\n"


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
