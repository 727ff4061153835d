"""Batch command-line front end.

Exit codes: 0 = success / property holds, 1 = property violated or numerical
divergence, 2 = usage error.  Every output file embeds the config that
produced it; reruns with the same config are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

import numpy as np

from . import bergman, bloch, colombeau, gelfand, hardy, liefields, suites
from .io import (
    dump_json,
    format_complex,
    matrix_to_csv,
    parse_coeff_list,
    parse_fourier_map,
    parse_symbol_expression,
)
from .numcore import HoloPoly, BoundaryGrid, build_disc_quadrature


class UsageError(Exception):
    pass


def _write(path, text: str) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _config_of(args) -> dict:
    cfg = {k: v for k, v in vars(args).items()
           if k not in ("func", "out") and v is not None}
    cfg["command"] = args.command
    return cfg


def _emit_record(args, record: dict) -> None:
    record = dict(record)
    record["config"] = _config_of(args)
    _write(args.out, dump_json(record))


# ---------------------------------------------------------------------------
# command handlers
# ---------------------------------------------------------------------------

def cmd_toeplitz(args) -> int:
    symbol = parse_symbol_expression(args.symbol)
    q = build_disc_quadrature(args.alpha, args.n_rad, args.n_ang)
    mat = bergman.toeplitz_matrix(symbol(q.nodes), q, args.cutoff)
    if args.format == "csv":
        header = f"# config: {json.dumps(_config_of(args), sort_keys=True)}\n"
        _write(args.out, header + matrix_to_csv(mat.entries))
    else:
        _emit_record(args, {"operation": "toeplitz",
                            "matrix": [[format_complex(c) for c in row]
                                       for row in mat.entries]})
    return 0


def cmd_bergman_project(args) -> int:
    symbol = parse_symbol_expression(args.symbol)
    q = build_disc_quadrature(args.alpha, args.n_rad, args.n_ang)
    poly = bergman.bergman_project(symbol(q.nodes), q, args.cutoff)
    _emit_record(args, {"operation": "bergman_project",
                        "coeffs": [format_complex(c) for c in poly.coeffs]})
    return 0


def cmd_bergman_norm(args) -> int:
    symbol = parse_symbol_expression(args.symbol)
    q = build_disc_quadrature(args.alpha, args.n_rad, args.n_ang)
    value = bergman.bergman_norm(symbol(q.nodes), args.p, q)
    _emit_record(args, {"operation": "bergman_norm", "value": value})
    return 0


def cmd_bergman_convolution(args) -> int:
    q = build_disc_quadrature(args.alpha, args.n_rad, args.n_ang)
    f = parse_symbol_expression(args.f)(q.nodes.reshape(q.n_rad, q.n_ang))
    g = parse_symbol_expression(args.g)(q.nodes.reshape(q.n_rad, q.n_ang))
    report = bergman.check_convolution_submultiplicative(f, g, args.p, q)
    record = {"operation": "convolution_submultiplicative", **report,
              "tolerance": 1e-9}
    if args.strict_paper:
        # alternative reading of the norm display: the per-radius circle mean
        # taken WITHOUT the outer 1/p power before radial integration
        conv = bergman._angular_convolve(f, g)
        means = np.mean(np.abs(conv) ** args.p, axis=1) ** (1.0 / args.p)
        record["lhs_strict_paper"] = float(
            (np.sum(q.radial_weights * means)) ** (1.0 / args.p))
    _emit_record(args, record)
    return 0 if report["holds"] else 1


def cmd_bloch(args) -> int:
    poly = HoloPoly(parse_coeff_list(args.poly))
    rep = bloch.bloch_seminorm(poly, args.alpha)
    _emit_record(args, {"operation": "bloch", "alpha": rep.alpha,
                        "seminorm": rep.seminorm, "norm": rep.norm,
                        "argmax_z": format_complex(rep.argmax_z)})
    return 0


def cmd_hardy(args) -> int:
    if args.hardy_op == "norm":
        poly = HoloPoly(parse_coeff_list(args.poly))
        value = hardy.hardy_norm(poly, args.p)
        _emit_record(args, {"operation": "hardy_norm", "value": value})
        return 0
    if args.hardy_op == "kernel":
        z = complex(args.z.replace("i", "j"))
        xi = complex(args.xi.replace("i", "j"))
        _emit_record(args, {
            "operation": "hardy_kernel",
            "szego": format_complex(hardy.szego_kernel(z, xi)),
            "poisson": float(hardy.poisson_kernel(z, xi)),
        })
        return 0
    if args.hardy_op == "toeplitz":
        phi_hat = parse_fourier_map(args.coeffs)
        full = {k: phi_hat.get(k, 0.0) for k in range(-args.cutoff, args.cutoff + 1)}
        mat = hardy.hardy_toeplitz(full, args.cutoff)
        header = f"# config: {json.dumps(_config_of(args), sort_keys=True)}\n"
        _write(args.out, header + matrix_to_csv(mat.entries))
        return 0
    if args.hardy_op == "disc-membership":
        func = parse_symbol_expression(args.symbol)
        pts = np.exp(2j * np.pi * np.arange(args.m) / args.m)
        member, witness = hardy.disc_algebra_membership(
            BoundaryGrid(func(pts)), args.tol)
        _emit_record(args, {"operation": "disc_algebra_membership",
                            "member": member, "witness": witness,
                            "tolerance": args.tol})
        return 0
    raise UsageError(f"unknown hardy operation {args.hardy_op!r}")


def _load_group(spec: str) -> gelfand.FiniteGroup:
    if spec in gelfand.GROUP_LIBRARY:
        return gelfand.GROUP_LIBRARY[spec]()
    return gelfand.load_group_table(spec)


def cmd_gelfand(args) -> int:
    group = _load_group(args.group)
    members = [int(t) for t in args.subgroup.split(",")]
    if args.gelfand_op == "check":
        rep = gelfand.is_gelfand_pair(group, members)
        _emit_record(args, {"operation": "gelfand_check", "gelfand": rep["gelfand"],
                            "max_commutator": rep["max_commutator"],
                            "witness": rep["witness"]})
        return 0 if rep["gelfand"] else 1
    if args.gelfand_op == "spherical":
        sph = gelfand.spherical_functions(group, members, seed=args.seed)
        _emit_record(args, {"operation": "spherical_functions",
                            "count": len(sph),
                            "functions": [[format_complex(v) for v in phi]
                                          for phi in sph]})
        return 0
    raise UsageError(f"unknown gelfand operation {args.gelfand_op!r}")


def _load_fields(path) -> list[liefields.PolyVectorField]:
    with open(path) as fh:
        data = json.load(fh)
    d = int(data["dim"])
    fields = []
    for comps in data["fields"]:
        maps = []
        for comp in comps:
            maps.append({tuple(int(t) for t in key.split(",")): val
                         for key, val in comp.items()})
        fields.append(liefields.from_coeff_map(maps, d))
    return fields


def cmd_lie(args) -> int:
    fields = _load_fields(args.fields)
    if args.lie_op == "bracket":
        if len(fields) < 2:
            raise UsageError("bracket needs two fields")
        br = liefields.lie_bracket(fields[0], fields[1])
        _emit_record(args, {"operation": "lie_bracket",
                            "components": [str(c) for c in br.components]})
        return 0
    if args.lie_op == "jacobi":
        if len(fields) < 3:
            raise UsageError("jacobi needs three fields")
        x, y, z = fields[:3]
        total = (liefields.lie_bracket(x, liefields.lie_bracket(y, z))
                 + liefields.lie_bracket(y, liefields.lie_bracket(z, x))
                 + liefields.lie_bracket(z, liefields.lie_bracket(x, y)))
        holds = total.is_zero()
        _emit_record(args, {"operation": "jacobi", "holds": holds,
                            "residual": [str(c) for c in total.components]})
        return 0 if holds else 1
    if args.lie_op == "flows":
        if len(fields) < 2:
            raise UsageError("flows needs two fields")
        point = [float(t) for t in args.point.split(",")]
        approx = liefields.bracket_via_flows(fields[0], fields[1], point, args.t)
        exact = liefields.lie_bracket(fields[0], fields[1])(point)
        _emit_record(args, {"operation": "bracket_via_flows",
                            "flow_estimate": [float(v) for v in approx],
                            "symbolic": [float(v) for v in exact],
                            "error": float(np.max(np.abs(approx - exact)))})
        return 0
    raise UsageError(f"unknown lie operation {args.lie_op!r}")


def cmd_colombeau(args) -> int:
    if args.colombeau_op != "rate":
        raise UsageError(f"unknown colombeau operation {args.colombeau_op!r}")
    f = colombeau.catalog(args.f)
    m = colombeau.build_mollifier(args.q)
    if args.alpha == 0:
        net = colombeau.taylor_defect(f, m)
    else:
        net = colombeau.seminorm_net(f, m, alpha=args.alpha)
    rep = colombeau.estimate_order(net)
    lines = [f"# config: {json.dumps(_config_of(args), sort_keys=True)}",
             f"# slope: {rep.slope:.17g}",
             "epsilon,value"]
    lines += [f"{e:.17g},{v:.17g}" for e, v in zip(net.epsilons, net.values)]
    _write(args.out, "\n".join(lines) + "\n")
    return 0


def cmd_suite(args) -> int:
    try:
        records = suites.run_suite(args.name, seed=args.seed)
    except KeyError as exc:
        raise UsageError(str(exc))
    t0 = time.perf_counter()
    all_pass = all(r["passed"] for r in records)
    elapsed = time.perf_counter() - t0
    for r in records:
        status = "PASS" if r["passed"] else "FAIL"
        print(f"[{status}] {r['name']}")
    print(f"suite {args.name}: {sum(r['passed'] for r in records)}/{len(records)} "
          f"passed ({elapsed:.2f}s reporting)")
    if args.out:
        _write(args.out, dump_json({"suite": args.name, "seed": args.seed,
                                    "results": records}))
    return 0 if all_pass else 1


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="funcalg",
        description="Numerical workbench for function-space algebra checks")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_grid(p):
        p.add_argument("--alpha", type=float, default=0.0)
        p.add_argument("--n-rad", type=int, default=64)
        p.add_argument("--n-ang", type=int, default=256)

    p = sub.add_parser("toeplitz", help="Bergman-Toeplitz matrix of a symbol")
    p.add_argument("--symbol", required=True)
    p.add_argument("--cutoff", type=int, default=8)
    add_grid(p)
    p.add_argument("--out")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_toeplitz)

    p = sub.add_parser("project", help="Bergman projection of a symbol")
    p.add_argument("--symbol", required=True)
    p.add_argument("--cutoff", type=int, default=8)
    add_grid(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_bergman_project)

    p = sub.add_parser("bergman-norm", help="A^p norm of a sampled symbol")
    p.add_argument("--symbol", required=True)
    p.add_argument("--p", type=float, default=2.0)
    add_grid(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_bergman_norm)

    p = sub.add_parser("convolution", help="convolution submultiplicativity check")
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--p", type=float, default=2.0)
    p.add_argument("--strict-paper", action="store_true")
    add_grid(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_bergman_convolution)

    p = sub.add_parser("bloch", help="Bloch seminorm/norm of a polynomial")
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--poly", required=True, help="comma-separated coefficients")
    p.add_argument("--out")
    p.set_defaults(func=cmd_bloch)

    p = sub.add_parser("hardy", help="Hardy space operations")
    p.add_argument("hardy_op", choices=["norm", "kernel", "toeplitz",
                                        "disc-membership"])
    p.add_argument("--poly")
    p.add_argument("--p", type=float, default=2.0)
    p.add_argument("--z")
    p.add_argument("--xi")
    p.add_argument("--coeffs", help="Fourier map k:value,k:value")
    p.add_argument("--cutoff", type=int, default=8)
    p.add_argument("--symbol")
    p.add_argument("--m", type=int, default=256)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--out")
    p.set_defaults(func=cmd_hardy)

    p = sub.add_parser("gelfand", help="Gelfand pair checks on finite groups")
    p.add_argument("gelfand_op", choices=["check", "spherical"])
    p.add_argument("--group", required=True,
                   help="library name (s3, s4, q8, z4, d4, ...) or table file")
    p.add_argument("--subgroup", required=True, help="comma-separated indices")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gelfand)

    p = sub.add_parser("lie", help="Lie bracket operations on polynomial fields")
    p.add_argument("lie_op", choices=["bracket", "jacobi", "flows"])
    p.add_argument("--fields", required=True, help="JSON field file")
    p.add_argument("--point", default="0,0")
    p.add_argument("--t", type=float, default=0.05)
    p.add_argument("--out")
    p.set_defaults(func=cmd_lie)

    p = sub.add_parser("colombeau", help="mollifier rate experiments")
    p.add_argument("colombeau_op", choices=["rate"])
    p.add_argument("--f", required=True, help="catalog function name")
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--alpha", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_colombeau)

    p = sub.add_parser("suite", help="run a module property suite")
    p.add_argument("name")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_suite)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except liefields.FieldError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 1
    except (UsageError, KeyError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
