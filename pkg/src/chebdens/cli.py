"""Command-line surface: splitting scans, density tables, exact calculus,
Weyl constants, bound reports, and the verification suite.

JSON (sorted keys, default float repr) is the default output format so that
identical invocations produce byte-identical output; ``csv`` and ``human``
are available where tabular.  Errors print a diagnostic to stderr and exit
nonzero; stdout carries data only.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import acceptance, calculus, density, splitting, weyl
from .bounds import csp_bound_pipeline, report_to_dict
from .errors import ModelFormatError
from .primes import PrimeRange, sieve_primes

_CUTOFF_ENV = "CHEBDENS_CUTOFF"


def _default_cutoff() -> int:
    value = os.environ.get(_CUTOFF_ENV)
    return int(value) if value else density.DEFAULT_CUTOFF


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"expected a rational like 3/8, got {text!r}") from exc


def _parse_int_list(text: str) -> list[int]:
    return [int(tok) for tok in text.replace(";", ",").split(",") if tok.strip()]


def _parse_float_list(text: str) -> list[float]:
    return [float(tok) for tok in text.split(",") if tok.strip()]


def _emit_json(payload) -> None:
    json.dump(payload, sys.stdout, sort_keys=True)
    sys.stdout.write("\n")


def _model_from_args(args) -> splitting.GaloisExtensionModel:
    if args.model:
        return splitting.load_model(args.model)
    if args.poly:
        coeffs = _parse_int_list(args.poly)
        order = args.galois_order
        if order is None:
            raise ModelFormatError("--galois-order is required with --poly")
        bad = _parse_int_list(args.bad_primes) if args.bad_primes else None
        return splitting.splitting_field_model(coeffs, order, bad)
    if args.modulus is not None:
        if args.residues is None:
            raise ModelFormatError("--residues is required with --modulus")
        return splitting.abelian_model(args.modulus, _parse_int_list(args.residues))
    raise ModelFormatError("give --model FILE, or --poly ... --galois-order N, or --modulus/--residues")


def _add_model_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--model", help="path to a JSON model description file")
    parser.add_argument("--poly", help="monic polynomial coefficients, constant term first (e.g. '1,0,1')")
    parser.add_argument("--galois-order", type=int, help="degree of the splitting field")
    parser.add_argument("--bad-primes", help="explicit excluded primes (comma separated)")
    parser.add_argument("--modulus", type=int, help="abelian model conductor")
    parser.add_argument("--residues", help="abelian model residue subgroup (comma separated)")


_PROGRESS_EVERY = 200_000


def _scan_records(model, lo: int, hi: int, with_cycle: bool):
    """Yield one record per unramified prime; progress goes to stderr."""
    bad = set(splitting.ramified_primes_in(model, lo, hi))
    is_poly = isinstance(model, splitting.SplittingFieldModel)
    done = 0
    for p in sieve_primes(PrimeRange(lo, hi)).tolist():
        if p in bad:
            continue
        if with_cycle and is_poly:
            cycle = splitting.frobenius_cycle_type(model, p)
            record = {
                "p": p,
                "splits": set(cycle.degrees) == {1},
                "cycle_type": list(cycle.degrees),
            }
        else:
            record = {"p": p, "splits": splitting.splits_completely(model, p)}
        done += 1
        if done % _PROGRESS_EVERY == 0:
            print(f"... {done} primes scanned, at p = {p}", file=sys.stderr)
        yield record


def _cmd_spl(args) -> int:
    model = _model_from_args(args)
    ramified = splitting.ramified_primes_in(model, args.lo, args.hi)
    records = _scan_records(model, args.lo, args.hi, with_cycle=True)
    if args.format == "json":
        _emit_json({"model": splitting.model_to_dict(model), "range": [args.lo, args.hi],
                    "ramified": ramified, "records": list(records)})
    elif args.format == "csv":
        print("p,splits,cycle_type")
        for rec in records:
            cycle = "" if "cycle_type" not in rec else "|".join(map(str, rec["cycle_type"]))
            print(f"{rec['p']},{int(rec['splits'])},{cycle}")
    else:
        print(f"# ramified: {ramified}")
        for rec in records:
            cycle = "" if "cycle_type" not in rec else " cycle=" + str(rec["cycle_type"])
            print(f"p={rec['p']} splits={rec['splits']}{cycle}")
    return 0


def _cmd_frob(args) -> int:
    model = _model_from_args(args)
    if not isinstance(model, splitting.SplittingFieldModel):
        raise ModelFormatError("cycle types require a splitting_field model")
    ramified = splitting.ramified_primes_in(model, args.lo, args.hi)
    records = (
        {"p": rec["p"], "cycle_type": rec["cycle_type"]}
        for rec in _scan_records(model, args.lo, args.hi, with_cycle=True)
    )
    if args.format == "json":
        _emit_json({"model": splitting.model_to_dict(model), "range": [args.lo, args.hi],
                    "ramified": ramified, "records": list(records)})
    elif args.format == "csv":
        print("p,cycle_type")
        for rec in records:
            print(f"{rec['p']},{'|'.join(map(str, rec['cycle_type']))}")
    else:
        print(f"# ramified: {ramified}")
        for rec in records:
            print(f"p={rec['p']} cycle={rec['cycle_type']}")
    return 0


def _cmd_density(args) -> int:
    model = _model_from_args(args)
    cutoffs = _parse_int_list(args.cutoffs) if args.cutoffs else [_default_cutoff()]
    reference = density.chebotarev_reference(model)
    if args.kind == "natural":
        rows = density.natural_convergence_rows(model, cutoffs, reference=reference)
    else:
        grid = _parse_float_list(args.s_grid) if args.s_grid else density.DEFAULT_S_GRID
        rows = density.dirichlet_convergence_rows(model, cutoffs, grid, reference=reference)
        if args.kind == "upper":
            for row in rows:
                row["estimator"] = "max over grid tail"
    if args.format == "csv":
        density.write_convergence_csv(rows, sys.stdout)
    elif args.format == "json":
        _emit_json({"kind": args.kind, "reference": f"{reference.numerator}/{reference.denominator}",
                    "rows": rows})
    else:
        for row in rows:
            print("  ".join(f"{k}={v}" for k, v in row.items()))
    return 0


def _cmd_calculus(args) -> int:
    op = args.operation
    result: object
    if op == "union-bound":
        result = calculus.union_upper_bound(args.values[0], args.values[1])
    elif op == "pigeonhole":
        result = calculus.pigeonhole_threshold(args.values[0], int(args.values[1]))
    elif op == "intersection-bound":
        result = calculus.intersection_lower_bound(*args.values[:3])
    elif op == "selection-bound":
        tb = calculus.selection_lower_bound(args.values[0], args.values[1], args.values[2], int(args.values[3]))
        result = {"theta": tb.theta, "bound": tb.bound, "vacuous": tb.vacuous}
    elif op == "disjoint-union":
        spec = calculus.TowerSpec(int(args.values[0]), int(args.values[1]), int(args.values[2]))
        result = calculus.disjoint_union_density(spec)
    elif op == "tower-theta":
        spec = calculus.TowerSpec(int(args.values[1]), int(args.values[2]), int(args.values[3]))
        tb = calculus.tower_theta(args.values[0], spec)
        result = {"theta": tb.theta, "bound": tb.bound, "vacuous": tb.vacuous}
    elif op == "compositum-degree":
        spec = calculus.TowerSpec(int(args.values[0]), int(args.values[1]), int(args.values[2]))
        result = calculus.compositum_degree(spec, int(args.values[3]))
    elif op == "lift-density":
        result = density.lift_density(args.values[0], int(args.values[1]))
    elif op == "inclusion-exclusion":
        table = {}
        for entry in args.densities.split(";"):
            key, _, val = entry.partition(":")
            table[tuple(int(i) for i in key.split(","))] = Fraction(val)
        result = calculus.inclusion_exclusion_density(table)
    elif op == "ie-check":
        sets = [[int(x) for x in chunk.split(",") if x.strip()] for chunk in args.sets.split(";")]
        equal, residual = calculus.truncated_inclusion_exclusion_check(sets, args.s)
        result = {"equal": equal, "residual": residual}
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(f"unknown operation {op}")

    def encode(value):
        if isinstance(value, Fraction):
            return f"{value.numerator}/{value.denominator}"
        if isinstance(value, dict):
            return {k: encode(v) for k, v in value.items()}
        return value

    _emit_json({"operation": op, "result": encode(result)})
    return 0


def _cmd_weyl(args) -> int:
    constants = weyl.constants_for_group(args.type)
    payload = {
        "type": str(weyl.parse_type(args.type)),
        "d": constants.d,
        "w": constants.w,
        "c": constants.c,
        "degrees": list(weyl.invariant_degrees(weyl.parse_type(args.type))),
    }
    if args.enumerate:
        order, classes = weyl.enumerated_constants(args.type, cap=args.cap)
        payload["enumerated"] = {"w": order, "c": classes}
    _emit_json(payload)
    return 0


def _cmd_bounds(args) -> int:
    report = csp_bound_pipeline(
        args.type,
        args.m,
        args.omega,
        rho=args.rho,
        materialize_limit=args.materialize_limit,
    )
    if args.rho == 1:
        print(
            "warning: rho(d) left at its default of 1; n omits the rank-only "
            "cohomology factor, supply --rho to include a bound for it",
            file=sys.stderr,
        )
    _emit_json(report_to_dict(report))
    return 0


def _cmd_verify(args) -> int:
    cutoff = args.cutoff if args.cutoff else _default_cutoff()
    results = acceptance.run_acceptance(cutoff=cutoff, seed=args.seed)
    return 0 if all(res.passed for res in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chebdens",
        description="Prime splitting, density estimation, exact density calculus, "
        "Weyl constants, and index-bound pipelines",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_spl = sub.add_parser("spl", help="complete-splitting scan over a prime range")
    _add_model_arguments(p_spl)
    p_spl.add_argument("--lo", type=int, default=2)
    p_spl.add_argument("--hi", type=int, required=True)
    p_spl.add_argument("--format", choices=("json", "csv", "human"), default="json")
    p_spl.set_defaults(func=_cmd_spl)

    p_frob = sub.add_parser("frob", help="Frobenius cycle types over a prime range")
    _add_model_arguments(p_frob)
    p_frob.add_argument("--lo", type=int, default=2)
    p_frob.add_argument("--hi", type=int, required=True)
    p_frob.add_argument("--format", choices=("json", "csv", "human"), default="json")
    p_frob.set_defaults(func=_cmd_frob)

    p_density = sub.add_parser("density", help="density convergence tables")
    _add_model_arguments(p_density)
    p_density.add_argument("--kind", choices=("natural", "dirichlet", "upper"), default="natural")
    p_density.add_argument("--cutoffs", help="comma-separated cutoffs (default: env or 10^7)")
    p_density.add_argument("--s-grid", help="comma-separated s values > 1")
    p_density.add_argument("--format", choices=("json", "csv", "human"), default="json")
    p_density.set_defaults(func=_cmd_density)

    p_calc = sub.add_parser("calculus", help="exact rational density operations")
    p_calc.add_argument(
        "operation",
        choices=(
            "union-bound", "pigeonhole", "intersection-bound", "selection-bound",
            "disjoint-union", "tower-theta", "compositum-degree", "lift-density",
            "inclusion-exclusion", "ie-check",
        ),
    )
    p_calc.add_argument("values", nargs="*", type=_parse_fraction,
                        help="positional rational arguments for the chosen operation")
    p_calc.add_argument("--densities", help="inclusion-exclusion table like '1:1/2;2:1/2;1,2:1/4'")
    p_calc.add_argument("--sets", help="finite prime sets like '2,3,5;3,5,7'")
    p_calc.add_argument("--s", type=int, default=2, help="integer exponent for ie-check")
    p_calc.set_defaults(func=_cmd_calculus)

    p_weyl = sub.add_parser("weyl", help="Weyl constants (d, w, c, degrees) for a type")
    p_weyl.add_argument("type", help="root system type, e.g. A1, D4, E8")
    p_weyl.add_argument("--enumerate", action="store_true",
                        help="cross-check with the brute-force enumeration oracle")
    p_weyl.add_argument("--cap", type=int, default=weyl.DEFAULT_ENUMERATION_CAP)
    p_weyl.set_defaults(func=_cmd_weyl)

    p_bounds = sub.add_parser("bounds", help="full constant pipeline report")
    p_bounds.add_argument("--type", required=True, help="root system type, e.g. A1")
    p_bounds.add_argument("--m", type=int, required=True, help="degree of the base Galois extension")
    p_bounds.add_argument("--omega", type=_parse_fraction, required=True,
                          help="density of S intersected with the splitting set, e.g. 1/2")
    p_bounds.add_argument("--rho", type=int, default=1)
    p_bounds.add_argument("--materialize-limit", type=int, default=100_000,
                          help="materialize n exactly only below this many digits")
    p_bounds.set_defaults(func=_cmd_bounds)

    p_verify = sub.add_parser("verify", help="run the acceptance suite")
    p_verify.add_argument("--cutoff", type=int, help=f"prime cutoff (default: ${_CUTOFF_ENV} or 10^7)")
    p_verify.add_argument("--seed", type=int, default=0, help="seed for the randomized criteria")
    p_verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BrokenPipeError:
        return 0
    except Exception as exc:  # argparse handles its own errors; ours exit 1
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
