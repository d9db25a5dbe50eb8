"""Command-line interface: table, element, navigate, fit, predict.

Exit codes: 0 success, 1 usage, 2 domain/validation, 3 fitting, 4 I/O.
Quartets on the command line use the exact form n,l,J,M with J and M as
integers or halves ('5/2', '-1/2'); they are parsed to doubled integers,
never floats.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from .aufbau import configuration_of
from .fitting import (
    ConditioningError,
    ExplicitScope,
    FamilyScope,
    FitError,
    FitModel,
    FitScope,
    IntegrityBasis,
    PeriodScope,
    default_basis,
    fit,
    predict,
)
from .navigation import MoveAlgebra, path_records, shortest_path
from .quartet import (
    AtomicNumberError,
    QuartetError,
    half_str,
    parse_half,
    parse_quartet,
    quartet_of,
    z_of,
)
from .registry import (
    Registry,
    RegistryError,
    Status,
    default_registry,
    load_property,
    load_registry,
)
from .table import build_region, column_of, family_of, series_of
from .quartet import Quartet

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_FIT = 3
EXIT_IO = 4

_ALGEBRA_NAMES = {a.value: a for a in MoveAlgebra}


class _Parser(argparse.ArgumentParser):
    """argparse with usage errors mapped to exit code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _cell_label(record) -> str:
    # Fig.-style conventions: symbol when named, 'Z?' when observed but
    # unnamed, 'no' when unobserved
    if record.status is Status.NAMED_OBSERVED:
        return record.symbol
    if record.status is Status.OBSERVED_UNNAMED:
        return f"{record.z}?"
    return "no"


def _element_row(q: Quartet, z: int, registry: Registry) -> dict:
    record = registry.get(z)
    return {
        "z": z,
        "n": q.n,
        "l": q.l,
        "j": half_str(q.j2),
        "m": half_str(q.m2),
        "block": str(q.key),
        "family": family_of(q).value,
        "symbol": record.symbol or "",
        "name": record.name or "",
        "status": record.status.value,
    }


def _emit_rows(rows: list[dict], fmt: str, out) -> None:
    if fmt == "json":
        json.dump(rows, out, indent=2)
        out.write("\n")
    elif fmt == "csv":
        writer = csv.DictWriter(out, fieldnames=list(rows[0].keys()), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    else:
        raise AssertionError(fmt)  # pragma: no cover


def cmd_table(args, out) -> int:
    registry = load_registry(args.registry) if args.registry else default_registry()
    region = build_region(args.max_z)
    rows = [_element_row(q, z, registry) for q, z in region.cells]
    if args.format in ("csv", "json"):
        _emit_rows(rows, args.format, out)
        return EXIT_OK
    # text: one street per n, wrapped by block, sub-blocks separated by '|'
    for n, cells in region.rows().items():
        out.write(f"street n={n}\n")
        blocks: dict[tuple[int, int], list[tuple[Quartet, int]]] = {}
        for q, z in cells:
            blocks.setdefault((q.n + q.l, q.n), []).append((q, z))
        for (s, _), block_cells in sorted(blocks.items()):
            labels = []
            last_j2 = block_cells[0][0].j2
            for q, z in block_cells:
                if q.j2 != last_j2:
                    labels.append("|")
                    last_j2 = q.j2
                labels.append(_cell_label(registry.get(z)))
            out.write(f"  [{s},{n}] {' '.join(labels)}\n")
    return EXIT_OK


def cmd_element(args, out) -> int:
    if (args.z is None) == (args.quartet is None):
        raise QuartetError("give exactly one of --z or --quartet")
    if args.z is not None:
        z = args.z
        q = quartet_of(z)
    else:
        q = parse_quartet(args.quartet)
        z = z_of(q)
    registry = load_registry(args.registry) if args.registry else default_registry()
    row = _element_row(q, z, registry)
    series = series_of(q)
    row["series"] = (
        f"{series.kind.value} (n={series.n}, Z {series.z_first}..{series.z_last})"
        if series
        else ""
    )
    row["subblock_j"] = half_str(q.j2)
    row["configuration"] = configuration_of(z).notation()
    if args.format == "text":
        for key, value in row.items():
            out.write(f"{key}: {value}\n")
    else:
        _emit_rows([row], args.format, out)
    return EXIT_OK


def _endpoint(z_arg, quartet_arg, side: str) -> Quartet:
    if (z_arg is None) == (quartet_arg is None):
        raise QuartetError(f"give exactly one of --{side}-z or --{side}-quartet")
    if z_arg is not None:
        return quartet_of(z_arg)
    return parse_quartet(quartet_arg)


def cmd_navigate(args, out) -> int:
    start = _endpoint(args.from_z, args.from_quartet, "from")
    goal = _endpoint(args.to_z, args.to_quartet, "to")
    allowed = set()
    for name in args.via.split(","):
        name = name.strip()
        if name not in _ALGEBRA_NAMES:
            raise UsageError(
                f"unknown algebra {name!r}; choose from {sorted(_ALGEBRA_NAMES)}"
            )
        allowed.add(_ALGEBRA_NAMES[name])
    path = shortest_path(start, goal, allowed, max_z=args.max_z)
    if path is None:
        if args.format == "json":
            json.dump({"reachable": False}, out)
            out.write("\n")
        else:
            out.write("unreachable\n")
        return EXIT_OK
    records = path_records(path)
    if args.format == "json":
        json.dump({"reachable": True, "steps": len(path), "path": records}, out, indent=2)
        out.write("\n")
    else:
        out.write(f"{len(path)} step(s)\n")
        for rec in records:
            via = f" via {rec['algebra']}" if rec["algebra"] else ""
            out.write(f"  Z={rec['z']} {rec['quartet']}{via}\n")
    return EXIT_OK


class UsageError(Exception):
    pass


def _parse_scope(args) -> FitScope:
    if args.scope == "period":
        if args.n is None:
            raise UsageError("--scope period needs --n")
        return PeriodScope(args.n)
    if args.scope == "family":
        if args.column is None:
            raise UsageError("--scope family needs --column l,J,M")
        parts = [p.strip() for p in args.column.split(",")]
        if len(parts) != 3:
            raise QuartetError(f"column must be 'l,J,M', got {args.column!r}")
        from .table import ColumnId

        return FamilyScope(ColumnId(int(parts[0]), parse_half(parts[1]), parse_half(parts[2])))
    if args.zs is None:
        raise UsageError("--scope set needs --zs")
    return ExplicitScope(tuple(int(z) for z in args.zs.split(",")))


def _run_fit(args) -> FitModel:
    data = load_property(args.data, args.property, args.unit)
    scope = _parse_scope(args)
    return fit(
        scope,
        default_basis(),
        data,
        allow_rank_deficient=args.allow_rank_deficient,
        ridge=args.ridge,
    )


def cmd_fit(args, out) -> int:
    model = _run_fit(args)
    report = model.to_dict()
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            json.dump(report, fh, indent=2)
            fh.write("\n")
    if args.format == "text":
        out.write(f"property: {report['property']} [{report['unit']}]\n")
        out.write(f"scope: {report['scope']}\n")
        for name, coeff in zip(report["basis"], report["coefficients"]):
            out.write(f"  {name}: {coeff:.12g}\n")
        out.write(f"rss: {report['rss']:.6g}\n")
        out.write(f"max |residual|: {report['max_abs_residual']:.6g}\n")
    else:
        json.dump(report, out, indent=2)
        out.write("\n")
    return EXIT_OK


def cmd_predict(args, out) -> int:
    if args.model:
        with open(args.model, "r", encoding="utf-8") as fh:
            report = json.load(fh)
        basis = default_basis()
        if report["basis"] != basis.names:
            raise FitError("saved model basis does not match the default basis")
        coefficients = report["coefficients"]
        predictions = [
            {
                "z": z,
                "value": float(
                    sum(
                        c * float(v)
                        for c, v in zip(coefficients, basis.evaluate(quartet_of(z)))
                    )
                ),
            }
            for z in args.at
        ]
        prop, unit = report.get("property", ""), report.get("unit", "")
    else:
        model = _run_fit(args)
        predictions = [{"z": z, "value": predict(model, z)} for z in args.at]
        prop, unit = model.property_name, model.unit
    if args.format == "text":
        for rec in predictions:
            out.write(f"Z={rec['z']}: {rec['value']:.12g} {unit}\n".rstrip() + "\n")
    elif args.format == "json":
        json.dump({"property": prop, "unit": unit, "predictions": predictions}, out, indent=2)
        out.write("\n")
    else:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["z", "value"])
        for rec in predictions:
            writer.writerow([rec["z"], rec["value"]])
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="mendeleev-city", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_format(p, default="text"):
        p.add_argument("--format", choices=["text", "csv", "json"], default=default)

    p_table = sub.add_parser("table", help="render a region of the table")
    p_table.add_argument("--max-z", type=int, required=True)
    p_table.add_argument("--registry", help="registry CSV overriding the snapshot")
    add_format(p_table)
    p_table.set_defaults(func=cmd_table)

    p_elem = sub.add_parser("element", help="look up one element")
    p_elem.add_argument("--z", type=int)
    p_elem.add_argument("--quartet", help="exact form n,l,J,M")
    p_elem.add_argument("--registry")
    add_format(p_elem)
    p_elem.set_defaults(func=cmd_element)

    p_nav = sub.add_parser("navigate", help="shortest ladder-operator path")
    p_nav.add_argument("--from-z", type=int, dest="from_z")
    p_nav.add_argument("--from-quartet", dest="from_quartet")
    p_nav.add_argument("--to-z", type=int, dest="to_z")
    p_nav.add_argument("--to-quartet", dest="to_quartet")
    p_nav.add_argument(
        "--via", required=True, help="comma list of so3, so4, so21, so42"
    )
    p_nav.add_argument("--max-z", type=int, dest="max_z", help="search-universe bound")
    add_format(p_nav)
    p_nav.set_defaults(func=cmd_navigate)

    def add_fit_flags(p):
        p.add_argument("--data", required=False, help="property CSV (z,value)")
        p.add_argument("--property", default="", help="property name")
        p.add_argument("--unit", default="")
        p.add_argument("--scope", choices=["period", "family", "set"])
        p.add_argument("--n", type=int, help="row for --scope period")
        p.add_argument("--column", help="l,J,M for --scope family")
        p.add_argument("--zs", help="comma list for --scope set")
        p.add_argument("--allow-rank-deficient", action="store_true")
        p.add_argument("--ridge", type=float, default=0.0)

    p_fit = sub.add_parser("fit", help="least-squares fit over the operator basis")
    add_fit_flags(p_fit)
    p_fit.add_argument("--output", help="write the fit report JSON here")
    add_format(p_fit, default="json")
    p_fit.set_defaults(func=cmd_fit)

    p_pred = sub.add_parser("predict", help="evaluate a fitted model at Z values")
    add_fit_flags(p_pred)
    p_pred.add_argument("--model", help="fit report JSON saved by `fit --output`")
    p_pred.add_argument(
        "--at", type=int, nargs="+", required=True, help="Z values to predict"
    )
    add_format(p_pred)
    p_pred.set_defaults(func=cmd_predict)
    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        # fit/predict without --model need --data and --scope
        if getattr(args, "func", None) in (cmd_fit, cmd_predict):
            needs_fit = args.func is cmd_fit or not getattr(args, "model", None)
            if needs_fit and (not args.data or not args.scope):
                raise UsageError("--data and --scope are required here")
        return args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (QuartetError, AtomicNumberError, RegistryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except FitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FIT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


def entry() -> None:  # console-script entry point
    sys.exit(main())


if __name__ == "__main__":
    entry()
