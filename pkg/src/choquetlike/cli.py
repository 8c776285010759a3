"""Command-line front end: aggregate datasets or run verification suites.

Exit codes: 0 success / all laws pass, 1 parse or configuration error
(with a machine-readable error record on stderr), 2 at least one row
aggregated inconsistently (values are still written), 3 at least one law
check failed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import verifier
from .algebra import (
    IV_PLUS, IV_SCALE, PLUS, TIMES, VV_PLUS, VV_SCALE, addition_for,
    check_associativity, check_c1, check_cancellation, check_commutativity,
    check_compatibility, check_distributivity, resolve_addition,
)
from .capacity import Capacity
from .datasets import load_dataset
from .dissimilarity import (
    check_dissimilarity, check_telescoping, resolve_dissimilarity,
    takac_counterexample,
)
from .errors import ChoquetlikeError, NoWitnessFound
from .operator import AggregationInput, choquet_aggregate, kernel_catalog
from .order import (
    INTERVAL, SCALAR, VECTOR, AlphaBeta, ScalarUsual, VectorLex,
    check_admissibility, element_to_json, parse_order,
)
from .reporting import GridSpec, LawReport


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="choquetlike",
        description="Choquet-like aggregation and law verification")
    sub = parser.add_subparsers(dest="cmd", required=True)

    agg = sub.add_parser("aggregate", help="aggregate a dataset row by row")
    agg.add_argument("--input", required=True)
    agg.add_argument("--capacity", required=True)
    agg.add_argument("--order", default="scalar",
                     help="scalar | ab:<alpha>:<beta> | veclex:<perm>")
    agg.add_argument("--kernel", default="delta-scale",
                     help="kernel family name or JSON spec")
    agg.add_argument("--add", default=None, help="addition op name")
    agg.add_argument("--seed", type=int, default=42,
                     help="seed for permutation sampling on heavily tied rows")
    agg.add_argument("--output", default=None)
    agg.add_argument("--format", choices=("json", "csv"), default="json")

    ver = sub.add_parser("verify", help="run a verification suite")
    ver.add_argument("--suite", required=True,
                     choices=("algebra", "order", "wd", "monotone",
                              "aggregation", "dissimilarity", "appendix-c", "all"))
    ver.add_argument("--config", default=None)
    ver.add_argument("--grid", type=int, default=None, help="step denominator")
    ver.add_argument("--n", type=int, default=3, help="operator arity")
    ver.add_argument("--seed", type=int, default=42)
    ver.add_argument("--output", default=None)
    ver.add_argument("--format", choices=("json", "csv"), default="json")

    args = parser.parse_args(argv)
    try:
        if args.cmd == "aggregate":
            return cmd_aggregate(args)
        return cmd_verify(args)
    except (ChoquetlikeError, OSError, ValueError, KeyError) as exc:
        record = {"error": {"type": type(exc).__name__, "message": str(exc)}}
        print(json.dumps(record), file=sys.stderr)
        return 1


# ---------------------------------------------------------------------------
# aggregate
# ---------------------------------------------------------------------------

def cmd_aggregate(args) -> int:
    order = parse_order(args.order)
    kind = order.kind
    ds = load_dataset(args.input, kind)
    with open(args.capacity, "r", encoding="utf-8") as fh:
        mu = Capacity.from_json(json.load(fh))
    addop = resolve_addition(args.add) if args.add else addition_for(kind)
    kernel_spec = args.kernel
    if kernel_spec.lstrip().startswith("{"):
        kernel_spec = json.loads(kernel_spec)
    kernel = kernel_catalog(kernel_spec, kind, order)

    results = []
    any_inconsistent = False
    for row_id, row in zip(ds.row_ids(), ds.rows):
        res = choquet_aggregate(AggregationInput(row, mu, order, addop), kernel,
                                sample_seed=args.seed)
        any_inconsistent |= not res.consistent
        results.append({
            "id": row_id,
            "value": element_to_json(res.value),
            "consistent": res.consistent,
            "in_K": res.in_unit,
            "permutations": res.permutations,
        })

    if args.format == "csv":
        out = io.StringIO()
        writer = csv.writer(out)
        writer.writerow(["id", "value", "consistent", "in_K"])
        for rec in results:
            writer.writerow([rec["id"], json.dumps(rec["value"]),
                             rec["consistent"], rec["in_K"]])
        text = out.getvalue()
    else:
        text = json.dumps({"results": results}, indent=2)
    _write(args.output, text)
    return 2 if any_inconsistent else 0


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def cmd_verify(args) -> int:
    config = {}
    if args.config:
        with open(args.config, "r", encoding="utf-8") as fh:
            config = json.load(fh)
    if args.grid is not None:
        config["grid"] = args.grid
    config.setdefault("seed", args.seed)
    config.setdefault("n", args.n)

    suites = {
        "order": suite_order, "algebra": suite_algebra, "wd": suite_wd,
        "monotone": suite_monotone, "aggregation": suite_aggregation,
        "dissimilarity": suite_dissimilarity, "appendix-c": suite_takac,
    }
    names = list(suites) if args.suite == "all" else [args.suite]
    tagged: list[tuple[str, LawReport]] = []
    for name in names:
        tagged.extend((name, report) for report in suites[name](config))

    payload = [dict(report.to_json(), suite=name) for name, report in tagged]
    if args.format == "csv":
        out = io.StringIO()
        writer = csv.writer(out)
        writer.writerow(["suite", "law", "verdict", "checked", "elapsed"])
        for rec in payload:
            writer.writerow([rec["suite"], rec["law"], rec["verdict"],
                             rec["checked"], rec["elapsed"]])
        text = out.getvalue()
    else:
        text = json.dumps(payload, indent=2)
    _write(args.output, text)
    return 0 if all(report.passed for _, report in tagged) else 3


def _write(path, text):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _grid(config, kind, default_m, n=None, dim=2):
    m = int(config.get("grid", default_m))
    return GridSpec(kind, m, n=n or int(config.get("n", 3)), dim=dim)


def _carriers(config):
    """Default (order, addition, grid) triple per carrier."""
    return [
        (ScalarUsual(), PLUS, _grid(config, SCALAR, 4)),
        (AlphaBeta(0.5, 1.0), IV_PLUS, _grid(config, INTERVAL, 2)),
        (VectorLex((0, 1)), VV_PLUS, _grid(config, VECTOR, 2)),
    ]


def suite_order(config) -> list[LawReport]:
    m = int(config.get("grid", 4))
    checks = [
        (ScalarUsual(), GridSpec(SCALAR, max(m, 8))),
        (AlphaBeta(0.5, 1.0), GridSpec(INTERVAL, m)),
        (AlphaBeta(0.0, 1.0), GridSpec(INTERVAL, m)),
        (AlphaBeta(1.0, 0.0), GridSpec(INTERVAL, m)),
        (VectorLex((0, 1)), GridSpec(VECTOR, m, dim=2)),
    ]
    return [check_admissibility(order, grid) for order, grid in checks]


def suite_algebra(config) -> list[LawReport]:
    m = int(config.get("grid", 4))
    reports = []
    for order, addop, mul, grid in [
        (ScalarUsual(), PLUS, TIMES, GridSpec(SCALAR, max(m, 8))),
        (AlphaBeta(0.5, 1.0), IV_PLUS, IV_SCALE, GridSpec(INTERVAL, m)),
        (VectorLex((0, 1)), VV_PLUS, VV_SCALE, GridSpec(VECTOR, m, dim=2)),
    ]:
        reports.append(check_commutativity(addop, grid))
        reports.append(check_associativity(addop, grid))
        reports.append(check_cancellation(addop, grid))
        reports.append(check_compatibility(addop, order, True, grid))
        reports.append(check_distributivity(mul, addop, "right", grid))
        reports.append(check_distributivity(mul, addop, "left", grid))
        reports.append(check_c1(mul, addop, order, grid))
    return reports


def _good_kernels(config):
    out = []
    for order, addop, grid in _carriers(config):
        kind = grid.kind
        out.append((kernel_catalog("delta-scale", kind, order), addop, order, grid))
        out.append((kernel_catalog({"family": "b-scale-d", "d": "abs-diff"},
                                   kind, order), addop, order, grid))
        out.append((kernel_catalog({"family": "affine-F", "C": "scale:0.7",
                                    "D": "scale:0.1"}, kind, order),
                    addop, order, grid))
    return out


def suite_wd(config) -> list[LawReport]:
    n = int(config.get("n", 3))
    return [verifier.check_wd(kernel, addop, order, n, grid)
            for kernel, addop, order, grid in _good_kernels(config)]


def suite_monotone(config) -> list[LawReport]:
    n = int(config.get("n", 3))
    return [verifier.check_monotonicity(kernel, addop, order, n, grid)
            for kernel, addop, order, grid in _good_kernels(config)]


def suite_aggregation(config) -> list[LawReport]:
    n = int(config.get("n", 3))
    reports = []
    for order, addop, grid in _carriers(config):
        kernel = kernel_catalog("delta-scale", grid.kind, order)
        reports.append(verifier.check_aggregation(kernel, addop, order, n, grid))
    # Lexicographical interval order alongside the Xu-Yager default.
    lex = AlphaBeta(0.0, 1.0)
    grid = _grid(config, INTERVAL, 2)
    reports.append(verifier.check_aggregation(
        kernel_catalog("delta-scale", INTERVAL, lex), IV_PLUS, lex,
        n, grid))
    return reports


def suite_dissimilarity(config) -> list[LawReport]:
    reports = []
    scalar_grid = GridSpec(SCALAR, int(config.get("grid", 8)))
    iv_grid = GridSpec(INTERVAL, int(config.get("grid", 4)))
    xu = AlphaBeta(0.5, 1.0)
    d_scalar = resolve_dissimilarity("abs-diff", SCALAR)
    d_iv = resolve_dissimilarity("abs-diff", INTERVAL, xu)
    reports.append(check_dissimilarity(d_scalar, ScalarUsual(), scalar_grid))
    reports.append(check_telescoping(d_scalar, PLUS, ScalarUsual(), scalar_grid))
    reports.append(check_dissimilarity(d_iv, xu, iv_grid))
    reports.append(check_telescoping(d_iv, IV_PLUS, xu, iv_grid))
    return reports


def suite_takac(config) -> list[LawReport]:
    """Counterexample search for the width-based interval dissimilarity.

    The telescoping identity is expected to fail here; the suite reports
    the witness as a failing law, so this suite deliberately exits 3.
    """
    alpha = float(config.get("alpha", 0.5))
    beta = float(config.get("beta", 1.0))
    m_d = config.get("Md", "max")
    delta_d = config.get("delta_d", "abs-diff")
    grid = GridSpec(INTERVAL, int(config.get("grid", 8)))
    try:
        witness = takac_counterexample(alpha, beta, m_d, delta_d, grid)
        report = LawReport(
            law="takac-telescoping", verdict="fail",
            witness=witness.to_json(), checked=0,
            detail={"alpha": alpha, "beta": beta, "Md": m_d,
                    "delta_d": delta_d,
                    "note": "expected negative result: the width-based "
                            "construction cannot telescope"})
    except NoWitnessFound as exc:
        report = LawReport(law="takac-telescoping", verdict="pass",
                           detail={"note": str(exc)})
    return [report]


if __name__ == "__main__":
    sys.exit(main())
