"""Command-line front end: parse expressions, compute, verify, serialize.

Subcommands:
    compute <expr>   Betti vector plus full table, cross-checked
    betti <expr>     Betti vector only
    oracle <expr>    exact-sequence dimensions at the cone vertex
    graph <file>     corner entry from a component-intersection JSON file

Exit codes: 0 success, 1 user error, 2 internal consistency failure.
Output is deterministic: identical invocations produce identical bytes.
"""

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from .betti import AdmissibilityError, InternalConsistencyError, betti
from .graph import ComponentGraph, GraphError
from .oracle import cone_local_derham_dims
from .parser import ParseError, parse_variety
from .table import corner_from_graph, lyubeznik_table
from .variety import SemanticError, dimension, render

_DEFAULT_MAX_DIM = 64


class _UserError(Exception):
    """A request the user can fix; reported on stderr with exit code 1."""


@dataclass(frozen=True)
class OutputDocument:
    """Everything the compute command reports for one expression."""

    expr: str
    dim: int
    betti: tuple
    table: tuple
    nonzero: tuple
    verified: bool


def _betti_text(b) -> str:
    return "(" + ", ".join(str(v) for v in b) + ")"


def _document_text(doc: OutputDocument) -> str:
    lines = [
        f"expression: {doc.expr}",
        f"dimension: {doc.dim}",
        f"betti: {_betti_text(doc.betti)}",
        f"verified: {'yes' if doc.verified else 'skipped'}",
        "",
    ]
    d = len(doc.table) - 1
    width = max(len(str(v)) for row in doc.table for v in row)
    width = max(width, len(str(d)))
    corner = "i\\j"
    label_width = max(len(corner), len(str(d)))
    header = " ".join(f"{j:>{width}}" for j in range(d + 1))
    lines.append(f"{corner:>{label_width}} | {header}")
    lines.append("-" * (label_width + 3 + len(header)))
    for i, row in enumerate(doc.table):
        cells = " ".join(f"{v:>{width}}" for v in row)
        lines.append(f"{i:>{label_width}} | {cells}")
    return "\n".join(lines) + "\n"


def _document_json(doc: OutputDocument) -> str:
    payload = {
        "expr": doc.expr,
        "dim": doc.dim,
        "betti": list(doc.betti),
        "table": [list(row) for row in doc.table],
        "nonzero": [list(entry) for entry in doc.nonzero],
        "verified": doc.verified,
    }
    return json.dumps(payload, indent=2) + "\n"


def _document_csv(doc: OutputDocument) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["i", "j", "lambda"])
    for i, j, value in doc.nonzero:
        writer.writerow([i, j, value])
    return buf.getvalue()


def cmd_compute(expr_text: str, fmt: str = "text", verify: bool = True,
                max_dim: int = _DEFAULT_MAX_DIM, out=None) -> int:
    """Parse, compute the table, optionally cross-check, and print."""
    out = out if out is not None else sys.stdout
    expr = parse_variety(expr_text)
    r = dimension(expr)
    if r > max_dim:
        raise _UserError(
            f"dimension {r} exceeds the printable bound {max_dim}; "
            f"raise it with --max-dim")
    vec = betti(expr)
    table = lyubeznik_table(vec)
    verified = False
    if verify:
        dims = cone_local_derham_dims(vec)
        first_row = tuple(table[0, j] for j in range(r + 1))
        if tuple(dims) != first_row:
            raise InternalConsistencyError(
                f"oracle mismatch for {render(expr)}: exact-sequence dims "
                f"{tuple(dims)} vs table first row {first_row}")
        verified = True
    doc = OutputDocument(render(expr), r, vec.betti, table.entries,
                         table.nonzero(), verified)
    if fmt == "json":
        out.write(_document_json(doc))
    elif fmt == "csv":
        out.write(_document_csv(doc))
    else:
        out.write(_document_text(doc))
    return 0


def cmd_betti(expr_text: str, fmt: str = "text", out=None) -> int:
    """Parse and print the Betti vector."""
    out = out if out is not None else sys.stdout
    expr = parse_variety(expr_text)
    vec = betti(expr)
    if fmt == "json":
        payload = {"expr": render(expr), "dim": vec.dim, "betti": list(vec.betti)}
        out.write(json.dumps(payload, indent=2) + "\n")
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["j", "beta"])
        for j, value in enumerate(vec):
            writer.writerow([j, value])
        out.write(buf.getvalue())
    else:
        out.write(f"expression: {render(expr)}\n"
                  f"dimension: {vec.dim}\n"
                  f"betti: {_betti_text(vec)}\n")
    return 0


def cmd_oracle(expr_text: str, out=None) -> int:
    """Parse and print the exact-sequence dimensions at the cone vertex."""
    out = out if out is not None else sys.stdout
    expr = parse_variety(expr_text)
    dims = cone_local_derham_dims(betti(expr))
    out.write(f"expression: {render(expr)}\n"
              f"dimension: {dimension(expr)}\n"
              f"vertex local de Rham dims: {_betti_text(dims)}\n")
    return 0


def cmd_graph(path: str, out=None) -> int:
    """Read a component-intersection JSON file and print the corner entry."""
    out = out if out is not None else sys.stdout
    with open(path, encoding="utf-8") as handle:
        data = json.load(handle)
    graph = ComponentGraph.from_json_dict(data)
    out.write(f"{corner_from_graph(graph)}\n")
    return 0


class _ArgumentParser(argparse.ArgumentParser):
    # Usage mistakes are user errors: exit 1, keeping 2 for internal failures.
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _build_arg_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="lyubeznik",
        description="Exact Lyubeznik tables for cones over nonsingular "
                    "projective varieties.")
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser(
        "compute", help="Betti vector plus full table, cross-checked")
    compute.add_argument("expr", help='variety expression, e.g. "Curve(1) x P(1)"')
    compute.add_argument("--format", choices=("text", "json", "csv"),
                         default="text")
    compute.add_argument("--no-verify", action="store_true",
                         help="skip the exact-sequence cross-check")
    compute.add_argument("--max-dim", type=int, default=_DEFAULT_MAX_DIM,
                         metavar="N", help="largest accepted dimension "
                         f"(default {_DEFAULT_MAX_DIM})")
    compute.set_defaults(handler=lambda a: cmd_compute(
        a.expr, a.format, not a.no_verify, a.max_dim))

    betti_cmd = sub.add_parser("betti", help="Betti vector only")
    betti_cmd.add_argument("expr")
    betti_cmd.add_argument("--format", choices=("text", "json", "csv"),
                           default="text")
    betti_cmd.set_defaults(handler=lambda a: cmd_betti(a.expr, a.format))

    oracle_cmd = sub.add_parser(
        "oracle", help="exact-sequence dimensions at the cone vertex")
    oracle_cmd.add_argument("expr")
    oracle_cmd.set_defaults(handler=lambda a: cmd_oracle(a.expr))

    graph_cmd = sub.add_parser(
        "graph", help="corner entry from a component-intersection JSON file")
    graph_cmd.add_argument("file")
    graph_cmd.set_defaults(handler=lambda a: cmd_graph(a.file))

    return parser


def main(argv=None) -> int:
    try:
        args = _build_arg_parser().parse_args(argv)
    except SystemExit as exc:  # argparse --help exits 0, usage errors exit 1
        code = exc.code
        return 0 if code is None else int(code)
    try:
        return args.handler(args)
    except (ParseError, SemanticError, GraphError, _UserError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (AdmissibilityError, InternalConsistencyError) as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError, UnicodeDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
