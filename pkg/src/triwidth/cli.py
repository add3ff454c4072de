"""Command-line front end: ``triwidth <subcommand> ...``.

Exit status 0 on success, 1 when the input is rejected (invalid
triangulation, incompatible splitting, ...), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .bounds import BoundInputs, BoundsError, bound_chain
from .graph import GraphFormatError, Multigraph, parse_pace
from .heegaard import (
    GeneralizedSplitting,
    SplittingError,
    amalgamate,
    splitting_from_boundary_triangulation,
    splitting_from_closed_triangulation,
)
from .trikernel import (
    TriangulationError,
    analyze_skeleton,
    barycentric_subdivision,
    boundary_component_map,
    boundary_isolation_subdivision,
    dual_graph,
    parse_triangulation,
)
from .widths import DEFAULT_CUTOFF, STRATEGIES, CutoffExceeded, exact_width, heuristic_width, to_nice


class DomainError(Exception):
    """Input was read but rejected."""


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DomainError(f"cannot read {path}: {exc.strerror}") from None


def _triangulation(path: str):
    return parse_triangulation(_read(path))


def _dump(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


# -- subcommands -------------------------------------------------------------


def cmd_validate(args) -> dict:
    return analyze_skeleton(_triangulation(args.file)).to_dict()


def cmd_dual(args):
    g = dual_graph(_triangulation(args.file))
    return g.to_dot("dual") if args.dot else g.to_dict()


def cmd_subdivide(args) -> str:
    t = _triangulation(args.file)
    out = boundary_isolation_subdivision(t) if args.isolate_boundary else barycentric_subdivision(t)
    return out.serialize()


def _load_graph(path: str) -> Multigraph:
    text = _read(path)
    if path.endswith(".gr"):
        return parse_pace(text)
    return dual_graph(parse_triangulation(text))


def cmd_widths(args) -> dict:
    g = _load_graph(args.file)
    try:
        cert = exact_width(g, args.param, args.exact_cutoff)
    except CutoffExceeded:
        cert = heuristic_width(g, args.param, args.strategy)
    out = cert.to_dict()
    if args.nice:
        out["nice"] = to_nice(cert.decomposition).to_dict()
    if args.seed is not None:
        out["seed"] = args.seed
    return out


def _partition(text: str | None, n_components: int) -> tuple[list[int], list[int]]:
    if text is None:
        return [], list(range(n_components))
    if text.count(":") != 1:
        raise DomainError("partition must look like '<ids>:<ids>', e.g. '0,2:1'")
    sides = []
    for part in text.split(":"):
        try:
            sides.append(sorted({int(x) for x in part.split(",") if x.strip()}))
        except ValueError:
            raise DomainError(f"bad boundary id list {part!r}") from None
    first, second = sides
    if set(first) & set(second) or sorted(first + second) != list(range(n_components)):
        raise DomainError(f"partition must split boundary components 0..{n_components - 1} into two sides")
    return first, second


def cmd_splitting(args) -> dict:
    t = _triangulation(args.file)
    report = analyze_skeleton(t)
    if not report.boundary_components:
        if args.partition not in (None, ":"):
            raise DomainError("closed triangulation has no boundary components to partition")
        fc, genus = splitting_from_closed_triangulation(t)
        return {"fork_complex": fc.to_dict(), "genus": genus, "tetrahedra": t.n_tetrahedra}
    first, second = _partition(args.partition, len(report.boundary_components))
    iso = boundary_isolation_subdivision(t)
    back = boundary_component_map(t, iso)
    first_iso = [c for c, old in back.items() if old in first]
    second_iso = [c for c, old in back.items() if old in second]
    fc, genus = splitting_from_boundary_triangulation(iso, first_iso, second_iso)
    return {
        "fork_complex": fc.to_dict(),
        "genus": genus,
        "partition": [first, second],
        "tetrahedra": iso.n_tetrahedra,
    }


def cmd_amalgamate(args) -> dict:
    try:
        gs = GeneralizedSplitting.from_json(_read(args.file))
    except (KeyError, TypeError, ValueError) as exc:
        raise DomainError(f"{args.file} is not a generalized splitting: {exc}") from None
    return amalgamate(gs).to_dict()


def cmd_bounds(args) -> dict:
    inputs = BoundInputs(
        volume=args.volume,
        K=args.K,
        epsilon=args.epsilon,
        heegaard_genus=args.heegaard_genus,
        treewidth_ub=args.treewidth,
        pathwidth_ub=args.pathwidth,
        thick_genus=args.thick_genus,
        m_thin=args.m_thin,
    )
    return bound_chain(inputs).to_dict()


# -- table output ----------------------------------------------------------------


def _style(text: str, code: str, color: bool) -> str:
    return f"\x1b[{code}m{text}\x1b[0m" if color else text


def _rows(data: dict, prefix: str = "") -> list[tuple[str, str]]:
    rows = []
    for key in sorted(data):
        value = data[key]
        if isinstance(value, dict):
            rows.extend(_rows(value, f"{prefix}{key}."))
        elif isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
            rows.append((prefix + key, f"[{len(value)} entries]"))
        else:
            rows.append((prefix + key, json.dumps(value)))
    return rows


def render_table(command: str, data, color: bool) -> str:
    if isinstance(data, str):
        return data
    if command == "bounds":
        header = ("step", "inputs", "output")
        body = [
            (r["step"], ", ".join(f"{k}={v}" for k, v in sorted(r["inputs"].items())), str(r["output"]))
            for r in data["records"]
        ]
        body.append(("pathwidth_bound", "", str(data["pathwidth_bound"])))
    else:
        header = ("field", "value")
        body = _rows(data)
    widths = [max(len(row[i]) for row in [header] + body) for i in range(len(header))]
    lines = ["  ".join(_style(h.ljust(w), "1", color) for h, w in zip(header, widths)).rstrip()]
    for row in body:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


# -- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="triwidth", description="Widths, subdivisions and Heegaard splittings of triangulated 3-manifolds."
    )
    parser.add_argument("--table", action="store_true", help="human-readable table instead of JSON")
    parser.add_argument("-o", "--output", help="write to this file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="skeleton report of a triangulation")
    p.add_argument("file")
    p.set_defaults(run=cmd_validate)

    p = sub.add_parser("dual", help="dual graph of a triangulation")
    p.add_argument("file")
    p.add_argument("--dot", action="store_true", help="emit Graphviz DOT")
    p.set_defaults(run=cmd_dual)

    p = sub.add_parser("subdivide", help="first barycentric subdivision")
    p.add_argument("file")
    p.add_argument("--isolate-boundary", action="store_true", help="subdivide until no tetrahedron meets two boundary components")
    p.set_defaults(run=cmd_subdivide)

    p = sub.add_parser("widths", help="treewidth or pathwidth with a certificate")
    p.add_argument("file", help="triangulation (.tri) or PACE graph (.gr)")
    p.add_argument("--param", choices=("treewidth", "pathwidth"), required=True)
    p.add_argument("--exact-cutoff", type=int, default=DEFAULT_CUTOFF, metavar="N",
                   help=f"largest component for the exact solver (default {DEFAULT_CUTOFF})")
    p.add_argument("--strategy", choices=STRATEGIES, default="min_degree")
    p.add_argument("--nice", action="store_true", help="also emit a nice tree decomposition")
    p.add_argument("--seed", type=int, help="recorded in the output; the heuristics are deterministic")
    p.set_defaults(run=cmd_widths)

    p = sub.add_parser("splitting", help="Heegaard splitting from a triangulation")
    p.add_argument("file")
    p.add_argument("--partition", metavar="A:B", help="boundary ids on each side, e.g. '0:1' (default: all on the second side)")
    p.set_defaults(run=cmd_splitting)

    p = sub.add_parser("amalgamate", help="amalgamate a generalized splitting (JSON)")
    p.add_argument("file")
    p.set_defaults(run=cmd_amalgamate)

    p = sub.add_parser("bounds", help="bound chain from volume to pathwidth")
    p.add_argument("--volume", type=float, required=True)
    p.add_argument("--K", type=float, required=True, help="tetrahedra per unit volume")
    p.add_argument("--epsilon", type=float, default=0.104)
    p.add_argument("--thick-genus", type=int)
    p.add_argument("--m-thin", type=int)
    p.add_argument("--heegaard-genus", type=int)
    p.add_argument("--treewidth", type=int)
    p.add_argument("--pathwidth", type=int)
    p.set_defaults(run=cmd_bounds)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "exact_cutoff", 1) is not None and getattr(args, "exact_cutoff", 1) < 0:
        parser.error("--exact-cutoff must be non-negative")
    try:
        data = args.run(args)
    except (DomainError, TriangulationError, GraphFormatError, SplittingError, BoundsError) as exc:
        print(f"triwidth {args.command}: {exc}", file=sys.stderr)
        for v in getattr(exc, "violations", []):
            print(f"  - {v}", file=sys.stderr)
        return 1
    if args.table:
        color = "NO_COLOR" not in os.environ and sys.stdout.isatty() and not args.output
        text = render_table(args.command, data, color)
    else:
        text = data if isinstance(data, str) else _dump(data)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
