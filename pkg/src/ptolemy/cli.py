"""Command-line interface.

Commands: expand, paths, matrix, verify, triangulations, graph.  Problems are
described by flags (--n, --diagonals, --target, --orient) or a JSON spec file;
explicit flags override the file.  Text output is stable and pinned by golden
tests; structured output is versioned JSON.

Exit codes: 0 success, 1 verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .errors import InputError, ResourceLimitError
from .expansion import expand, expand_trivial_coefficients
from .laurent import LaurentPolynomial
from .oracle import exchange_matrix, initial_coefficients
from .polygon import Arc, Triangulation, build_triangulation, flip_graph
from .tpaths import enumerate_t_paths
from .verify import LEVELS, all_pass, render_report, run_checks

FORMAT_VERSION = 1
# Vertices 1..n+3 counterclockwise; diagonals labeled 1..n, boundary {k,k+1} -> n+k.
LABELING = "ccw-1based/boundary-n+k/v1"


@dataclass
class ProblemSpec:
    """Parsed problem description for the expand/paths/matrix commands."""

    n: int
    diagonals: list[tuple[int, int]]
    target: tuple[int, int] | None = None
    orient: int | None = None
    trivial_coefficients: bool = False
    fmt: str = "text"

    def triangulation(self) -> Triangulation:
        return build_triangulation(self.n, self.diagonals)

    def chord(self) -> Arc:
        if self.target is None:
            raise InputError("no target diagonal given (use --target or the spec file)")
        if len(self.target) != 2:
            raise InputError(f"target must be a vertex pair, got {self.target!r}")
        return Arc(*self.target)


def _parse_pair(text: str) -> tuple[int, int]:
    parts = text.split("-")
    if len(parts) != 2:
        raise InputError(f"expected a pair like 2-4, got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise InputError(f"expected integers in {text!r}") from exc


def _parse_pairs(text: str) -> list[tuple[int, int]]:
    text = text.strip()
    if not text:
        return []
    return [_parse_pair(part) for part in text.split(",")]


def _load_spec(args: argparse.Namespace) -> ProblemSpec:
    data: dict = {}
    if getattr(args, "spec_file", None):
        try:
            with open(args.spec_file) as fh:
                data = json.load(fh)
        except OSError as exc:
            raise InputError(f"cannot read spec file: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise InputError(f"spec file is not valid JSON: {exc}") from exc
        if not isinstance(data, dict):
            raise InputError("spec file must hold a JSON object")

    n = args.n if args.n is not None else data.get("n")
    if n is None:
        raise InputError("no rank given (use --n or the spec file)")
    if args.diagonals is not None:
        diagonals = _parse_pairs(args.diagonals)
    elif "diagonals" in data:
        diagonals = []
        for pair in data["diagonals"]:
            if not isinstance(pair, (list, tuple)) or len(pair) != 2:
                raise InputError(f"spec-file diagonal {pair!r} is not a vertex pair")
            diagonals.append((int(pair[0]), int(pair[1])))
    else:
        diagonals = None

    target = None
    if getattr(args, "target", None) is not None:
        target = _parse_pair(args.target)
    elif data.get("target") is not None:
        raw = data["target"]
        if not isinstance(raw, (list, tuple)) or len(raw) != 2:
            raise InputError(f"spec-file target {raw!r} is not a vertex pair")
        target = (int(raw[0]), int(raw[1]))

    orient = getattr(args, "orient", None)
    if orient is None:
        orient = data.get("orient")

    trivial = bool(getattr(args, "trivial_coefficients", False) or data.get("trivial_coefficients"))
    fmt = getattr(args, "format", None) or data.get("format") or "text"
    if diagonals is None:
        raise InputError("no diagonals given (use --diagonals or the spec file)")
    return ProblemSpec(int(n), diagonals, target, orient, trivial, fmt)


def _expansion_payload(spec: ProblemSpec, chord: Arc, origin: int, poly: LaurentPolynomial) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "labeling": LABELING,
        "n": spec.n,
        "target": [chord.u, chord.v],
        "origin": origin,
        "trivial_coefficients": spec.trivial_coefficients,
        "terms": poly.to_term_list(),
    }


def polynomial_from_payload(payload: dict) -> LaurentPolynomial:
    """Rebuild the polynomial from a structured expand payload."""
    if payload.get("format_version") != FORMAT_VERSION:
        raise InputError(f"unsupported format_version {payload.get('format_version')!r}")
    nvars = 2 * int(payload["n"]) + 3
    return LaurentPolynomial.from_term_list(nvars, payload["terms"])


def _cmd_expand(args: argparse.Namespace) -> int:
    spec = _load_spec(args)
    t = spec.triangulation()
    chord = spec.chord()
    origin = spec.orient if spec.orient is not None else chord.u
    if spec.trivial_coefficients:
        poly = expand_trivial_coefficients(t, chord, origin)
    else:
        poly = expand(t, chord, origin)
    if spec.fmt == "structured":
        print(json.dumps(_expansion_payload(spec, chord, origin, poly), indent=2))
    else:
        print(poly.render())
    return 0


def _cmd_paths(args: argparse.Namespace) -> int:
    spec = _load_spec(args)
    t = spec.triangulation()
    chord = spec.chord()
    origin = spec.orient if spec.orient is not None else chord.u
    if not chord.is_incident(origin):
        raise InputError(f"{origin} is not an endpoint of {chord}")
    label = t.label_of(chord)
    if label is not None:
        paths = [f"({origin},{chord.other_end(origin)} | {label})"]
    else:
        paths = [str(p) for p in enumerate_t_paths(t, origin, chord.other_end(origin))]
    if spec.fmt == "structured":
        print(
            json.dumps(
                {
                    "format_version": FORMAT_VERSION,
                    "labeling": LABELING,
                    "n": spec.n,
                    "target": [chord.u, chord.v],
                    "origin": origin,
                    "paths": paths,
                },
                indent=2,
            )
        )
    else:
        for line in paths:
            print(line)
    return 0


def _cmd_matrix(args: argparse.Namespace) -> int:
    from .polygon import snake_triangulation

    if args.diagonals is None and args.spec_file is None:
        if args.n is None:
            raise InputError("no rank given (use --n)")
        t = snake_triangulation(args.n)
        n = args.n
        fmt = args.format or "text"
    else:
        spec = _load_spec(args)
        t = spec.triangulation()
        n = spec.n
        fmt = spec.fmt
    matrix = exchange_matrix(t)
    pairs = initial_coefficients(t)
    if fmt == "structured":
        print(
            json.dumps(
                {
                    "format_version": FORMAT_VERSION,
                    "labeling": LABELING,
                    "n": n,
                    "matrix": [list(row) for row in matrix.rows],
                    "coefficients": [
                        {
                            "plus": plus.render(),
                            "minus": minus.render(),
                            "plus_exponents": list(plus.exponents),
                            "minus_exponents": list(minus.exponents),
                        }
                        for plus, minus in pairs
                    ],
                },
                indent=2,
            )
        )
    else:
        print(matrix.render())
        print()
        for j, (plus, minus) in enumerate(pairs, start=1):
            print(f"p{j}+ = {plus.render()}")
            print(f"p{j}- = {minus.render()}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    rows = run_checks(args.n, args.level)
    print(render_report(args.n, args.level, rows))
    return 0 if all_pass(rows) else 1


def _node_name(t: Triangulation) -> str:
    return ",".join(str(arc) for arc in t.diagonal_key())


def _cmd_triangulations(args: argparse.Namespace) -> int:
    from .polygon import all_triangulations

    nodes = all_triangulations(args.n)
    if (args.format or "text") == "structured":
        print(
            json.dumps(
                {
                    "format_version": FORMAT_VERSION,
                    "labeling": LABELING,
                    "n": args.n,
                    "triangulations": [
                        [[arc.u, arc.v] for arc in t.diagonal_key()] for t in nodes
                    ],
                },
                indent=2,
            )
        )
    else:
        for t in nodes:
            print(_node_name(t))
    return 0


def _cmd_graph(args: argparse.Namespace) -> int:
    nodes, edges = flip_graph(args.n)
    names = [_node_name(t) for t in nodes]
    if (args.format or "text") == "structured":
        print(
            json.dumps(
                {
                    "format_version": FORMAT_VERSION,
                    "labeling": LABELING,
                    "n": args.n,
                    "nodes": names,
                    "edges": [list(edge) for edge in edges],
                },
                indent=2,
            )
        )
    else:
        print("graph flips {")
        for i, j in edges:
            print(f'  "{names[i]}" -- "{names[j]}";')
        print("}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ptolemy",
        description=(
            "Exact Laurent expansions of polygon cluster variables: path sums, "
            "exchange recursion, seed matrices and verification sweeps."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    problem = argparse.ArgumentParser(add_help=False)
    problem.add_argument("--n", type=int, default=None, help="rank (polygon has n+3 vertices)")
    problem.add_argument(
        "--diagonals", default=None, help='triangulation diagonals, e.g. "2-4,4-6,2-6"'
    )
    problem.add_argument("--spec-file", default=None, help="JSON problem description")
    problem.add_argument(
        "--format", choices=("text", "structured"), default=None, help="output format"
    )

    target = argparse.ArgumentParser(add_help=False)
    target.add_argument("--target", default=None, help='diagonal to expand, e.g. "3-7"')
    target.add_argument(
        "--orient", type=int, default=None, help="endpoint anchoring the crossing order"
    )

    p_expand = sub.add_parser(
        "expand", parents=[problem, target], help="Laurent expansion of a diagonal"
    )
    p_expand.add_argument(
        "--trivial-coefficients",
        action="store_true",
        help="substitute 1 for every boundary variable",
    )
    p_expand.set_defaults(func=_cmd_expand)

    p_paths = sub.add_parser(
        "paths", parents=[problem, target], help="list the admissible paths"
    )
    p_paths.set_defaults(func=_cmd_paths)

    p_matrix = sub.add_parser(
        "matrix",
        parents=[problem],
        help="sign matrix and coefficient pairs (zigzag triangulation when no diagonals given)",
    )
    p_matrix.set_defaults(func=_cmd_matrix)

    p_verify = sub.add_parser("verify", help="run the verification sweeps for one rank")
    p_verify.add_argument("--n", type=int, required=True)
    p_verify.add_argument("--level", choices=LEVELS, default="full")
    p_verify.set_defaults(func=_cmd_verify)

    p_tri = sub.add_parser("triangulations", help="list every triangulation of the polygon")
    p_tri.add_argument("--n", type=int, required=True)
    p_tri.add_argument("--format", choices=("text", "structured"), default=None)
    p_tri.set_defaults(func=_cmd_triangulations)

    p_graph = sub.add_parser("graph", help="export the flip graph")
    p_graph.add_argument("--n", type=int, required=True)
    p_graph.add_argument("--format", choices=("text", "structured"), default=None)
    p_graph.set_defaults(func=_cmd_graph)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv if argv is not None else sys.argv[1:])
    try:
        return args.func(args)
    except (InputError, ResourceLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
