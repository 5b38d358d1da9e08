"""Command-line entry point.

Exit codes: 0 affirmative/success, 1 negative verdict, 2 input error,
3 internal invariant breach, 4 resource limit.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from . import oracle
from .errors import GraphFormatError, InvariantError, OracleLimitError, ResourceExhausted
from .fpt_gap import decide_gap
from .graph_core import (
    Graph,
    annihilation_number,
    generate_random_graph,
    parse_graph,
    serialize_graph,
    verify_independent_set,
)
from .recognition import recognize_equal

EXIT_YES, EXIT_NO, EXIT_INPUT, EXIT_INTERNAL, EXIT_LIMIT = 0, 1, 2, 3, 4

# output key order; "ms" is always last
FIELDS = (
    "command", "input_digest", "n", "m", "a", "two_k", "verdict", "certificate",
    "mu", "p", "ell", "cutoff", "which", "value", "output",
)


@dataclass
class RunReport:
    command: str
    result: dict[str, Any] = field(default_factory=dict)
    ms: float = 0.0

    def ordered(self) -> dict[str, Any]:
        out: dict[str, Any] = {"command": self.command}
        for key in FIELDS[1:]:
            if key in self.result:
                out[key] = self.result[key]
        out["ms"] = round(self.ms, 3)
        return out

    def render(self, as_json: bool) -> str:
        data = self.ordered()
        if as_json:
            return json.dumps(data)
        lines = []
        for key, value in data.items():
            if isinstance(value, list):
                value = " ".join(map(str, value))
            elif isinstance(value, bool):
                value = "true" if value else "false"
            lines.append(f"{key}={value}")
        return "\n".join(lines)


class UsageError(Exception):
    pass


def _load(path: str, fmt: str | None) -> Graph:
    if fmt is None:
        fmt = "dimacs" if path.endswith(".col") else "edge_list"
    try:
        data = sys.stdin.buffer.read() if path == "-" else Path(path).read_bytes()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse_graph(data, fmt)


def _base(g: Graph) -> dict[str, Any]:
    s = annihilation_number(g)
    return {"input_digest": g.digest(), "n": s.n, "m": s.m, "a": s.a, "two_k": s.two_k}


def cmd_anni(args: argparse.Namespace) -> tuple[RunReport, int]:
    g = _load(args.input, args.format)
    return RunReport("anni", _base(g)), EXIT_YES


def cmd_recognize(args: argparse.Namespace) -> tuple[RunReport, int]:
    g = _load(args.input, args.format)
    result = _base(g)
    cert = recognize_equal(g)
    result["verdict"] = "yes" if cert else "no"
    if cert is not None:
        if len(cert.independent_set) != result["a"] or not verify_independent_set(
            g, cert.independent_set
        ):
            raise InvariantError("certificate failed re-verification")
        if args.emit_certificate:
            result["certificate"] = list(cert.independent_set)
    return RunReport("recognize", result), EXIT_YES if cert else EXIT_NO


def cmd_gap(args: argparse.Namespace) -> tuple[RunReport, int]:
    g = _load(args.input, args.format)
    result = _base(g)
    d = decide_gap(g, args.ell, node_limit=args.limit_nodes)
    result.update(
        verdict="yes" if d.answer else "no", mu=d.mu, p=d.p, ell=d.ell, cutoff=d.cutoff_applied
    )
    return RunReport("gap", result), EXIT_YES if d.answer else EXIT_NO


def cmd_oracle(args: argparse.Namespace) -> tuple[RunReport, int]:
    g = _load(args.input, args.format)
    result = _base(g)
    fn = {"alpha": oracle.brute_alpha, "tau": oracle.brute_tau, "mu": oracle.brute_mu}[args.which]
    result.update(which=args.which, value=fn(g))
    return RunReport("oracle", result), EXIT_YES


def cmd_gen(args: argparse.Namespace) -> tuple[RunReport, int]:
    try:
        g = generate_random_graph(args.n, args.p, args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    text = serialize_graph(g)
    if args.output == "-":
        sys.stdout.write(text)
    else:
        try:
            Path(args.output).write_text(text)
        except OSError as exc:
            raise UsageError(f"cannot write {args.output}: {exc.strerror}") from None
    result: dict[str, Any] = {"input_digest": g.digest(), "n": g.n, "m": g.m}
    result["output"] = args.output
    return RunReport("gen", result), EXIT_YES


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="annirec",
        description="Compare independence and annihilation numbers of graphs.",
    )
    parser.add_argument("--json", action="store_true", help="emit one JSON object")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_cmd(name: str, helptext: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=helptext)
        p.add_argument("input", help="graph file ('-' for stdin); .col means DIMACS")
        p.add_argument("--format", choices=["dimacs", "edgelist", "edge_list"])
        p.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        return p

    graph_cmd("anni", "print n, m, a(G) and 2k").set_defaults(func=cmd_anni)

    p = graph_cmd("recognize", "decide alpha(G) == a(G)")
    p.add_argument("--emit-certificate", action="store_true")
    p.set_defaults(func=cmd_recognize)

    p = graph_cmd("gap", "decide alpha(G) >= a(G) - ell")
    p.add_argument("--ell", type=_non_negative, default=0)
    p.add_argument("--limit-nodes", type=_non_negative, default=None,
                   help="cap on vertex-cover search nodes")
    p.set_defaults(func=cmd_gap)

    p = graph_cmd("oracle", "exact alpha, tau or mu by exhaustive search")
    p.add_argument("which", choices=["alpha", "tau", "mu"])
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="write a seeded Erdos-Renyi graph as an edge list")
    p.add_argument("n", type=_non_negative)
    p.add_argument("p", type=float)
    p.add_argument("--seed", type=_non_negative, default=0)
    p.add_argument("-o", "--output", default="-")
    p.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else 0
    start = time.perf_counter()
    try:
        report, code = args.func(args)
    except (GraphFormatError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (OracleLimitError, ResourceExhausted) as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    report.ms = (time.perf_counter() - start) * 1000.0
    out = report.render(args.json)
    if args.command == "gen" and args.output == "-":
        print(out, file=sys.stderr)
    else:
        print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
