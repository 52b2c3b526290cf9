"""Command-line interface.

Exit codes: 0 success, 1 domain errors (not graphical, not a unigraph in
plain mode, oracle disagreement in verify), 2 usage errors. With --json the
verdict is data, so is-unigraph exits 0 either way and emits exactly one
JSON document on stdout; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import _kernel
from .decomp import compact, compose_all, decompose
from .degseq import (
    DegreeSequence,
    parse_paired,
    parse_sequence,
    realize,
)
from .errors import UnigraphError
from .gen import Base, GenSpec, compose_types, generate
from .params import unigraph_params
from .split import determine_split
from .unitype import is_unigraph
from .verify import CHECKS


def _input_sequence(args) -> DegreeSequence:
    if args.file:
        with open(args.file) as fh:
            text = fh.read().strip()
    else:
        text = args.degrees
    if getattr(args, "paired", False):
        return parse_paired(text).merged()
    return parse_sequence(text)


def _add_input_flags(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("-d", "--degrees", help="degree sequence, e.g. 8^4,5^4,2^2")
    src.add_argument("--file", help="read the sequence from a file")
    p.add_argument(
        "--paired",
        action="store_true",
        help="input is a paired sequence k;s, use its merged form",
    )


def _emit(args, payload: dict, plain: str) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        print(plain)


def cmd_decompose(args) -> int:
    s = _input_sequence(args)
    d = decompose(s)
    if args.compact:
        report = compact(d).to_report()
    else:
        report = d.to_report()
    lines = [f"{c['k']};{c['s']}" for c in report["components"]]
    if report["tail"] is not None:
        lines.append(f"tail: {report['tail']}")
    _emit(args, report, "\n".join(lines) if lines else "(empty)")
    return 0


def cmd_split(args) -> int:
    sc = determine_split(_input_sequence(args))
    payload = {
        "kind": sc.kind.value,
        "paired": None if sc.paired is None else sc.paired.to_text(),
    }
    plain = sc.kind.value if sc.paired is None else f"{sc.kind.value} {sc.paired}"
    _emit(args, payload, plain)
    return 0


def cmd_is_unigraph(args) -> int:
    _, report = is_unigraph(_input_sequence(args))
    payload = {
        "isUnigraph": report.is_unigraph,
        "components": report.tags(),
        "failureIndex": report.failure_index,
    }
    if args.json:
        print(json.dumps(payload))
        return 0
    if report.is_unigraph:
        print("unigraph: " + " o ".join(report.tags()))
        return 0
    print("not a unigraph")
    return 1


def cmd_compose(args) -> int:
    parts = [p for p in args.sequences]
    heads = [parse_paired(t) for t in parts[:-1]]
    last = parts[-1]
    if ";" in last:
        heads.append(parse_paired(last))
        tail = DegreeSequence(())
    else:
        tail = parse_sequence(last)
    out = compose_all(heads, tail)
    _emit(args, {"sequence": out.to_text()}, out.to_text())
    return 0


def cmd_params(args) -> int:
    ps = unigraph_params(_input_sequence(args))
    payload = ps.to_dict()
    plain = " ".join(f"{k}={v}" for k, v in payload.items())
    _emit(args, payload, plain)
    return 0


def cmd_realize(args) -> int:
    g = realize(_input_sequence(args))
    if args.json:
        print(g.to_json())
    else:
        sys.stdout.write(g.to_edge_list())
    return 0


def cmd_generate(args) -> int:
    allowed = None
    if args.types:
        try:
            allowed = frozenset(Base(t.strip()) for t in args.types.split(","))
        except ValueError as exc:
            raise UnigraphError(f"unknown type in --types: {exc}") from exc
    for i in range(args.count):
        spec = GenSpec(n=args.n, k=args.k, seed=args.seed + i, allowed=allowed)
        comps = generate(spec)
        seq = compose_types(comps)
        print(
            json.dumps(
                {"sequence": seq.to_text(), "components": [c.tag() for c in comps]}
            )
        )
    return 0


def cmd_verify(args) -> int:
    fn, default_n = CHECKS[args.check]
    max_n = args.max_n if args.max_n is not None else default_n
    for diff in fn(max_n):
        print(json.dumps(diff))
        return 1
    print(json.dumps({"check": args.check, "max_n": max_n, "ok": True}))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="unigraph",
        description="Canonical degree-sequence decomposition and unigraph tools"
        f" (kernel: {_kernel.IMPL})",
    )
    ap.add_argument("--json", action="store_true", help="machine-readable output")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="canonical decomposition of a sequence")
    _add_input_flags(p)
    p.add_argument("--compact", action="store_true", help="merge single-vertex runs")
    p.set_defaults(fn=cmd_decompose)

    p = sub.add_parser("compact", help="compact canonical decomposition")
    _add_input_flags(p)
    p.set_defaults(fn=cmd_decompose, compact=True)

    p = sub.add_parser("split", help="split recognition and KS-partition")
    _add_input_flags(p)
    p.set_defaults(fn=cmd_split)

    p = sub.add_parser("is-unigraph", help="unigraph test with component types")
    _add_input_flags(p)
    p.set_defaults(fn=cmd_is_unigraph)

    p = sub.add_parser("compose", help="compose paired sequences (tail last)")
    p.add_argument(
        "sequences",
        nargs="+",
        help="paired sequences, plain tail last; put -- first when a part "
        "starts with '-'",
    )
    p.set_defaults(fn=cmd_compose)

    p = sub.add_parser("params", help="omega/alpha/beta/chi/fix/dist of a unigraph")
    _add_input_flags(p)
    p.set_defaults(fn=cmd_params)

    p = sub.add_parser("realize", help="Havel-Hakimi realization as an edge list")
    _add_input_flags(p)
    p.set_defaults(fn=cmd_realize)

    p = sub.add_parser("generate", help="seeded unigraph generation")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--types", help="comma-separated allowed bases, e.g. c5,mk2,spq")
    p.set_defaults(fn=cmd_generate)

    p = sub.add_parser("verify", help="cross-check fast paths against the oracle")
    p.add_argument("check", choices=sorted(CHECKS))
    p.add_argument("--max-n", type=int, default=None)
    p.set_defaults(fn=cmd_verify)

    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except UnigraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
