"""Command-line front end.

Exit codes: 0 solved (or valid), 1 infeasible (or invalid sequence),
2 bounds only, 3 input error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from .complete import build_destination_graph, solve_optimal_cycle_cover
from .core import (
    InvalidInstanceError,
    UnsupportedSolverError,
    check_equivalence,
    verify_sequence,
)
from .dispatch import ALGORITHMS, dispatch
from .dot import destination_dot, emit_dot, instance_dot
from .io import load_instance, load_sequence, save_instance
from .oracle import DEFAULT_STATE_CAP, StateCapExceeded
from .reduction import (
    ThreeDMInstance,
    certify,
    extend_colors,
    random_3dm,
    worst_case_path,
)

EXIT_OK, EXIT_INFEASIBLE, EXIT_BOUNDS, EXIT_INPUT = 0, 1, 2, 3


def parse_instance(path: str, allow_missing_colors: bool = False):
    return load_instance(path, surjective=not allow_missing_colors)


def _write_json(obj, path: str | None) -> None:
    text = json.dumps(obj, indent=2)
    if path:
        Path(path).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)


def _cmd_solve(args) -> int:
    inst = parse_instance(args.instance, args.allow_missing_colors)
    report = dispatch(inst, args.algo, args.state_cap, args.emit_sequence, args.emit_matrix)
    if args.dot:
        if inst.graph.is_complete and report.feasible:
            d = build_destination_graph(inst)
            emit_dot(destination_dot(d, solve_optimal_cycle_cover(d)), args.dot)
        else:
            emit_dot(instance_dot(inst), args.dot)
    _write_json(report.to_dict(), args.output)
    if not report.feasible:
        return EXIT_INFEASIBLE
    return EXIT_OK if report.opt is not None else EXIT_BOUNDS


def _load_3dm(args) -> ThreeDMInstance:
    if args.triples:
        data = json.loads(Path(args.triples).read_text(encoding="utf-8"))
        if isinstance(data, dict):
            m = data.get("m", args.m)
            data = data["triples"]
        else:
            m = args.m
        if m is None:
            raise InvalidInstanceError("m: required (via --m or the triples file)")
        try:
            return ThreeDMInstance(m, tuple(tuple(t) for t in data))
        except (ValueError, TypeError) as exc:
            raise InvalidInstanceError(f"triples: {exc}") from None
    if args.m is None:
        raise InvalidInstanceError("m: --m is required with --random")
    rng = random.Random(args.random)
    k = args.n_triples if args.n_triples is not None else 2 * args.m
    return random_3dm(args.m, k, rng)


def _cmd_generate(args) -> int:
    if args.kind == "reversal":
        save_instance(worst_case_path(args.n), args.output)
        return EXIT_OK
    cert = certify(_load_3dm(args))
    save_instance(cert.instance, args.output)
    cert_path = args.certificate or str(Path(args.output).with_suffix(".cert.json"))
    _write_json(cert.to_dict(), cert_path)
    return EXIT_OK


def _cmd_extend(args) -> int:
    inst = parse_instance(args.instance)
    try:
        out = extend_colors(inst, args.colors)
    except ValueError as exc:
        raise InvalidInstanceError(str(exc)) from None
    save_instance(out, args.output)
    return EXIT_OK


def _cmd_verify(args) -> int:
    inst = parse_instance(args.instance, args.allow_missing_colors)
    swaps = load_sequence(args.sequence)
    ok = verify_sequence(inst, swaps)
    _write_json({"valid": ok, "length": len(swaps)}, None)
    return EXIT_OK if ok else EXIT_INFEASIBLE


def _cmd_export_dot(args) -> int:
    inst = parse_instance(args.instance, args.allow_missing_colors)
    if args.destination:
        d = build_destination_graph(inst)
        cover = solve_optimal_cycle_cover(d) if check_equivalence(inst) else None
        emit_dot(destination_dot(d, cover), args.output)
    else:
        emit_dot(instance_dot(inst), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ctswap", description="Exact colored token swapping.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="solve an instance file")
    s.add_argument("instance")
    s.add_argument("--algo", choices=ALGORITHMS, default="auto")
    s.add_argument("--state-cap", type=int, default=DEFAULT_STATE_CAP)
    s.add_argument("--emit-sequence", action="store_true")
    s.add_argument("--emit-matrix", action="store_true",
                   help="include the bipartite weight matrices (two-color solver)")
    s.add_argument("--dot", metavar="FILE",
                   help="write DOT (destination graph with cover on complete graphs)")
    s.add_argument("--allow-missing-colors", action="store_true")
    s.add_argument("-o", "--output", help="write the JSON report here instead of stdout")
    s.set_defaults(func=_cmd_solve)

    g = sub.add_parser("generate", help="generate instances")
    gsub = g.add_subparsers(dest="kind", required=True)
    g3 = gsub.add_parser("3dm", help="reduction from 3-dimensional matching")
    g3.add_argument("--m", type=int)
    src = g3.add_mutually_exclusive_group(required=True)
    src.add_argument("--triples", metavar="FILE")
    src.add_argument("--random", metavar="SEED", type=int)
    g3.add_argument("--n-triples", type=int)
    g3.add_argument("-o", "--output", required=True)
    g3.add_argument("--certificate", metavar="FILE")
    g3.set_defaults(func=_cmd_generate)
    gr = gsub.add_parser("reversal", help="distinct colors reversed on a path")
    gr.add_argument("--n", type=int, required=True)
    gr.add_argument("-o", "--output", required=True)
    gr.set_defaults(func=_cmd_generate)

    e = sub.add_parser("extend", help="add fixed colors on a pendant path")
    e.add_argument("instance")
    e.add_argument("--colors", type=int, required=True)
    e.add_argument("-o", "--output", required=True)
    e.set_defaults(func=_cmd_extend)

    v = sub.add_parser("verify", help="check a sequence file against an instance")
    v.add_argument("instance")
    v.add_argument("sequence")
    v.add_argument("--allow-missing-colors", action="store_true")
    v.set_defaults(func=_cmd_verify)

    d = sub.add_parser("export-dot", help="write the instance or destination graph as DOT")
    d.add_argument("instance")
    d.add_argument("-o", "--output", required=True)
    d.add_argument("--destination", action="store_true")
    d.add_argument("--allow-missing-colors", action="store_true")
    d.set_defaults(func=_cmd_export_dot)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InvalidInstanceError, UnsupportedSolverError, StateCapExceeded, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
