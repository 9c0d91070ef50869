"""Command-line interface.

Subcommands: gen, graph, walk, solve, classify, verify, sweep. Exit
status is 0 on success, 1 on domain/usage errors, 2 when a resource cap
would be exceeded. All output is deterministic for fixed inputs. The
caps can be overridden with the WATCHMAN_MAX_SEQ (generator/builder
a**k cap) and WATCHMAN_MAX_VERTICES (oracle cap) environment variables.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .analysis import DEFAULT_SWEEP_BUDGET, classify, sweep, verify
from .errors import DomainError, ResourceCapError
from .graphcore import (
    Digraph,
    build_de_bruijn_graph,
    gen_eulerian,
    generated_subdigraph,
    to_dot,
)
from .seqcore import DEFAULT_SIZE_CAP, gen_fkm, gen_greedy, parse_sequence, read_sequences
from .watchman import (
    DEFAULT_VERTEX_CAP,
    construct_watchman_walk,
    enumerate_min_walks,
    induced_walk,
    solve_min_walk,
)

_GENERATORS = {"fkm": gen_fkm, "greedy": gen_greedy, "euler": gen_eulerian}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 1 on usage errors, not argparse's 2
        raise _UsageError(message)


def _env_cap(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise DomainError(f"{name} must be an integer, got {raw!r}") from None
    if value < 1:
        raise DomainError(f"{name} must be positive")
    return value


def _size_cap() -> int:
    return _env_cap("WATCHMAN_MAX_SEQ", DEFAULT_SIZE_CAP)


def _vertex_cap() -> int:
    return _env_cap("WATCHMAN_MAX_VERTICES", DEFAULT_VERTEX_CAP)


def _parse_lengths(text: str) -> range:
    lo, sep, hi = text.partition("..")
    if not sep:
        lo = hi = text
    try:
        low, high = int(lo), int(hi)
    except ValueError:
        raise DomainError(f"lengths must look like LO..HI, got {text!r}") from None
    if low > high:
        raise DomainError(f"empty length range {text!r}")
    return range(low, high + 1)


def _sequences_from_args(args) -> list:
    if getattr(args, "seq_file", None):
        with open(args.seq_file, "r", encoding="utf-8") as fh:
            seqs = read_sequences(fh.read(), args.alphabet)
        if not seqs:
            raise DomainError(f"no sequences in {args.seq_file}")
        return seqs
    return [parse_sequence(args.seq, args.alphabet)]


def cmd_gen(args) -> int:
    seq = _GENERATORS[args.algo](args.alphabet, args.order, _size_cap())
    print(seq.text)
    return 0


def cmd_graph(args) -> int:
    if args.highlight_induced and not args.from_seq:
        raise DomainError("--highlight-induced needs --from-seq")
    if args.highlight_induced and not args.dot:
        raise DomainError("--highlight-induced needs --dot")
    if args.from_seq:
        d = parse_sequence(args.from_seq, args.alphabet)
        graph = generated_subdigraph(d, args.order)
        highlight = induced_walk(d, args.order, graph) if args.highlight_induced else None
    else:
        graph = build_de_bruijn_graph(args.alphabet, args.order, _size_cap())
        highlight = None
    if args.dot:
        sys.stdout.write(to_dot(graph, highlight))
    else:
        print(json.dumps(graph.to_json()))
    return 0


def cmd_walk(args) -> int:
    seed = parse_sequence(args.seq, args.alphabet) if args.seq else None
    walk = construct_watchman_walk(args.alphabet, args.order, seed, _size_cap())
    print(",".join(walk.label_texts))
    return 0


def cmd_solve(args) -> int:
    if args.from_seq:
        if args.alphabet is None or args.order is None:
            raise DomainError("--from-seq needs -a and -k")
        d = parse_sequence(args.from_seq, args.alphabet)
        graph = generated_subdigraph(d, args.order)
    else:
        text = sys.stdin.read()
        if not text.strip():
            raise DomainError("no graph JSON on standard input and no --from-seq")
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DomainError(f"invalid graph JSON: {exc}") from None
        graph = Digraph.from_json(obj)
    cap = _vertex_cap()
    result = solve_min_walk(graph, cap)
    payload = result.to_json()
    if args.count:
        if result.feasible:
            walks = enumerate_min_walks(graph, result.optimum_length, cap)
            payload["count"] = len(walks)
            payload["walks"] = [list(w.label_texts) for w in walks]
        else:
            payload["count"] = 0
            payload["walks"] = []
    print(json.dumps(payload))
    return 0


def cmd_classify(args) -> int:
    for seq in _sequences_from_args(args):
        print(str(classify(seq, args.order)))
    return 0


def cmd_verify(args) -> int:
    for seq in _sequences_from_args(args):
        print(json.dumps(verify(seq, args.order, _vertex_cap()).to_json()))
    return 0


def cmd_sweep(args) -> int:
    report = sweep(
        args.alphabet,
        args.order,
        _parse_lengths(args.lengths),
        budget=args.budget,
        vertex_cap=_vertex_cap(),
    )
    sys.stdout.write(report.to_jsonl())
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            fh.write(report.to_csv())
    return 0


def _add_alphabet_order(parser, alphabet_required=True, order_required=True):
    parser.add_argument(
        "-a",
        "--alphabet",
        type=int,
        required=alphabet_required,
        default=None,
        help="alphabet size (2..36)",
    )
    parser.add_argument(
        "-k",
        "--order",
        type=int,
        required=order_required,
        default=None,
        help="string/window order k",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="watchman", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a de Bruijn sequence")
    _add_alphabet_order(p)
    p.add_argument("--algo", choices=sorted(_GENERATORS), default="fkm")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("graph", help="emit a de Bruijn (sub)digraph")
    _add_alphabet_order(p)
    p.add_argument("--from-seq", help="generating sequence for a subdigraph")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true", help="emit DOT (default JSON)")
    fmt.add_argument("--json", action="store_true", help="emit JSON (default)")
    p.add_argument(
        "--highlight-induced",
        action="store_true",
        help="with --from-seq --dot: bold the induced walk's arcs",
    )
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("walk", help="construct a minimum watchman's walk of G(a,k)")
    _add_alphabet_order(p)
    p.add_argument("--seq", help="order-(k-1) de Bruijn seed sequence")
    p.set_defaults(func=cmd_walk)

    p = sub.add_parser("solve", help="exact minimum closed dominating walk")
    _add_alphabet_order(p, alphabet_required=False, order_required=False)
    p.add_argument("--from-seq", help="solve the subdigraph generated by this sequence")
    p.add_argument(
        "--count",
        action="store_true",
        help="also enumerate all minimum walks up to rotation",
    )
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("classify", help="certificate classification of a sequence")
    _add_alphabet_order(p)
    p.add_argument("--seq", help="sequence text")
    p.add_argument("--seq-file", help="sequence file (one per line, # comments)")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="classify and cross-check against the oracle")
    _add_alphabet_order(p)
    p.add_argument("--seq", help="sequence text")
    p.add_argument("--seq-file", help="sequence file (one per line, # comments)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="verify every sequence in a length range")
    _add_alphabet_order(p)
    p.add_argument("--lengths", required=True, help="inclusive range LO..HI")
    p.add_argument("--budget", type=int, default=DEFAULT_SWEEP_BUDGET)
    p.add_argument("--csv", help="also write a CSV summary to this path")
    p.set_defaults(func=cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"watchman: error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help and friends
        return exc.code if isinstance(exc.code, int) else 0

    if args.command in ("classify", "verify"):
        if bool(args.seq) == bool(args.seq_file):
            print(
                "watchman: error: exactly one of --seq / --seq-file is required",
                file=sys.stderr,
            )
            return 1

    try:
        return args.func(args)
    except DomainError as exc:
        print(f"watchman: error: {exc}", file=sys.stderr)
        return 1
    except ResourceCapError as exc:
        print(f"watchman: resource cap: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
