"""Command-line entry point: ``dilated {convert,dilate,query,spread}``.

Exit codes: 0 success, 1 unreadable or invalid input, 2 bad arguments.
Failures print a single ``error: ...`` line on stderr and nothing on stdout.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence, TextIO

from .activation import ActivationConfig, ConfigError, spread
from .dilation import DilatedGraph, DilationError, DilationPolicy, dilate_all, from_quads, to_quads
from .engine import INTERSECTION, PatternError, ProcessContext, TriplePattern, rank_bindings
from .nquads import ParseError, iter_quads, parse_nquads, parse_term, serialize_nquads
from .terms import Dataset, Graph, merge_datasets

_defaults = ActivationConfig()


class UsageError(Exception):
    """Bad arguments or configuration (exit 2)."""


class InputError(Exception):
    """Unreadable or invalid input data (exit 1)."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def format_score(x: float) -> str:
    """Shortest decimal (at most 12 significant digits) that reads back as ``x``."""
    if isinstance(x, int):
        return str(x)
    for digits in range(1, 13):
        s = format(x, f".{digits}g")
        if float(s) == x:
            return s
    return format(x, ".12g")


def _read_bytes(path: str) -> bytes:
    try:
        if path == "-":
            return sys.stdin.buffer.read()
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _load(path: str) -> Dataset:
    try:
        return parse_nquads(_read_bytes(path))
    except ParseError as exc:
        raise InputError(f"{path}: {exc}") from None


def _load_store(paths: Sequence[str]) -> DilatedGraph:
    dataset = merge_datasets(*(_load(p) for p in paths))
    try:
        return from_quads(dataset)
    except DilationError as exc:
        raise InputError(f"invalid dilated store: {exc}") from None


def _emit(text: str, output: Optional[str], stdout: TextIO) -> None:
    if output is None or output == "-":
        stdout.write(text)
        return
    try:
        with open(output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise InputError(f"{output}: {exc.strerror}") from None


def _pattern_term(value: Optional[str], flag: str):
    if value is None or value.strip() == "?":
        return None
    try:
        return parse_term(value)
    except ParseError as exc:
        raise UsageError(f"{flag}: {exc.message}") from None


def _activation_config(args: argparse.Namespace) -> ActivationConfig:
    try:
        return ActivationConfig(args.decay, args.steps, args.epsilon, args.direction)
    except ConfigError as exc:
        raise UsageError(str(exc)) from None


def cmd_convert(args: argparse.Namespace, stdout: TextIO) -> None:
    _emit(serialize_nquads(_load(args.input)), args.output, stdout)


def cmd_dilate(args: argparse.Namespace, stdout: TextIO) -> None:
    if args.policy == "khop":
        if args.k is None:
            raise UsageError("--policy khop requires --k")
        if args.k == "unbounded":
            k = None
        else:
            try:
                k = int(args.k)
            except ValueError:
                k = -1
            if k < 0:
                raise UsageError(f"--k must be a non-negative integer or 'unbounded', got {args.k!r}")
        policy = DilationPolicy.khop(k)
    else:
        policy = DilationPolicy.whole_graph()
    dataset = _load(args.input)
    if any(q.graph is not None for q in dataset):
        raise InputError(f"{args.input}: expected plain triples, found a named-graph quad")
    dg = dilate_all(dataset.default, policy)
    _emit(serialize_nquads(to_quads(dg)), args.output, stdout)


def cmd_query(args: argparse.Namespace, stdout: TextIO) -> None:
    pattern = TriplePattern(
        _pattern_term(args.subject, "--subject"),
        _pattern_term(args.predicate, "--predicate"),
        _pattern_term(args.object, "--object"),
    )
    if pattern.subject is None and pattern.predicate is None and pattern.object is None:
        raise UsageError("pattern must fix at least one of --subject/--predicate/--object")
    scorer = INTERSECTION if args.scorer == INTERSECTION else _activation_config(args)
    dg = _load_store(args.store)
    history = Graph()
    if args.history is not None:
        hist = _load(args.history)
        history = Graph(q.triple for q in hist)
    try:
        ranked = rank_bindings(dg, pattern, ProcessContext(history), scorer)
    except PatternError as exc:
        raise UsageError(str(exc)) from None
    lines = []
    for b in ranked:
        if args.min_score is not None and b.score < args.min_score:
            continue
        lines.append(f"{b.rank}\t{b.triple.n3()}\t{format_score(b.score)}\n")
    _emit("".join(lines), None, stdout)


def cmd_spread(args: argparse.Namespace, stdout: TextIO) -> None:
    cfg = _activation_config(args)
    graph_ds = _load(args.graph)
    text = _read_bytes(args.seeds)
    try:
        text = text.decode("utf-8")
    except UnicodeDecodeError:
        raise InputError(f"{args.seeds}: invalid UTF-8") from None
    seeds = set()
    for lineno, line in enumerate(text.split("\n"), start=1):
        stripped = line.strip(" \t")
        if not stripped or stripped.startswith("#"):
            continue
        try:
            seeds.add(parse_term(line, lineno))
        except ParseError as exc:
            raise InputError(f"{args.seeds}: {exc}") from None
    if not seeds:
        raise UsageError("seed set is empty")
    energy = spread(Graph(q.triple for q in graph_ds), seeds, cfg)
    _emit("".join(f"{t.n3()}\t{format_score(e)}\n" for t, e in energy.ranked()), None, stdout)


def _add_activation_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--decay", type=float, default=_defaults.decay, help="per-step attenuation in (0, 1]")
    p.add_argument("--steps", type=int, default=_defaults.max_steps, help="maximum number of updates")
    p.add_argument("--epsilon", type=float, default=_defaults.epsilon, help="stop once peak energy drops below this")
    p.add_argument("--direction", default=_defaults.direction, help="'out' or 'undirected'")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dilated", description="Contextualized RDF quad store tools.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("convert", help="rewrite N-Quads in canonical form")
    p.add_argument("input")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("dilate", help="dilate every triple of a plain graph")
    p.add_argument("input")
    p.add_argument("--policy", choices=("khop", "whole-graph"), required=True)
    p.add_argument("--k", help="hop radius for khop (integer or 'unbounded')")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_dilate)

    p = sub.add_parser("query", help="rank pattern matches against a history graph")
    p.add_argument("store", nargs="+", help="dilated store file(s); several are merged")
    p.add_argument("--history", help="history graph (N-Quads); empty if omitted")
    p.add_argument("--subject", default="?")
    p.add_argument("--predicate", default="?")
    p.add_argument("--object", default="?")
    p.add_argument("--scorer", choices=(INTERSECTION, "activation"), default=INTERSECTION)
    p.add_argument("--min-score", type=float, help="drop bindings scoring below this")
    _add_activation_flags(p)
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("spread", help="diffuse energy from seed terms")
    p.add_argument("graph")
    p.add_argument("seeds", help="file with one N-Quads term per line")
    _add_activation_flags(p)
    p.set_defaults(func=cmd_spread)
    return parser


def main(argv: Optional[Sequence[str]] = None, stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        args.func(args, stdout)
    except UsageError as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    except InputError as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
