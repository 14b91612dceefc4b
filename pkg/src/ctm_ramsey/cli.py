"""Command-line interface: ``ctm <command> ...``.

Exit codes: 0 success, 2 parse/usage error, 3 precondition or threshold
violation, 4 verification failure, 5 structural contradiction.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import corpus, extremal
from .errors import PreconditionError, StructuralContradiction
from .extraction import extract_ctm, extract_ctm_perturbed, extract_triples_vs_matching, extract_triples_vs_matching_perturbed
from .graph import Color, random_coloring, with_random_white
from .io import ParseError, parse_graph, parse_witness, render_graph, render_witness
from .packing import oracle_has_ctm, verify_ctm
from .router import route_square_path, validate_route

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_VERIFY = 4
EXIT_CONTRADICTION = 5


class _Exit(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _read(path: str, parser):
    try:
        return parser(Path(path).read_text())
    except OSError as exc:
        raise _Exit(EXIT_PARSE, f"cannot read {path}: {exc.strerror}") from None
    except ParseError as exc:
        raise _Exit(EXIT_PARSE, f"{path}: {exc}") from None


def _require(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise PreconditionError(f"--{name.replace('_', '-')} is required for '{args.kind}'")


def cmd_gen(args) -> int:
    kind = args.kind
    if kind == "extremal-ctm":
        _require(args, "n")
        g = extremal.gen_ctm_lower_bound(args.n)
    elif kind == "sharp":
        _require(args, "n", "m")
        g = extremal.gen_triples_vs_matching_sharp(args.n, args.m)
    elif kind == "affine4":
        _require(args, "n")
        g = extremal.gen_affine4(args.n)
    elif kind == "two-cliques":
        _require(args, "n")
        try:
            g = corpus.two_cliques(args.n, args.k1, args.k2)
        except ValueError as exc:
            raise PreconditionError(str(exc)) from None
    elif kind == "random":
        _require(args, "vertices")
        if args.vertices < 1:
            raise PreconditionError("--vertices must be positive")
        g = random_coloring(args.vertices, args.seed)
        if args.t is not None:
            g = with_random_white(g, args.t, args.seed)
    else:  # argparse restricts choices
        raise PreconditionError(f"unknown kind {kind}")
    _emit(render_graph(g), args.out)
    return EXIT_OK


def cmd_extract(args) -> int:
    g = _read(args.graph, parse_graph)
    n, t = args.n, args.t or 0
    if args.mode == "triples-vs-matching":
        if args.m is None:
            raise PreconditionError("--m is required for triples-vs-matching")
        if g.allows_white:
            res = extract_triples_vs_matching_perturbed(g, n, args.m, t)
        else:
            res = extract_triples_vs_matching(g, None, n, args.m)
        if res.red_ctm is not None:
            print(f"result=red-ctm triangles={len(res.red_ctm.tm)}")
            _emit(render_witness(res.red_ctm), args.out)
        else:
            mm = res.blue_matching
            print(f"result=blue-matching edges={len(mm)}")
            body = "".join(f"{u} {v}\n" for u, v in mm.edges)
            _emit(f"ctm-matching v1 B {len(mm)}\n{body}", args.out)
        return EXIT_OK
    if args.mode == "ctm3" or g.allows_white:
        w, trace = extract_ctm_perturbed(g, n, t)
    else:
        w, trace = extract_ctm(g, n)
    print(trace.format())
    _emit(render_witness(w), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _read(args.graph, parse_graph)
    w = _read(args.witness, parse_witness)
    verdict = verify_ctm(g, w, args.n)
    if not verdict:
        raise _Exit(EXIT_VERIFY, f"{verdict.reason}: {verdict.detail}")
    print("ok")
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = _read(args.graph, parse_graph)
    colors = [Color.from_letter(args.color)] if args.color else [Color.RED, Color.BLUE]
    found = None
    for c in colors:
        found = oracle_has_ctm(g, c, args.n)
        print(f"color={c.letter} witness={'yes' if found else 'no'}")
        if found:
            _emit(render_witness(found), args.out)
            break
    return EXIT_OK


def cmd_route(args) -> int:
    route = route_square_path(args.m, args.p, args.v1, args.v2)
    problem = validate_route(route, args.m, args.p, args.v1, args.v2)
    if problem:
        raise _Exit(EXIT_VERIFY, problem)
    print(" ".join(f"{c}:{s}" for c, s in route.vertices))
    print("missing=" + (",".join(f"{i}-{j}" for i, j in route.missing_diagonals) or "-"))
    return EXIT_OK


def _parse_range(text: str) -> list[int]:
    out: list[int] = []
    for piece in text.split(","):
        if "-" in piece:
            lo, hi = piece.split("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(piece))
    return out


def cmd_corpus(args) -> int:
    try:
        ns = _parse_range(args.n)
    except ValueError:
        raise _Exit(EXIT_PARSE, f"bad --n range {args.n!r}") from None
    if any(n < 2 for n in ns):
        raise PreconditionError("every n must be >= 2")
    try:
        report = corpus.run_corpus(ns, args.trials, args.seed, t=args.t or 0, jobs=args.jobs)
    except corpus.CorpusFailure as exc:
        raise _Exit(EXIT_VERIFY, str(exc)) from None
    _emit(report.render(), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ctm", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a coloring in ctm-graph format")
    p.add_argument("kind", choices=["extremal-ctm", "sharp", "affine4", "random", "two-cliques"])
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--t", type=int, help="random: overlay white edges with max degree < t")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--vertices", type=int)
    p.add_argument("--k1", type=int, default=0)
    p.add_argument("--k2", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("extract", help="extract a witness and print the trace")
    p.add_argument("mode", choices=["ctm", "ctm3", "triples-vs-matching"])
    p.add_argument("graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("verify", help="check a witness against a graph")
    p.add_argument("graph")
    p.add_argument("witness")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="exhaustive search for a connected nK3")
    p.add_argument("graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--color", choices=["R", "B"])
    p.add_argument("--out")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("route", help="almost-square path in a complete tripartite graph")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--v1", type=int, default=0)
    p.add_argument("--v2", type=int, default=0)
    p.set_defaults(func=cmd_route)

    p = sub.add_parser("corpus", help="randomized and adversarial extraction corpus")
    p.add_argument("--n", default="2-5", help="e.g. 3, 2-5 or 2,4")
    p.add_argument("--trials", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--t", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _Exit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except StructuralContradiction as exc:
        print(f"proof-bug: {exc}", file=sys.stderr)
        return EXIT_CONTRADICTION


if __name__ == "__main__":
    sys.exit(main())
