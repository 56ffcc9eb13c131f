"""Command line front end, installed as ``pcg``.

Exit codes: 0 computed / property holds, 1 property fails or witness found,
2 input or usage error, 3 resource cap hit.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import droms
from .extension import DEFAULT_VERTEX_CAP, CapacityError, build_ball, find_induced_in_ball
from .graph import (
    GraphParseError,
    connected_components,
    is_chordal,
    is_thin_chordal,
    is_weakly_chordal,
    parse_graph,
)
from .morphisms import (
    MapParseError,
    NotAHomomorphism,
    check_relators,
    kernel_search,
    parse_map,
)
from .reproduction import BUILTINS, builtin, reproduce_egc, reproduce_wcc
from .words import WordParseError, alphabet, normal_form, parse_word, words_equal

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None


def load_graph(spec: str):
    """A graph file path, or the name of a built-in graph when no such file exists."""
    if not os.path.exists(spec) and spec in BUILTINS:
        g = builtin(spec)
        if not hasattr(g, "vertices"):
            raise UsageError(f"{spec} is a map, not a graph")
        return g
    return parse_graph(_read(spec))


def load_map(spec: str, source, target):
    if not os.path.exists(spec) and spec in BUILTINS:
        m = builtin(spec)
        if hasattr(m, "vertices"):
            raise UsageError(f"{spec} is a graph, not a map")
        return parse_map(source, target, m.to_text())
    return parse_map(source, target, _read(spec))


def word_text(arg: str) -> str:
    """Word argument: literal text, or ``@path`` to read it from a file."""
    if arg.startswith("@"):
        return _read(arg[1:])
    return arg


def _need(args, *names):
    for n in names:
        if getattr(args, n) is None:
            raise UsageError(f"missing --{n}")


def _emit(args, text: str) -> None:
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_normalize(args):
    _need(args, "graph")
    g = load_graph(args.graph)
    out = []
    for w in args.word or []:
        out.append(str(normal_form(g, parse_word(g, word_text(w)))) + "\n")
    _emit(args, "".join(out))
    return EXIT_OK


def cmd_eq(args):
    _need(args, "graph")
    if not args.word or len(args.word) != 2:
        raise UsageError("eq needs exactly two -w words")
    g = load_graph(args.graph)
    u, v = (parse_word(g, word_text(w)) for w in args.word)
    same = words_equal(g, u, v)
    _emit(args, ("equal" if same else "different") + "\n")
    return EXIT_OK if same else EXIT_FAIL


def cmd_alpha(args):
    _need(args, "graph")
    g = load_graph(args.graph)
    out = []
    for w in args.word or []:
        letters = alphabet(g, parse_word(g, word_text(w)))
        out.append(" ".join(v for v in g.vertices if v in letters) + "\n")
    _emit(args, "".join(out))
    return EXIT_OK


def cmd_props(args):
    _need(args, "graph")
    g = load_graph(args.graph)
    cone = droms.cone_vertex(g)
    props = [
        ("vertices", len(g.vertices)),
        ("edges", len(g.edges)),
        ("components", len(connected_components(g))),
        ("chordal", is_chordal(g)),
        ("weakly_chordal", is_weakly_chordal(g)),
        ("thin_chordal", is_thin_chordal(g)),
        ("cone_vertex", cone if cone is not None else "-"),
    ]
    if args.format == "structured":
        text = "".join(f"{k}={str(v).lower()}\n" for k, v in props)
    else:
        text = "".join(f"{k + ':':<16}{v}\n" for k, v in props)
    _emit(args, text)
    return EXIT_OK


def cmd_decompose(args):
    _need(args, "graph")
    g = load_graph(args.graph)
    t = droms.decompose_thin_chordal(g)
    if isinstance(t, droms.Failure):
        _emit(args, f"not thin-chordal: {t}\n")
        return EXIT_FAIL
    _emit(args, t.sexp() + "\n" + droms.tree_group_signature(t) + "\n")
    return EXIT_OK


def cmd_ext_ball(args):
    _need(args, "graph")
    g = load_graph(args.graph)
    ball = build_ball(g, args.radius, vertex_cap=args.vertex_cap)
    _emit(args, f"# extension graph ball, radius {args.radius}, {len(ball)} vertices\n"
          + ball.to_text())
    return EXIT_OK


def cmd_embed(args):
    _need(args, "source", "target")
    pattern, host = load_graph(args.source), load_graph(args.target)
    ball = build_ball(host, args.radius, vertex_cap=args.vertex_cap)
    found = find_induced_in_ball(pattern, ball)
    if found is None:
        _emit(args, f"no induced embedding in the radius-{args.radius} ball "
              f"({len(ball)} vertices); evidence only, larger radii not searched\n")
        return EXIT_FAIL
    _emit(args, "".join(f"{x} -> {v.name}\n" for x, v in found.items()))
    return EXIT_OK


def cmd_verify_hom(args):
    _need(args, "source", "target", "map")
    src, tgt = load_graph(args.source), load_graph(args.target)
    m = load_map(args.map, src, tgt)
    rels = check_relators(m)
    _emit(args, "".join(str(r) + "\n" for r in rels))
    return EXIT_OK if all(r.trivial for r in rels) else EXIT_FAIL


def cmd_kernel_search(args):
    _need(args, "source", "target", "map")
    src, tgt = load_graph(args.source), load_graph(args.target)
    m = load_map(args.map, src, tgt)
    try:
        w = kernel_search(m, args.max_len)
    except NotAHomomorphism as e:
        _emit(args, f"not a homomorphism: {e}\n")
        return EXIT_FAIL
    if w is not None:
        _emit(args, f"kernel witness: {w}\n")
        return EXIT_FAIL
    _emit(args, f"no kernel element of length <= {args.max_len} (evidence only)\n")
    return EXIT_OK


def cmd_reproduce(args):
    if args.which == "egc":
        rep = reproduce_egc(args.max_len, args.radius, vertex_cap=args.vertex_cap)
    else:
        rep = reproduce_wcc(args.max_len)
    _emit(args, rep.to_structured() if args.format == "structured" else rep.to_text())
    return EXIT_OK if rep.ok else EXIT_FAIL


COMMANDS = {
    "normalize": (cmd_normalize, "print normal forms of words"),
    "eq": (cmd_eq, "decide whether two words are equal in the group"),
    "alpha": (cmd_alpha, "print the generators occurring in the reduced form"),
    "props": (cmd_props, "graph class properties"),
    "decompose": (cmd_decompose, "cone-vertex decomposition of a thin-chordal graph"),
    "ext-ball": (cmd_ext_ball, "export a ball of the extension graph"),
    "embed": (cmd_embed, "search an induced copy of a graph in an extension-graph ball"),
    "verify-hom": (cmd_verify_hom, "check that a generator map kills every relator"),
    "kernel-search": (cmd_kernel_search, "bounded search for kernel elements"),
    "reproduce": (cmd_reproduce, "run the built-in egc / wcc checks"),
}


def _nonneg(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-g", "--graph")
    common.add_argument("-s", "--source")
    common.add_argument("-t", "--target")
    common.add_argument("-m", "--map")
    common.add_argument("-w", "--word", action="append", help="word text or @file")
    common.add_argument("--max-len", type=_nonneg, default=6)
    common.add_argument("--radius", type=_nonneg, default=1)
    common.add_argument("--vertex-cap", type=_nonneg, default=DEFAULT_VERTEX_CAP)
    common.add_argument("--format", choices=("text", "structured"), default="text")
    common.add_argument("-o", "--out")

    parser = argparse.ArgumentParser(prog="pcg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_)
        if name == "reproduce":
            p.add_argument("which", choices=("egc", "wcc"))
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    fn = COMMANDS[args.command][0]
    try:
        return fn(args)
    except CapacityError as e:
        print(f"pcg: {e}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, GraphParseError, WordParseError, MapParseError, KeyError, ValueError) as e:
        print(f"pcg: {e}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
