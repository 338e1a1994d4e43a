"""Command-line front end.

Input files are line oriented; ``#`` starts a comment and blank lines are
ignored.

setsys::

    carrier: 1 2 3
    indep: -          # the empty set
    indep: 2 3

graph::

    vertex: u v w     # optional, for isolated vertices
    edge e1 u v 3/2   # weight defaults to 1

bipartite::

    left: l1 l2
    right: r1 r2
    edge e1 l1 r1

costs::

    a 3
    b 1/2
"""

from __future__ import annotations

import argparse
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Optional, TextIO

from .core import ExplicitSetSystem, check_axioms, format_set, rank_pair, rank_quotient
from .core import dual as dual_system
from .errors import ContractError, InputError, ParseError
from .greedoid import classify_greedoid
from .greedy import best_in_greedy, set_cost
from .instances import BipartiteGraph, Edge, UndirectedGraph, kruskal, max_bipartite_matching, prim
from .intersect import DoubleMatroid, matroid_intersection, optimality_certificate, rank_sum

_TOKEN = re.compile(r"[A-Za-z0-9_.-]+\Z")
_RATIONAL = re.compile(r"-?\d+(?:\.\d+)?\Z|-?\d+/\d+\Z")
_DIRECTIVE = re.compile(r"([a-z]+):(.*)\Z")

KINDS = ("setsys", "graph", "bipartite", "costs")


@dataclass(frozen=True)
class InputDocument:
    kind: str
    value: object


def _lines(text: str) -> Iterator[tuple[int, str]]:
    for number, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line


def _token(tok: str, line: int) -> str:
    if not _TOKEN.match(tok):
        raise ParseError(f"invalid token {tok!r}", line)
    return tok


def _tokens(rest: str, line: int) -> list[str]:
    toks = [_token(t, line) for t in rest.split()]
    if len(set(toks)) != len(toks):
        raise ParseError("repeated token", line)
    return toks


def parse_rational(text: str, line: Optional[int] = None) -> Fraction:
    """Decimal (``2.5``) or fraction (``5/2``) literal."""
    if not _RATIONAL.match(text):
        raise ParseError(f"malformed rational {text!r}", line)
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in {text!r}", line) from None


def _split(line_text: str) -> tuple[Optional[str], str]:
    m = _DIRECTIVE.match(line_text)
    if m:
        return m.group(1), m.group(2)
    return None, line_text


def parse_setsys(text: str) -> ExplicitSetSystem:
    carrier: Optional[list[str]] = None
    family = []
    for line, content in _lines(text):
        key, rest = _split(content)
        if key == "carrier":
            if carrier is not None:
                raise ParseError("carrier given twice", line)
            toks = rest.split()
            carrier = [] if toks == ["-"] else _tokens(rest, line)
            if "-" in carrier:
                raise ParseError("'-' is reserved for the empty set", line)
        elif key == "indep":
            if carrier is None:
                raise ParseError("indep before carrier", line)
            toks = rest.split()
            if toks == ["-"]:
                family.append(frozenset())
                continue
            if not toks:
                raise ParseError("empty indep line; write 'indep: -' for the empty set", line)
            toks = _tokens(rest, line)
            unknown = [t for t in toks if t not in carrier]
            if unknown:
                raise ParseError(f"elements not in the carrier: {' '.join(unknown)}", line)
            family.append(frozenset(toks))
        else:
            raise ParseError(f"unknown directive {content.split()[0]!r}", line)
    if carrier is None:
        raise ParseError("missing 'carrier:' line")
    return ExplicitSetSystem(tuple(carrier), family)


def format_setsys(s: ExplicitSetSystem) -> str:
    lines = ["carrier: " + format_set(s.carrier)]
    lines += ["indep: " + format_set(m) for m in s.family]
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> UndirectedGraph:
    vertices: list[str] = []
    edges: list[Edge] = []
    seen: set[str] = set()
    for line, content in _lines(text):
        key, rest = _split(content)
        if key == "vertex":
            vertices += _tokens(rest, line)
            continue
        if key is not None:
            raise ParseError(f"unknown directive {key + ':'!r}", line)
        parts = content.split()
        if parts[0] != "edge":
            raise ParseError(f"unknown directive {parts[0]!r}", line)
        if len(parts) not in (4, 5):
            raise ParseError("expected 'edge <id> <u> <v> [<weight>]'", line)
        eid, u, v = (_token(t, line) for t in parts[1:4])
        if eid in seen:
            raise ParseError(f"duplicate edge id {eid!r}", line)
        seen.add(eid)
        w = parse_rational(parts[4], line) if len(parts) == 5 else Fraction(1)
        edges.append(Edge(eid, u, v, w))
    return UndirectedGraph(tuple(vertices), tuple(edges))


def parse_bipartite(text: str) -> BipartiteGraph:
    left: list[str] = []
    right: list[str] = []
    edges = []
    seen: set[str] = set()
    for line, content in _lines(text):
        key, rest = _split(content)
        if key in ("left", "right"):
            toks = _tokens(rest, line)
            other = right if key == "left" else left
            clash = [t for t in toks if t in other]
            if clash:
                raise ParseError(f"vertex on both sides: {' '.join(clash)}", line)
            (left if key == "left" else right).extend(toks)
            continue
        if key is not None:
            raise ParseError(f"unknown directive {key + ':'!r}", line)
        parts = content.split()
        if parts[0] != "edge":
            raise ParseError(f"unknown directive {parts[0]!r}", line)
        if len(parts) != 4:
            raise ParseError("expected 'edge <id> <left> <right>'", line)
        eid, l, r = (_token(t, line) for t in parts[1:])
        if eid in seen:
            raise ParseError(f"duplicate edge id {eid!r}", line)
        if l not in left:
            raise ParseError(f"vertex {l!r} is not on the left side", line)
        if r not in right:
            raise ParseError(f"vertex {r!r} is not on the right side", line)
        seen.add(eid)
        edges.append((eid, l, r))
    return BipartiteGraph(tuple(left), tuple(right), tuple(edges))


def parse_costs(text: str) -> dict[str, Fraction]:
    costs: dict[str, Fraction] = {}
    for line, content in _lines(text):
        parts = content.split()
        if len(parts) != 2:
            raise ParseError("expected '<element> <rational>'", line)
        e = _token(parts[0], line)
        if e in costs:
            raise ParseError(f"cost for {e!r} given twice", line)
        costs[e] = parse_rational(parts[1], line)
    return costs


_PARSERS: dict[str, Callable[[str], object]] = {
    "setsys": parse_setsys,
    "graph": parse_graph,
    "bipartite": parse_bipartite,
    "costs": parse_costs,
}


def parse_input(kind: str, text: str) -> InputDocument:
    if kind not in _PARSERS:
        raise InputError(f"unknown input kind {kind!r}")
    return InputDocument(kind, _PARSERS[kind](text))


def format_rational(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _yes(flag: Optional[bool]) -> str:
    if flag is None:
        return "n-a"
    return "yes" if flag else "no"


def _read(path: str, kind: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse_input(kind, text).value
    except ParseError as exc:
        raise ParseError(f"{path}: {exc}") from None


def _order(arg: Optional[str]) -> Optional[list[str]]:
    if arg is None:
        return None
    return [t.strip() for t in arg.split(",") if t.strip()]


def cmd_analyze(args) -> list[str]:
    s = _read(args.setsys, "setsys")
    ax = check_axioms(s)
    gr = classify_greedoid(s)
    if s.has_mask(0):
        lower, upper = rank_pair(s, s.carrier)
        rank, lower_rank = str(upper), str(lower)
    else:
        rank = lower_rank = "n-a"
    q = format_rational(rank_quotient(s)) if ax.is_independence_system else "n-a"
    return [
        f"independence_system: {_yes(ax.is_independence_system)}",
        f"matroid: {_yes(ax.is_matroid)}",
        f"greedoid: {_yes(gr.is_greedoid)}",
        f"accessible: {_yes(gr.is_accessible)}",
        f"antimatroid: {_yes(gr.is_antimatroid)}",
        f"sep: {_yes(gr.has_sep)}",
        f"rank: {rank}",
        f"lower_rank: {lower_rank}",
        f"rank_quotient: {q}",
    ]


def cmd_dual(args) -> list[str]:
    s = _read(args.setsys, "setsys")
    return [format_set(m) for m in dual_system(s).family]


def cmd_greedy(args) -> list[str]:
    s = _read(args.setsys, "setsys")
    costs = _read(args.costs, "costs")
    if not check_axioms(s).is_independence_system:
        raise ContractError("greedy needs an independence system")
    unknown = sorted(set(costs) - set(s.carrier))
    if unknown:
        raise InputError(f"costs given for elements outside the carrier: {' '.join(unknown)}")
    run = best_in_greedy(s, costs, _order(args.order))
    return [f"result: {format_set(run.result)}", f"weight: {format_rational(set_cost(costs, run.result))}"]


def cmd_intersect(args) -> list[str]:
    s1 = _read(args.setsys1, "setsys")
    s2 = _read(args.setsys2, "setsys")
    if s1.carrier != s2.carrier:
        raise InputError("the two set systems must have the same carrier")
    for label, s in (("first", s1), ("second", s2)):
        if not check_axioms(s).is_matroid:
            raise ContractError(f"the {label} set system is not a matroid")
    dm = DoubleMatroid(s1, s2)
    X = matroid_intersection(dm, check_invariants=True)
    Q = optimality_certificate(dm, X)
    return [
        f"result: {format_set(X)}",
        f"size: {len(X)}",
        f"certificate: {format_set(Q)}",
        f"certificate_value: {rank_sum(dm, Q)}",
    ]


def _tree_lines(g: UndirectedGraph, T: frozenset) -> list[str]:
    w = g.weights()
    return [f"result: {format_set(T)}", f"weight: {format_rational(sum((w[e] for e in T), Fraction(0)))}"]


def cmd_kruskal(args) -> list[str]:
    g = _read(args.graph, "graph")
    T = kruskal(g, "min" if args.min else "max", _order(args.order))
    return _tree_lines(g, T)


def cmd_prim(args) -> list[str]:
    g = _read(args.graph, "graph")
    T = prim(g, args.root, "min" if args.min else "max", _order(args.order))
    return _tree_lines(g, T)


def cmd_bimatch(args) -> list[str]:
    b = _read(args.bipartite, "bipartite")
    M = max_bipartite_matching(b)
    return [f"result: {format_set(M)}", f"size: {len(M)}"]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="matroidlab", description="Matroid and greedoid algorithms on small inputs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", help="axioms, ranks and rank quotient of a set system")
    a.add_argument("setsys")
    a.set_defaults(func=cmd_analyze)

    d = sub.add_parser("dual", help="dual family of an independence system")
    d.add_argument("setsys")
    d.set_defaults(func=cmd_dual)

    g = sub.add_parser("greedy", help="Best-In-Greedy with a cost file")
    g.add_argument("setsys")
    g.add_argument("--costs", required=True)
    g.add_argument("--order", help="comma separated initial element order")
    g.set_defaults(func=cmd_greedy)

    i = sub.add_parser("intersect", help="maximum common independent set of two matroids")
    i.add_argument("setsys1")
    i.add_argument("setsys2")
    i.set_defaults(func=cmd_intersect)

    k = sub.add_parser("kruskal", help="optimal spanning forest")
    k.add_argument("graph")
    k.add_argument("--min", action="store_true", help="minimise instead of maximise")
    k.add_argument("--order", help="comma separated initial edge order")
    k.set_defaults(func=cmd_kruskal)

    r = sub.add_parser("prim", help="optimal spanning tree of the root's component")
    r.add_argument("graph")
    r.add_argument("--root", required=True)
    r.add_argument("--min", action="store_true", help="minimise instead of maximise")
    r.add_argument("--order", help="comma separated initial edge order")
    r.set_defaults(func=cmd_prim)

    b = sub.add_parser("bimatch", help="maximum bipartite matching")
    b.add_argument("bipartite")
    b.set_defaults(func=cmd_bimatch)
    return p


def run(argv: list[str], stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    """Execute one command; returns 0 on success, 1 on input errors, 2 on contract errors."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        lines = args.func(args)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except InputError as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    except ContractError as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    for line in lines:
        stdout.write(line + "\n")
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))
