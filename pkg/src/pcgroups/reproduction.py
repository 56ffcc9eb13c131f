"""Built-in graphs and maps, and drivers that check the two embedding examples.

``egc`` concerns a map from the group on the five-vertex graph ``gamma1``
into the group on the six-vertex chordal graph ``gamma2``, with ``gamma1``
not an induced subgraph of the extension graph of ``gamma2``.  ``wcc``
concerns a map from the group on the complement of C5 into the group on
the complement of P7, a weakly chordal graph.

Bounded searches standing in for unbounded statements get the verdict
``evidence`` and carry their bound; they never report ``pass``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional

from .centralizers import generator_centralizer, parabolic_center, set_centralizer
from .graph import (
    CommutationGraph,
    complement,
    cycle_graph,
    find_induced,
    graph_isomorphic,
    is_chordal,
    is_weakly_chordal,
    path_graph,
)
from .extension import build_ball, find_induced_in_ball, DEFAULT_VERTEX_CAP
from .morphisms import GeneratorMap, check_relators, kernel_search, parse_map

__all__ = ["builtin", "BUILTINS", "Check", "Report", "reproduce_egc", "reproduce_wcc"]

_GRAPHS = {
    "gamma1": ("a b c d e", "a-d a-e b-e c-d d-e"),
    "gamma2": (
        "a1 a2 b c d e",
        "a1-a2 a1-c a1-d a1-e a2-b a2-d a2-e b-e c-d d-e",
    ),
    "c5bar": ("a b c d e", "a-c a-d b-d b-e c-e"),
}

# the path c1-d1-e1-a-b-c2-d2-e2; p7bar is its complement
_P7_ORDER = "a b c1 c2 d1 d2 e1 e2".split()
_P7_PATH = "c1 d1 e1 a b c2 d2 e2".split()

_MAPS = {
    "phi_egc": ("gamma1", "gamma2", "a -> a1 a2\nb -> b\nc -> c\nd -> d\ne -> e\n"),
    "phi_wcc": ("c5bar", "p7bar", "a -> a\nb -> b\nc -> c1 c2\nd -> d1 d2\ne -> e1 e2\n"),
}

BUILTINS = tuple(list(_GRAPHS) + ["p7", "p7bar"] + list(_MAPS))


def _graph(name: str) -> CommutationGraph:
    if name in _GRAPHS:
        vs, es = _GRAPHS[name]
        return CommutationGraph(vs.split(), [e.split("-") for e in es.split()])
    if name in ("p7", "p7bar"):
        p7 = CommutationGraph(_P7_ORDER, list(zip(_P7_PATH, _P7_PATH[1:])))
        return p7 if name == "p7" else complement(p7)
    raise KeyError(name)


def builtin(name: str):
    """A built-in graph or generator map by name."""
    if name in _MAPS:
        src, tgt, text = _MAPS[name]
        return parse_map(_graph(src), _graph(tgt), text)
    try:
        return _graph(name)
    except KeyError:
        raise KeyError(f"unknown builtin {name!r}; known: {', '.join(BUILTINS)}") from None


@dataclass
class Check:
    id: str
    verdict: str  # pass | fail | evidence
    bound: Optional[int] = None
    detail: str = ""
    time_ms: float = 0.0

    def structured(self) -> str:
        bound = "-" if self.bound is None else str(self.bound)
        return f"{self.id} {self.verdict} bound={bound} time_ms={self.time_ms:.0f}"


@dataclass
class Report:
    name: str
    params: dict
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.verdict != "fail" for c in self.checks)

    def __getitem__(self, check_id: str) -> Check:
        for c in self.checks:
            if c.id == check_id:
                return c
        raise KeyError(check_id)

    def to_structured(self) -> str:
        return "".join(c.structured() + "\n" for c in self.checks)

    def to_text(self) -> str:
        params = ", ".join(f"{k}={v}" for k, v in self.params.items())
        lines = [f"reproduce {self.name} ({params})"]
        for c in self.checks:
            bound = "" if c.bound is None else f" [bound {c.bound}]"
            lines.append(f"  {c.id:<24} {c.verdict:<8}{bound}  {c.detail}")
        lines.append("result: " + ("ok" if self.ok else "FAILED"))
        return "\n".join(lines) + "\n"


def _timed(report: Report, check_id: str, fn, bound=None):
    t0 = time.perf_counter()
    verdict, detail = fn()
    ms = (time.perf_counter() - t0) * 1000
    report.checks.append(Check(check_id, verdict, bound, detail, ms))


def _hom_check(m: GeneratorMap):
    rels = check_relators(m)
    bad = [r for r in rels if not r.trivial]
    if bad:
        return "fail", "relator not killed: " + "; ".join(map(str, bad))
    return "pass", f"all {len(rels)} relators sent to 1"


def _kernel_check(m: GeneratorMap, max_len: int, gens=None):
    def run():
        if any(not r.trivial for r in check_relators(m)):
            return "fail", "not a homomorphism"
        w = kernel_search(m, max_len, gens)
        if w is not None:
            return "fail", f"kernel witness: {w}"
        return "evidence", f"no kernel element of length <= {max_len}"
    return run


def reproduce_egc(
    max_kernel_len: int = 6,
    ball_radius: int = 1,
    phi: Optional[GeneratorMap] = None,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
) -> Report:
    g1, g2 = builtin("gamma1"), builtin("gamma2")
    phi = phi if phi is not None else builtin("phi_egc")
    rep = Report("egc", {"max_len": max_kernel_len, "radius": ball_radius})

    _timed(rep, "homomorphism", lambda: _hom_check(phi))
    _timed(rep, "kernel", _kernel_check(phi, max_kernel_len), max_kernel_len)
    _timed(rep, "parabolic_bcde", _kernel_check(phi, max_kernel_len, ["b", "c", "d", "e"]),
           max_kernel_len)

    def embed():
        if ball_radius == 0:
            found = find_induced(g1, g2)
            if found:
                return "fail", f"gamma1 is induced in gamma2: {found}"
            return "evidence", "gamma1 is not an induced subgraph of gamma2 (radius 0)"
        ball = build_ball(g2, ball_radius, vertex_cap=vertex_cap)
        found = find_induced_in_ball(g1, ball)
        if found:
            shown = ", ".join(f"{k}->{v}" for k, v in found.items())
            return "fail", f"embedding found: {shown}"
        return "evidence", (
            f"no induced gamma1 in the radius-{ball_radius} ball ({len(ball)} vertices); "
            "says nothing about larger radii"
        )

    _timed(rep, "ext_ball_embedding", embed, ball_radius)

    def centralizers():
        facts = [
            ("C(d)", generator_centralizer(g2, "d").generators, {"a1", "a2", "c", "d", "e"}),
            ("Z(C(d))", parabolic_center(generator_centralizer(g2, "d")), {"a1", "d"}),
            ("C(c)", generator_centralizer(g2, "c").generators, {"a1", "c", "d"}),
            ("Z(C(c))", parabolic_center(generator_centralizer(g2, "c")), {"a1", "c", "d"}),
            ("C(e)", generator_centralizer(g2, "e").generators, {"a1", "a2", "b", "d", "e"}),
            ("C({a2,e})", set_centralizer(g2, ["a2", "e"]).generators,
             set(generator_centralizer(g2, "e").generators)),
        ]
        wrong = [name for name, got, want in facts if set(got) != want]
        if wrong:
            return "fail", "mismatch: " + ", ".join(wrong)
        return "pass", "; ".join(f"{n}={{{','.join(sorted(w))}}}" for n, _, w in facts)

    _timed(rep, "centralizers", centralizers)
    _timed(rep, "gamma2_chordal",
           lambda: ("pass", "gamma2 is chordal") if is_chordal(g2)
           else ("fail", "gamma2 has an induced cycle of length >= 4"))
    return rep


def reproduce_wcc(max_kernel_len: int = 6, phi: Optional[GeneratorMap] = None) -> Report:
    c5bar, p7bar = builtin("c5bar"), builtin("p7bar")
    phi = phi if phi is not None else builtin("phi_wcc")
    rep = Report("wcc", {"max_len": max_kernel_len})

    _timed(rep, "homomorphism", lambda: _hom_check(phi))
    _timed(rep, "kernel", _kernel_check(phi, max_kernel_len), max_kernel_len)

    def weakly():
        bad = [name for name, h in (("p7bar", p7bar), ("P7", path_graph(7)))
               if not is_weakly_chordal(h)]
        if bad:
            return "fail", "not weakly chordal: " + ", ".join(bad)
        return "pass", "p7bar and P7 are weakly chordal"

    _timed(rep, "weakly_chordal", weakly)

    def iso(check, a, b):
        def run():
            m = graph_isomorphic(a, b)
            if m is None:
                return "fail", f"{check}: no isomorphism"
            return "pass", ", ".join(f"{k}->{v}" for k, v in m.items())
        return run

    _timed(rep, "c5bar_complement_is_c5", iso("complement(c5bar) ~ C5", complement(c5bar), cycle_graph(5)))
    _timed(rep, "c5bar_is_c5", iso("c5bar ~ C5", c5bar, cycle_graph(5)))
    return rep
