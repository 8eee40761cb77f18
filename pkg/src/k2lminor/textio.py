"""Plain-text graph and certificate formats.

Graph: first line ``n m``, then m lines ``u v`` with u < v.  Certificate:
``ell k``, ``A: ids``, ``B: ids``, ``L1: ids`` .. ``Lk: ids``.  Lines
starting with ``#`` are comments anywhere; blank lines are ignored.
"""

from __future__ import annotations

import re
from collections.abc import Iterable

from .graph import Graph, GraphError, build_graph
from .minors import MinorModel
from .witness import format_certificate

__all__ = ["ParseError", "format_certificate", "format_graph", "parse_certificate", "parse_graph"]


class ParseError(GraphError):
    pass


def _content(text: str) -> list[tuple[int, str]]:
    out = []
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append((no, line))
    return out


def _ints(no: int, parts: Iterable[str]) -> list[int]:
    try:
        vals = [int(p) for p in parts]
    except ValueError:
        raise ParseError(f"line {no}: expected integers") from None
    if any(v < 0 for v in vals):
        raise ParseError(f"line {no}: negative value")
    return vals


def parse_graph(text: str) -> Graph:
    lines = _content(text)
    if not lines:
        raise ParseError("empty graph input")
    no, head = lines[0]
    nm = _ints(no, head.split())
    if len(nm) != 2:
        raise ParseError(f"line {no}: header must be 'n m'")
    n, m = nm
    edges = []
    for no, line in lines[1:]:
        uv = _ints(no, line.split())
        if len(uv) != 2:
            raise ParseError(f"line {no}: edge must be 'u v'")
        u, v = uv
        if u >= v:
            raise ParseError(f"line {no}: edge endpoints must satisfy u < v")
        edges.append((u, v))
    if len(edges) != m:
        raise ParseError(f"header declares {m} edges, found {len(edges)}")
    return build_graph(n, edges)


def format_graph(g: Graph, comment: str | None = None) -> str:
    lines = [f"# {comment}"] if comment else []
    lines.append(f"{g.n} {g.m}")
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


_SET = re.compile(r"^(A|B|L(\d+)):(.*)$")


def parse_certificate(text: str) -> MinorModel:
    """Certificate text to a model; a leading ``MINOR`` or ``result:`` line is skipped."""
    lines = _content(text)
    while lines and (lines[0][1] == "MINOR" or lines[0][1].startswith("result:")):
        lines = lines[1:]
    if not lines:
        raise ParseError("empty certificate")
    no, head = lines[0]
    parts = head.split()
    if len(parts) != 2 or parts[0] != "ell":
        raise ParseError(f"line {no}: expected 'ell k'")
    ell = _ints(no, parts[1:])[0]
    sets: dict[str, tuple[int, ...]] = {}
    for no, line in lines[1:]:
        mt = _SET.match(line)
        if not mt:
            raise ParseError(f"line {no}: expected 'A:', 'B:' or 'L<i>:'")
        key = mt.group(1)
        if key in sets:
            raise ParseError(f"line {no}: duplicate {key}")
        sets[key] = tuple(_ints(no, mt.group(3).split()))
    for key in ("A", "B"):
        if key not in sets:
            raise ParseError(f"missing {key} line")
    legs = []
    for i in range(1, ell + 1):
        if f"L{i}" not in sets:
            raise ParseError(f"missing L{i} line")
        legs.append(sets.pop(f"L{i}"))
    extra = sorted(k for k in sets if k not in ("A", "B"))
    if extra:
        raise ParseError(f"unexpected {' '.join(extra)} for ell {ell}")
    # keep the sets as given; verify_model judges them
    return MinorModel(ell, sets["A"], sets["B"], tuple(legs))
