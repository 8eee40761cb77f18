"""Generators for the graph families used as extremal examples, and audits.

Vertex id layouts (fixed, certificates and golden tests depend on them):

* ``necklace(n)``: v_i = i, w_i = n + i for i in 0..n-1; v_i ~ v_{i+1},
  w_i ~ w_{i+1}, v_i ~ w_i, v_i ~ w_{i+1} (indices mod n).
* ``wheel(n)``: rim 0..n-1 in cyclic order, hub n.
* ``gadget_wheel(n)``: rim 0..2n-1, hub 2n, gadget i adds 2n+1+3i .. 2n+3+3i
  completing {rim 2i, rim 2i+1} to a K_5.
* ``cycle_strong_edge(n)``: (v_i, a) = i, (v_i, b) = n + i.
* ``king(rows, cols)``: cell (r, c) = r * cols + c.
* ``complete_bipartite_2l(l)``: sides {0, 1} and {2..l+1}.
* ``apex_necklace(n)``: necklace(n) plus apex 2n adjacent to every v_i.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .graph import Contraction, Graph, GraphError, build_graph, contract_edges, find_twins, vertex_connectivity

__all__ = [
    "FAMILIES",
    "FamilyAudit",
    "FamilySpec",
    "ParamTooSmall",
    "apex_necklace",
    "audit",
    "complete_bipartite_2l",
    "cycle_strong_edge",
    "gadget_wheel",
    "gadget_wheel_delta",
    "king",
    "king_middle_contraction",
    "necklace",
    "wheel",
]


class ParamTooSmall(GraphError):
    pass


def _need(cond: bool, what: str) -> None:
    if not cond:
        raise ParamTooSmall(what)


def necklace(n: int) -> Graph:
    _need(n >= 4, "necklace needs n >= 4")
    edges = []
    for i in range(n):
        j = (i + 1) % n
        edges += [(i, j), (n + i, n + j), (i, n + i), (i, n + j)]
    return build_graph(2 * n, edges)


def wheel(n: int) -> Graph:
    _need(n >= 3, "wheel needs a rim of length >= 3")
    edges = [(i, (i + 1) % n) for i in range(n)] + [(i, n) for i in range(n)]
    return build_graph(n + 1, edges)


def gadget_wheel_delta(n: int, delta: int) -> Graph:
    """Even wheel with rim 2n where each rim pair is completed to K_{delta+1}.

    ``delta = 4`` is the K_5 gadget wheel.  Added vertices have degree
    ``delta``; the graph is 2-connected with a hub of degree 2n.
    """
    _need(n >= 2, "gadget wheel needs n >= 2 gadgets")
    _need(delta >= 3, "gadget wheel needs delta >= 3")
    rim = 2 * n
    hub = rim
    edges = [(i, (i + 1) % rim) for i in range(rim)] + [(i, hub) for i in range(rim)]
    nxt = rim + 1
    for i in range(n):
        extra = list(range(nxt, nxt + delta - 1))
        nxt += delta - 1
        edges += itertools.combinations([2 * i, 2 * i + 1, *extra], 2)
    return build_graph(nxt, edges)


def gadget_wheel(n: int) -> Graph:
    return gadget_wheel_delta(n, 4)


def cycle_strong_edge(n: int) -> Graph:
    """Strong product C_n x K_2: two n-cycles, rungs and both cell diagonals."""
    _need(n >= 4, "cycle_strong_edge needs n >= 4")
    edges = []
    for i in range(n):
        j = (i + 1) % n
        edges += [(i, n + i), (i, j), (n + i, n + j), (i, n + j), (n + i, j)]
    return build_graph(2 * n, edges)


def king(rows: int, cols: int) -> Graph:
    _need(rows >= 1 and cols >= 1, "king needs rows, cols >= 1")
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
                if c + 1 < cols:
                    edges.append((v, v + cols + 1))
                if c > 0:
                    edges.append((v, v + cols - 1))
    return build_graph(rows * cols, edges)


def king_middle_contraction(rows: int, cols: int) -> Contraction:
    """Contract the middle horizontal edge of every row of king(rows, cols)."""
    _need(cols >= 2, "king contraction needs cols >= 2")
    g = king(rows, cols)
    mid = cols // 2
    return contract_edges(g, [(r * cols + mid - 1, r * cols + mid) for r in range(rows)])


def complete_bipartite_2l(ell: int) -> Graph:
    _need(ell >= 1, "K_{2,l} needs l >= 1")
    return build_graph(ell + 2, [(a, b) for a in (0, 1) for b in range(2, ell + 2)])


def apex_necklace(n: int) -> Graph:
    g = necklace(n)
    apex = 2 * n
    return build_graph(2 * n + 1, g.edges() + [(i, apex) for i in range(n)])


FAMILIES = {
    "necklace": (necklace, 1),
    "wheel": (wheel, 1),
    "gadget_wheel": (gadget_wheel, 1),
    "gadget_wheel_delta": (gadget_wheel_delta, 2),
    "cycle_strong_edge": (cycle_strong_edge, 1),
    "king": (king, 2),
    "complete_bipartite_2l": (complete_bipartite_2l, 1),
    "apex_necklace": (apex_necklace, 1),
}

_PARAM_NAMES = {
    "king": ("rows", "cols"),
    "gadget_wheel_delta": ("n", "delta"),
    "complete_bipartite_2l": ("ell",),
}


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in FAMILIES:
            raise GraphError(f"unknown family {self.kind!r}")
        if len(self.params) != FAMILIES[self.kind][1]:
            raise GraphError(f"{self.kind} takes {FAMILIES[self.kind][1]} parameter(s)")

    def build(self) -> Graph:
        return FAMILIES[self.kind][0](*self.params)

    def describe(self) -> str:
        names = _PARAM_NAMES.get(self.kind, ("n",))
        return " ".join([self.kind] + [f"{k}={v}" for k, v in zip(names, self.params, strict=False)])


@dataclass
class FamilyAudit:
    n: int
    m: int
    ell: int
    min_degree: int
    max_degree: int
    connectivity: int
    twin_pairs: list[tuple[int, int]]
    twin_degree: int | None
    regular: bool
    density_bound: Fraction
    density_slack: Fraction
    degree_bound: int
    high_degree: list[int] = field(default_factory=list)

    @property
    def alarms(self) -> list[str]:
        """Bounds a K_{2,l}-minor-free graph would have to satisfy but this one breaks."""
        out = []
        if self.density_slack < 0:
            out.append("density")
        if self.high_degree:
            out.append("max-degree")
        return out

    def report(self) -> list[tuple[str, str]]:
        twins = " ".join(f"{u}-{v}" for u, v in self.twin_pairs) or "-"
        return [
            ("n", str(self.n)),
            ("m", str(self.m)),
            ("ell", str(self.ell)),
            ("min-degree", str(self.min_degree)),
            ("max-degree", str(self.max_degree)),
            ("connectivity", str(self.connectivity)),
            ("regular", str(self.regular).lower()),
            ("twin-degree", "any" if self.twin_degree is None else str(self.twin_degree)),
            ("twin-pairs", str(len(self.twin_pairs))),
            ("twins", twins),
            ("density-bound", str(self.density_bound)),
            ("density-slack", str(self.density_slack)),
            ("degree-bound", str(self.degree_bound)),
            ("high-degree", " ".join(map(str, self.high_degree)) or "-"),
            ("alarms", " ".join(self.alarms) or "none"),
        ]


def audit(g: Graph, ell: int, twin_degree: int | None = None) -> FamilyAudit:
    """Measured invariants against the density bound (l+1)(n-1)/2 and the
    degree bound 7l for K_{2,l}-minor-free graphs.

    Negative slack or a vertex above 7l is an alarm, not an error: it is only
    inconsistent if the graph is claimed to be K_{2,l}-minor-free (and, for
    the degree bound, 3-connected with minimum degree 4).
    """
    if ell < 1:
        raise GraphError("ell must be >= 1")
    bound = Fraction((ell + 1) * (g.n - 1), 2)
    degs = [g.degree(v) for v in range(g.n)]
    return FamilyAudit(
        n=g.n,
        m=g.m,
        ell=ell,
        min_degree=min(degs, default=0),
        max_degree=max(degs, default=0),
        connectivity=vertex_connectivity(g) if g.n >= 2 else 0,
        twin_pairs=find_twins(g, twin_degree),
        twin_degree=twin_degree,
        regular=len(set(degs)) <= 1,
        density_bound=bound,
        density_slack=bound - g.m,
        degree_bound=7 * ell,
        high_degree=[v for v in range(g.n) if degs[v] > 7 * ell],
    )
