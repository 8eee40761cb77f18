"""Immutable simple graphs on vertices ``0..n-1`` and the primitives every
engine relies on: connectivity via unit-capacity flow, BFS layers, twins,
edge contraction and a small-graph isomorphism test.

All set-valued results iterate in ascending vertex id.
"""

from __future__ import annotations

import math
from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import NamedTuple

from ._flow import VertexFlow

__all__ = [
    "Graph",
    "GraphError",
    "Layering",
    "NotAnEdge",
    "NotSeparable",
    "SelfLoop",
    "TooLarge",
    "TooSmall",
    "VertexOutOfRange",
    "bfs_distances",
    "bfs_layering",
    "build_graph",
    "canonical_form",
    "components",
    "contract_edges",
    "distance_between_sets",
    "find_twins",
    "induces_connected",
    "is_isomorphic_small",
    "reachable",
    "st_connectivity",
    "vertex_connectivity",
]


class GraphError(ValueError):
    """Base class for invalid graph input."""


class SelfLoop(GraphError):
    def __init__(self, u: int):
        super().__init__(f"self-loop at vertex {u}")
        self.u = u


class VertexOutOfRange(GraphError):
    def __init__(self, u: int, n: int):
        super().__init__(f"vertex {u} out of range 0..{n - 1}")
        self.u = u


class TooSmall(GraphError):
    pass


class TooLarge(GraphError):
    pass


class NotSeparable(GraphError):
    pass


class NotAnEdge(GraphError):
    def __init__(self, u: int, v: int):
        super().__init__(f"({u}, {v}) is not an edge")
        self.u, self.v = u, v


@dataclass(frozen=True, eq=True)
class Graph:
    """Simple undirected graph; ``adj[v]`` is the sorted neighbour tuple of v."""

    n: int
    adj: tuple[tuple[int, ...], ...]
    m: int

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjsets[u]

    @property
    def _adjsets(self) -> tuple[frozenset[int], ...]:
        cached = self.__dict__.get("_sets")
        if cached is None:
            cached = tuple(frozenset(a) for a in self.adj)
            object.__setattr__(self, "_sets", cached)
        return cached

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self._adjsets[v] | {v}

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def min_degree(self) -> int:
        return min((len(a) for a in self.adj), default=0)

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def neighborhood(self, vertices: Iterable[int]) -> set[int]:
        """Open neighbourhood N(S) = union of N(v) minus S."""
        s = set(vertices)
        out: set[int] = set()
        for v in s:
            out.update(self.adj[v])
        return out - s

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Canonical graph from an edge list; duplicates collapse, loops are rejected."""
    if n < 0:
        raise GraphError("negative vertex count")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for e in edges:
        u, v = int(e[0]), int(e[1])
        for w in (u, v):
            if not 0 <= w < n:
                raise VertexOutOfRange(w, n)
        if u == v:
            raise SelfLoop(u)
        nbrs[u].add(v)
        nbrs[v].add(u)
    adj = tuple(tuple(sorted(s)) for s in nbrs)
    return Graph(n, adj, sum(len(a) for a in adj) // 2)


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise VertexOutOfRange(v, g.n)


def bfs_distances(g: Graph, sources: Iterable[int], avoid: Iterable[int] = ()) -> list[float]:
    """Multi-source BFS distances; unreachable vertices get ``math.inf``."""
    dist = [math.inf] * g.n
    blocked = set(avoid)
    dq: deque[int] = deque()
    for s in sorted(set(sources)):
        _check_vertex(g, s)
        if s not in blocked:
            dist[s] = 0
            dq.append(s)
    while dq:
        u = dq.popleft()
        for w in g.adj[u]:
            if dist[w] == math.inf and w not in blocked:
                dist[w] = dist[u] + 1
                dq.append(w)
    return dist


def components(g: Graph, within: Iterable[int] | None = None) -> list[list[int]]:
    """Connected components of ``g[within]``, each sorted, ordered by least vertex."""
    allowed = set(range(g.n)) if within is None else set(within)
    seen: set[int] = set()
    comps = []
    for s in sorted(allowed):
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if w in allowed and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def induces_connected(g: Graph, vertices: Iterable[int]) -> bool:
    vs = set(vertices)
    if not vs:
        return False
    return len(components(g, vs)) == 1


def reachable(g: Graph, sources: Iterable[int], avoid: Iterable[int] = ()) -> set[int]:
    """Vertices reachable from ``sources`` in g minus ``avoid``."""
    blocked = set(avoid)
    seen = {s for s in sources if s not in blocked}
    stack = list(seen)
    while stack:
        u = stack.pop()
        for w in g.adj[u]:
            if w not in seen and w not in blocked:
                seen.add(w)
                stack.append(w)
    return seen


def _separation_flow(g: Graph, S: Iterable[int], T: Iterable[int]) -> VertexFlow:
    S, T = set(S), set(T)
    if not S or not T:
        raise NotSeparable("source and sink sets must be nonempty")
    for v in S | T:
        _check_vertex(g, v)
    if S & T:
        raise NotSeparable("source and sink sets intersect")
    for s in S:
        if any(w in T for w in g.adj[s]):
            raise NotSeparable(f"edge between source vertex {s} and the sink set")
    allowed = [v for v in range(g.n) if v not in S and v not in T]
    return VertexFlow(g.adj, allowed, g.neighborhood(S), g.neighborhood(T))


def st_connectivity(g: Graph, S: Iterable[int], T: Iterable[int], limit: int | None = None) -> int:
    """Minimum size of a vertex cut avoiding S and T that separates them.

    Equals the maximum number of internally disjoint S-T paths.  With
    ``limit`` the computation stops once that many paths are found.
    """
    return _separation_flow(g, S, T).run(limit)


def vertex_connectivity(g: Graph) -> int:
    """kappa(G), with kappa(K_n) = n - 1.

    Even's scheme: a minimum separator misses one of the first kappa+1
    vertices v_i, and every vertex on the far side has a larger index, so
    pairs (v_i, v_j) with i <= kappa < j suffice.
    """
    n = g.n
    if n < 2:
        raise TooSmall("vertex connectivity needs at least 2 vertices")
    best = n - 1
    i = 0
    while i <= best and i < n:
        for j in range(i + 1, n):
            if g.has_edge(i, j):
                continue
            k = st_connectivity(g, [i], [j], limit=best)
            if k < best:
                best = k
        i += 1
    return best


@dataclass(frozen=True)
class Layering:
    source: int
    layers: tuple[tuple[int, ...], ...]

    def layer_of(self) -> dict[int, int]:
        return {v: i for i, layer in enumerate(self.layers) for v in layer}


def bfs_layering(g: Graph, s: int) -> Layering:
    """Distance classes V_0 = {s}, V_1, ... of the component of s."""
    _check_vertex(g, s)
    dist = bfs_distances(g, [s])
    depth = max(int(d) for d in dist if d != math.inf)
    layers: list[list[int]] = [[] for _ in range(depth + 1)]
    for v, d in enumerate(dist):
        if d != math.inf:
            layers[int(d)].append(v)
    return Layering(s, tuple(tuple(layer) for layer in layers))


def find_twins(g: Graph, degree: int | None = None) -> list[tuple[int, int]]:
    """Pairs u < v with N[u] = N[v], optionally both of the given degree."""
    pairs = []
    for u in range(g.n):
        if degree is not None and g.degree(u) != degree:
            continue
        nu = g.closed_neighborhood(u)
        for v in g.adj[u]:
            if v > u and g.degree(v) == g.degree(u) and g.closed_neighborhood(v) == nu:
                pairs.append((u, v))
    return pairs


class Contraction(NamedTuple):
    graph: Graph
    mapping: tuple[int, ...]


def contract_edges(g: Graph, edges: Iterable[Sequence[int]]) -> Contraction:
    """Quotient by the listed edges; new ids follow ascending class minima."""
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in edges:
        u, v = int(e[0]), int(e[1])
        _check_vertex(g, u)
        _check_vertex(g, v)
        if not g.has_edge(u, v):
            raise NotAnEdge(u, v)
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    roots = sorted({find(v) for v in range(g.n)})
    new_id = {r: i for i, r in enumerate(roots)}
    mapping = tuple(new_id[find(v)] for v in range(g.n))
    quotient = build_graph(
        len(roots),
        {(mapping[u], mapping[v]) for u, v in g.edges() if mapping[u] != mapping[v]},
    )
    return Contraction(quotient, mapping)


def distance_between_sets(g: Graph, A: Iterable[int], B: Iterable[int]) -> float:
    """min dist(a, b); 0 if A and B meet, ``math.inf`` if unreachable."""
    A, B = set(A), set(B)
    if not A or not B:
        raise GraphError("distance between sets needs nonempty sets")
    dist = bfs_distances(g, A)
    return min(dist[b] for b in B)


# -- small-graph isomorphism ------------------------------------------------

MAX_ISO_VERTICES = 16


def _refine(g: Graph, colors: list[int]) -> list[int]:
    """Colour refinement to the coarsest equitable partition.

    New colours are ranks of (old colour, sorted neighbour colours), which
    keeps the procedure invariant under relabelling.
    """
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in g.adj[v]))) for v in range(g.n)]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if len(rank) == len(set(colors)):
            return new
        colors = new


def _interchangeable(g: Graph, u: int, v: int) -> bool:
    nu = g._adjsets[u] - {v}
    nv = g._adjsets[v] - {u}
    return nu == nv


def canonical_form(g: Graph) -> tuple:
    """Canonical certificate: the least relabelled edge list over the
    individualisation-refinement search tree.

    Twins inside a target cell are explored once, since swapping them is an
    automorphism preserving the current colouring.
    """
    if g.n > MAX_ISO_VERTICES:
        raise TooLarge(f"canonical form limited to {MAX_ISO_VERTICES} vertices")
    best: tuple | None = None

    def search(colors: list[int]) -> None:
        nonlocal best
        colors = _refine(g, colors)
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break
        if target is None:
            cert = tuple(sorted(tuple(sorted((colors[u], colors[v]))) for u, v in g.edges()))
            if best is None or cert < best:
                best = cert
            return
        tried: list[int] = []
        for v in target:
            if any(_interchangeable(g, v, t) for t in tried):
                continue
            tried.append(v)
            # individualise v: put it just below the rest of its cell
            child = [2 * c + (0 if u == v else 1) for u, c in enumerate(colors)]
            search(child)

    search([0] * g.n)
    return (g.n, best)


def is_isomorphic_small(g1: Graph, g2: Graph) -> bool:
    for g in (g1, g2):
        if g.n > MAX_ISO_VERTICES:
            raise TooLarge(f"isomorphism test limited to {MAX_ISO_VERTICES} vertices")
    if g1.n != g2.n or g1.m != g2.m:
        return False
    if sorted(map(len, g1.adj)) != sorted(map(len, g2.adj)):
        return False
    return canonical_form(g1) == canonical_form(g2)
