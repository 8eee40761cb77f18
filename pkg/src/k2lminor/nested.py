"""Nested minimum cuts, disjoint path systems, gap analysis and the driver.

A 2-nested cut sequence C_1..C_d of minimum S-T cuts together with eta
disjoint S-T paths splits the graph into gaps Y_j between consecutive cuts.
In each gap either two paths are joined by a connector through the gap
(case 1), some part of the gap is off the paths (case 2), or the paths fill
it (case 3).  Local reroutes push gaps towards case 1; once one pair of paths
has l connectors in different gaps, the two paths and the connectors form a
K_{2,l} model.  Gaps that stay in case 3 expose degree-5 twins.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from ._flow import VertexFlow
from .graph import (
    Graph,
    GraphError,
    _separation_flow,
    bfs_distances,
    components,
    distance_between_sets,
    find_twins,
    reachable,
    st_connectivity,
    vertex_connectivity,
)
from .minors import MinorModel, verify_model
from .steiner import Saturated as TreeSaturated
from .steiner import TerminalsDisconnected, degree_scan, max_leaf_search
from .witness import Inconclusive, MinorFound, Saturated, TwinsFound, Witness

__all__ = [
    "CutSequence",
    "DriverConfig",
    "GapCase",
    "InvalidCutSequence",
    "NoExchangeApplicable",
    "PathSystem",
    "PipelineRun",
    "TooClose",
    "classify_gap",
    "diametral_pair",
    "disjoint_path_system",
    "driver_d",
    "extract_from_nested",
    "find_2nested",
    "layer_cuts",
    "lemma_threshold",
    "min_vertex_cut",
    "n_threshold_reached",
    "nested_pipeline",
    "progress",
    "reroute",
    "theorem_driver",
]


class TooClose(GraphError):
    pass


class InvalidCutSequence(GraphError):
    pass


class NoExchangeApplicable(RuntimeError):
    pass


def min_vertex_cut(g: Graph, S: Iterable[int], T: Iterable[int]) -> frozenset[int]:
    """Minimum S-T vertex cut closest to S."""
    flow = _separation_flow(g, S, T)
    flow.run()
    return frozenset(flow.min_cut())


def lemma_threshold(ell: int, eta: int) -> int:
    """Number of cuts the pigeonhole step must exceed: l * C(eta, 2)."""
    return ell * math.comb(eta, 2)


# -- cut sequences ----------------------------------------------------------


@dataclass(frozen=True)
class CutSequence:
    source: frozenset[int]
    sink: frozenset[int]
    cuts: tuple[frozenset[int], ...]
    eta: int

    @classmethod
    def make(cls, source: Iterable[int], sink: Iterable[int], cuts: Iterable[Iterable[int]], eta: int) -> CutSequence:
        return cls(frozenset(source), frozenset(sink), tuple(frozenset(c) for c in cuts), eta)

    def source_side(self, g: Graph, j: int) -> frozenset[int]:
        """Vertices reachable from S in G - C_j (S included)."""
        return frozenset(reachable(g, self.source, self.cuts[j]))

    def problems(self, g: Graph) -> list[str]:
        S, T = self.source, self.sink
        if not S or not T:
            return ["source and sink must be nonempty"]
        if any(not 0 <= v < g.n for v in S | T | frozenset().union(*self.cuts)):
            return ["vertex out of range"]
        if S & T:
            return ["source and sink intersect"]
        out = []
        try:
            eta = st_connectivity(g, S, T)
        except GraphError as exc:
            return [str(exc)]
        if eta != self.eta:
            out.append(f"eta is {eta}, declared {self.eta}")
        sides = []
        for j, c in enumerate(self.cuts):
            if len(c) != self.eta:
                out.append(f"cut {j} has size {len(c)}")
            if c & (S | T):
                out.append(f"cut {j} meets the source or sink")
            side = self.source_side(g, j)
            if side & T:
                out.append(f"cut {j} does not separate")
            sides.append(side)
        for j in range(len(sides) - 1):
            if not sides[j] < sides[j + 1]:
                out.append(f"cuts {j} and {j + 1} are not strictly nested")
        for i, j in itertools.combinations(range(len(self.cuts)), 2):
            if distance_between_sets(g, self.cuts[i], self.cuts[j]) < 2:
                out.append(f"cuts {i} and {j} are closer than 2")
        return out

    def validate(self, g: Graph) -> None:
        probs = self.problems(g)
        if probs:
            raise InvalidCutSequence("; ".join(probs))


def layer_cuts(g: Graph, s: int, t: int) -> list[tuple[int, frozenset[int]]]:
    """Inclusion-minimal s-t cuts C_i inside each BFS layer V_i, 0 < i < dist(s, t)."""
    dist = bfs_distances(g, [s])
    if not 0 <= t < g.n:
        raise GraphError(f"vertex {t} out of range")
    if dist[t] < 2:
        raise TooClose(f"dist({s}, {t}) = {dist[t]} < 2")
    if dist[t] == math.inf:
        raise TooClose(f"{s} and {t} are disconnected")
    D = int(dist[t])
    layers: list[list[int]] = [[] for _ in range(D)]
    for v, d in enumerate(dist):
        if 0 < d < D:
            layers[int(d)].append(v)
    out = []
    for i in range(1, D):
        cut = set(layers[i])
        for v in layers[i]:
            cut.discard(v)
            if t in reachable(g, [s], cut):
                cut.add(v)
        out.append((i, frozenset(cut)))
    return out


def find_2nested(
    g: Graph,
    cuts: Sequence[tuple[int, Iterable[int]]],
    eta: int,
    S: Iterable[int],
    T: Iterable[int],
) -> CutSequence:
    """Longest chain of size-eta S-T cuts, layers two apart, sides strictly nested.

    Among longest chains the one with the lexicographically earliest layers wins.
    """
    S, T = frozenset(S), frozenset(T)
    cand = []
    for i, c in sorted(cuts, key=lambda p: p[0]):
        c = frozenset(c)
        if len(c) != eta or c & (S | T):
            continue
        side = frozenset(reachable(g, S, c))
        if side & T:
            continue
        cand.append((i, c, side))
    k = len(cand)
    # best[x]: (length, layers) of the best chain starting at x
    best: list[tuple[int, tuple[int, ...]]] = [(0, ())] * k
    for x in range(k - 1, -1, -1):
        i, _, side = cand[x]
        top = (1, (i,))
        for y in range(x + 1, k):
            j, _, side2 = cand[y]
            if j - i >= 2 and side < side2:
                ln, layers = best[y]
                if ln + 1 > top[0] or (ln + 1 == top[0] and (i, *layers) < top[1]):
                    top = (ln + 1, (i, *layers))
        best[x] = top
    if not cand:
        return CutSequence(S, T, (), eta)
    length, layers = max(best, key=lambda b: (b[0], tuple(-v for v in b[1])))
    by_layer = {i: c for i, c, _ in cand}
    return CutSequence(S, T, tuple(by_layer[i] for i in layers), eta)


# -- path systems -----------------------------------------------------------


@dataclass(frozen=True)
class PathSystem:
    cuts: CutSequence
    paths: tuple[tuple[int, ...], ...]
    gaps: tuple[frozenset[int], ...]

    @classmethod
    def make(cls, g: Graph, cuts: CutSequence, paths: Iterable[Sequence[int]]) -> PathSystem:
        sides = [cuts.source_side(g, j) for j in range(len(cuts.cuts))]
        gaps = tuple(sides[j + 1] - sides[j] - cuts.cuts[j] for j in range(len(sides) - 1))
        return cls(cuts, tuple(tuple(p) for p in paths), gaps)

    def crossing(self, a: int, j: int) -> int:
        """Index along P_a of its vertex in C_j."""
        c = self.cuts.cuts[j]
        for k, v in enumerate(self.paths[a]):
            if v in c:
                return k
        raise ValueError(f"path {a} misses cut {j}")

    def section(self, a: int, j: int) -> tuple[int, ...]:
        """P_a from its C_j vertex to its C_{j+1} vertex, inclusive."""
        return self.paths[a][self.crossing(a, j) : self.crossing(a, j + 1) + 1]

    def on_paths(self) -> set[int]:
        return {v for p in self.paths for v in p}

    def gap_length(self, j: int) -> int:
        y = self.gaps[j]
        return sum(1 for p in self.paths for v in p if v in y)

    def problems(self, g: Graph) -> list[str]:
        S, T = self.cuts.source, self.cuts.sink
        out = []
        if len(self.paths) != self.cuts.eta:
            out.append(f"{len(self.paths)} paths, eta {self.cuts.eta}")
        seen: dict[int, int] = {}
        for a, p in enumerate(self.paths):
            if len(p) < 2 or p[0] not in S or p[-1] not in T:
                out.append(f"path {a} does not join S to T")
                continue
            if len(set(p)) != len(p):
                out.append(f"path {a} repeats a vertex")
            for u, v in zip(p, p[1:], strict=False):
                if not g.has_edge(u, v):
                    out.append(f"path {a} uses non-edge {u}-{v}")
            for v in p[1:-1]:
                if v in S or v in T:
                    out.append(f"path {a} passes through S or T at {v}")
                if v in seen:
                    out.append(f"paths {seen[v]} and {a} share {v}")
                seen[v] = a
            for j, c in enumerate(self.cuts.cuts):
                hits = sum(1 for v in p if v in c)
                if hits != 1:
                    out.append(f"path {a} meets cut {j} {hits} times")
        return out


def disjoint_path_system(g: Graph, cuts: CutSequence) -> PathSystem:
    """eta internally disjoint S-T paths, completed at both ends by the least S/T neighbour."""
    S, T = cuts.source, cuts.sink
    allowed = [v for v in range(g.n) if v not in S and v not in T]
    flow = VertexFlow(g.adj, allowed, g.neighborhood(S), g.neighborhood(T))
    flow.run()
    paths = []
    for p in flow.paths():
        s = min(w for w in g.adj[p[0]] if w in S)
        t = min(w for w in g.adj[p[-1]] if w in T)
        paths.append([s, *p, t])
    return PathSystem.make(g, cuts, paths)


# -- gap analysis -----------------------------------------------------------


@dataclass(frozen=True)
class GapCase:
    j: int
    case: int
    pair: tuple[int, int] | None = None
    connector: tuple[int, ...] = ()
    component: tuple[int, ...] = ()
    path_index: int | None = None
    first_vertex: int | None = None


def _connector(g: Graph, ps: PathSystem, j: int, a: int, b: int) -> tuple[int, ...] | None:
    """Shortest path from P_a's section to P_b's with an interior in Y_j - P_a - P_b."""
    sec_a = ps.section(a, j)
    sec_b = set(ps.section(b, j))
    free = ps.gaps[j] - set(ps.paths[a]) - set(ps.paths[b])
    parent: dict[int, int] = {}
    dq: deque[int] = deque()
    for s in sorted(sec_a):
        for w in g.adj[s]:
            if w in free and w not in parent:
                parent[w] = s
                dq.append(w)
    while dq:
        u = dq.popleft()
        for w in g.adj[u]:
            if w in sec_b:
                path = [w, u]
                while path[-1] in parent:
                    path.append(parent[path[-1]])
                return tuple(reversed(path))
            if w in free and w not in parent:
                parent[w] = u
                dq.append(w)
    return None


def gap_connectors(g: Graph, ps: PathSystem, j: int) -> dict[tuple[int, int], tuple[int, ...]]:
    out = {}
    for a, b in itertools.combinations(range(len(ps.paths)), 2):
        c = _connector(g, ps, j, a, b)
        if c is not None:
            out[(a, b)] = c
    return out


def classify_gap(g: Graph, ps: PathSystem, j: int) -> GapCase:
    y = ps.gaps[j]
    assert y, f"gap {j} is empty"
    for a, b in itertools.combinations(range(len(ps.paths)), 2):
        c = _connector(g, ps, j, a, b)
        if c is not None:
            return GapCase(j, 1, pair=(a, b), connector=c)
    on = ps.on_paths()
    off = [v for v in y if v not in on]
    if off:
        comp = components(g, off)[0]
        touched = sorted({a for a, p in enumerate(ps.paths) for v in p if any(w in comp for w in g.adj[v])})
        return GapCase(j, 2, component=tuple(comp), path_index=touched[0] if touched else None)
    first = next(v for v in ps.paths[0] if v in y)
    return GapCase(j, 3, first_vertex=first)


def progress(g: Graph, ps: PathSystem) -> tuple[int, int, int]:
    """(#case-1 gaps, #case-2 gaps, -total path length inside gaps)."""
    counts = [0, 0, 0, 0]
    for j in range(len(ps.gaps)):
        counts[classify_gap(g, ps, j).case] += 1
    return counts[1], counts[2], -sum(ps.gap_length(j) for j in range(len(ps.gaps)))


def _replace(ps: PathSystem, changes: dict[int, Sequence[int]]) -> PathSystem:
    paths = tuple(tuple(changes[a]) if a in changes else p for a, p in enumerate(ps.paths))
    return PathSystem(ps.cuts, paths, ps.gaps)


def _component_candidates(g: Graph, ps: PathSystem, j: int):
    """Reroutes of a path through an off-path component of gap j."""
    y = ps.gaps[j]
    on = ps.on_paths()
    for comp in components(g, [v for v in y if v not in on]):
        cset = set(comp)
        for a, p in enumerate(ps.paths):
            lo, hi = ps.crossing(a, j), ps.crossing(a, j + 1)
            att = [k for k in range(lo, hi + 1) if any(w in cset for w in g.adj[p[k]])]
            pairs = sorted(itertools.combinations(att, 2), key=lambda pq: (pq[0] - pq[1], pq[0]))
            for kp, kq in pairs:
                goal = {w for w in g.adj[p[kq]] if w in cset}
                parent: dict[int, int | None] = {}
                dq: deque[int] = deque()
                for w in sorted(g.adj[p[kp]]):
                    if w in cset:
                        parent[w] = None
                        dq.append(w)
                hit = None
                while dq and hit is None:
                    u = dq.popleft()
                    if u in goal:
                        hit = u
                        break
                    for w in g.adj[u]:
                        if w in cset and w not in parent:
                            parent[w] = u
                            dq.append(w)
                if hit is None:
                    continue
                detour = [hit]
                while parent[detour[-1]] is not None:
                    detour.append(parent[detour[-1]])
                detour.reverse()
                yield {a: [*p[: kp + 1], *detour, *p[kq:]]}


def _shortcut_candidates(g: Graph, ps: PathSystem, j: int):
    for a, p in enumerate(ps.paths):
        lo, hi = ps.crossing(a, j), ps.crossing(a, j + 1)
        for k1 in range(lo, hi + 1):
            for k2 in range(hi, k1 + 1, -1):
                if g.has_edge(p[k1], p[k2]):
                    yield {a: [*p[: k1 + 1], *p[k2:]]}


def _swap_candidates(g: Graph, ps: PathSystem, j: int):
    """Crossing swaps: P_a up to p1 then P_b from q2, and P_b up to q1 then P_a from p2."""
    for a, b in itertools.permutations(range(len(ps.paths)), 2):
        if a > b:
            continue
        pa, pb = ps.paths[a], ps.paths[b]
        ra = range(ps.crossing(a, j), ps.crossing(a, j + 1) + 1)
        rb = range(ps.crossing(b, j), ps.crossing(b, j + 1) + 1)
        cross = [(ka, kb) for ka in ra for kb in rb if g.has_edge(pa[ka], pb[kb])]
        for (k1, l2), (k2, l1) in itertools.product(cross, cross):
            # edges p1-q2 and q1-p2 with p1 before p2 on P_a and q1 before q2 on P_b
            if k1 < k2 and l1 < l2:
                yield {a: [*pa[: k1 + 1], *pb[l2:]], b: [*pb[: l1 + 1], *pa[k2:]]}


def reroute(g: Graph, ps: PathSystem, gap: GapCase) -> PathSystem:
    """First exchange at gap j that keeps the system valid and raises the progress measure."""
    if gap.case == 1:
        raise NoExchangeApplicable(f"gap {gap.j} already has a connector")
    base = progress(g, ps)
    gens = [_shortcut_candidates, _swap_candidates]
    if gap.case == 2:
        gens.insert(0, _component_candidates)
    for gen in gens:
        for change in gen(g, ps, gap.j):
            cand = _replace(ps, change)
            if cand.problems(g):
                continue
            if progress(g, cand) > base:
                return cand
    raise NoExchangeApplicable(f"no exchange improves gap {gap.j}")


def _twins_in_gap(g: Graph, ps: PathSystem, j: int) -> tuple[int, int] | None:
    """Adjacent degree-5 twins on two different paths inside gap j."""
    owner = {v: a for a, p in enumerate(ps.paths) for v in p[1:-1]}
    y = ps.gaps[j]
    for v in sorted(y):
        if g.degree(v) != 5:
            continue
        for w in g.adj[v]:
            if (
                w in y
                and owner.get(w) != owner.get(v)
                and g.degree(w) == 5
                and g.closed_neighborhood(v) == g.closed_neighborhood(w)
            ):
                return (min(v, w), max(v, w))
    return None


def _fixpoint(g: Graph, ps: PathSystem, cap: int) -> tuple[PathSystem, int]:
    steps = 0
    changed = True
    while changed:
        changed = False
        for j in range(len(ps.gaps)):
            gc = classify_gap(g, ps, j)
            if gc.case == 1:
                continue
            try:
                ps = reroute(g, ps, gc)
            except NoExchangeApplicable:
                continue
            steps += 1
            if steps > cap:
                raise RuntimeError("reroute loop exceeded its bound")
            changed = True
            break
    return ps, steps


def extract_from_nested(g: Graph, cuts: CutSequence, ell: int) -> Witness:
    """Run the gap analysis to a fixpoint, then pigeonhole for a model or report twins."""
    if ell < 1:
        raise ValueError("ell must be >= 1")
    cuts.validate(g)
    ps = disjoint_path_system(g, cuts)
    probs = ps.problems(g)
    assert not probs, probs
    cap = g.n * max(1, len(ps.gaps)) * g.n
    ps, steps = _fixpoint(g, ps, cap)

    cases = [classify_gap(g, ps, j) for j in range(len(ps.gaps))]
    tally: dict[tuple[int, int], list[int]] = {}
    conns: dict[tuple[int, int, int], tuple[int, ...]] = {}
    for j, gc in enumerate(cases):
        if gc.case != 1:
            continue
        for pair, c in gap_connectors(g, ps, j).items():
            tally.setdefault(pair, []).append(j)
            conns[(*pair, j)] = c
    for pair in sorted(tally):
        js = tally[pair]
        if len(js) < ell:
            continue
        a, b = pair
        js = js[:ell]
        lo, hi = js[0], js[-1] + 1
        side_a = ps.paths[a][ps.crossing(a, lo) : ps.crossing(a, hi) + 1]
        side_b = ps.paths[b][ps.crossing(b, lo) : ps.crossing(b, hi) + 1]
        legs = [conns[(a, b, j)][1:-1] for j in js]
        model = MinorModel.make(side_a, side_b, legs)
        check = verify_model(g, model)
        assert check, check.reason
        return MinorFound(model)

    for gc in cases:
        if gc.case == 3:
            tw = _twins_in_gap(g, ps, gc.j)
            if tw is not None:
                return TwinsFound(*tw)

    best = max(((len(js), pair) for pair, js in tally.items()), default=None)
    report = [
        ("engine", "nested"),
        ("eta", str(cuts.eta)),
        ("cuts", str(len(cuts.cuts))),
        ("threshold", str(lemma_threshold(ell, cuts.eta))),
        ("gaps", str(len(cases))),
        ("case1", str(sum(gc.case == 1 for gc in cases))),
        ("case2", str(sum(gc.case == 2 for gc in cases))),
        ("case3", str(sum(gc.case == 3 for gc in cases))),
        ("gap-cases", " ".join(str(gc.case) for gc in cases) or "-"),
        ("best-pair", "-" if best is None else f"{best[1][0]}-{best[1][1]} {best[0]}"),
        ("reroutes", str(steps)),
    ]
    return Saturated(tuple(report))


@dataclass
class PipelineRun:
    layers: list[tuple[int, frozenset[int]]]
    sequence: CutSequence
    witness: Witness | None = None
    problems: list[str] = field(default_factory=list)


def nested_pipeline(g: Graph, S: Iterable[int], T: Iterable[int], ell: int) -> PipelineRun:
    """layer_cuts from min S to min T, longest 2-nested chain, then extraction."""
    S, T = frozenset(S), frozenset(T)
    eta = st_connectivity(g, S, T)
    layers = layer_cuts(g, min(S), min(T))
    seq = find_2nested(g, layers, eta, S, T)
    run = PipelineRun(layers, seq, problems=seq.problems(g))
    if not run.problems:
        run.witness = extract_from_nested(g, seq, ell)
    return run


# -- theorem driver ---------------------------------------------------------


def driver_d(ell: int) -> int:
    """d = l^3 / 2, rounded up so it is a count."""
    return -(-(ell**3) // 2)


def n_threshold_reached(n: int, ell: int, d: int) -> bool:
    """n >= (7l)^(2(d+1)^l), decided without expanding huge powers."""
    base = 7 * ell
    exp = 2 * (d + 1) ** ell
    if exp * math.log2(base) > n.bit_length() + 1:
        return False
    return n >= base**exp


@dataclass(frozen=True)
class DriverConfig:
    ell: int
    d_override: int | None = None
    distance_override: int | None = None
    n_threshold_override: int | None = None
    skip_hypotheses: bool = False

    def __post_init__(self):
        if self.ell < 1:
            raise ValueError("ell must be >= 1")
        for name in ("d_override", "distance_override", "n_threshold_override"):
            v = getattr(self, name)
            if v is not None and v <= 0:
                raise ValueError(f"{name} must be positive")

    @property
    def d(self) -> int:
        return self.d_override if self.d_override is not None else driver_d(self.ell)

    def gap(self, k: int) -> int:
        """Required layer distance 2(d+1)^(l-k) for a pair of connectivity k."""
        return 2 * (self.d + 1) ** (self.ell - k)

    @property
    def distance(self) -> int:
        return self.distance_override if self.distance_override is not None else self.gap(0)


def _inconclusive(reason: str, **extra) -> Inconclusive:
    return Inconclusive((("reason", reason), *((k.replace("_", "-"), str(v)) for k, v in extra.items())))


def _hypotheses(g: Graph) -> Witness | None:
    if g.n == 0 or g.min_degree() < 5:
        return _inconclusive("min degree 5 violated", min_degree=g.min_degree() if g.n else 0)
    kappa = vertex_connectivity(g)
    if kappa < 3:
        return _inconclusive("3-connectivity violated", connectivity=kappa)
    twins = find_twins(g, 5)
    if twins:
        return TwinsFound(*twins[0])
    return None


def diametral_pair(g: Graph) -> tuple[int, int, int] | None:
    """Lexicographically least (s, t, diameter); None if g is disconnected."""
    best = None
    for s in range(g.n):
        dist = bfs_distances(g, [s])
        if math.inf in dist:
            return None
        far = max(dist)
        if best is None or far > best[2]:
            t = dist.index(far)
            best = (s, t, int(far))
    return best


def theorem_driver(g: Graph, cfg: DriverConfig) -> Witness:
    ell = cfg.ell
    if not cfg.skip_hypotheses:
        w = _hypotheses(g)
        if w is not None:
            return w

    saturated = None
    for x in degree_scan(g, ell):
        try:
            res = max_leaf_search(g, x, ell)
        except TerminalsDisconnected:
            continue
        if isinstance(res, TreeSaturated):
            saturated = saturated or (x, res)
            continue
        return MinorFound(res)
    if saturated is not None:
        x, res = saturated
        return Saturated((("vertex", str(x)), *res.report()))

    overrides = (cfg.d_override, cfg.distance_override)
    if cfg.n_threshold_override is not None:
        if g.n < cfg.n_threshold_override:
            return _inconclusive("below n_l", n=g.n, n_threshold=cfg.n_threshold_override)
    elif all(o is None for o in overrides) and not n_threshold_reached(g.n, ell, cfg.d):
        return _inconclusive("below n_l", n=g.n, d=cfg.d)

    pair = diametral_pair(g)
    if pair is None:
        return _inconclusive("graph is disconnected")
    s, t, diam = pair
    if diam < cfg.distance or diam < 2:
        return _inconclusive("diameter too small", s=s, t=t, diameter=diam, required=cfg.distance)

    cuts = dict(layer_cuts(g, s, t))
    top = diam - 1
    k = choice = None
    for kk in range(ell, 0, -1):
        need = cfg.gap(kk)
        for i in range(1, top + 1):
            for j in range(i + need, top + 1):
                if st_connectivity(g, cuts[i], cuts[j], limit=kk) >= kk:
                    choice = (i, j)
                    break
            if choice:
                break
        if choice:
            k = kk
            break
    if choice is None:
        return _inconclusive("no admissible cut pair", s=s, t=t, diameter=diam, d=cfg.d)
    i, j = choice

    if k == ell:
        side_s = reachable(g, [s], cuts[i])
        side_t = reachable(g, [t], cuts[j])
        allowed = [v for v in range(g.n) if v not in side_s and v not in side_t]
        flow = VertexFlow(g.adj, allowed, cuts[i], cuts[j])
        flow.run(ell)
        model = MinorModel.make(side_s, side_t, flow.paths()[:ell])
        check = verify_model(g, model)
        if check:
            return MinorFound(model)
        return Saturated((("engine", "driver"), ("k", str(k)), ("model-check", check.reason or "")))

    dp = cfg.gap(k + 1)
    marks = [i + q * dp for q in range(cfg.d + 1)]
    kcuts = [min_vertex_cut(g, cuts[p], cuts[q]) for p, q in zip(marks, marks[1:], strict=False)]
    seq = CutSequence.make(cuts[i], cuts[j], kcuts, k)
    probs = seq.problems(g)
    if probs:
        return Saturated(
            (("engine", "driver"), ("k", str(k)), ("layers", f"{i} {j}"), ("cut-sequence", "; ".join(probs)))
        )
    return extract_from_nested(g, seq, ell)
