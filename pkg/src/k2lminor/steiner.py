"""Max-leaf Steiner trees around a high-degree vertex.

For a vertex x with terminal set X = N(x), a Steiner tree of X in G - x
with at least l leaves yields a K_{2,l} minor: {x} and the internal tree
vertices are the two sides, the leaves are the legs.  The search climbs
leaf count using exchange moves; when none applies the tree is reported as
saturated together with its path classification.
"""

from __future__ import annotations

from collections import Counter, deque
from collections.abc import Iterable
from dataclasses import dataclass, field

from .graph import Graph, GraphError, components
from .minors import MinorModel

__all__ = [
    "IterationCapExceeded",
    "Move",
    "PathClassification",
    "Saturated",
    "SteinerTree",
    "TerminalsDisconnected",
    "apply_move",
    "classify",
    "degree_scan",
    "find_improving_move",
    "initial_steiner_tree",
    "max_leaf_search",
]

MOVE_KINDS = ("QuAugment", "ComponentReroute", "PathSwap", "DoubleQuCombine", "Generic")


class TerminalsDisconnected(GraphError):
    pass


class IterationCapExceeded(RuntimeError):
    pass


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class SteinerTree:
    host: Graph
    x: int
    terminals: frozenset[int]
    edges: frozenset[tuple[int, int]]

    @property
    def vertices(self) -> frozenset[int]:
        vs = {v for e in self.edges for v in e}
        return frozenset(vs | self.terminals) if not self.edges else frozenset(vs)

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    @property
    def leaves(self) -> tuple[int, ...]:
        adj = self.adjacency()
        if len(adj) == 1:
            return tuple(adj)
        return tuple(sorted(v for v, nb in adj.items() if len(nb) == 1))

    @property
    def internal(self) -> tuple[int, ...]:
        leaves = set(self.leaves)
        return tuple(sorted(v for v in self.vertices if v not in leaves))

    def problems(self) -> list[str]:
        """Violated invariants (empty list for a valid Steiner tree)."""
        g, out = self.host, []
        vs = self.vertices
        if self.x in vs:
            out.append("tree contains the excluded vertex")
        for u, v in sorted(self.edges):
            if not g.has_edge(u, v):
                out.append(f"({u}, {v}) is not a host edge")
        if not self.terminals <= vs:
            out.append("terminals not spanned")
        if len(self.edges) != len(vs) - 1 or not _connected(self.adjacency()):
            out.append("not a tree")
        if any(v not in self.terminals for v in self.leaves):
            out.append("leaf outside the terminal set")
        return out

    def is_valid(self) -> bool:
        return not self.problems()


def _connected(adj: dict[int, set[int]]) -> bool:
    if not adj:
        return False
    start = next(iter(adj))
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(adj)


def _prune(adj: dict[int, set[int]], terminals: frozenset[int]) -> None:
    """Strip non-terminal leaves in place."""
    stack = [v for v, nb in adj.items() if len(nb) <= 1 and v not in terminals]
    while stack:
        v = stack.pop()
        if v not in adj or v in terminals or len(adj[v]) > 1:
            continue
        for u in adj.pop(v):
            adj[u].discard(v)
            if len(adj[u]) <= 1 and u not in terminals:
                stack.append(u)


def _tree_from_adj(g: Graph, x: int, terminals: frozenset[int], adj: dict[int, set[int]]) -> SteinerTree:
    edges = frozenset(_edge(u, v) for u, nb in adj.items() for v in nb)
    return SteinerTree(g, x, terminals, edges)


def _bfs_path(g: Graph, starts: Iterable[int], is_goal, passable) -> list[int] | None:
    """Shortest path from a start to a goal through passable vertices.

    Neighbours are expanded in ascending id, so the path is the lowest-id
    shortest one.  Start and goal vertices need not be passable.
    """
    parent: dict[int, int] = {}
    dq: deque[int] = deque()
    for s in sorted(starts):
        if s not in parent:
            parent[s] = -1
            dq.append(s)
    while dq:
        u = dq.popleft()
        for w in g.adj[u]:
            if w in parent:
                continue
            if is_goal(w):
                parent[w] = u
                path = [w]
                while parent[path[-1]] != -1:
                    path.append(parent[path[-1]])
                return path[::-1]
            if passable(w):
                parent[w] = u
                dq.append(w)
    return None


def _through(g: Graph, a: int, is_goal, passable) -> list[int] | None:
    """Path from a whose first step enters a passable vertex."""
    starts = [w for w in g.adj[a] if passable(w)]
    path = _bfs_path(g, starts, is_goal, passable)
    return None if path is None else [a, *path]


def initial_steiner_tree(g: Graph, x: int) -> SteinerTree:
    """Attach terminals in ascending id by shortest paths, then prune."""
    if not 0 <= x < g.n or g.degree(x) < 1:
        raise GraphError("initial_steiner_tree needs a vertex of degree >= 1")
    X = frozenset(g.adj[x])
    order = sorted(X)
    rest = [v for v in range(g.n) if v != x]
    comp_of = {}
    for i, comp in enumerate(components(g, rest)):
        for v in comp:
            comp_of[v] = i
    if len({comp_of[v] for v in X}) != 1:
        raise TerminalsDisconnected(f"neighbours of {x} lie in several components of G - {x}")
    in_tree = {order[0]}
    adj: dict[int, set[int]] = {order[0]: set()}
    for t in order[1:]:
        if t in in_tree:
            continue
        path = _bfs_path(g, [t], lambda w: w in in_tree, lambda w: w != x)
        for a, b in zip(path, path[1:], strict=False):
            adj.setdefault(a, set()).add(b)
            adj.setdefault(b, set()).add(a)
        in_tree.update(path)
    _prune(adj, X)
    return _tree_from_adj(g, x, X, adj)


@dataclass(frozen=True)
class PathClassification:
    branching: tuple[int, ...]
    bare_paths: tuple[tuple[int, ...], ...]
    terminal_runs: tuple[tuple[int, ...], ...]
    labels: dict[int, str]
    leaves: tuple[int, ...]
    e: int
    o: int
    non_strictly_internal: int
    branching_in_x: int
    terminal_count: int

    def identity_holds(self) -> bool:
        """|X| = branching terminals + end terminals + even + odd."""
        return self.terminal_count == self.branching_in_x + self.non_strictly_internal + self.e + self.o

    def per_path_parity_ok(self) -> bool:
        for run in self.terminal_runs:
            inner = run[1:-1]
            if sum(1 for u in inner if self.labels[u] == "even") < sum(1 for u in inner if self.labels[u] == "odd"):
                return False
        return True

    def upper_bound(self, ell: int) -> int:
        """The count l - 1 + o + e + 2*2l bounding |X| when fewer than l leaves."""
        return ell - 1 + self.o + self.e + 4 * ell


def classify(t: SteinerTree) -> PathClassification:
    """Label terminals along the paths of T minus its branching vertices.

    On a path holding terminals u_1..u_s (oriented from its lower-id end),
    u_1 and u_s are non-strictly internal (``leaf`` if they are tree
    leaves) and u_i for 1 < i < s is ``even`` or ``odd`` by the parity of i.
    """
    adj = t.adjacency()
    X = t.terminals
    branching = sorted(v for v, nb in adj.items() if len(nb) >= 3)
    bset = set(branching)
    leaves = t.leaves
    leafset = set(leaves)
    labels: dict[int, str] = {v: "branching" for v in branching if v in X}
    seen: set[int] = set()
    paths, runs = [], []
    for s in sorted(adj):
        if s in bset or s in seen:
            continue
        comp = []
        stack = [s]
        seen.add(s)
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in adj[u]:
                if w not in bset and w not in seen:
                    seen.add(w)
                    stack.append(w)
        ends = sorted(v for v in comp if sum(1 for w in adj[v] if w not in bset) <= 1)
        cur, prev = ends[0], None
        seq = [cur]
        while True:
            nxt = [w for w in adj[cur] if w not in bset and w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            seq.append(cur)
        paths.append(tuple(seq))
        run = tuple(v for v in seq if v in X)
        runs.append(run)
        for i, u in enumerate(run, start=1):
            if i in (1, len(run)):
                labels[u] = "leaf" if u in leafset else "non_strictly_internal"
            else:
                labels[u] = "even" if i % 2 == 0 else "odd"
    counts = Counter(labels.values())
    return PathClassification(
        branching=tuple(branching),
        bare_paths=tuple(paths),
        terminal_runs=tuple(runs),
        labels=labels,
        leaves=leaves,
        e=counts["even"],
        o=counts["odd"],
        non_strictly_internal=counts["leaf"] + counts["non_strictly_internal"],
        branching_in_x=counts["branching"],
        terminal_count=len(X),
    )


@dataclass(frozen=True)
class Move:
    kind: str
    added_paths: tuple[tuple[int, ...], ...]
    removed_tree_edges: tuple[tuple[int, int], ...]
    leaves_after: int


def apply_move(t: SteinerTree, move: Move) -> SteinerTree:
    adj = t.adjacency()
    for path in move.added_paths:
        for a, b in zip(path, path[1:], strict=False):
            adj.setdefault(a, set()).add(b)
            adj.setdefault(b, set()).add(a)
    for a, b in move.removed_tree_edges:
        adj[a].discard(b)
        adj[b].discard(a)
    _prune(adj, t.terminals)
    return _tree_from_adj(t.host, t.x, t.terminals, adj)


class _Context:
    """Per-tree data shared by all move generators."""

    def __init__(self, g: Graph, t: SteinerTree):
        self.g = g
        self.t = t
        self.x = t.x
        self.X = t.terminals
        self.adj = t.adjacency()
        self.deg = {v: len(nb) for v, nb in self.adj.items()}
        self.leaves = set(t.leaves)
        self.n_leaves = len(self.leaves)
        self.tree_vs = set(self.adj)
        outside = [v for v in range(g.n) if v != self.x and v not in self.tree_vs]
        self.comps = components(g, outside)
        self.comp_of: dict[int, int] = {}
        for i, comp in enumerate(self.comps):
            for v in comp:
                self.comp_of[v] = i
        self.attach: list[set[int]] = []
        for comp in self.comps:
            att = set()
            for v in comp:
                att.update(w for w in g.adj[v] if w in self.tree_vs)
            self.attach.append(att)
        self.reach: dict[int, list[int]] = {}
        self._parents: dict[int, dict[int, int]] = {}
        self.cls = classify(t)

    def targets(self, z: int) -> list[int]:
        """Tree vertices joined to z by a path whose interior avoids T."""
        if z not in self.reach:
            out = {w for w in self.g.adj[z] if w in self.tree_vs and w not in self.adj[z]}
            for w in self.g.adj[z]:
                if w in self.comp_of:
                    out |= self.attach[self.comp_of[w]]
            out.discard(z)
            self.reach[z] = sorted(out)
        return self.reach[z]

    def tree_path(self, a: int, b: int) -> list[int]:
        if a not in self._parents:
            par = {a: -1}
            dq = deque([a])
            while dq:
                u = dq.popleft()
                for w in sorted(self.adj[u]):
                    if w not in par:
                        par[w] = u
                        dq.append(w)
            self._parents[a] = par
        par = self._parents[a]
        path = [b]
        while path[-1] != a:
            path.append(par[path[-1]])
        return path[::-1]

    def connector(self, z: int, y: int) -> list[int]:
        """Concrete path z..y: a chord when present, else through one component."""
        if self.g.has_edge(z, y) and y not in self.adj[z]:
            return [z, y]
        return _through(self.g, z, lambda w: w == y, lambda w: w in self.comp_of)

    def exchange_gain(self, z: int, y: int, p: int, q: int) -> int | None:
        """Leaf count of T + (z..y) - pq after pruning, computed locally."""
        adj, X = self.adj, self.X
        dd: dict[int, int] = {}
        for v in (z, y):
            dd[v] = dd.get(v, 0) + 1
        for v in (p, q):
            dd[v] = dd.get(v, 0) - 1
        removed = {(p, q), (q, p)}
        gone: set[int] = set()

        def d(v: int) -> int:
            return self.deg.get(v, 2) + dd.get(v, 0)

        for start in (p, q):
            cur = start
            while cur not in X and cur not in gone and d(cur) == 1:
                gone.add(cur)
                nxt = [w for w in adj[cur] if (cur, w) not in removed and w not in gone]
                extra = 1 if cur in (z, y) else 0
                if extra or not nxt:
                    # a pruned connector end would mean the path was useless
                    return None
                w = nxt[0]
                removed.add((cur, w))
                removed.add((w, cur))
                dd[w] = dd.get(w, 0) - 1
                cur = w
        count = self.n_leaves
        for v in dd:
            if v not in X or v in gone:
                continue
            before = self.deg.get(v, 0) == 1
            after = d(v) == 1
            count += after - before
        return count

    def best_single(self, z: int, y: int) -> tuple[int, tuple[int, int]] | None:
        best = None
        path = self.tree_path(z, y)
        for a, b in zip(path, path[1:], strict=False):
            gain = self.exchange_gain(z, y, a, b)
            if gain is not None and (best is None or gain > best[0]):
                best = (gain, _edge(a, b))
        return best


def _single_move(ctx: _Context, kind: str, starts: Iterable[int], allowed_target) -> Move | None:
    for z in starts:
        for y in ctx.targets(z):
            if not allowed_target(y):
                continue
            res = ctx.best_single(z, y)
            if res is not None and res[0] > ctx.n_leaves:
                return Move(kind, (tuple(ctx.connector(z, y)),), (res[1],), res[0])
    return None


def _even_contexts(ctx: _Context):
    """(u, v, w, P_vw) for each even terminal u in ascending id."""
    cls = ctx.cls
    for path, run in zip(cls.bare_paths, cls.terminal_runs, strict=False):
        pos = {v: i for i, v in enumerate(path)}
        for i in range(1, len(run) - 1):
            u = run[i]
            if cls.labels[u] != "even":
                continue
            v, w = run[i - 1], run[i + 1]
            seg = path[pos[v] : pos[w] + 1]
            yield u, v, w, seg


def _qu_augment(ctx: _Context) -> Move | None:
    for _u, _v, _w, seg in sorted(_even_contexts(ctx)):
        inner = seg[1:-1]
        segset = set(seg)
        mv = _single_move(ctx, "QuAugment", sorted(inner), lambda y, s=segset: y not in s)
        if mv is not None:
            return mv
    return None


def _path_swap(ctx: _Context) -> Move | None:
    cls = ctx.cls
    for path, run in zip(cls.bare_paths, cls.terminal_runs, strict=False):
        pos = {v: i for i, v in enumerate(path)}
        for a, b in zip(run, run[1:], strict=False):
            seg = path[pos[a] : pos[b] + 1]
            inner = [v for v in seg[1:-1]]
            if not inner:
                continue
            forbidden = set(seg) | ctx.leaves
            mv = _single_move(ctx, "PathSwap", sorted(inner), lambda y, f=forbidden: y not in f)
            if mv is not None:
                return mv
    return None


def _generic(ctx: _Context) -> Move | None:
    return _single_move(ctx, "Generic", sorted(ctx.tree_vs), lambda y: True)


def _evaluate(ctx: _Context, add: list[list[int]], remove: list[tuple[int, int]]) -> int | None:
    adj = {v: set(nb) for v, nb in ctx.adj.items()}
    for path in add:
        for a, b in zip(path, path[1:], strict=False):
            adj.setdefault(a, set()).add(b)
            adj.setdefault(b, set()).add(a)
    for a, b in remove:
        if b not in adj.get(a, ()):
            return None
        adj[a].discard(b)
        adj[b].discard(a)
    n_edges = sum(len(nb) for nb in adj.values()) // 2
    if n_edges != len(adj) - 1:
        return None
    if not _connected(adj):
        return None
    _prune(adj, ctx.X)
    return sum(1 for v, nb in adj.items() if len(nb) == 1)


def _component_reroute(ctx: _Context) -> Move | None:
    """Detach a degree-2 terminal u and reconnect u and both halves through
    one outside component, making u a leaf."""
    g = ctx.g
    for u in sorted(ctx.X):
        if ctx.deg.get(u) != 2:
            continue
        p1, p2 = sorted(ctx.adj[u])
        cut = {(u, p1), (p1, u), (u, p2), (p2, u)}
        half: dict[int, int] = {}
        for side, root in ((1, p1), (2, p2)):
            stack = [root]
            half[root] = side
            while stack:
                a = stack.pop()
                for b in ctx.adj[a]:
                    if b not in half and (a, b) not in cut and b != u:
                        half[b] = side
                        stack.append(b)
        for ci, comp in enumerate(ctx.comps):
            att = ctx.attach[ci]
            if u not in att:
                continue
            side1 = sorted(a for a in att if half.get(a) == 1)
            side2 = sorted(a for a in att if half.get(a) == 2)
            cset = set(comp)
            for a1 in side1:
                for a2 in side2:
                    spine = _through(g, a1, lambda w, t=a2: w == t, lambda w, c=cset: w in c)
                    if spine is None:
                        continue
                    inner = set(spine[1:-1])
                    if not inner:
                        continue
                    branch = _bfs_path(
                        g, [u], lambda w, s=inner: w in s, lambda w, c=cset, i=inner: w in c and w not in i
                    )
                    if branch is None:
                        continue
                    remove = [_edge(u, p1), _edge(u, p2)]
                    leaves = _evaluate(ctx, [spine, branch], remove)
                    if leaves is not None and leaves > ctx.n_leaves:
                        return Move("ComponentReroute", (tuple(spine), tuple(branch)), tuple(remove), leaves)
    return None


# DoubleQuCombine is quadratic in candidate pairs; cap the pairs it examines.
_DOUBLE_PAIR_CAP = 64


def _double_qu_combine(ctx: _Context) -> Move | None:
    """Two connectors from distinct even-vertex segments ending on the same
    leaf: add both and drop one edge of each cycle."""
    by_leaf: dict[int, list[tuple[int, int, int]]] = {}
    for u, _v, _w, seg in sorted(_even_contexts(ctx)):
        segset = set(seg)
        for z in seg[1:-1]:
            for y in ctx.targets(z):
                if y in ctx.leaves and y not in segset:
                    by_leaf.setdefault(y, []).append((u, z, y))
    examined = 0
    for y in sorted(by_leaf):
        cands = by_leaf[y]
        for i in range(len(cands)):
            for j in range(i + 1, len(cands)):
                (u1, z1, _), (u2, z2, _) = cands[i], cands[j]
                if u1 == u2 or z1 == z2:
                    continue
                examined += 1
                if examined > _DOUBLE_PAIR_CAP:
                    return None
                mv = _combine(ctx, z1, z2, y)
                if mv is not None:
                    return mv
    return None


def _combine(ctx: _Context, z1: int, z2: int, y: int) -> Move | None:
    q1 = ctx.connector(z1, y)
    q2 = ctx.connector(z2, y)
    on = set(q1) | ctx.tree_vs
    for k, v in enumerate(q2[1:], start=1):
        if v in on:
            q2 = q2[: k + 1]
            break
    end2 = q2[-1] if q2[-1] in ctx.tree_vs else y
    cyc1 = ctx.tree_path(z1, y)
    cyc2 = ctx.tree_path(z2, end2) if end2 != z2 else []
    first = [_edge(a, b) for a, b in zip(cyc1, cyc1[1:], strict=False)]
    second = [_edge(a, b) for a, b in zip(cyc2, cyc2[1:], strict=False)]
    if q2[-1] not in ctx.tree_vs:
        # q2 ends inside q1: its cycle runs through z1..z2 in the tree
        path = ctx.tree_path(z2, z1)
        second = [_edge(a, b) for a, b in zip(path, path[1:], strict=False)]
    best = None
    for e1 in first:
        for e2 in second:
            if e1 == e2:
                continue
            leaves = _evaluate(ctx, [q1, q2], [e1, e2])
            if leaves is not None and leaves > ctx.n_leaves and (best is None or leaves > best[0]):
                best = (leaves, tuple(sorted((e1, e2))))
    if best is None:
        return None
    return Move("DoubleQuCombine", (tuple(q1), tuple(q2)), best[1], best[0])


_CATALOG = (
    ("QuAugment", _qu_augment),
    ("ComponentReroute", _component_reroute),
    ("PathSwap", _path_swap),
    ("DoubleQuCombine", _double_qu_combine),
    ("Generic", _generic),
)


def find_improving_move(g: Graph, x: int, t: SteinerTree) -> Move | None:
    """First move in catalog order that yields a Steiner tree with more leaves."""
    ctx = _Context(g, t)
    if ctx.n_leaves >= len(ctx.X):
        return None
    for _kind, gen in _CATALOG:
        mv = gen(ctx)
        if mv is not None:
            return mv
    return None


@dataclass
class Saturated:
    tree: SteinerTree
    classification: PathClassification
    moves: Counter = field(default_factory=Counter)

    def report(self) -> list[tuple[str, str]]:
        c = self.classification
        return [
            ("engine", "steiner"),
            ("leaves", str(len(self.tree.leaves))),
            ("terminals", str(len(self.tree.terminals))),
            ("branching", str(len(c.branching))),
            ("even", str(c.e)),
            ("odd", str(c.o)),
            ("tree-edges", " ".join(f"{u}-{v}" for u, v in sorted(self.tree.edges)) or "-"),
            ("moves", " ".join(f"{k}={self.moves[k]}" for k in MOVE_KINDS)),
        ]


def _model_from_tree(t: SteinerTree, ell: int) -> MinorModel | None:
    leaves = t.leaves
    internal = t.internal
    if len(leaves) < ell or not internal:
        return None
    return MinorModel.make([t.x], internal, [[v] for v in leaves[:ell]])


def max_leaf_search(
    g: Graph,
    x: int,
    ell: int,
    iteration_cap: int | None = None,
    stats: Counter | None = None,
) -> MinorModel | Saturated:
    """Hill-climb leaf count from the heuristic tree until l leaves or saturation."""
    if ell < 1:
        raise ValueError("ell must be >= 1")
    t = initial_steiner_tree(g, x)
    cap = len(t.terminals) + 1 if iteration_cap is None else iteration_cap
    if cap < 1:
        raise ValueError("iteration_cap must be >= 1")
    moves: Counter = Counter() if stats is None else stats
    for _ in range(cap):
        model = _model_from_tree(t, ell)
        if model is not None:
            return model
        mv = find_improving_move(g, x, t)
        if mv is None:
            return Saturated(t, classify(t), moves)
        t = apply_move(t, mv)
        moves[mv.kind] += 1
    model = _model_from_tree(t, ell)
    if model is not None:
        return model
    raise IterationCapExceeded(f"no verdict within {cap} iterations")


def degree_scan(g: Graph, ell: int) -> list[int]:
    """Vertices of degree above 7l."""
    if ell < 1:
        raise ValueError("ell must be >= 1")
    return [v for v in range(g.n) if g.degree(v) > 7 * ell]
