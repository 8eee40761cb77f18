"""Independent reference implementations and random instance generators.

Nothing here calls the flow code or the bitmask search of the package, so
the tests can compare against it.
"""

from __future__ import annotations

import itertools
import random

import networkx as nx

from k2lminor.graph import Graph, build_graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def _connected(adj, vs) -> bool:
    vs = set(vs)
    if not vs:
        return False
    start = next(iter(vs))
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w in vs and w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == vs


def naive_k2l(g: Graph, ell: int) -> bool:
    """K_{2,l} minor by plain partition enumeration (small n only).

    Every vertex goes to A, B or the rest; for connected A, B the legs are a
    packing of connected subsets of the rest, each touching A and B.
    """
    n = g.n
    adj = [set(a) for a in g.adj]
    for labels in itertools.product(range(3), repeat=n):
        A = [v for v in range(n) if labels[v] == 0]
        B = [v for v in range(n) if labels[v] == 1]
        if not A or not B or min(A) > min(B):
            continue
        rest = [v for v in range(n) if labels[v] == 2]
        if len(rest) < ell:
            continue
        if not _connected(adj, A) or not _connected(adj, B):
            continue
        nA = set().union(*(adj[v] for v in A))
        nB = set().union(*(adj[v] for v in B))
        legs = []
        for r in range(1, len(rest) + 1):
            for sub in itertools.combinations(rest, r):
                s = set(sub)
                if s & nA and s & nB and _connected(adj, s):
                    legs.append(s)
        if _pack(legs, ell, set()):
            return True
    return False


def _pack(sets, k, used) -> bool:
    if k == 0:
        return True
    for i, s in enumerate(sets):
        if not s & used:
            if _pack(sets[i + 1 :], k - 1, used | s):
                return True
    return False


def brute_min_cut_size(g: Graph, S, T) -> int:
    """Smallest vertex set outside S and T whose removal separates them."""
    S, T = set(S), set(T)
    pool = [v for v in range(g.n) if v not in S and v not in T]
    adj = [set(a) for a in g.adj]
    for k in range(len(pool) + 1):
        for cut in itertools.combinations(pool, k):
            blocked = set(cut)
            seen = set(S)
            stack = list(S)
            while stack:
                u = stack.pop()
                for w in adj[u]:
                    if w not in seen and w not in blocked:
                        seen.add(w)
                        stack.append(w)
            if not seen & T:
                return k
    raise AssertionError("S and T cannot be separated")


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return build_graph(n, [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p])


def random_3connected(rng: random.Random, n_lo: int = 6, n_hi: int = 20) -> Graph:
    """Rejection-sample a sparse-ish 3-connected graph."""
    while True:
        n = rng.randint(n_lo, n_hi)
        p = rng.uniform(3.2 / (n - 1), min(1.0, 6.0 / (n - 1)))
        g = random_graph(rng, n, p)
        if g.min_degree() >= 3 and nx.node_connectivity(to_nx(g)) >= 3:
            return g


def random_hub_instance(rng: random.Random, ell: int, n_max: int = 30) -> tuple[Graph, int]:
    """3-connected, min degree >= 4, with vertex 0 of degree > 7l."""
    while True:
        need = 7 * ell + 1
        n = rng.randint(need + 1, max(need + 1, n_max))
        hub_nbrs = rng.sample(range(1, n), need)
        edges = {(0, v) for v in hub_nbrs}
        others = list(range(1, n))
        # a cycle through the rest keeps things connected away from the hub
        rng.shuffle(others)
        edges |= {tuple(sorted((others[i], others[(i + 1) % len(others)]))) for i in range(len(others))}
        g = build_graph(n, edges)
        while g.min_degree() < 4:
            v = min(range(n), key=lambda x: (g.degree(x), x))
            w = rng.choice([u for u in range(1, n) if u != v and not g.has_edge(u, v)])
            edges.add((min(v, w), max(v, w)))
            g = build_graph(n, edges)
        for _ in range(rng.randint(0, n)):
            u, v = rng.sample(range(1, n), 2)
            edges.add((min(u, v), max(u, v)))
        g = build_graph(n, edges)
        if nx.node_connectivity(to_nx(g)) >= 3:
            return g, 0


def random_strip(rng: random.Random, n_max: int = 20) -> Graph | None:
    """Random spanning subgraph of a strong product C_L x K_w; None unless 3-connected."""
    w = rng.choice((2, 3))
    L = rng.randint(4, n_max // w)
    full = []
    for i in range(L):
        for a in range(w):
            for b in range(a + 1, w):
                full.append((i * w + a, i * w + b))
            j = (i + 1) % L
            for b in range(w):
                full.append((i * w + a, j * w + b))
    keep = rng.uniform(0.6, 1.0)
    g = build_graph(L * w, [e for e in full if rng.random() < keep])
    if g.min_degree() >= 3 and nx.node_connectivity(to_nx(g)) >= 3:
        return g
    return None


def random_steiner_tree(rng: random.Random, g: Graph, x: int):
    """Random spanning tree of the terminals' component of G - x, pruned to a Steiner tree."""
    from k2lminor.steiner import SteinerTree

    X = set(g.adj[x])
    start = rng.choice(sorted(X))
    in_tree = {start}
    frontier = [(start, w) for w in g.adj[start] if w != x]
    edges = set()
    while frontier:
        u, v = frontier.pop(rng.randrange(len(frontier)))
        if v in in_tree:
            continue
        in_tree.add(v)
        edges.add((min(u, v), max(u, v)))
        frontier += [(v, w) for w in g.adj[v] if w != x and w not in in_tree]
    if not X <= in_tree:
        return None
    adj = {v: set() for v in in_tree}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    changed = True
    while changed:
        changed = False
        for v in list(adj):
            if v not in X and len(adj[v]) <= 1:
                for u in adj.pop(v):
                    adj[u].discard(v)
                changed = True
    kept = frozenset((u, v) for u, v in edges if u in adj and v in adj)
    return SteinerTree(g, x, frozenset(X), kept)


def brute_longest_2nested(g: Graph, S, T, eta: int) -> int:
    """Longest chain over all eta-vertex S-T cuts, sides strictly nested, pairwise distance >= 2."""
    G = to_nx(g)
    S, T = set(S), set(T)
    pool = [v for v in range(g.n) if v not in S and v not in T]
    cuts = []
    for c in itertools.combinations(pool, eta):
        H = G.copy()
        H.remove_nodes_from(c)
        side = set().union(*(nx.node_connected_component(H, s) for s in S))
        if not side & T:
            cuts.append((c, frozenset(side)))
    dist = dict(nx.all_pairs_shortest_path_length(G))
    cuts.sort(key=lambda c: len(c[1]))
    best = [1] * len(cuts)
    for i in range(len(cuts)):
        for j in range(i):
            far = min(dist[x][y] for x in cuts[j][0] for y in cuts[i][0]) >= 2
            if far and cuts[j][1] < cuts[i][1]:
                best[i] = max(best[i], best[j] + 1)
    return max(best, default=0)
