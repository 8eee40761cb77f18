"""Unit vertex-capacity max flow on the split graph.

Every vertex v becomes an arc in(v) -> out(v) of capacity 1, so a flow of
value k is a family of k vertex-disjoint paths.  This one primitive backs
st-connectivity, minimum vertex cuts, disjoint path systems and the leg
count of the minor oracle.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Sequence


class VertexFlow:
    """Vertex-disjoint paths inside ``allowed`` from ``starts`` to ``ends``.

    A path may be a single vertex lying in both ``starts`` and ``ends``.
    Arcs are laid out in ascending vertex order and augmenting paths are
    found by BFS, so flow, cut and decomposition are all deterministic.
    """

    def __init__(
        self,
        adj: Sequence[Sequence[int]],
        allowed: Iterable[int],
        starts: Iterable[int],
        ends: Iterable[int],
    ):
        n = len(adj)
        ok = [False] * n
        for v in allowed:
            ok[v] = True
        self.n = n
        self._ok = ok
        self.source = 2 * n
        self.sink = 2 * n + 1
        self._head: list[list[int]] = [[] for _ in range(2 * n + 2)]
        self._to: list[int] = []
        self._cap: list[int] = []
        start_set = {v for v in starts if ok[v]}
        end_set = {v for v in ends if ok[v]}
        big = n + 1
        for v in range(n):
            if not ok[v]:
                continue
            # only split arcs are capacitated, so every minimum cut is a vertex set
            if v in start_set:
                self._arc(self.source, 2 * v, big)
            self._arc(2 * v, 2 * v + 1, 1)
            for u in adj[v]:
                if ok[u]:
                    self._arc(2 * v + 1, 2 * u, big)
            if v in end_set:
                self._arc(2 * v + 1, self.sink, big)
        self.value = 0

    def _arc(self, a: int, b: int, cap: int) -> None:
        self._head[a].append(len(self._to))
        self._to.append(b)
        self._cap.append(cap)
        self._head[b].append(len(self._to))
        self._to.append(a)
        self._cap.append(0)

    def _bfs(self) -> list[int] | None:
        """Parent-arc array of a shortest augmenting path, or None."""
        to, cap, head = self._to, self._cap, self._head
        parent = [-1] * len(head)
        seen = [False] * len(head)
        seen[self.source] = True
        dq = deque([self.source])
        while dq:
            x = dq.popleft()
            for e in head[x]:
                if cap[e] > 0:
                    y = to[e]
                    if not seen[y]:
                        seen[y] = True
                        parent[y] = e
                        if y == self.sink:
                            return parent
                        dq.append(y)
        self._reach = seen
        return None

    def run(self, limit: int | None = None) -> int:
        """Augment until maximum (or until ``limit`` paths); return the value."""
        to, cap = self._to, self._cap
        while limit is None or self.value < limit:
            parent = self._bfs()
            if parent is None:
                break
            y = self.sink
            while y != self.source:
                e = parent[y]
                cap[e] -= 1
                cap[e ^ 1] += 1
                y = to[e ^ 1]
            self.value += 1
        return self.value

    def min_cut(self) -> list[int]:
        """Vertices whose split arc crosses the source-side residual frontier.

        Must be called after ``run()`` reached the maximum.  This is the
        minimum cut closest to the starts.
        """
        if self._bfs() is not None:
            raise RuntimeError("flow is not maximum")
        reach = self._reach
        return [v for v in range(self.n) if self._ok[v] and reach[2 * v] and not reach[2 * v + 1]]

    def paths(self) -> list[list[int]]:
        """Decompose the current flow into vertex paths, lowest start first."""
        to, cap, head = self._to, self._cap, self._head
        n = self.n
        nxt: dict[int, int] = {}
        for v in range(n):
            if not self._ok[v]:
                continue
            out = 2 * v + 1
            for e in head[out]:
                # forward arcs have even index; flow shows up as reverse residual
                if e % 2 == 0 and cap[e ^ 1] > 0:
                    w = to[e]
                    nxt[v] = -1 if w == self.sink else w // 2
                    break
        result = []
        for e in head[self.source]:
            if e % 2 == 0 and cap[e ^ 1] > 0:
                v = to[e] // 2
                path = [v]
                while nxt[v] != -1:
                    v = nxt[v]
                    path.append(v)
                result.append(path)
        result.sort()
        return result


def max_disjoint_paths(
    adj: Sequence[Sequence[int]],
    allowed: Iterable[int],
    starts: Iterable[int],
    ends: Iterable[int],
    limit: int | None = None,
) -> int:
    return VertexFlow(adj, allowed, starts, ends).run(limit)
