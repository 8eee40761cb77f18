"""K_{2,l} minor models: independent verification and exact search.

A model is a pair of branch sets A, B and l legs, all disjoint, connected,
with every leg adjacent to both A and B.  Given A and B, the best legs are
vertex-disjoint paths in G - A - B from N(A) to N(B) (a leg can always be
shrunk to such a path), so the search enumerates connected pairs (A, B) and
counts legs with one unit-capacity flow.
"""

from __future__ import annotations

import time
from collections.abc import Iterable, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from ._flow import VertexFlow
from .graph import Graph, components

__all__ = [
    "BudgetExhausted",
    "MinorModel",
    "OracleBudget",
    "SweepReport",
    "Verification",
    "find_k2l_minor",
    "minor_free_up_to",
    "verify_model",
]


@dataclass(frozen=True)
class MinorModel:
    ell: int
    side_a: tuple[int, ...]
    side_b: tuple[int, ...]
    legs: tuple[tuple[int, ...], ...]

    @classmethod
    def make(cls, side_a: Iterable[int], side_b: Iterable[int], legs: Iterable[Iterable[int]]) -> MinorModel:
        """Normalised model: ids ascending inside each set, legs ordered by least id."""
        leg_t = tuple(sorted(tuple(sorted(leg)) for leg in legs))
        return cls(len(leg_t), tuple(sorted(side_a)), tuple(sorted(side_b)), leg_t)

    def branch_sets(self) -> list[tuple[int, ...]]:
        return [self.side_a, self.side_b, *self.legs]


@dataclass(frozen=True)
class Verification:
    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def _label(i: int) -> str:
    return "A" if i == 0 else "B" if i == 1 else f"L{i - 1}"


def verify_model(g: Graph, model: MinorModel) -> Verification:
    """Check every model invariant in g; report the first violated clause."""
    sets = model.branch_sets()
    if len(model.legs) != model.ell:
        return Verification(False, f"leg-count: expected {model.ell}, got {len(model.legs)}")
    owner: dict[int, int] = {}
    for i, part in enumerate(sets):
        if not part:
            return Verification(False, f"empty: {_label(i)}")
        for v in part:
            if not 0 <= v < g.n:
                return Verification(False, f"out-of-range: {_label(i)} vertex {v}")
            if v in owner:
                return Verification(False, f"overlap: {_label(owner[v])} and {_label(i)} share vertex {v}")
            owner[v] = i
    for i, part in enumerate(sets):
        if len(components(g, part)) != 1:
            return Verification(False, f"disconnected: {_label(i)}")
    for k, leg in enumerate(model.legs):
        touched = {owner.get(w) for v in leg for w in g.adj[v]}
        if 0 not in touched:
            return Verification(False, f"missing-edge: A and L{k + 1}")
        if 1 not in touched:
            return Verification(False, f"missing-edge: B and L{k + 1}")
    return Verification(True)


@dataclass(frozen=True)
class OracleBudget:
    node_limit: int = 10_000_000
    time_limit: float = 60.0

    def __post_init__(self):
        if self.node_limit <= 0 or self.time_limit <= 0:
            raise ValueError("budget limits must be positive")


class BudgetExhausted(RuntimeError):
    def __init__(self, nodes: int):
        super().__init__(f"search budget exhausted after {nodes} nodes")
        self.nodes = nodes


def _bits(x: int) -> list[int]:
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


class _Search:
    """Exhaustive (A, B) enumeration, bitmask based.

    Pairs are visited in the fixed order (|A|+|B|, |A|, A, B) with
    min(A) < min(B), so the first model found is canonical.
    """

    def __init__(self, g: Graph, ell: int, budget: OracleBudget, threads: int):
        self.g = g
        self.ell = ell
        self.budget = budget
        self.threads = max(1, threads)
        self.full = (1 << g.n) - 1
        self.nmask = [sum(1 << w for w in g.adj[v]) for v in range(g.n)]
        self.nodes = 0
        self.deadline = time.monotonic() + budget.time_limit
        # levels[k]: connected sets of size k (bitmasks, ascending)
        self.levels: list[list[int]] = [[], [1 << v for v in range(g.n)]]
        self.useful: dict[int, list[tuple[int, int]]] = {}

    def _tick(self, k: int = 1) -> None:
        self.nodes += k
        if self.nodes > self.budget.node_limit:
            raise BudgetExhausted(self.nodes)
        if self.nodes & 0xFFF < k and time.monotonic() > self.deadline:
            raise BudgetExhausted(self.nodes)

    def _nbh(self, s: int) -> int:
        r = 0
        for v in _bits(s):
            r |= self.nmask[v]
        return r & ~s

    def _level(self, k: int) -> list[tuple[int, int]]:
        """Connected sets of size k with at least l neighbours, with N(S)."""
        if k in self.useful:
            return self.useful[k]
        while len(self.levels) <= k:
            grown: set[int] = set()
            for s in self.levels[-1]:
                for v in _bits(self._nbh(s)):
                    grown.add(s | (1 << v))
            self._tick(len(grown) + 1)
            self.levels.append(sorted(grown))
        ell = self.ell
        out = []
        for s in self.levels[k]:
            nb = self._nbh(s)
            if nb.bit_count() >= ell:
                out.append((s, nb))
        self.useful[k] = out
        return out

    def _legs(self, A: int, NA: int, B: int, NB: int) -> list[list[int]] | None:
        ell = self.ell
        sa = NA & ~B
        sb = NB & ~A
        if sa.bit_count() < ell or sb.bit_count() < ell:
            return None
        both = sa & sb
        nb = both.bit_count()
        if nb + min((sa & ~both).bit_count(), (sb & ~both).bit_count()) < ell:
            return None
        rest = self.full & ~A & ~B
        # a leg outside N(A) & N(B) needs two vertices
        if nb + (rest.bit_count() - nb) // 2 < ell:
            return None
        flow = VertexFlow(self.g.adj, _bits(rest), _bits(sa), _bits(sb))
        if flow.run(ell) < ell:
            return None
        return flow.paths()

    def _scan(self, As: Sequence[tuple[int, int]], Bs: Sequence[tuple[int, int]]):
        """First hit in order over A in As, B in Bs; returns (hit, nodes)."""
        nodes = 0
        for A, NA in As:
            low = A & -A
            for B, NB in Bs:
                if B & A or (B & -B) < low:
                    continue
                nodes += 1
                legs = self._legs(A, NA, B, NB)
                if legs is not None:
                    return (A, B, legs), nodes
        return None, nodes

    def run(self) -> MinorModel | None:
        g, ell = self.g, self.ell
        n = g.n
        for total in range(2, n - ell + 1):
            for a in range(1, total):
                b = total - a
                As = self._level(a)
                Bs = self._level(b)
                if not As or not Bs:
                    continue
                hit = self._block(As, Bs)
                if hit is not None:
                    A, B, legs = hit
                    return MinorModel.make(_bits(A), _bits(B), legs[:ell])
        return None

    def _block(self, As, Bs):
        if self.threads == 1 or len(As) < 2 * self.threads:
            hit, nodes = self._scan(As, Bs)
            self._tick(nodes)
            return hit
        size = -(-len(As) // self.threads)
        chunks = [As[i : i + size] for i in range(0, len(As), size)]
        with ThreadPoolExecutor(self.threads) as pool:
            results = list(pool.map(lambda c: self._scan(c, Bs), chunks))
        # same node count and hit as the sequential scan
        for hit, nodes in results:
            self._tick(nodes)
            if hit is not None:
                return hit
        return None


def find_k2l_minor(
    g: Graph,
    ell: int,
    budget: OracleBudget | None = None,
    threads: int = 1,
) -> MinorModel | None:
    """Exact K_{2,l} minor search.

    Returns the canonical model, or None once the exhaustive search proves
    there is none.  Raises BudgetExhausted when the node or time budget runs
    out first.
    """
    if ell < 1:
        raise ValueError("ell must be >= 1")
    search = _Search(g, ell, budget or OracleBudget(), threads)
    return search.run()


@dataclass
class SweepReport:
    largest: int | None
    outcomes: dict[int, str] = field(default_factory=dict)
    models: dict[int, MinorModel] = field(default_factory=dict)


def minor_free_up_to(g: Graph, ell_max: int, budget: OracleBudget | None = None) -> SweepReport:
    """Outcome of the oracle for every l in 1..ell_max.

    Outcomes are ``minor``, ``no-minor`` or ``budget-exhausted``.  A minor at
    l implies one at every smaller l; a violation raises AssertionError.
    """
    if ell_max < 1:
        raise ValueError("ell_max must be >= 1")
    report = SweepReport(None)
    for ell in range(1, ell_max + 1):
        try:
            model = find_k2l_minor(g, ell, budget)
        except BudgetExhausted:
            report.outcomes[ell] = "budget-exhausted"
            continue
        if model is None:
            report.outcomes[ell] = "no-minor"
        else:
            report.outcomes[ell] = "minor"
            report.models[ell] = model
            report.largest = ell
    if report.largest is not None:
        below = [report.outcomes[k] for k in range(1, report.largest)]
        assert "no-minor" not in below, f"non-monotone oracle outcomes {report.outcomes}"
    return report
