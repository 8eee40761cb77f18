"""Command-line front end: ``k2lminor <command> [flags]``.

Graphs are read from ``--in FILE`` or standard input in the plain text
format.  Exit status: 0 for a definitive answer, 1 for saturated,
inconclusive or budget-exhausted runs (and rejected certificates), 2 for
usage or input errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import TextIO

from .families import FAMILIES, FamilySpec, audit, king, king_middle_contraction
from .graph import GraphError, bfs_layering, find_twins, is_isomorphic_small, vertex_connectivity
from .minors import BudgetExhausted, OracleBudget, find_k2l_minor, verify_model
from .nested import DriverConfig, TooClose, diametral_pair, layer_cuts, nested_pipeline, theorem_driver
from .steiner import IterationCapExceeded, TerminalsDisconnected, degree_scan, max_leaf_search
from .steiner import Saturated as TreeSaturated
from .textio import ParseError, format_certificate, format_graph, parse_certificate, parse_graph
from .witness import Inconclusive, MinorFound, Saturated

__all__ = ["build_parser", "main", "run"]


class UsageError(Exception):
    pass


def _pos_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {v}")
    return v


def _nat(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {v}")
    return v


def _pos_float(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if v <= 0:
        raise argparse.ArgumentTypeError(f"must be positive: {v}")
    return v


def _id_list(text: str) -> list[int]:
    try:
        ids = [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated ids: {text!r}") from None
    if not ids or any(v < 0 for v in ids):
        raise argparse.ArgumentTypeError(f"expected comma-separated ids: {text!r}")
    return ids


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--in", dest="infile", metavar="FILE", help="graph file (default: standard input)")
    common.add_argument("--threads", type=_pos_int, default=1, help="worker cap for the exact search")

    budget = _Parser(add_help=False)
    budget.add_argument("--node-limit", type=_pos_int, default=OracleBudget.node_limit)
    budget.add_argument("--time-limit", type=_pos_float, default=OracleBudget.time_limit)

    driver = _Parser(add_help=False)
    driver.add_argument("--override-d", type=_pos_int)
    driver.add_argument("--override-distance", type=_pos_int)
    driver.add_argument("--override-n", type=_pos_int, help="replace the size threshold n_l")
    driver.add_argument("--skip-hypotheses", action="store_true")

    p = _Parser(prog="k2lminor", description="K_{2,l} minor certificates, engines and extremal families.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("gen", parents=[common], help="generate a family member")
    s.add_argument("family", choices=sorted(FAMILIES))
    s.add_argument("params", type=_nat, nargs="+")

    s = sub.add_parser("minor-test", parents=[common, budget], help="exact K_{2,l} minor test")
    s.add_argument("--ell", type=_pos_int, required=True)

    s = sub.add_parser("minor-extract", parents=[common, budget, driver], help="certificate from an engine")
    s.add_argument("--ell", type=_pos_int, required=True)
    s.add_argument("--engine", choices=["oracle", "steiner", "nested", "driver"], default="oracle")
    s.add_argument("--vertex", type=_nat, help="steiner: the high-degree vertex x")
    s.add_argument("--source", type=_id_list, help="nested: comma-separated source set")
    s.add_argument("--sink", type=_id_list, help="nested: comma-separated sink set")

    s = sub.add_parser("verify-cert", parents=[common], help="check a certificate against a graph")
    s.add_argument("--graph", required=True, metavar="FILE")

    s = sub.add_parser("audit", parents=[common], help="invariants against the density and degree bounds")
    s.add_argument("--ell", type=_pos_int, required=True)
    s.add_argument("--twin-degree", type=_nat)

    s = sub.add_parser("twins", parents=[common], help="list twin pairs")
    s.add_argument("--degree", type=_nat)

    s = sub.add_parser("layers", parents=[common], help="BFS layers, and layer cuts with --sink")
    s.add_argument("--source", type=_nat, required=True)
    s.add_argument("--sink", type=_nat)

    s = sub.add_parser("king-contract", parents=[common], help="contract the middle edges of a king graph")
    s.add_argument("--rows", type=_pos_int, required=True)
    s.add_argument("--cols", type=_pos_int, required=True)

    s = sub.add_parser("theorem-drive", parents=[common, driver], help="run the full driver")
    s.add_argument("--ell", type=_pos_int, required=True)
    return p


def _ids(vs) -> str:
    return " ".join(map(str, sorted(vs))) or "-"


def _kv(pairs) -> str:
    return "".join(f"{k}: {v}\n" for k, v in pairs)


class _Run:
    def __init__(self, args, stdin: TextIO, out: TextIO):
        self.args = args
        self.stdin = stdin
        self.out = out

    def graph(self):
        if self.args.infile:
            try:
                with open(self.args.infile, encoding="ascii") as fh:
                    text = fh.read()
            except OSError as exc:
                raise UsageError(f"cannot read {self.args.infile}: {exc.strerror}") from None
        else:
            text = self.stdin.read()
        return parse_graph(text)

    def budget(self) -> OracleBudget:
        return OracleBudget(self.args.node_limit, self.args.time_limit)

    def emit(self, text: str) -> None:
        self.out.write(text)

    def witness(self, w) -> int:
        self.emit(w.serialize())
        return 0 if w.definitive else 1

    # commands

    def gen(self) -> int:
        a = self.args
        try:
            spec = FamilySpec(a.family, tuple(a.params))
        except GraphError as exc:
            raise UsageError(str(exc)) from None
        self.emit(format_graph(spec.build(), spec.describe()))
        return 0

    def minor_test(self) -> int:
        return self.oracle(self.graph(), lambda m: "result: minor\n" + format_certificate(m))

    def oracle(self, g, render) -> int:
        try:
            model = find_k2l_minor(g, self.args.ell, self.budget(), self.args.threads)
        except BudgetExhausted as exc:
            self.emit(_kv([("result", "budget-exhausted"), ("nodes", exc.nodes)]))
            return 1
        self.emit("result: no-minor\n" if model is None else render(model))
        return 0

    def minor_extract(self) -> int:
        a = self.args
        g = self.graph()
        if a.engine == "oracle":
            return self.oracle(g, lambda m: MinorFound(m).serialize())
        if a.engine == "steiner":
            if a.vertex is not None:
                x = a.vertex
                if x >= g.n:
                    raise UsageError(f"vertex {x} out of range")
            else:
                high = degree_scan(g, a.ell)
                if not g.n:
                    raise UsageError("empty graph")
                x = high[0] if high else max(range(g.n), key=lambda v: (g.degree(v), -v))
            try:
                res = max_leaf_search(g, x, a.ell)
            except (TerminalsDisconnected, IterationCapExceeded) as exc:
                return self.witness(Inconclusive((("reason", str(exc)), ("vertex", str(x)))))
            if isinstance(res, TreeSaturated):
                return self.witness(Saturated((("vertex", str(x)), *res.report())))
            return self.witness(MinorFound(res))
        if a.engine == "nested":
            S, T = a.source, a.sink
            if (S is None) != (T is None):
                raise UsageError("--source and --sink go together")
            if S is None:
                pair = diametral_pair(g) if g.n else None
                if pair is None:
                    return self.witness(Inconclusive((("reason", "graph is empty or disconnected"),)))
                S, T = [pair[0]], [pair[1]]
            if any(v >= g.n for v in S + T):
                raise UsageError("source or sink vertex out of range")
            try:
                run = nested_pipeline(g, S, T, a.ell)
            except (TooClose, GraphError) as exc:
                return self.witness(Inconclusive((("reason", str(exc)),)))
            if run.witness is None:
                return self.witness(
                    Inconclusive((("reason", "invalid cut sequence"), ("problems", "; ".join(run.problems))))
                )
            return self.witness(run.witness)
        return self.witness(theorem_driver(g, self.driver_config()))

    def driver_config(self) -> DriverConfig:
        a = self.args
        return DriverConfig(a.ell, a.override_d, a.override_distance, a.override_n, a.skip_hypotheses)

    def verify_cert(self) -> int:
        try:
            with open(self.args.graph, encoding="ascii") as fh:
                g = parse_graph(fh.read())
        except OSError as exc:
            raise UsageError(f"cannot read {self.args.graph}: {exc.strerror}") from None
        if self.args.infile:
            try:
                with open(self.args.infile, encoding="ascii") as fh:
                    text = fh.read()
            except OSError as exc:
                raise UsageError(f"cannot read {self.args.infile}: {exc.strerror}") from None
        else:
            text = self.stdin.read()
        model = parse_certificate(text)
        check = verify_model(g, model)
        if check:
            self.emit(_kv([("valid", "true"), ("ell", model.ell)]))
            return 0
        self.emit(_kv([("valid", "false"), ("reason", check.reason)]))
        return 1

    def audit(self) -> int:
        g = self.graph()
        self.emit(_kv(audit(g, self.args.ell, self.args.twin_degree).report()))
        return 0

    def twins(self) -> int:
        g = self.graph()
        pairs = find_twins(g, self.args.degree)
        self.emit(_kv([("twin-pairs", len(pairs))]))
        self.emit("".join(f"twin: {u} {v}\n" for u, v in pairs))
        return 0

    def layers(self) -> int:
        a = self.args
        g = self.graph()
        for v in [a.source] + ([a.sink] if a.sink is not None else []):
            if v >= g.n:
                raise UsageError(f"vertex {v} out of range")
        lay = bfs_layering(g, a.source)
        self.emit("".join(f"layer-{i}: {_ids(L)}\n" for i, L in enumerate(lay.layers)))
        if a.sink is not None:
            try:
                cuts = layer_cuts(g, a.source, a.sink)
            except TooClose as exc:
                self.emit(_kv([("cuts", "none"), ("reason", exc)]))
                return 1
            self.emit("".join(f"cut-{i}: {_ids(c)}\n" for i, c in cuts))
        return 0

    def king_contract(self) -> int:
        a = self.args
        if a.cols < 2:
            raise UsageError("king-contract needs --cols >= 2")
        g = king(a.rows, a.cols)
        h = king_middle_contraction(a.rows, a.cols).graph
        target = king(a.rows, a.cols - 1)
        iso = is_isomorphic_small(h, target)
        kappa = [vertex_connectivity(x) if x.n >= 2 else 0 for x in (g, h)]
        self.emit(
            _kv(
                [
                    (f"isomorphic-to-king-{a.rows}x{a.cols - 1}", str(iso).lower()),
                    ("vertices-removed", g.n - h.n),
                    ("edges-removed", g.m - h.m),
                    ("min-degree-before", g.min_degree()),
                    ("min-degree-after", h.min_degree()),
                    ("connectivity-before", kappa[0]),
                    ("connectivity-after", kappa[1]),
                ]
            )
        )
        return 0

    def theorem_drive(self) -> int:
        g = self.graph()
        return self.witness(theorem_driver(g, self.driver_config()))


def run(
    argv: list[str] | None = None,
    stdin: TextIO | None = None,
    stdout: TextIO | None = None,
    stderr: TextIO | None = None,
) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        stderr.write(f"{exc}\n")
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    runner = _Run(args, stdin, stdout)
    try:
        return getattr(runner, args.command.replace("-", "_"))()
    except (UsageError, ParseError, GraphError, ValueError) as exc:
        stderr.write(f"k2lminor {args.command}: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
