"""Engine outcomes and their text serialisation."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph
from .minors import MinorModel, verify_model

__all__ = ["Inconclusive", "MinorFound", "Saturated", "TwinsFound", "Witness", "format_certificate"]


def format_certificate(model: MinorModel) -> str:
    lines = [f"ell {model.ell}", "A: " + " ".join(map(str, model.side_a)), "B: " + " ".join(map(str, model.side_b))]
    for i, leg in enumerate(model.legs, start=1):
        lines.append(f"L{i}: " + " ".join(map(str, leg)))
    return "\n".join(lines) + "\n"


def _kv(report: tuple[tuple[str, str], ...]) -> str:
    return "".join(f"{k}: {v}\n" for k, v in report)


@dataclass(frozen=True)
class MinorFound:
    model: MinorModel
    definitive = True

    def check(self, g: Graph) -> bool:
        return bool(verify_model(g, self.model))

    def serialize(self) -> str:
        return "MINOR\n" + format_certificate(self.model)


@dataclass(frozen=True)
class TwinsFound:
    v: int
    w: int
    definitive = True

    def check(self, g: Graph) -> bool:
        return (
            g.has_edge(self.v, self.w)
            and g.degree(self.v) == 5
            and g.degree(self.w) == 5
            and g.closed_neighborhood(self.v) == g.closed_neighborhood(self.w)
        )

    def serialize(self) -> str:
        return f"TWINS {self.v} {self.w}\n"


@dataclass(frozen=True)
class Saturated:
    report: tuple[tuple[str, str], ...]
    definitive = False

    def serialize(self) -> str:
        return "SATURATED\n" + _kv(self.report)


@dataclass(frozen=True)
class Inconclusive:
    report: tuple[tuple[str, str], ...]
    definitive = False

    @property
    def reason(self) -> str:
        return dict(self.report).get("reason", "")

    def serialize(self) -> str:
        return "INCONCLUSIVE\n" + _kv(self.report)


Witness = MinorFound | TwinsFound | Saturated | Inconclusive
