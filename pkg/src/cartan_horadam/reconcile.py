"""Comparison of printed values against computed ones.

Values are compared leaf by leaf.  Leaves over ``Q[t]/(t^2 - d)`` with a
perfect-square ``d`` are specialized (``t -> +sqrt d``) first; leaves in
different rings are compared after embedding ``Q(sqrt s)`` into
``Q(sqrt(m^2 s))``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exact_arith import QuadElem, _exact_sqrt, embed, to_json

MATCH = "match"
MISMATCH = "mismatch"


def canonical(v):
    """Specialize square-``d`` QuadElems; recurse into containers."""
    if isinstance(v, QuadElem):
        if _exact_sqrt(v.d) is not None:
            return v.specialize()
        if v.b == 0:
            return v.a
        return v
    if isinstance(v, bool):
        return v
    if isinstance(v, int):
        return Fraction(v)
    if hasattr(v, "map"):
        return v.map(canonical)
    if isinstance(v, dict):
        return {k: canonical(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [canonical(x) for x in v]
    return v


def flatten(v, prefix: str = "") -> list[tuple[str, object]]:
    def join(label):
        return f"{prefix}.{label}" if prefix else str(label)

    if hasattr(v, "components"):
        out = []
        for label, x in v.components():
            out.extend(flatten(x, join(label)))
        return out
    if isinstance(v, dict):
        out = []
        for label, x in v.items():
            out.extend(flatten(x, join(label)))
        return out
    if isinstance(v, (list, tuple)):
        out = []
        for idx, x in enumerate(v):
            out.extend(flatten(x, join(idx)))
        return out
    return [(prefix, v)]


def leaf_equal(x, y) -> bool:
    x, y = canonical(x), canonical(y)
    if isinstance(x, QuadElem) and isinstance(y, QuadElem) and x.d != y.d:
        small, big = (x, y) if abs(x.d) < abs(y.d) else (y, x)
        try:
            return embed(small, big.d) == big
        except ValueError:
            return False
    return x == y


def differing(paper, computed) -> list[str]:
    """Labels of the leaves where ``paper`` and ``computed`` disagree."""
    lp, lc = flatten(paper), flatten(computed)
    if [label for label, _ in lp] != [label for label, _ in lc]:
        raise ValueError("paper and computed values have different shapes")
    return [label for (label, x), (_, y) in zip(lp, lc) if not leaf_equal(x, y)]


@dataclass
class Entry:
    name: str
    paper: object
    computed: object
    verdict: str
    coords: list[str]
    preset: str | None = None
    note: str | None = None
    checks: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"name": self.name}
        if self.preset is not None:
            out["preset"] = self.preset
        out["paper"] = to_json(self.paper)
        out["computed"] = to_json(canonical(self.computed))
        out["verdict"] = self.verdict
        out["coords"] = list(self.coords)
        if self.checks:
            out["checks"] = dict(self.checks)
        if self.note:
            out["note"] = self.note
        return out


def compare(name: str, paper, computed, *, preset=None, note=None, checks=None) -> Entry:
    coords = differing(paper, computed)
    return Entry(
        name=name,
        paper=paper,
        computed=computed,
        verdict=MISMATCH if coords else MATCH,
        coords=coords,
        preset=preset,
        note=note,
        checks=dict(checks or {}),
    )
