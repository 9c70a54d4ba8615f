"""Deciding identities between constant-recursive (C-finite) sequences.

A sequence satisfying an order-``r`` linear recurrence is identically zero
iff its first ``r`` terms are zero.  Sums are represented with the product
of the summands' characteristic polynomials, so ``lhs - rhs`` of an
identity gets an explicit annihilator and the identity is decided by
checking ``order`` initial terms.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .horadam import PRESETS, HoradamParams, term_fast, term_iter

VERIFIED = "verified"
COUNTEREXAMPLE = "counterexample"
COORDINATES = ("s", "i", "j", "k")


@dataclass(frozen=True)
class CFiniteSeq:
    """``s(n + r) = sum(rec[i] * s(n + r - 1 - i))`` for ``n >= offset``."""

    order: int
    rec: tuple
    init: tuple
    offset: int = 0

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be positive")
        if len(self.rec) != self.order or len(self.init) != self.order:
            raise ValueError("rec and init must both have `order` entries")
        object.__setattr__(self, "rec", tuple(Fraction(c) for c in self.rec))
        object.__setattr__(self, "init", tuple(Fraction(c) for c in self.init))

    def terms(self, count: int) -> list[Fraction]:
        """``count`` terms starting at index ``offset``."""
        out = list(self.init[:count])
        while len(out) < count:
            window = out[-self.order:]
            out.append(sum(c * v for c, v in zip(self.rec, reversed(window))))
        return out

    def term(self, n: int) -> Fraction:
        if n < self.offset:
            raise IndexError(f"index {n} precedes offset {self.offset}")
        return self.terms(n - self.offset + 1)[-1]

    def charpoly(self) -> list[Fraction]:
        """Coefficients of ``x^r - rec[0] x^(r-1) - ... - rec[r-1]``, leading first."""
        return [Fraction(1)] + [-c for c in self.rec]

    def scale(self, c) -> CFiniteSeq:
        return CFiniteSeq(self.order, self.rec, tuple(c * v for v in self.init), self.offset)

    def __neg__(self):
        return self.scale(-1)

    def realign(self, offset: int) -> CFiniteSeq:
        """Same sequence, initial terms taken from a later starting index."""
        if offset < self.offset:
            raise ValueError("cannot move the offset backwards")
        head = self.terms(offset - self.offset + self.order)[-self.order:]
        return CFiniteSeq(self.order, self.rec, tuple(head), offset)


def zero_seq(offset: int = 0) -> CFiniteSeq:
    return CFiniteSeq(1, (0,), (0,), offset)


def cf_from_horadam(params: HoradamParams, shift: int, scale=1, offset: int = 0) -> CFiniteSeq:
    """``n -> scale * H_{n+shift}`` for ``n >= offset`` (needs ``offset + shift >= 0``)."""
    start = offset + shift
    if start < 0:
        raise ValueError("shift reaches a negative index")
    scale = Fraction(scale)
    h0, h1 = term_iter(params, start), term_iter(params, start + 1)
    return CFiniteSeq(2, (params.p, params.q), (scale * h0, scale * h1), offset)


def cf_geometric(ratio, scale, offset: int = 0) -> CFiniteSeq:
    """``n -> scale * ratio**n``."""
    ratio, scale = Fraction(ratio), Fraction(scale)
    return CFiniteSeq(1, (ratio,), (scale * ratio**offset,), offset)


def _poly_mul(f, g):
    out = [Fraction(0)] * (len(f) + len(g) - 1)
    for a, x in enumerate(f):
        for b, y in enumerate(g):
            out[a + b] += x * y
    return out


def cf_add(xs: list[CFiniteSeq]) -> CFiniteSeq:
    if not xs:
        raise ValueError("cf_add needs at least one summand")
    offset = max(x.offset for x in xs)
    xs = [x.realign(offset) for x in xs]
    poly = [Fraction(1)]
    for x in xs:
        poly = _poly_mul(poly, x.charpoly())
    order = len(poly) - 1
    rec = tuple(-c for c in poly[1:])
    columns = [x.terms(order) for x in xs]
    init = tuple(sum(col[k] for col in columns) for k in range(order))
    return CFiniteSeq(order, rec, init, offset)


def cf_is_zero(s: CFiniteSeq) -> bool:
    return all(v == 0 for v in s.init)


# --- identities -------------------------------------------------------------


@dataclass(frozen=True)
class SeqTerm:
    """``coef * CW_{n+shift}`` for the sequence playing ``role``."""

    coef: int
    role: str
    shift: int = 0

    def stream(self, roles, coordinate: int, offset: int) -> CFiniteSeq:
        return cf_from_horadam(roles[self.role], self.shift + coordinate, self.coef, offset)

    def value(self, roles, coordinate: int, n: int) -> int:
        return self.coef * term_fast(roles[self.role], n + self.shift + coordinate)


@dataclass(frozen=True)
class GeomTerm:
    """``coef * ratio^(n+shift) * vector`` with ``vector`` a fixed Cartan number."""

    coef: int
    ratio: int
    shift: int
    vector: tuple

    def stream(self, roles, coordinate: int, offset: int) -> CFiniteSeq:
        scale = self.coef * Fraction(self.ratio) ** self.shift * self.vector[coordinate]
        return cf_geometric(self.ratio, scale, offset)

    def value(self, roles, coordinate: int, n: int):
        return self.coef * Fraction(self.ratio) ** (n + self.shift) * self.vector[coordinate]


@dataclass(frozen=True)
class Identity:
    name: str
    lhs: tuple
    rhs: tuple
    offset: int
    printed: bool = True
    note: str = ""


@dataclass
class IdentityVerdict:
    status: str
    check_bound: int
    witness: Optional[dict] = None


@dataclass
class IdentityResult:
    identity: Identity
    preset: str
    coordinate: str
    verdict: IdentityVerdict
    spot_checks: int = 0
    spot_ok: bool = True
    spot_failures: list = field(default_factory=list)

    @property
    def status(self) -> str:
        return self.verdict.status

    def to_json(self) -> dict:
        out = {
            "identity": self.identity.name,
            "preset": self.preset,
            "coordinate": self.coordinate,
            "status": self.verdict.status,
        }
        if self.verdict.witness is not None:
            out["witness"] = dict(self.verdict.witness)
        out["check_bound"] = self.verdict.check_bound
        out["printed"] = self.identity.printed
        out["spot_checks"] = self.spot_checks
        out["spot_agrees"] = self.spot_ok
        return out


def _side(terms, roles, coordinate: int, offset: int) -> CFiniteSeq:
    if not terms:
        return zero_seq(offset)
    return cf_add([t.stream(roles, coordinate, offset) for t in terms])


def decide(identity: Identity, roles, coordinate: int) -> IdentityVerdict:
    lhs = _side(identity.lhs, roles, coordinate, identity.offset)
    rhs = _side(identity.rhs, roles, coordinate, identity.offset)
    diff = cf_add([lhs, -rhs])
    if cf_is_zero(diff):
        return IdentityVerdict(VERIFIED, diff.order)
    for k, v in enumerate(diff.init):
        if v != 0:
            n = diff.offset + k
            witness = {"n": n, "lhs": str(lhs.term(n)), "rhs": str(rhs.term(n))}
            return IdentityVerdict(COUNTEREXAMPLE, diff.order, witness)
    raise AssertionError("unreachable")


def direct_values(identity: Identity, roles, coordinate: int, n: int) -> tuple:
    """Both sides at index ``n`` by direct term evaluation (no recurrence algebra)."""
    lhs = sum((t.value(roles, coordinate, n) for t in identity.lhs), Fraction(0))
    rhs = sum((t.value(roles, coordinate, n) for t in identity.rhs), Fraction(0))
    return lhs, rhs


# Pell block: CP_n = P, Cp_n = p.  Jacobsthal block: CJ_n = J, Cj_n = j.
PELL_IDENTITIES = (
    Identity("CP_n + CP_{n+1} = Cp_{n+1}", (SeqTerm(1, "P"), SeqTerm(1, "P", 1)), (SeqTerm(1, "p", 1),), 0),
    Identity("CP_{n+1} - CP_n = Cp_n", (SeqTerm(1, "P", 1), SeqTerm(-1, "P")), (SeqTerm(1, "p"),), 0),
    Identity("CP_{n-1} + CP_{n+1} = Cp_n", (SeqTerm(1, "P", -1), SeqTerm(1, "P", 1)), (SeqTerm(1, "p"),), 1),
    Identity("2CP_n + Cp_n = Cp_{n+1}", (SeqTerm(2, "P"), SeqTerm(1, "p")), (SeqTerm(1, "p", 1),), 0),
)

_POWERS = (1, 2, 4, 8)

JACOBSTHAL_IDENTITIES = (
    Identity("CJ_n + Cj_n = 2CJ_n", (SeqTerm(1, "J"), SeqTerm(1, "j")), (SeqTerm(2, "J"),), 1),
    Identity(
        "3CJ_{n+1} + Cj_n = 2^{n+1}(1+2i+4j+8k)",
        (SeqTerm(3, "J", 1), SeqTerm(1, "j")), (GeomTerm(1, 2, 1, _POWERS),), 1,
    ),
    Identity("Cj_{n+1} + 2Cj_{n-1} = 9CJ_n", (SeqTerm(1, "j", 1), SeqTerm(2, "j", -1)), (SeqTerm(9, "J"),), 1),
    Identity(
        "CJ_n + Cj_n = 2CJ_{n+1}", (SeqTerm(1, "J"), SeqTerm(1, "j")), (SeqTerm(2, "J", 1),), 1,
        printed=False, note="shifted form of the printed CJ_n + Cj_n = 2CJ_n",
    ),
    Identity(
        "3CJ_n + Cj_n = 2^{n+1}(1+2i+4j+8k)",
        (SeqTerm(3, "J"), SeqTerm(1, "j")), (GeomTerm(1, 2, 1, _POWERS),), 1,
        printed=False, note="unshifted form of the printed 3CJ_{n+1} + Cj_n = 2^{n+1}(...)",
    ),
)

SELF_TEST = Identity("0 = 0", (), (), 0, printed=False, note="engine self-test")

# (label, identities, role -> preset name)
SUITE_GROUPS = (
    ("pell+pell_lucas", PELL_IDENTITIES, {"P": "pell", "p": "pell_lucas"}),
    ("pell+pell_lucas_std", PELL_IDENTITIES, {"P": "pell", "p": "pell_lucas_std"}),
    ("jacobsthal+jacobsthal_lucas", JACOBSTHAL_IDENTITIES, {"J": "jacobsthal", "j": "jacobsthal_lucas"}),
    ("self-test", (SELF_TEST,), {}),
)

SPOT_CHECKS = 32
SPOT_MAX_N = 200


def run_identity(identity: Identity, preset_label: str, roles: dict, coordinate: int, rng) -> IdentityResult:
    verdict = decide(identity, roles, coordinate)
    ns = [rng.randint(identity.offset, SPOT_MAX_N) for _ in range(SPOT_CHECKS)]
    failures = []
    for n in ns:
        lhs, rhs = direct_values(identity, roles, coordinate, n)
        if lhs != rhs:
            failures.append({"n": n, "lhs": str(lhs), "rhs": str(rhs)})
    if verdict.status == VERIFIED:
        spot_ok = not failures
    else:
        # The witness must reproduce under direct evaluation.
        w = verdict.witness
        lhs, rhs = direct_values(identity, roles, coordinate, w["n"])
        spot_ok = lhs != rhs and (str(lhs), str(rhs)) == (w["lhs"], w["rhs"])
    return IdentityResult(identity, preset_label, COORDINATES[coordinate], verdict, len(ns), spot_ok, failures)


def builtin_identity_suite(seed: int = 0) -> list[IdentityResult]:
    """Every identity x coordinate x preset variant, in declaration order."""
    rng = random.Random(seed)
    results = []
    for label, identities, role_names in SUITE_GROUPS:
        roles = {role: PRESETS[name] for role, name in role_names.items()}
        for identity in identities:
            for c in range(4):
                results.append(run_identity(identity, label, roles, c, rng))
    return results
