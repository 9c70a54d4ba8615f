"""Cartan liftings ``CW_n = H_n + H_{n+1} i + H_{n+2} j + H_{n+3} k`` and their Binet form."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cartan import CartanNumber
from .exact_arith import QuadElem, embed
from .horadam import PAPER_PRESETS, PRESETS, HoradamParams, roots, window
from .reconcile import Entry, canonical, compare


def cw_term(params: HoradamParams, n: int) -> CartanNumber:
    return CartanNumber(*window(params, n, 4))


@dataclass(frozen=True)
class CartanSeqContext:
    params: HoradamParams
    d: int
    alpha: QuadElem
    beta: QuadElem
    X: CartanNumber
    Y: CartanNumber


def binet_coeffs(params: HoradamParams) -> tuple[CartanNumber, CartanNumber]:
    """``X = (2CW_1 - p CW_0 + t CW_0)/(2t)``, ``Y = (CW_0 (t + p) - 2CW_1)/(2t)``."""
    d, _, _ = roots(params)
    t = QuadElem.sqrt(d)
    inv_2t = (2 * t).inverse()
    cw0, cw1 = cw_term(params, 0), cw_term(params, 1)
    X = (2 * cw1 - params.p * cw0 + t * cw0) * inv_2t
    Y = (cw0 * (t + params.p) - 2 * cw1) * inv_2t
    return X, Y


def context(params: HoradamParams) -> CartanSeqContext:
    d, alpha, beta = roots(params)
    X, Y = binet_coeffs(params)
    return CartanSeqContext(params, d, alpha, beta, X, Y)


def binet_term(ctx: CartanSeqContext, n: int) -> CartanNumber:
    if n < 0:
        raise ValueError("negative indices are not supported")
    return ctx.X * ctx.alpha**n + ctx.Y * ctx.beta**n


def rational_part(x: CartanNumber) -> CartanNumber:
    """Drop to rational coordinates; raises if any sqrt(d)-part is nonzero."""

    def strip(c):
        if isinstance(c, QuadElem):
            if c.b != 0:
                raise ValueError(f"coordinate {c} has a nonzero sqrt({c.d}) part")
            return c.a
        return c

    return x.map(strip)


# --- printed values ---------------------------------------------------------

_INV_2R2 = QuadElem(0, Fraction(1, 4), 2)  # 1/(2 sqrt 2)


def _q2(a, b) -> QuadElem:
    return QuadElem(a, b, 2)


# (name, preset(s), printed X, printed Y).  Pell's A prints its j-term as
# "(4+2\sqrt2)+j"; it is read as the j-coefficient 4 + 2 sqrt 2.
PRINTED_BINET = [
    (
        ("A", "B"),
        ("pell",),
        CartanNumber(1, _q2(1, 1), _q2(4, 2), _q2(7, 5)) * _INV_2R2,
        CartanNumber(-1, _q2(-1, 1), _q2(-4, 2), _q2(-7, 5)) * _INV_2R2,
    ),
    (
        ("C", "D"),
        ("jacobsthal",),
        CartanNumber(1, 0, 2, 2),
        CartanNumber(-1, 1, -1, 1),
    ),
    (
        ("A*", "B*"),
        ("pell_lucas", "pell_lucas_std"),
        CartanNumber(1, _q2(1, 1), _q2(3, 2), _q2(7, 5)),
        CartanNumber(1, _q2(1, -1), _q2(3, -2), _q2(7, -5)),
    ),
    (
        ("C*", "D*"),
        ("jacobsthal_lucas",),
        CartanNumber(-1, 4, 2, 10),
        CartanNumber(3, -3, 3, -3),
    ),
]

PRINTED_EXAMPLES = {
    "pell": ("CP", [(0, 1, 2, 5), (1, 2, 5, 12), (2, 5, 12, 29), (5, 12, 29, 70)]),
    "pell_lucas": ("Cp", [(2, 1, 4, 9), (1, 4, 9, 22), (4, 9, 22, 53), (9, 22, 53, 128)]),
    "jacobsthal": ("CJ", [(0, 1, 1, 3), (1, 1, 3, 5), (1, 3, 5, 11), (3, 5, 11, 21)]),
    "jacobsthal_lucas": ("Cj", [(2, 1, 5, 7), (1, 5, 7, 17), (5, 7, 17, 31), (7, 31, 65, 127)]),
}


def _lift(x: CartanNumber, d: int) -> CartanNumber:
    """Move printed coordinates (rationals or sqrt 2 values) into Q[t]/(t^2 - d)."""

    def one(c):
        if isinstance(c, QuadElem):
            if c.d == d:
                return c
            if c.b == 0:
                return QuadElem(c.a, 0, d)
            return embed(c, d)
        return QuadElem(c, 0, d)

    return x.map(one)


def _pair_checks(params: HoradamParams, X: CartanNumber, Y: CartanNumber) -> dict:
    d, alpha, beta = roots(params)
    try:
        X, Y = _lift(X, d), _lift(Y, d)
    except ValueError:
        return {"sum_is_CW0": False, "step_is_CW1": False}
    cw0, cw1 = cw_term(params, 0), cw_term(params, 1)
    return {
        "sum_is_CW0": canonical(X + Y) == canonical(cw0),
        "step_is_CW1": canonical(X * alpha + Y * beta) == canonical(cw1),
    }


def reconcile_binet_constants() -> list[Entry]:
    """One entry per printed Binet constant (and per Pell-Lucas variant)."""
    entries = []
    for names, presets, px, py in PRINTED_BINET:
        for preset_name in presets:
            params = PRESETS[preset_name]
            X, Y = binet_coeffs(params)
            paper_checks = _pair_checks(params, px, py)
            computed_checks = _pair_checks(params, X, Y)
            checks = {f"paper_{k}": v for k, v in paper_checks.items()}
            checks.update({f"computed_{k}": v for k, v in computed_checks.items()})
            for name, paper, computed in ((names[0], px, X), (names[1], py, Y)):
                entries.append(
                    compare(f"{preset_name}.{name}", paper, computed, preset=preset_name, checks=checks)
                )
    return entries


def reconcile_examples() -> list[Entry]:
    """Printed example terms against the recurrence."""
    entries = []
    for preset_name, (symbol, rows) in PRINTED_EXAMPLES.items():
        params = PRESETS[preset_name]
        for n, row in enumerate(rows):
            entries.append(
                compare(f"{symbol}_{n}", CartanNumber(*row), cw_term(params, n), preset=preset_name)
            )
    return entries


def printed_initial_conditions(params: HoradamParams) -> tuple[CartanNumber, CartanNumber]:
    """The general CW_0, CW_1 formulas exactly as printed (symbolic in p, q, a, b)."""
    p, q, a, b = params.p, params.q, params.a, params.b
    w2 = p * b + q * a
    w3 = p * p * b + p * q * a + p * b
    w4 = p**3 * b + p * p * q * a + 2 * p * b * q * a + q * q * a
    return CartanNumber(a, b, w2, w3), CartanNumber(b, w2, w3, w4)


def reconcile_initial_conditions(presets=None) -> list[Entry]:
    entries = []
    for preset_name in presets or PAPER_PRESETS:
        params = PRESETS[preset_name]
        p0, p1 = printed_initial_conditions(params)
        entries.append(compare("initial.CW_0", p0, cw_term(params, 0), preset=preset_name))
        entries.append(compare("initial.CW_1", p1, cw_term(params, 1), preset=preset_name))
    return entries
