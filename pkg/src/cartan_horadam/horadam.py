"""Horadam recurrences ``H_n = p*H_{n-1} + q*H_{n-2}`` with ``H_0 = a, H_1 = b``."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateDiscriminantError, UnknownPresetError
from .exact_arith import QuadElem


@dataclass(frozen=True)
class HoradamParams:
    p: int
    q: int
    a: int
    b: int

    @property
    def d(self) -> int:
        return self.p * self.p + 4 * self.q


PRESETS = {
    "fibonacci": HoradamParams(1, 1, 0, 1),
    "lucas": HoradamParams(1, 1, 2, 1),
    "pell": HoradamParams(2, 1, 0, 1),
    "pell_lucas": HoradamParams(2, 1, 2, 1),
    "jacobsthal": HoradamParams(1, 2, 0, 1),
    "jacobsthal_lucas": HoradamParams(1, 2, 2, 1),
    # Conventional Pell-Lucas numbers 2, 2, 6, 14, ... (the table row above has b=1).
    "pell_lucas_std": HoradamParams(2, 1, 2, 2),
}

# The six rows of the published table, in table order.
PAPER_PRESETS = ("fibonacci", "lucas", "pell", "pell_lucas", "jacobsthal", "jacobsthal_lucas")


def preset(name: str) -> HoradamParams:
    try:
        return PRESETS[name]
    except KeyError:
        raise UnknownPresetError(
            f"unknown preset {name!r}; expected one of {', '.join(PRESETS)}"
        ) from None


def term_iter(params: HoradamParams, n: int) -> int:
    if n < 0:
        raise ValueError("negative indices are not supported")
    x, y = params.a, params.b
    for _ in range(n):
        x, y = y, params.p * y + params.q * x
    return x


def _mat_mul(m, k):
    (a, b), (c, d) = m
    (e, f), (g, h) = k
    return ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))


def _companion_power(p: int, q: int, n: int):
    result = ((1, 0), (0, 1))
    base = ((p, q), (1, 0))
    while n:
        if n & 1:
            result = _mat_mul(result, base)
        base = _mat_mul(base, base)
        n >>= 1
    return result


def term_fast(params: HoradamParams, n: int) -> int:
    """H_n via square-and-multiply on the companion matrix ``[[p, q], [1, 0]]``.

    ``M**n @ (H_1, H_0) = (H_{n+1}, H_n)``.
    """
    if n < 0:
        raise ValueError("negative indices are not supported")
    m = _companion_power(params.p, params.q, n)
    return m[1][0] * params.b + m[1][1] * params.a


def window(params: HoradamParams, n: int, width: int) -> list[int]:
    """``[H_n, ..., H_{n+width-1}]``; one fast jump then plain iteration."""
    if n < 0:
        raise ValueError("negative indices are not supported")
    m = _companion_power(params.p, params.q, n)
    x = m[1][0] * params.b + m[1][1] * params.a
    y = m[0][0] * params.b + m[0][1] * params.a
    out = []
    for _ in range(width):
        out.append(x)
        x, y = y, params.p * y + params.q * x
    return out


def roots(params: HoradamParams) -> tuple[int, QuadElem, QuadElem]:
    """Characteristic roots ``(p +- t)/2`` in ``Q[t]/(t^2 - d)``."""
    d = params.d
    if d == 0:
        raise DegenerateDiscriminantError(f"p^2 + 4q = 0 for {params}")
    h = Fraction(1, 2)
    alpha = QuadElem(params.p * h, h, d)
    beta = QuadElem(params.p * h, -h, d)
    return d, alpha, beta
