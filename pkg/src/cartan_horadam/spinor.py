"""Spinors attached to Cartan numbers.

``epsilon(s + c_i i + c_j j + c_k k) = [s + (c_j + c_k/2) i ; (c_j - c_k/2) + c_i i]``.

The spinor conjugate is ``i C conj(phi)`` and the mate is ``-C conj(phi)``
with ``C = [[0, 1], [-1, 0]]``; both square to ``-1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cartan import CartanNumber
from .exact_arith import Complex, QuadElem, half, to_json
from .horadam import PAPER_PRESETS, PRESETS, HoradamParams
from .reconcile import Entry, compare
from .sequences import context, cw_term

I = Complex(0, 1)


@dataclass(frozen=True, eq=False)
class Spinor:
    c1: Complex
    c2: Complex

    def __post_init__(self):
        for name in ("c1", "c2"):
            v = getattr(self, name)
            if not isinstance(v, Complex):
                object.__setattr__(self, name, Complex(v, 0))

    def map(self, f) -> Spinor:
        return Spinor(f(self.c1), f(self.c2))

    def __add__(self, other):
        if not isinstance(other, Spinor):
            return NotImplemented
        return Spinor(self.c1 + other.c1, self.c2 + other.c2)

    def __sub__(self, other):
        if not isinstance(other, Spinor):
            return NotImplemented
        return Spinor(self.c1 - other.c1, self.c2 - other.c2)

    def __neg__(self):
        return Spinor(-self.c1, -self.c2)

    def __mul__(self, scalar):
        if isinstance(scalar, Spinor):
            return NotImplemented
        return Spinor(self.c1 * scalar, self.c2 * scalar)

    __rmul__ = __mul__

    def conj(self) -> Spinor:
        """Componentwise complex conjugate."""
        return Spinor(self.c1.conj(), self.c2.conj())

    def is_zero(self) -> bool:
        return self.c1.is_zero() and self.c2.is_zero()

    def __eq__(self, other):
        if isinstance(other, Spinor):
            return self.c1 == other.c1 and self.c2 == other.c2
        if other == 0:
            return self.is_zero()
        return NotImplemented

    def __hash__(self):
        return hash((self.c1, self.c2))

    def __repr__(self):
        return f"Spinor({self.c1!r}, {self.c2!r})"

    def components(self):
        return [("c1", self.c1), ("c2", self.c2)]

    def to_json(self) -> dict:
        return {"c1": to_json(self.c1), "c2": to_json(self.c2)}


@dataclass(frozen=True, eq=False)
class SpinorMat:
    m11: Complex
    m12: Complex
    m21: Complex
    m22: Complex

    def entries(self):
        return (self.m11, self.m12, self.m21, self.m22)

    def __matmul__(self, other: SpinorMat) -> SpinorMat:
        a, b, c, d = self.entries()
        e, f, g, h = other.entries()
        return SpinorMat(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def conj_transpose(self) -> SpinorMat:
        return SpinorMat(self.m11.conj(), self.m21.conj(), self.m12.conj(), self.m22.conj())

    def column(self, idx: int) -> Spinor:
        if idx == 0:
            return Spinor(self.m11, self.m21)
        return Spinor(self.m12, self.m22)

    def __eq__(self, other):
        if not isinstance(other, SpinorMat):
            return NotImplemented
        return all(x == y for x, y in zip(self.entries(), other.entries()))

    def __hash__(self):
        return hash(self.entries())

    def components(self):
        return list(zip(("m11", "m12", "m21", "m22"), self.entries()))

    def to_json(self) -> list:
        return [[to_json(self.m11), to_json(self.m12)], [to_json(self.m21), to_json(self.m22)]]


def epsilon(x: CartanNumber) -> Spinor:
    hk = half(x.k)
    return Spinor(Complex(x.s, x.j + hk), Complex(x.j - hk, x.i))


def tilde_conj(phi: Spinor) -> Spinor:
    # C [u; v] = [v; -u]
    c = phi.conj()
    return Spinor(I * c.c2, -(I * c.c1))


def mate(phi: Spinor) -> Spinor:
    c = phi.conj()
    return Spinor(-c.c2, c.c1)


def q_hat(x: CartanNumber) -> SpinorMat:
    phi = epsilon(x)
    a, c = phi.c1, phi.c2
    return SpinorMat(a, -c.conj(), c, a.conj())


def spinor_term(params: HoradamParams, n: int) -> Spinor:
    return epsilon(cw_term(params, n))


@lru_cache(maxsize=None)
def _spinor_context(params: HoradamParams):
    ctx = context(params)
    return ctx, epsilon(ctx.X), epsilon(ctx.Y)


def spinor_binet(params: HoradamParams, n: int) -> Spinor:
    """``eps(X) alpha^n + eps(Y) beta^n`` over the complexified quadratic ring."""
    if n < 0:
        raise ValueError("negative indices are not supported")
    ctx, ex, ey = _spinor_context(params)
    return ex * ctx.alpha**n + ey * ctx.beta**n


def isotropic(phi: Spinor) -> tuple[Complex, Complex, Complex]:
    f1, f2 = phi.c1, phi.c2
    s1, s2 = f1 * f1, f2 * f2
    return s1 - s2, I * (s1 + s2), -2 * (f1 * f2)


def vivarelli(q0, q1, q2, q3) -> Spinor:
    return Spinor(Complex(q3, q0), Complex(q1, q2))


# --- printed spinor forms ---------------------------------------------------

H = Fraction(1, 2)

PRINTED_SPINOR_INITIAL = {
    "pell": ("SCP", [
        Spinor(Complex(0, Fraction(9, 2)), Complex(-H, 1)),
        Spinor(Complex(1, 11), Complex(-1, 2)),
    ]),
    "pell_lucas": ("SCp", [
        Spinor(Complex(2, Fraction(17, 2)), Complex(-H, 1)),
        Spinor(Complex(1, 20), Complex(-2, 4)),
    ]),
    "jacobsthal": ("SCJ", [
        Spinor(Complex(0, Fraction(5, 2)), Complex(-H, 1)),
        Spinor(Complex(1, Fraction(11, 2)), Complex(H, 1)),
    ]),
    "jacobsthal_lucas": ("SCj", [
        Spinor(Complex(2, Fraction(17, 2)), Complex(Fraction(3, 2), 1)),
        Spinor(Complex(1, Fraction(31, 2)), Complex(-Fraction(3, 2), 5)),
    ]),
}


def _h(params, n):
    return cw_term(params, n).coords()


def _display_tilde(params, n):
    h0, h1, h2, h3 = _h(params, n)
    return Spinor(Complex(-h1, h2 - half(h3)), Complex(h2 + half(h3), -h0))


def _display_mate(params, n):
    h0, h1, h2, h3 = _h(params, n)
    return Spinor(Complex(-h2 + half(h3), h1), Complex(h0, -(h2 + half(h3))))


def _display_star(params, n):
    h0, h1, h2, h3 = _h(params, n)
    return Spinor(Complex(h0, -(h2 + half(h3))), Complex(-h2 + half(h3), -h1))


def _display_complex_conj(params, n):
    h0, h1, h2, h3 = _h(params, n)
    return Spinor(Complex(h0, -(h2 + half(h3))), Complex(h2 - half(h3), -h1))


def _display_q_hat(params, n):
    h0, h1, h2, h3 = _h(params, n)
    return SpinorMat(
        Complex(h0, h2 + half(h3)),
        Complex(half(h3) - h2, h1),
        Complex(h2 - half(h3), h1),
        Complex(h0, -(h2 + half(h3))),
    )


# (entry name, printed display, computed counterpart)
_DISPLAYS = [
    ("spinor_conjugate", _display_tilde, lambda p, n: tilde_conj(spinor_term(p, n))),
    ("spinor_mate", _display_mate, lambda p, n: mate(spinor_term(p, n))),
    ("conjugate_spinor", _display_star, lambda p, n: epsilon(cw_term(p, n).conj())),
    ("complex_conjugate", _display_complex_conj, lambda p, n: spinor_term(p, n).conj()),
    ("q_hat", _display_q_hat, lambda p, n: q_hat(cw_term(p, n))),
]

DISPLAY_TERMS = 4


def printed_spinor_binet(params: HoradamParams) -> tuple[Spinor, Spinor]:
    """The general-case components x_0, x_1, y_0, y_1 as printed, in Q[t]/(t^2 - d)."""
    p, q, a, b = params.p, params.q, params.a, params.b
    d = params.d
    t = QuadElem.sqrt(d)
    w2 = p * b + q * a
    x0 = Complex(b - p * a + a * t, half(w2 * (p * q + t * (1 + p * p + p * q)) + b * q * (q + 1 + p * t)))
    y0 = Complex(-b + p * a + a * t, half(w2 * (-p * q + t * (1 + p * p + p * q)) + b * q * (-q - 1 + p * t)))
    lead = Complex(w2 * (2 - p) - b * q, 2 * b) * t * H
    tail = Complex(w2 * (2 * p - p * p - 2 * p * q) + 3 * b * p * q, 4 * w2 - 2 * b * p) * H
    return Spinor(x0, lead + tail), Spinor(y0, lead - tail)


def reconcile_spinor_forms() -> tuple[list[Entry], list[str]]:
    """Entries for printed spinor displays, plus notes on displays that cannot be compared."""
    entries = []
    for preset_name, (symbol, rows) in PRINTED_SPINOR_INITIAL.items():
        params = PRESETS[preset_name]
        for n, printed in enumerate(rows):
            entries.append(compare(f"{symbol}_{n}", printed, spinor_term(params, n), preset=preset_name))

    for name, display, actual in _DISPLAYS:
        paper = {k: [display(PRESETS[k], n) for n in range(DISPLAY_TERMS)] for k in PAPER_PRESETS}
        computed = {k: [actual(PRESETS[k], n) for n in range(DISPLAY_TERMS)] for k in PAPER_PRESETS}
        entries.append(compare(name, paper, computed, note=f"n = 0..{DISPLAY_TERMS - 1} for each preset"))

    # The printed recurrence SCW_{n+1} = SCW_n + SCW_{n-1}, tested at n = 1.
    for preset_name in PAPER_PRESETS:
        params = PRESETS[preset_name]
        predicted = spinor_term(params, 1) + spinor_term(params, 0)
        entries.append(
            compare("recurrence.SCW_2", predicted, spinor_term(params, 2), preset=preset_name,
                    note="printed recurrence SCW_{n+1} = SCW_n + SCW_{n-1} at n = 1")
        )

    for preset_name in PAPER_PRESETS:
        params = PRESETS[preset_name]
        px, py = printed_spinor_binet(params)
        ctx, ex, ey = _spinor_context(params)
        inv_2t = (2 * QuadElem.sqrt(ctx.d)).inverse()
        computed = {"X": ex, "Y": ey}
        entries.append(
            compare("spinor_binet.components", {"X": px * inv_2t, "Y": py}, computed, preset=preset_name,
                    note="printed form: 1/(2 sqrt d) on the X term only")
        )
        entries.append(
            compare("spinor_binet.components_both_scaled", {"X": px * inv_2t, "Y": py * inv_2t}, computed,
                    preset=preset_name, note="1/(2 sqrt d) applied to both terms")
        )
        entries.append(
            compare("spinor_binet.components_unscaled", {"X": px, "Y": py}, computed, preset=preset_name,
                    note="printed form without prefactor: SCW_n = X alpha^n + Y beta^n")
        )

    notes = [
        f"{symbol}_n special-case spinor Binet display: not comparable (alpha^n, beta^n omitted)"
        for symbol in ("SCP", "SCp", "SCJ", "SCj")
    ]
    return entries, notes
