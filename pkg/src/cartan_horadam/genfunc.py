"""Formal rational generating functions with module-valued numerators.

The denominator has scalar (integer/rational) coefficients and constant
term 1; the numerator may hold Cartan numbers, spinors or scalars.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cartan import CartanNumber
from .errors import NonUnitConstantError
from .horadam import PAPER_PRESETS, PRESETS, HoradamParams
from .reconcile import Entry, compare
from .sequences import cw_term
from .spinor import Spinor, spinor_term
from .exact_arith import Complex, to_json


def _is_zero(c) -> bool:
    if hasattr(c, "is_zero"):
        return c.is_zero()
    return c == 0


@dataclass(frozen=True)
class Poly:
    coeffs: tuple

    def __init__(self, coeffs):
        coeffs = list(coeffs)
        while coeffs and _is_zero(coeffs[-1]):
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other: Poly) -> Poly:
        n = max(len(self), len(other))
        return Poly(_add(self[k], other[k]) for k in range(n))

    def __mul__(self, other: Poly) -> Poly:
        # Either side may be module-valued; at most one is.
        if not self.coeffs or not other.coeffs:
            return Poly([])
        out = [0] * (len(self) + len(other) - 1)
        for a, x in enumerate(self.coeffs):
            for b, y in enumerate(other.coeffs):
                if _is_zero(x) or _is_zero(y):
                    continue
                out[a + b] = _add(out[a + b], x * y)
        return Poly(out)

    def components(self):
        return [(f"x^{k}", c) for k, c in enumerate(self.coeffs)]

    def to_json(self):
        return [to_json(c) for c in self.coeffs]


def _add(x, y):
    # Module elements (Cartan numbers, spinors) do not absorb a bare 0.
    if isinstance(x, int) and x == 0:
        return y
    if isinstance(y, int) and y == 0:
        return x
    return x + y


@dataclass(frozen=True)
class RationalGF:
    num: Poly
    den: Poly

    def __post_init__(self):
        if self.den[0] != 1:
            raise NonUnitConstantError(f"denominator constant term is {self.den[0]}, expected 1")

    def __add__(self, other: RationalGF) -> RationalGF:
        if self.den == other.den:
            return RationalGF(self.num + other.num, self.den)
        return RationalGF(self.num * other.den + other.num * self.den, self.den * other.den)


def series_expand(gf: RationalGF, count: int) -> list:
    """First ``count`` coefficients of ``num/den``: ``c_n = num_n - sum_{k>=1} den_k c_{n-k}``."""
    if gf.den[0] != 1:
        raise NonUnitConstantError("denominator constant term must be 1")
    out = []
    for n in range(count):
        c = gf.num[n]
        for k in range(1, min(n, len(gf.den) - 1) + 1):
            dk = gf.den[k]
            if dk != 0:
                c = _add(c, -(dk * out[n - k]))
        out.append(c)
    return out


def horadam_den(params: HoradamParams) -> Poly:
    return Poly([1, -params.p, -params.q])


def gf_from_initial(params: HoradamParams, t0, t1) -> RationalGF:
    """``(t0 + (t1 - p t0) x) / (1 - p x - q x^2)``: the sequence starting t0, t1."""
    return RationalGF(Poly([t0, t1 - params.p * t0]), horadam_den(params))


def cartan_gf(params: HoradamParams) -> RationalGF:
    return gf_from_initial(params, cw_term(params, 0), cw_term(params, 1))


def spinor_gf(params: HoradamParams) -> RationalGF:
    return gf_from_initial(params, spinor_term(params, 0), spinor_term(params, 1))


# --- printed closed forms ---------------------------------------------------

_h = Fraction(1, 2)

# preset -> (printed numerator [const, x], printed denominator)
PRINTED_CARTAN_GF = {
    "pell": ([CartanNumber(0, 1, 2, 5), CartanNumber(1, 1, 0, 2)], [1, -2, -1]),
    "jacobsthal": ([CartanNumber(0, 1, 1, 3), CartanNumber(1, 0, 2, 2)], [1, -2, -1]),
    "pell_lucas": ([CartanNumber(2, 1, 4, 9), CartanNumber(-3, 2, 1, 4)], [1, -2, -1]),
    "jacobsthal_lucas": ([CartanNumber(2, 1, 5, 7), CartanNumber(-1, 4, 2, 10)], [1, -1, -2]),
}

PRINTED_SPINOR_GF = {
    "pell": (
        [Spinor(Complex(0, Fraction(9, 2)), Complex(-_h, 1)), Spinor(Complex(1, 2), Complex(0, 0))],
        [1, -2, -1],
    ),
    "pell_lucas": (
        [Spinor(Complex(2, Fraction(17, 2)), Complex(-_h, 1)), Spinor(Complex(-3, 3), Complex(0, 2))],
        [1, -2, -1],
    ),
    "jacobsthal": (
        [Spinor(Complex(0, Fraction(5, 2)), Complex(-_h, 1)), Spinor(Complex(1, 3), Complex(1, 0))],
        [1, -1, -2],
    ),
    "jacobsthal_lucas": (
        [Spinor(Complex(2, Fraction(17, 2)), Complex(Fraction(3, 2), -1)), Spinor(Complex(-1, 7), Complex(-3, -4))],
        [1, -1, -2],
    ),
    # The general display, printed with Fibonacci values.
    "fibonacci": (
        [Spinor(Complex(1, 1), Complex(0, 1)), Spinor(Complex(1, Fraction(7, 2)), Complex(_h, 1))],
        [1, -1, -1],
    ),
}


def _padded(poly: Poly, width: int, zero) -> list:
    return [poly[k] if k < len(poly) else zero for k in range(width)]


def _gf_entry(name, preset_name, printed_num, printed_den, gf, zero, note=None) -> Entry:
    paper = {"num": list(printed_num), "den": list(printed_den)}
    computed = {"num": _padded(gf.num, len(printed_num), zero), "den": _padded(gf.den, len(printed_den), 0)}
    return compare(name, paper, computed, preset=preset_name, note=note)


def reconcile_gf(expand_terms: int = 32) -> list[Entry]:
    entries = []
    for preset_name, (num, den) in PRINTED_CARTAN_GF.items():
        params = PRESETS[preset_name]
        entries.append(_gf_entry("cartan_gf", preset_name, num, den, cartan_gf(params), CartanNumber()))
    for preset_name, (num, den) in PRINTED_SPINOR_GF.items():
        params = PRESETS[preset_name]
        zero = Spinor(Complex(0, 0), Complex(0, 0))
        entries.append(_gf_entry("spinor_gf", preset_name, num, den, spinor_gf(params), zero))

    # The general statements, instantiated per preset.
    for preset_name in PAPER_PRESETS:
        params = PRESETS[preset_name]
        c0, c1 = cw_term(params, 0), cw_term(params, 1)
        s0, s1 = spinor_term(params, 0), spinor_term(params, 1)
        den = [1, -params.p, -params.q]
        zc, zs = CartanNumber(), Spinor(Complex(0, 0), Complex(0, 0))
        entries.append(_gf_entry(
            "cartan_gf.general", preset_name, [c0, c1 - c0], den, cartan_gf(params), zc,
            note="printed numerator x(CW_1 - CW_0) + CW_0",
        ))
        entries.append(_gf_entry(
            "spinor_gf.general", preset_name, [s0 + s1, -params.p * s0], den, spinor_gf(params), zs,
            note="printed numerator SCW_0(1 - px) + SCW_1",
        ))

    for e in entries:
        params = PRESETS[e.preset]
        if e.name.startswith("cartan"):
            got = series_expand(cartan_gf(params), expand_terms)
            want = [cw_term(params, n) for n in range(expand_terms)]
        else:
            got = series_expand(spinor_gf(params), expand_terms)
            want = [spinor_term(params, n) for n in range(expand_terms)]
        printed = RationalGF(Poly(e.paper["num"]), Poly(e.paper["den"]))
        e.checks[f"paper_expansion_matches_{expand_terms}_terms"] = (
            series_expand(printed, expand_terms) == want
        )
        e.checks[f"computed_expansion_matches_{expand_terms}_terms"] = got == want
    return entries
