"""Cartan numbers ``s + c_i*i + c_j*j + c_k*k`` with

    i^2 = 1,  j^2 = k^2 = 0,  jk = 1 + i,  kj = 1 - i

over any commutative coefficient ring (int, Fraction, QuadElem, Complex),
and the 2x2 matrix representation ``theta``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .exact_arith import half, to_json

_LABELS = ("s", "i", "j", "k")

# _UNITS[a][b] = coordinates of e_a * e_b, basis order (1, i, j, k).
_UNITS = (
    ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)),
    ((0, 1, 0, 0), (1, 0, 0, 0), (0, 0, 1, 0), (0, 0, 0, -1)),
    ((0, 0, 1, 0), (0, 0, -1, 0), (0, 0, 0, 0), (1, 1, 0, 0)),
    ((0, 0, 0, 1), (0, 0, 0, 1), (1, -1, 0, 0), (0, 0, 0, 0)),
)


@dataclass(frozen=True, eq=False)
class CartanNumber:
    s: object = 0
    i: object = 0
    j: object = 0
    k: object = 0

    @classmethod
    def unit(cls, name: str) -> CartanNumber:
        coords = [0, 0, 0, 0]
        coords[_LABELS.index(name)] = 1
        return cls(*coords)

    def coords(self) -> tuple:
        return (self.s, self.i, self.j, self.k)

    def map(self, f) -> CartanNumber:
        return CartanNumber(*(f(c) for c in self.coords()))

    def __add__(self, other):
        if not isinstance(other, CartanNumber):
            return NotImplemented
        return CartanNumber(*(x + y for x, y in zip(self.coords(), other.coords())))

    def __sub__(self, other):
        if not isinstance(other, CartanNumber):
            return NotImplemented
        return CartanNumber(*(x - y for x, y in zip(self.coords(), other.coords())))

    def __neg__(self):
        return self.map(lambda c: -c)

    def __mul__(self, other):
        if isinstance(other, CartanNumber):
            return cn_mul(self, other)
        return self.map(lambda c: c * other)

    def __rmul__(self, other):
        # Scalars commute with every unit.
        return self.map(lambda c: other * c)

    def conj(self) -> CartanNumber:
        return cn_conj(self)

    def character(self):
        return character(self)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords())

    def __eq__(self, other):
        if isinstance(other, CartanNumber):
            return all(x == y for x, y in zip(self.coords(), other.coords()))
        if other == 0:
            return self.is_zero()
        return NotImplemented

    def __hash__(self):
        return hash(self.coords())

    def __str__(self):
        return " + ".join(f"({c}){u}" if u != "s" else f"({c})" for c, u in zip(self.coords(), _LABELS))

    def components(self):
        return list(zip(_LABELS, self.coords()))

    def to_json(self) -> dict:
        return {label: to_json(c) for label, c in self.components()}


def cn_mul(x: CartanNumber, y: CartanNumber) -> CartanNumber:
    acc = [0, 0, 0, 0]
    xc, yc = x.coords(), y.coords()
    for a in range(4):
        for b in range(4):
            unit = _UNITS[a][b]
            if not any(unit):
                continue
            prod = xc[a] * yc[b]
            for r in range(4):
                if unit[r]:
                    acc[r] = acc[r] + unit[r] * prod
    return CartanNumber(*acc)


def cn_conj(x: CartanNumber) -> CartanNumber:
    return CartanNumber(x.s, -x.i, -x.j, -x.k)


def character(x: CartanNumber):
    """``s^2 - c_i^2 - 2*c_j*c_k``; the scalar part of ``x * conj(x)``."""
    return x.s * x.s - x.i * x.i - 2 * x.j * x.k


@dataclass(frozen=True, eq=False)
class Mat2:
    m11: object
    m12: object
    m21: object
    m22: object

    def entries(self) -> tuple:
        return (self.m11, self.m12, self.m21, self.m22)

    def __add__(self, other: Mat2) -> Mat2:
        return Mat2(*(x + y for x, y in zip(self.entries(), other.entries())))

    def __matmul__(self, other: Mat2) -> Mat2:
        a, b, c, d = self.entries()
        e, f, g, h = other.entries()
        return Mat2(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def det(self):
        return self.m11 * self.m22 - self.m12 * self.m21

    def __eq__(self, other):
        if not isinstance(other, Mat2):
            return NotImplemented
        return all(x == y for x, y in zip(self.entries(), other.entries()))

    def __hash__(self):
        return hash(self.entries())

    def to_json(self) -> list:
        return [[to_json(self.m11), to_json(self.m12)], [to_json(self.m21), to_json(self.m22)]]


def theta(x: CartanNumber) -> Mat2:
    """Matrix image; integer coordinates are promoted to Fractions (entries carry ``c_k/2``)."""
    hk = half(x.k)
    return Mat2(
        x.s + x.j + hk,
        x.i - x.j + hk,
        x.i + x.j - hk,
        x.s - x.j - hk,
    )


def theta_inv(m: Mat2) -> CartanNumber:
    s = half(m.m11 + m.m22)
    ci = half(m.m12 + m.m21)
    u = half(m.m11 - m.m22)  # c_j + c_k/2
    v = half(m.m12 - m.m21)  # c_k/2 - c_j
    return CartanNumber(s, ci, half(u - v), u + v)
