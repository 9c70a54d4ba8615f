"""Exact scalars: rationals, the ring Q[t]/(t^2 - d) and its complexification.

Rationals are plain :class:`fractions.Fraction` values.  ``QuadElem`` holds
``a + b*t`` with ``t**2 == d``; ``d`` is kept as given (not reduced to its
squarefree part), so when ``d`` is a perfect square the ring has zero
divisors.  ``Complex`` adjoins ``i`` (``i**2 == -1``, commuting with ``t``)
to either rationals or ``QuadElem`` values.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import NotInvertibleError, RingMismatchError

Rational = Fraction
Scalar = Union[int, Fraction]


def _is_scalar(x) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def half(x):
    """``x / 2`` without leaving exact arithmetic (ints become Fractions)."""
    if isinstance(x, int):
        return Fraction(x, 2)
    return x * Fraction(1, 2)


def render_scalar(x) -> str:
    """Exact ``"num/den"`` string; integers render without a denominator."""
    return str(Fraction(x))


@dataclass(frozen=True, eq=False)
class QuadElem:
    a: Fraction
    b: Fraction
    d: int

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if not isinstance(self.d, int):
            raise TypeError(f"ring parameter must be an integer, got {self.d!r}")

    @classmethod
    def sqrt(cls, d: int) -> QuadElem:
        """The generator ``t`` of ``Q[t]/(t^2 - d)``."""
        return cls(0, 1, d)

    def _coerce(self, other):
        if isinstance(other, QuadElem):
            if other.d != self.d:
                raise RingMismatchError(f"d={self.d} vs d={other.d}")
            return other
        if _is_scalar(other):
            return QuadElem(other, 0, self.d)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadElem(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadElem(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadElem(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadElem(
            self.a * o.a + self.d * self.b * o.b,
            self.a * o.b + o.a * self.b,
            self.d,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = QuadElem(1, 0, self.d)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def conj(self) -> QuadElem:
        return QuadElem(self.a, -self.b, self.d)

    def inverse(self) -> QuadElem:
        if self.a == 0 and self.b == 0:
            raise ZeroDivisionError("inverse of zero")
        n = self.norm()
        if n == 0:
            raise NotInvertibleError(f"{self} is a zero divisor in Q[t]/(t^2-{self.d})")
        return QuadElem(self.a / n, -self.b / n, self.d)

    def is_rational(self) -> bool:
        return self.b == 0

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def specialize(self) -> Fraction:
        """Map ``t -> +sqrt(d)`` when ``d`` is a perfect square."""
        m = _exact_sqrt(self.d)
        if m is None:
            raise ValueError(f"d={self.d} is not a perfect square")
        return self.a + self.b * m

    def __eq__(self, other):
        if isinstance(other, QuadElem):
            return (self.a, self.b, self.d) == (other.a, other.b, other.d)
        if _is_scalar(other):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __repr__(self):
        return f"QuadElem({self.a}, {self.b}, d={self.d})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        return f"{self.a} + {self.b}*sqrt({self.d})"

    def to_json(self) -> dict:
        return {"a": render_scalar(self.a), "b": render_scalar(self.b), "d": self.d}


def _exact_sqrt(d: int):
    if d < 0:
        return None
    m = math.isqrt(d)
    return m if m * m == d else None


def embed(x: QuadElem, d: int) -> QuadElem:
    """Embed ``Q(sqrt s)`` into ``Q[t]/(t^2 - d)`` for ``d = m^2 s`` via ``t_s -> t_d / m``."""
    if x.d == d:
        return x
    if x.d == 0 or d % x.d:
        raise RingMismatchError(f"cannot embed d={x.d} into d={d}")
    m = _exact_sqrt(d // x.d)
    if m is None:
        raise RingMismatchError(f"d={d} is not a square multiple of {x.d}")
    return QuadElem(x.a, x.b / m, d)


def quad_mul(x: QuadElem, y: QuadElem) -> QuadElem:
    if x.d != y.d:
        raise RingMismatchError(f"d={x.d} vs d={y.d}")
    return x * y


def quad_inv(x: QuadElem) -> QuadElem:
    return x.inverse()


def quad_conj(x: QuadElem) -> QuadElem:
    return x.conj()


@dataclass(frozen=True, eq=False)
class Complex:
    """``re + im*i`` over Fraction or QuadElem parts."""

    re: object
    im: object = 0

    def __post_init__(self):
        for name in ("re", "im"):
            v = getattr(self, name)
            if isinstance(v, int):
                object.__setattr__(self, name, Fraction(v))

    @classmethod
    def i(cls) -> Complex:
        return cls(0, 1)

    @staticmethod
    def _coerce(other):
        if isinstance(other, Complex):
            return other
        if _is_scalar(other) or isinstance(other, QuadElem):
            return Complex(other, 0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Complex(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return Complex(-self.re, -self.im)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Complex(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Complex(
            self.re * o.re - self.im * o.im,
            self.re * o.im + o.re * self.im,
        )

    __rmul__ = __mul__

    def conj(self) -> Complex:
        return Complex(self.re, -self.im)

    def map(self, f) -> Complex:
        return Complex(f(self.re), f(self.im))

    def abs2(self):
        """``z * conj(z)``, a real element of the coefficient ring."""
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return f"Complex({self.re!r}, {self.im!r})"

    def components(self):
        return [("re", self.re), ("im", self.im)]

    def to_json(self) -> dict:
        return {"re": to_json(self.re), "im": to_json(self.im)}


# The complexification of Q[t]/(t^2 - d) is a Complex with QuadElem parts.
ComplexQuad = Complex


def cq_mul(z: Complex, w: Complex) -> Complex:
    for part in (z.re, z.im, w.re, w.im):
        for other in (z.re, z.im, w.re, w.im):
            if isinstance(part, QuadElem) and isinstance(other, QuadElem) and part.d != other.d:
                raise RingMismatchError(f"d={part.d} vs d={other.d}")
    return z * w


def to_json(x):
    """JSON-ready rendering of any exact value in the package."""
    if _is_scalar(x):
        return render_scalar(x)
    if hasattr(x, "to_json"):
        return x.to_json()
    if isinstance(x, dict):
        return {k: to_json(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [to_json(v) for v in x]
    raise TypeError(f"cannot render {type(x).__name__}")
