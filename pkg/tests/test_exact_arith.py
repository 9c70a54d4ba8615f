from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cartan_horadam.errors import NotInvertibleError, RingMismatchError
from cartan_horadam.exact_arith import (
    Complex,
    QuadElem,
    cq_mul,
    embed,
    quad_conj,
    quad_inv,
    quad_mul,
    to_json,
)

from .conftest import complexes, quads

h = Fraction(1, 2)


def q(a, b, d):
    return QuadElem(a, b, d)


class TestQuadMul:
    def test_vieta_pell(self):
        assert quad_mul(q(1, h, 8), q(1, -h, 8)) == -1

    def test_defining_relation(self):
        t = QuadElem.sqrt(8)
        assert quad_mul(t, t) == 8

    def test_square_d(self):
        assert quad_mul(q(1, 1, 9), q(1, 1, 9)) == q(10, 2, 9)

    def test_mismatch(self):
        with pytest.raises(RingMismatchError):
            quad_mul(q(1, 1, 8), q(1, 1, 9))


class TestQuadInv:
    def test_inverse_of_t(self):
        assert quad_inv(QuadElem.sqrt(8)) == q(0, Fraction(1, 8), 8)

    def test_zero_divisor(self):
        with pytest.raises(NotInvertibleError):
            quad_inv(q(3, 1, 9))

    def test_zero(self):
        with pytest.raises(ZeroDivisionError):
            quad_inv(q(0, 0, 8))

    def test_pell_alpha(self):
        assert quad_inv(q(1, h, 8)) == q(-1, h, 8)
        assert q(1, h, 8) * q(-1, h, 8) == 1

    @given(quads(8))
    def test_inverse_property(self, x):
        if x.is_zero():
            return
        assert x * quad_inv(x) == 1

    @given(quads(9))
    def test_inverse_or_zero_divisor(self, x):
        if x.is_zero():
            return
        if x.norm() == 0:
            with pytest.raises(NotInvertibleError):
                quad_inv(x)
        else:
            assert x * quad_inv(x) == 1


class TestQuadConj:
    def test_examples(self):
        assert quad_conj(q(1, h, 8)) == q(1, -h, 8)
        assert quad_conj(q(5, 0, 3)) == 5
        assert quad_conj(quad_conj(q(2, 3, 9))) == q(2, 3, 9)


@pytest.mark.parametrize("d", [8, 9, 5, -3])
@given(data=st.data())
def test_quad_ring_axioms(d, data):
    x, y, z = (data.draw(quads(d)) for _ in range(3))
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x
    assert x * (y + z) == x * y + x * z
    assert (x + y) - y == x


@given(quads(2), quads(2))
def test_embedding_preserves_products(x, y):
    # Q(sqrt 2) -> Q[t]/(t^2 - 8), t_2 -> t_8 / 2
    assert embed(x * y, 8) == embed(x, 8) * embed(y, 8)
    assert embed(x + y, 8) == embed(x, 8) + embed(y, 8)


def test_embed_sqrt2_into_8():
    assert embed(QuadElem.sqrt(2), 8) == q(0, h, 8)
    assert embed(QuadElem.sqrt(2), 8) ** 2 == 2


def test_specialize_square():
    assert q(h, h, 9).specialize() == 2
    assert q(h, -h, 9).specialize() == -1


class TestComplex:
    def test_i_squared(self):
        assert cq_mul(Complex.i(), Complex.i()) == -1

    def test_norm_like(self):
        t = QuadElem.sqrt(8)
        z = Complex(q(1, 0, 8), t)
        w = Complex(q(1, 0, 8), -t)
        assert cq_mul(z, w) == 9

    def test_absorbing_zero(self):
        z = Complex(q(0, 0, 8), q(0, 0, 8))
        assert cq_mul(z, Complex(q(3, 1, 8), q(-2, 5, 8))).is_zero()

    def test_mismatch(self):
        with pytest.raises(RingMismatchError):
            cq_mul(Complex(q(1, 1, 8), 0), Complex(q(1, 1, 5), 0))

    @given(complexes(quads(8)), complexes(quads(8)), complexes(quads(8)))
    def test_ring_axioms(self, x, y, z):
        assert (x * y) * z == x * (y * z)
        assert x * y == y * x
        assert x * (y + z) == x * y + x * z


def test_json_rendering():
    assert to_json(Fraction(-1, 2)) == "-1/2"
    assert to_json(3) == "3"
    assert to_json(q(1, h, 8)) == {"a": "1", "b": "1/2", "d": 8}
    assert to_json(Complex(q(0, 0, 8), q(1, 0, 8))) == {
        "re": {"a": "0", "b": "0", "d": 8},
        "im": {"a": "1", "b": "0", "d": 8},
    }
