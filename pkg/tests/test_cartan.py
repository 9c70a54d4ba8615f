import random
from fractions import Fraction

import pytest
from hypothesis import given

from cartan_horadam.cartan import CartanNumber, Mat2, character, cn_conj, cn_mul, theta, theta_inv

from .conftest import cartans, rational_cartans

h = Fraction(1, 2)
one, i, j, k = (CartanNumber.unit(u) for u in ("s", "i", "j", "k"))


def mat(a, b, c, d):
    return Mat2(Fraction(a), Fraction(b), Fraction(c), Fraction(d))


class TestProduct:
    def test_table_examples(self):
        assert cn_mul(j, k) == CartanNumber(1, 1, 0, 0)
        assert cn_mul(k, j) == CartanNumber(1, -1, 0, 0)
        assert cn_mul(one + j, one + k) == CartanNumber(2, 1, 1, 1)

    @pytest.mark.parametrize(
        "x, y, want",
        [
            (i, i, (1, 0, 0, 0)),
            (i, j, (0, 0, 1, 0)),
            (i, k, (0, 0, 0, -1)),
            (j, i, (0, 0, -1, 0)),
            (j, j, (0, 0, 0, 0)),
            (k, i, (0, 0, 0, 1)),
            (k, k, (0, 0, 0, 0)),
        ],
    )
    def test_unit_table(self, x, y, want):
        assert x * y == CartanNumber(*want)

    def test_noncommutative(self):
        assert j * k != k * j

    @given(cartans, cartans, cartans)
    def test_associative(self, x, y, z):
        assert (x * y) * z == x * (y * z)

    @given(cartans, cartans, cartans)
    def test_distributive(self, x, y, z):
        assert x * (y + z) == x * y + x * z
        assert (y + z) * x == y * x + z * x


class TestConjAndCharacter:
    def test_conj_examples(self):
        assert cn_conj(CartanNumber(1, 1, 1, 1)) == CartanNumber(1, -1, -1, -1)
        assert cn_conj(CartanNumber(5)) == CartanNumber(5)

    @given(cartans)
    def test_conj_involution(self, x):
        assert cn_conj(cn_conj(x)) == x

    def test_character_examples(self):
        assert character(one) == 1
        assert character(j) == 0
        assert character(CartanNumber(0, 1, 2, 5)) == -21

    @given(cartans)
    def test_norm_is_scalar(self, x):
        c = CartanNumber(character(x))
        assert x * cn_conj(x) == c
        assert cn_conj(x) * x == c

    @given(cartans, cartans)
    def test_multiplicative(self, x, y):
        assert character(x * y) == character(x) * character(y)


class TestTheta:
    def test_examples(self):
        assert theta(i) == mat(0, 1, 1, 0)
        assert theta(k) == mat(h, h, -h, -h)
        assert theta(j * k) == mat(1, 1, 1, 1)
        assert theta(j) @ theta(k) == mat(1, 1, 1, 1)

    def test_inverse_examples(self):
        assert theta_inv(mat(1, 0, 0, 1)) == one
        assert theta_inv(mat(0, 1, 1, 0)) == i
        x = CartanNumber(2, 1, 3, 4)
        assert theta_inv(theta(x)) == x

    def test_integer_input_with_odd_k(self):
        # Integer coordinates are promoted to rationals, so k/2 is exact.
        assert theta(CartanNumber(0, 0, 0, 3)) == mat(Fraction(3, 2), Fraction(3, 2), -Fraction(3, 2), -Fraction(3, 2))

    @given(cartans, cartans)
    def test_homomorphism(self, x, y):
        assert theta(x * y) == theta(x) @ theta(y)
        assert theta(x + y) == theta(x) + theta(y)

    @given(rational_cartans)
    def test_det_is_character(self, x):
        assert theta(x).det() == character(x)

    @given(rational_cartans)
    def test_round_trip(self, x):
        assert theta_inv(theta(x)) == x

    def test_onto(self):
        rng = random.Random(5)
        for _ in range(200):
            m = mat(*(Fraction(rng.randint(-20, 20), rng.randint(1, 6)) for _ in range(4)))
            assert theta(theta_inv(m)) == m


def test_json():
    assert CartanNumber(0, 1, 2, h).to_json() == {"s": "0", "i": "1", "j": "2", "k": "1/2"}
