from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cartan_horadam.cartan import CartanNumber
from cartan_horadam.errors import NonUnitConstantError
from cartan_horadam.exact_arith import Complex
from cartan_horadam.genfunc import Poly, RationalGF, cartan_gf, reconcile_gf, series_expand, spinor_gf
from cartan_horadam.horadam import PRESETS, preset
from cartan_horadam.sequences import cw_term
from cartan_horadam.spinor import Spinor, epsilon, spinor_term

ALL = sorted(PRESETS)


def gf(num, den):
    return RationalGF(Poly(num), Poly(den))


def test_expand_examples():
    assert series_expand(gf([1], [1, -1, -1]), 5) == [1, 1, 2, 3, 5]
    assert series_expand(gf([2, 1], [1]), 3) == [2, 1, 0]
    assert series_expand(gf([0, 1], [1, -2, -1]), 5) == [0, 1, 2, 5, 12]


def test_non_unit_constant():
    with pytest.raises(NonUnitConstantError):
        gf([1], [2, -1])


def test_poly_trims():
    assert Poly([1, 2, 0, 0]).coeffs == (1, 2)
    assert Poly([CartanNumber(1), CartanNumber()]).coeffs == (CartanNumber(1),)


def test_pell_numerator():
    g = cartan_gf(preset("pell"))
    assert g.num[0] == CartanNumber(0, 1, 2, 5)
    assert g.num[1] == CartanNumber(1, 0, 1, 2)
    assert g.den.coeffs == (1, -2, -1)


def test_jacobsthal_first_terms():
    assert series_expand(cartan_gf(preset("jacobsthal")), 4) == [cw_term(preset("jacobsthal"), n) for n in range(4)]


def test_spinor_examples():
    terms = series_expand(spinor_gf(preset("pell")), 2)
    assert terms[0] == Spinor(Complex(0, Fraction(9, 2)), Complex(Fraction(-1, 2), 1))
    assert terms[1] == Spinor(Complex(1, 11), Complex(-1, 2))
    fib = preset("fibonacci")
    assert series_expand(spinor_gf(fib), 6) == [epsilon(cw_term(fib, n)) for n in range(6)]


@pytest.mark.parametrize("name", ALL)
def test_expansions_32(name):
    params = PRESETS[name]
    assert series_expand(cartan_gf(params), 32) == [cw_term(params, n) for n in range(32)]
    assert series_expand(spinor_gf(params), 32) == [spinor_term(params, n) for n in range(32)]


coeff_lists = st.lists(st.integers(-9, 9), min_size=1, max_size=4)
dens = st.lists(st.integers(-4, 4), min_size=0, max_size=3).map(lambda tail: [1] + tail)


@given(coeff_lists, dens, coeff_lists, dens)
def test_linearity(n1, d1, n2, d2):
    f, g = gf(n1, d1), gf(n2, d2)
    total = series_expand(f + g, 20)
    assert total == [x + y for x, y in zip(series_expand(f, 20), series_expand(g, 20))]


@given(st.sampled_from(ALL), st.sampled_from(ALL))
def test_linearity_module_valued(a, b):
    f, g = cartan_gf(PRESETS[a]), cartan_gf(PRESETS[b])
    total = series_expand(f + g, 12)
    assert total == [x + y for x, y in zip(series_expand(f, 12), series_expand(g, 12))]


def test_reconcile_entries():
    entries = {(e.name, e.preset): e for e in reconcile_gf()}
    pell = entries[("cartan_gf", "pell")]
    assert pell.verdict == "mismatch" and pell.coords == ["num.1.i", "num.1.j"]
    jac = entries[("cartan_gf", "jacobsthal")]
    assert jac.coords == ["den.1", "den.2"]
    for e in entries.values():
        assert e.checks["computed_expansion_matches_32_terms"]
    assert sum(1 for key in entries if key[0] in ("cartan_gf", "spinor_gf")) == 9
