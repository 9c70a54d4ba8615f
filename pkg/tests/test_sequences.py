from fractions import Fraction

import pytest

from cartan_horadam.cartan import CartanNumber, character, cn_conj
from cartan_horadam.exact_arith import QuadElem, embed
from cartan_horadam.horadam import PRESETS, preset, term_iter
from cartan_horadam.reconcile import canonical
from cartan_horadam.sequences import (
    binet_coeffs,
    binet_term,
    context,
    cw_term,
    rational_part,
    reconcile_binet_constants,
    reconcile_examples,
    reconcile_initial_conditions,
)

third = Fraction(1, 3)
ALL = sorted(PRESETS)


def oracle(params, n):
    return CartanNumber(*(term_iter(params, n + c) for c in range(4)))


def test_cw_term_examples():
    assert cw_term(preset("pell"), 3) == CartanNumber(5, 12, 29, 70)
    assert cw_term(preset("jacobsthal"), 2) == CartanNumber(1, 3, 5, 11)
    assert cw_term(preset("jacobsthal_lucas"), 3) == CartanNumber(7, 17, 31, 65)


@pytest.mark.parametrize("name", ALL)
def test_recurrence_and_conj_and_character(name):
    params = PRESETS[name]
    for n in range(65):
        x = cw_term(params, n)
        assert x == oracle(params, n)
        if n >= 1:
            assert cw_term(params, n + 1) == params.p * x + params.q * cw_term(params, n - 1)
        h0, h1, h2, h3 = x.coords()
        assert cn_conj(x) == CartanNumber(h0, -h1, -h2, -h3)
        assert character(x) == h0 * h0 - h1 * h1 - 2 * h2 * h3


def test_pell_binet_coeffs():
    # (1/(2 sqrt 2)) (1, 1 + sqrt 2, 3 + 2 sqrt 2, 7 + 5 sqrt 2) with sqrt 2 = t/2
    r2 = QuadElem.sqrt(2)
    inv = (2 * r2).inverse()
    want = CartanNumber(1, 1 + r2, 3 + 2 * r2, 7 + 5 * r2).map(lambda c: embed(c * inv, 8))
    X, _ = binet_coeffs(preset("pell"))
    assert X == want


def test_jacobsthal_binet_coeffs():
    X, Y = binet_coeffs(preset("jacobsthal"))
    assert canonical(X) == CartanNumber(third, 2 * third, 4 * third, 8 * third)
    assert canonical(Y) == CartanNumber(-third, third, -third, third)


@pytest.mark.parametrize("name", ALL)
def test_binet_pair(name):
    params = PRESETS[name]
    ctx = context(params)
    assert ctx.X + ctx.Y == cw_term(params, 0)
    assert ctx.X * ctx.alpha + ctx.Y * ctx.beta == cw_term(params, 1)


@pytest.mark.parametrize("name", ALL)
def test_binet_matches_recurrence(name):
    params = PRESETS[name]
    ctx = context(params)
    for n in range(65):
        value = binet_term(ctx, n)
        assert all(c.b == 0 for c in value.coords())
        assert rational_part(value) == oracle(params, n)


def test_binet_examples():
    assert rational_part(binet_term(context(preset("pell")), 3)) == CartanNumber(5, 12, 29, 70)
    assert rational_part(binet_term(context(preset("jacobsthal")), 5)) == CartanNumber(11, 21, 43, 85)


def test_rational_part_rejects_surd():
    with pytest.raises(ValueError):
        rational_part(CartanNumber(QuadElem(1, 1, 8)))


def _by_name(entries):
    return {(e.name, e.preset): e for e in entries}


def test_binet_constant_verdicts():
    got = _by_name(reconcile_binet_constants())
    assert len(got) == 10
    pell_a = got[("pell.A", "pell")]
    assert pell_a.verdict == "mismatch" and pell_a.coords == ["j"]
    assert got[("jacobsthal.C", "jacobsthal")].coords == ["s", "i", "j", "k"]
    assert got[("pell_lucas_std.A*", "pell_lucas_std")].verdict == "match"
    for e in got.values():
        assert e.checks["computed_sum_is_CW0"] and e.checks["computed_step_is_CW1"]
        assert e.checks["paper_sum_is_CW0"] or e.checks["paper_step_is_CW1"] or e.verdict == "mismatch"


def test_example_entries():
    got = _by_name(reconcile_examples())
    cj3 = got[("Cj_3", "jacobsthal_lucas")]
    assert cj3.verdict == "mismatch" and cj3.coords == ["i", "j", "k"]
    others = [e for key, e in got.items() if key[0] != "Cj_3"]
    assert len(others) == 15 and all(e.verdict == "match" for e in others)


def test_initial_condition_entry():
    got = _by_name(reconcile_initial_conditions())
    # The printed k-coefficient uses pb where the recurrence gives qb,
    # which only agrees when p = q.
    assert got[("initial.CW_0", "fibonacci")].verdict == "match"
    for name in ("pell", "pell_lucas", "jacobsthal", "jacobsthal_lucas"):
        assert got[("initial.CW_0", name)].coords == ["k"]
