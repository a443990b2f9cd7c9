import math
from fractions import Fraction

import pytest

from modforms.forms import delta, eisenstein_level1
from modforms.identities import E24_A, E24_B
from modforms.polys import RatPoly
from modforms.roots import aberth_roots
from modforms.zeros import (
    ARC_HIGH,
    ARC_LOW,
    algebraic_poly,
    eval_series_at,
    expand_E12n,
    find_arc_zeros,
    jvalue_algebraicity_check,
    jvalue_at,
)


def test_expand_n1():
    exp = expand_E12n(1)
    assert exp.coeffs == (Fraction(1), Fraction(0))


def test_expand_n2_matches_weight24_identity():
    exp = expand_E12n(2)
    assert exp.coeffs[0] == 1
    assert exp.coeffs[1] == E24_B
    assert exp.coeffs[2] == E24_A


def test_expansion_exactness_gate():
    # the constructor itself asserts the residual vanishes; run it broadly
    for n in range(1, 7):
        exp = expand_E12n(n, prec=4 * n + 20)
        assert exp.coeffs[0] == 1
        assert all(isinstance(c, Fraction) for c in exp.coeffs)


def test_algebraic_poly():
    assert algebraic_poly(expand_E12n(1)) == RatPoly([0, 1])
    p2 = algebraic_poly(expand_E12n(2))
    assert p2.degree == 2 and p2.is_monic()
    assert p2.coeffs[1] == E24_B and p2.coeffs[0] == E24_A


def test_eval_series_at_delta_i():
    value, tail = eval_series_at(delta(60).series, 1j, 12)
    assert tail < 1e-100
    assert abs(value.imag) < 1e-30
    # independent re-summation at two precisions
    value2, _ = eval_series_at(delta(30).series, 1j, 12)
    assert abs(value - value2) < 1e-25
    assert abs(float(value.real) - 0.0017853698) < 1e-9


def test_eval_series_region_guard():
    with pytest.raises(ValueError):
        eval_series_at(delta(60).series, 0.5j, 12)
    with pytest.raises(ValueError):
        eval_series_at(delta(10).series, 1j, 12)  # too few terms


def test_e6_vanishes_at_i():
    value, tail = eval_series_at(eisenstein_level1(6, 60).series, 1j, 6)
    assert abs(value) < 1e-25


def test_j_at_i_is_1728():
    value = jvalue_at(1j)
    assert abs(value - 1728) < 1e-20


def test_zero_counts():
    assert len(find_arc_zeros(12)) == 1
    assert len(find_arc_zeros(24)) == 2
    assert len(find_arc_zeros(36)) == 3
    assert len(find_arc_zeros(48)) == 4
    with pytest.raises(ValueError):
        find_arc_zeros(14)


def test_zero_residuals_and_range():
    for z in find_arc_zeros(24, tol=1e-12):
        assert ARC_LOW <= z.theta <= ARC_HIGH
        assert z.residual < 1e-6  # steep slope; residual scale is the issue
    # the residual measures |F| at the midpoint; the theta interval is 1e-12


def test_zero_stability_under_higher_precision():
    base = find_arc_zeros(12, dps=40)
    finer = find_arc_zeros(12, dps=80)
    assert len(base) == len(finer) == 1
    assert abs(base[0].theta - finer[0].theta) < 1e-10


def test_aberth_root_contract():
    polys = [
        RatPoly([-2, 0, 0, 1]),
        RatPoly([6, -5, 1]),
        algebraic_poly(expand_E12n(3)),
        RatPoly([1, 0, 0, 0, 1]),
    ]
    for poly in polys:
        roots = aberth_roots(poly.coeffs, seed=0)
        scale = max(abs(complex(c)) for c in poly.coeffs)
        for r in roots:
            val = sum(complex(c) * r**i for i, c in enumerate(poly.coeffs))
            assert abs(val) <= 1e-10 * scale


def test_aberth_known_roots():
    roots = sorted(r.real for r in aberth_roots(RatPoly([6, -5, 1]).coeffs))
    assert abs(roots[0] - 2) < 1e-12 and abs(roots[1] - 3) < 1e-12


def test_jvalue_check_n1():
    report = jvalue_algebraicity_check(1)
    assert report.verified
    assert len(report.zeros) == 1
    assert abs(report.j_values[0] - 432000 / 691) < 1e-8


@pytest.mark.parametrize("n", [2, 3])
def test_jvalue_check_small_n(n):
    report = jvalue_algebraicity_check(n)
    assert report.verified
    assert len(report.zeros) == n
    assert report.max_pair_distance < 1e-8
